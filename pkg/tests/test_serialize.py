"""JSON/CSV codecs: exact rationals as "p/q" strings, floats as numbers."""

from fractions import Fraction

import numpy as np
import pytest

from grasskit import CountVector, plucker_from_basis, projection_from_basis
from grasskit.errors import ParseError
from grasskit.serialize import (counts_from_csv, counts_to_csv, decode_scalar,
                                dumps, edge_list_to_text, encode_scalar,
                                loads, matrix_from_obj, matrix_to_obj,
                                moment_to_obj, parse_edge_list,
                                plucker_from_obj, plucker_to_obj,
                                projection_from_obj, samples_to_obj,
                                squared_from_obj, squared_to_obj)
from grasskit import moment_map, square_plucker

BASIS = np.array([[1, 0, 1, 2], [0, 1, 3, 4]])


def test_scalar_codec():
    assert encode_scalar(Fraction(3, 4)) == "3/4"
    assert encode_scalar(Fraction(8, 2)) == 4
    assert encode_scalar(np.int64(7)) == 7
    assert encode_scalar(2.5) == 2.5
    assert decode_scalar("3/4") == Fraction(3, 4)
    assert decode_scalar("-11/5") == Fraction(-11, 5)
    assert decode_scalar(6) == 6
    assert decode_scalar(0.25) == 0.25


def test_scalar_codec_rejects_junk():
    with pytest.raises(ParseError):
        decode_scalar(True)
    with pytest.raises(ParseError):
        decode_scalar("three quarters")
    with pytest.raises(ParseError):
        decode_scalar("1/0")
    with pytest.raises(ParseError):
        encode_scalar(object())


def test_plucker_roundtrip_exact():
    x = plucker_from_basis(BASIS)
    again = plucker_from_obj(plucker_to_obj(x))
    assert again.exact and again.projectively_equal(x)
    assert dict(again.items()) == dict(x.items())


def test_plucker_roundtrip_float():
    x = plucker_from_basis(BASIS.astype(float))
    again = plucker_from_obj(plucker_to_obj(x))
    assert not again.exact
    assert again.projectively_equal(x)


def test_single_float_entry_downcasts_the_whole_vector():
    obj = {"d": 1, "n": 2, "coords": {"1": 1, "2": 0.5}}
    assert not plucker_from_obj(obj).exact


def test_subset_key_validation():
    with pytest.raises(ParseError):
        plucker_from_obj({"d": 2, "n": 4, "coords": {"2,1": 1}})
    with pytest.raises(ParseError):
        plucker_from_obj({"d": 2, "n": 4, "coords": {"a,b": 1}})
    with pytest.raises(ParseError):
        plucker_from_obj({"n": 4, "coords": {}})


def test_squared_roundtrip():
    q = square_plucker(plucker_from_basis(BASIS))
    again = squared_from_obj(squared_to_obj(q))
    assert dict(again.items()) == dict(q.items())


def test_matrix_roundtrip_square_and_rect():
    p = projection_from_basis(BASIS)
    obj = matrix_to_obj(p)
    assert obj["n"] == 4
    assert obj["entries"][0][0] == "26/35"
    assert projection_from_obj(obj) == p
    rect = matrix_from_obj(matrix_to_obj(np.array([[1, 2, 3], [4, 5, 6]])))
    assert rect.tolist() == [[1, 2, 3], [4, 5, 6]]


def test_matrix_from_obj_validation():
    with pytest.raises(ParseError):
        matrix_from_obj({"entries": []})
    with pytest.raises(ParseError):
        matrix_from_obj({"entries": [[1, 2], [3]]})
    with pytest.raises(ParseError):
        matrix_from_obj({"entries": [[1, 2]], "n": 2})
    with pytest.raises(ParseError):
        matrix_from_obj({})


def test_counts_csv_roundtrip():
    u = CountVector(2, 4, {(1, 2): 3, (3, 4): 7})
    text = counts_to_csv(u)
    assert text.splitlines()[0] == "subset,count"
    again = counts_from_csv(text)
    assert dict(again.items()) == {(1, 2): 3, (3, 4): 7}
    assert again.n == 4
    padded = counts_from_csv(text, n=6)
    assert padded.n == 6


def test_counts_csv_validation():
    with pytest.raises(ParseError):
        counts_from_csv("count,subset\n1,2\n")
    with pytest.raises(ParseError):
        counts_from_csv("subset,count\n1,notanumber\n")
    with pytest.raises(ParseError):
        counts_from_csv("subset,count\n")
    with pytest.raises(ParseError):
        counts_from_csv("subset,count\n1,1\n1,2,3\n")


def test_samples_and_moment_serialization():
    assert samples_to_obj([(1, 2), (2, 4)]) == [[1, 2], [2, 4]]
    z = moment_map(plucker_from_basis(np.array([[1, 1, 0], [0, 1, 1]])))
    assert moment_to_obj(z) == ["2/3", "2/3", "2/3"]


def test_edge_list_roundtrip():
    text = "# a comment\n1 2\n\n2 3\n1 3\n"
    graph = parse_edge_list(text)
    assert graph.vertex_count == 3
    assert graph.edges == ((1, 2), (2, 3), (1, 3))
    assert edge_list_to_text(graph) == "1 2\n2 3\n1 3\n"


def test_edge_list_validation():
    with pytest.raises(ParseError):
        parse_edge_list("1 2 3\n")
    with pytest.raises(ParseError):
        parse_edge_list("one two\n")
    with pytest.raises(ParseError):
        parse_edge_list("# nothing here\n")


def test_dumps_loads():
    text = dumps({"b": 1, "a": [1, 2]})
    assert text.endswith("\n")
    assert loads(text) == {"b": 1, "a": [1, 2]}
    with pytest.raises(ParseError):
        loads("{not json")
