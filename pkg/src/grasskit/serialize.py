"""File formats: subset-keyed JSON, matrix JSON, counts CSV, edge lists.

Scalars cross the wire as JSON integers (exact integers), "p/q" strings
(exact rationals), or JSON numbers with a fractional part (floats).  A
decoded matrix or coordinate map is exact when every entry decodes exact,
float as soon as one entry is a float.
"""

import csv
import io
import json
import re
from fractions import Fraction

import numpy as np

from .dpp import CountVector
from .errors import ParseError
from .graphs import OrientedGraph
from .plucker import PluckerVector
from .projector import ProjectionMatrix
from .squared import SquaredPlucker

_RATIONAL_RE = re.compile(r"^(-?\d+)/(\d+)$")


def encode_scalar(value):
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    raise ParseError(f"cannot serialize scalar of type {type(value).__name__}")


def decode_scalar(value):
    if isinstance(value, bool):
        raise ParseError("booleans are not scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        match = _RATIONAL_RE.match(value.strip())
        if not match:
            raise ParseError(f"not a rational literal: {value!r}")
        num, den = int(match.group(1)), int(match.group(2))
        if den == 0:
            raise ParseError(f"zero denominator: {value!r}")
        return Fraction(num, den)
    raise ParseError(f"cannot decode scalar from {type(value).__name__}")


def _subset_key(subset):
    return ",".join(str(i) for i in subset)


def _parse_subset_key(key):
    try:
        parts = tuple(int(p) for p in key.split(","))
    except ValueError as exc:
        raise ParseError(f"bad subset key {key!r}") from exc
    if any(a >= b for a, b in zip(parts, parts[1:])):
        raise ParseError(f"subset key must be strictly increasing: {key!r}")
    return parts


# -- subset-keyed coordinate maps (Pluecker and squared) --------------------


def plucker_to_obj(x):
    return {"d": x.d, "n": x.n,
            "coords": {_subset_key(s): encode_scalar(v) for s, v in x.items()}}


def plucker_from_obj(obj):
    try:
        d, n = int(obj["d"]), int(obj["n"])
        raw = obj["coords"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed coordinate object: {exc}") from exc
    coords = {_parse_subset_key(k): decode_scalar(v) for k, v in raw.items()}
    mixed = {s: float(v) for s, v in coords.items()} if any(
        isinstance(v, float) for v in coords.values()) else coords
    return PluckerVector(d, n, mixed)


def squared_to_obj(q):
    return {"d": q.d, "n": q.n,
            "coords": {_subset_key(s): encode_scalar(v) for s, v in q.items()}}


def squared_from_obj(obj):
    try:
        d, n = int(obj["d"]), int(obj["n"])
        raw = obj["coords"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed coordinate object: {exc}") from exc
    coords = {_parse_subset_key(k): decode_scalar(v) for k, v in raw.items()}
    mixed = {s: float(v) for s, v in coords.items()} if any(
        isinstance(v, float) for v in coords.values()) else coords
    return SquaredPlucker(d, n, mixed)


# -- matrices ----------------------------------------------------------------


def matrix_to_obj(matrix):
    arr = matrix.matrix if isinstance(matrix, ProjectionMatrix) else np.asarray(matrix)
    entries = [[encode_scalar(v) for v in row] for row in arr.tolist()]
    obj = {"entries": entries}
    if arr.ndim == 2 and arr.shape[0] == arr.shape[1]:
        obj["n"] = arr.shape[0]
    return obj


def matrix_from_obj(obj):
    """Decode a row-major matrix; exact unless a float entry appears."""
    try:
        entries = obj["entries"]
    except (KeyError, TypeError) as exc:
        raise ParseError("matrix object needs an 'entries' field") from exc
    if not entries or not all(isinstance(row, list) for row in entries):
        raise ParseError("'entries' must be a nonempty list of rows")
    width = len(entries[0])
    if any(len(row) != width for row in entries):
        raise ParseError("matrix rows have unequal lengths")
    decoded = [[decode_scalar(v) for v in row] for row in entries]
    if "n" in obj and (len(decoded) != int(obj["n"]) or width != int(obj["n"])):
        raise ParseError(f"declared size n={obj['n']} does not match entries")
    if any(isinstance(v, float) for row in decoded for v in row):
        return np.array([[float(v) for v in row] for row in decoded], dtype=float)
    return np.array(decoded, dtype=object)


def projection_from_obj(obj):
    return ProjectionMatrix(matrix_from_obj(obj))


# -- counts CSV ---------------------------------------------------------------


def counts_to_csv(u):
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(["subset", "count"])
    for subset, count in u.items():
        writer.writerow([_subset_key(subset), count])
    return buffer.getvalue()


def counts_from_csv(text, n=None):
    """Parse 'subset,count' rows; n is inferred from the largest index
    unless given."""
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row]
    if not rows or [c.strip() for c in rows[0]] != ["subset", "count"]:
        raise ParseError("counts CSV must start with header 'subset,count'")
    counts = {}
    d = None
    for row in rows[1:]:
        if len(row) != 2:
            raise ParseError(f"bad counts row: {row}")
        subset = _parse_subset_key(row[0])
        if d is None:
            d = len(subset)
        elif len(subset) != d:
            raise ParseError(f"subset {row[0]!r} has size {len(subset)}, expected {d}")
        try:
            count = int(row[1])
        except ValueError as exc:
            raise ParseError(f"bad count {row[1]!r}") from exc
        counts[subset] = counts.get(subset, 0) + count
    if not counts:
        raise ParseError("counts CSV has no data rows")
    if n is None:
        n = max(max(s) for s in counts)
    return CountVector(d, int(n), counts)


# -- samples and moment vectors ----------------------------------------------


def samples_to_obj(draws):
    return [list(map(int, draw)) for draw in draws]


def moment_to_obj(z):
    values = z.z if hasattr(z, "z") else z
    return [encode_scalar(v) for v in values]


# -- edge lists ----------------------------------------------------------------


def parse_edge_list(text):
    """One 'tail head' pair per line (1-based); blank lines and lines
    starting with '#' are ignored; vertex count is the largest id seen."""
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'tail head', got {line!r}")
        try:
            tail, head = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: non-integer vertex in {line!r}") from exc
        edges.append((tail, head))
    if not edges:
        raise ParseError("edge list has no edges")
    vertex_count = max(max(t, h) for t, h in edges)
    return OrientedGraph(vertex_count, edges)


def edge_list_to_text(graph):
    return "\n".join(f"{t} {h}" for t, h in graph.edges) + "\n"


# -- generic helpers -----------------------------------------------------------


def dumps(obj):
    """Canonical JSON text used by the CLI (stable key order, 2-space indent)."""
    return json.dumps(obj, indent=2) + "\n"


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
