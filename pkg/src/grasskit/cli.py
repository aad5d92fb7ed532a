"""Command-line interface.

Eight subcommands: convert, check, pmf, sample, fit, moment, resistance,
degrees.  Exit code 0 on success, 1 on a domain error (a machine-readable
JSON object {"error": code, "detail": ...} goes to stderr), 2 on usage
errors.  Randomized subcommands (sample, fit) require --seed and are
byte-reproducible given it.  check/convert/resistance default to exact
rational arithmetic; sample/fit are float by construction.
"""

import argparse
import sys

from . import linalg, serialize
from .dpp import dpp_pmf, dpp_sample
from .errors import GrasskitError, NotInvertible, ParseError
from .graphs import effective_resistances
from .likelihood import mle_fit
from .moment import moment_from_projection, moment_map
from .plucker import PluckerVector, plucker_from_basis
from .projector import (ProjectionMatrix, basis_from_projection,
                        idempotency_residual, pgr_degree,
                        projection_from_basis, projection_from_plucker)
from .squared import sgr2_residual, sgr4_quartic, sgr_degree, square_plucker

_REPRESENTATIONS = ("basis", "plucker", "projection", "squared")


def _read_text(path):
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _emit(obj):
    sys.stdout.write(serialize.dumps(obj))


def _load_payload(path, kind):
    obj_text = _read_text(path)
    if kind == "basis":
        return serialize.matrix_from_obj(serialize.loads(obj_text))
    if kind == "plucker":
        return serialize.plucker_from_obj(serialize.loads(obj_text))
    if kind == "projection":
        return serialize.projection_from_obj(serialize.loads(obj_text))
    if kind == "squared":
        return serialize.squared_from_obj(serialize.loads(obj_text))
    raise ParseError(f"unknown representation {kind!r}")


def _downcast(payload, kind):
    if kind == "basis":
        return linalg.as_float(payload)
    return payload.to_float()


def _cmd_convert(args):
    src, dst = args.source, args.target
    payload = _load_payload(args.path, src)
    if args.float:
        payload = _downcast(payload, src)
    if src == "squared":
        raise NotInvertible("squared coordinates have no canonical preimage")
    # normalize the source to a Pluecker vector and/or projector as needed
    if dst == "basis":
        if src == "basis":
            result = serialize.matrix_to_obj(payload)
        else:
            p = payload if src == "projection" else projection_from_plucker(payload)
            result = serialize.matrix_to_obj(basis_from_projection(p))
    elif dst == "plucker":
        if src == "basis":
            x = plucker_from_basis(payload)
        elif src == "plucker":
            x = payload.normalized()
        else:
            x = plucker_from_basis(basis_from_projection(payload))
        result = serialize.plucker_to_obj(x)
    elif dst == "projection":
        if src == "basis":
            p = projection_from_basis(payload)
        elif src == "plucker":
            p = projection_from_plucker(payload)
        else:
            p = payload
        result = serialize.matrix_to_obj(p)
    elif dst == "squared":
        if src == "basis":
            x = plucker_from_basis(payload)
        elif src == "plucker":
            x = payload
        else:
            x = plucker_from_basis(basis_from_projection(payload))
        result = serialize.squared_to_obj(square_plucker(x))
    else:
        raise ParseError(f"unknown representation {dst!r}")
    _emit(result)
    return 0


def _cmd_check(args):
    text = _read_text(args.path)
    obj = serialize.loads(text)
    kind = args.kind
    if kind is None:
        kind = "projection" if "entries" in obj else "plucker"
    if kind == "plucker":
        x = serialize.plucker_from_obj(obj)
        if args.float:
            x = x.to_float()
        residual = x.residual()
        on_variety = (residual == 0) if x.exact else float(residual) <= args.tol
        report = {"kind": "plucker", "d": x.d, "n": x.n,
                  "residual": serialize.encode_scalar(residual),
                  "on_variety": bool(on_variety)}
    elif kind == "squared":
        q = serialize.squared_from_obj(obj)
        if args.float:
            q = q.to_float()
        residual = sgr2_residual(q)
        on_variety = (residual == 0) if q.exact else float(residual) <= args.tol
        report = {"kind": "squared", "d": q.d, "n": q.n,
                  "residual": serialize.encode_scalar(residual),
                  "on_variety": bool(on_variety)}
        if (q.d, q.n) == (2, 4):
            report["quartic"] = serialize.encode_scalar(sgr4_quartic(q))
    elif kind == "projection":
        matrix = serialize.matrix_from_obj(obj)
        if args.float:
            matrix = linalg.as_float(matrix)
        residual = idempotency_residual(matrix)
        try:
            p = ProjectionMatrix(matrix)
            report = {"kind": "projection", "n": p.n, "d": p.d,
                      "residual": serialize.encode_scalar(residual),
                      "valid": True}
        except GrasskitError as exc:
            report = {"kind": "projection", "n": int(matrix.shape[0]),
                      "residual": serialize.encode_scalar(residual),
                      "valid": False, "reason": str(exc)}
    else:
        raise ParseError(f"unknown check kind {kind!r}")
    _emit(report)
    return 0


def _cmd_pmf(args):
    p = serialize.projection_from_obj(serialize.loads(_read_text(args.path)))
    if args.float:
        p = p.to_float()
    pmf = dpp_pmf(p)
    _emit({",".join(map(str, s)): serialize.encode_scalar(v)
           for s, v in pmf.items()})
    return 0


def _cmd_sample(args):
    p = serialize.projection_from_obj(serialize.loads(_read_text(args.path)))
    draws = dpp_sample(p, seed=args.seed, count=args.count)
    _emit(serialize.samples_to_obj(draws))
    return 0


def _cmd_fit(args):
    u = serialize.counts_from_csv(_read_text(args.counts), n=args.n)
    result = mle_fit(u, model=args.model, restarts=args.restarts,
                     seed=args.seed, gtol=args.tol)
    estimate = None
    if result.estimate is not None:
        estimate = {
            "alpha": result.estimate.alpha,
            "beta": list(result.estimate.beta),
            "gamma": list(result.estimate.gamma),
            "kappa": [list(row) for row in result.estimate.kappa],
        }
    _emit({
        "model": result.model,
        "loglik": result.loglik,
        "grad_norm": result.grad_norm,
        "boundary": result.boundary,
        "restarts_used": result.restarts_used,
        "estimate": estimate,
        "pmf_hat": {",".join(map(str, s)): v for s, v in result.pmf_hat.items()},
        "distinct_optima": [
            {"pmf": {",".join(map(str, s)): v for s, v in pmf.items()},
             "loglik": value}
            for pmf, value in result.distinct_optima],
        "diagnostics": result.diagnostics,
    })
    return 0


def _cmd_moment(args):
    obj = serialize.loads(_read_text(args.path))
    kind = args.kind
    if kind is None:
        kind = "projection" if "entries" in obj else "plucker"
    if kind == "plucker":
        x = serialize.plucker_from_obj(obj)
        if args.float:
            x = x.to_float()
        z = moment_map(x)
    elif kind == "projection":
        p = serialize.projection_from_obj(obj)
        if args.float:
            p = p.to_float()
        z = moment_from_projection(p)
    else:
        raise ParseError(f"unknown moment kind {kind!r}")
    _emit(serialize.moment_to_obj(z))
    return 0


def _cmd_resistance(args):
    graph = serialize.parse_edge_list(_read_text(args.graph))
    values = effective_resistances(graph)
    _emit({str(i + 1): serialize.encode_scalar(v) for i, v in enumerate(values)})
    return 0


def _cmd_degrees(args):
    if args.variety == "sgr":
        value = sgr_degree(args.d, args.n)
    else:
        value = pgr_degree(args.d, args.n)
    _emit(value)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="grasskit",
        description="Subspace coordinates, projection DPPs, likelihood fits, "
                    "moment maps, and graph cut spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    convert = sub.add_parser(
        "convert", help="convert between subspace representations")
    convert.add_argument("--from", dest="source", required=True,
                         choices=_REPRESENTATIONS)
    convert.add_argument("--to", dest="target", required=True,
                         choices=_REPRESENTATIONS)
    convert.add_argument("--in", dest="path", required=True,
                         help="input payload (JSON)")
    _regime_flags(convert)
    convert.set_defaults(func=_cmd_convert)

    check = sub.add_parser(
        "check", help="evaluate membership residuals (report only; exit 0 "
                      "whenever the check itself runs)")
    check.add_argument("--in", dest="path", required=True)
    check.add_argument("--kind", choices=("plucker", "squared", "projection"),
                       default=None, help="payload kind (default: sniff)")
    check.add_argument("--tol", type=float, default=1e-9,
                       help="float-regime vanishing tolerance")
    _regime_flags(check)
    check.set_defaults(func=_cmd_check)

    pmf = sub.add_parser("pmf", help="exact DPP pmf of a projection kernel")
    pmf.add_argument("--in", dest="path", required=True,
                     help="projection matrix (JSON)")
    _regime_flags(pmf)
    pmf.set_defaults(func=_cmd_pmf)

    sample = sub.add_parser("sample", help="draw from a projection DPP")
    sample.add_argument("--in", dest="path", required=True,
                        help="projection matrix (JSON)")
    sample.add_argument("--seed", type=int, required=True)
    sample.add_argument("--count", type=int, default=1)
    sample.set_defaults(func=_cmd_sample)

    fit = sub.add_parser("fit", help="maximum-likelihood fit to subset counts")
    fit.add_argument("--model", choices=("squared", "positive"),
                     default="squared")
    fit.add_argument("--counts", required=True, help="counts CSV file")
    fit.add_argument("--restarts", type=int, default=20)
    fit.add_argument("--seed", type=int, required=True)
    fit.add_argument("--tol", type=float, default=1e-8,
                     help="stationarity tolerance on the gradient norm")
    fit.add_argument("--n", type=int, default=None,
                     help="ground-set size (default: largest index seen)")
    fit.set_defaults(func=_cmd_fit)

    moment = sub.add_parser("moment", help="moment-map image of a subspace")
    moment.add_argument("--in", dest="path", required=True,
                        help="Pluecker or projection JSON")
    moment.add_argument("--kind", choices=("plucker", "projection"),
                        default=None, help="payload kind (default: sniff)")
    _regime_flags(moment)
    moment.set_defaults(func=_cmd_moment)

    resistance = sub.add_parser(
        "resistance", help="effective resistance of each edge")
    resistance.add_argument("--graph", required=True,
                            help="edge list file, one 'tail head' per line")
    resistance.set_defaults(func=_cmd_resistance)

    degrees = sub.add_parser("degrees", help="variety degree lookups")
    degrees.add_argument("--variety", choices=("sgr", "pgr"), required=True)
    degrees.add_argument("--d", type=int, required=True)
    degrees.add_argument("--n", type=int, required=True)
    degrees.set_defaults(func=_cmd_degrees)

    return parser


def _regime_flags(subparser):
    group = subparser.add_mutually_exclusive_group()
    group.add_argument("--exact", action="store_true", default=True,
                       help="keep the payload's arithmetic regime (default)")
    group.add_argument("--float", action="store_true", default=False,
                       help="downcast exact payloads to float64 first")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GrasskitError as exc:
        sys.stderr.write(serialize.dumps(
            {"error": type(exc).__name__, "detail": str(exc)}))
        return 1
    except OSError as exc:
        sys.stderr.write(serialize.dumps({"error": "io", "detail": str(exc)}))
        return 1
    except (ValueError, TypeError, IndexError, ArithmeticError) as exc:
        sys.stderr.write(serialize.dumps(
            {"error": type(exc).__name__, "detail": str(exc)}))
        return 1


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
