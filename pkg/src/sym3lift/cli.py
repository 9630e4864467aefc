"""Command-line front end: ``sym3lift <verb> ...``.

Exit status: 0 on success, 1 on input/validation errors, 2 when the
computation itself fails (the library error message is printed verbatim).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import wire
from .congruence import scan_congruences
from .eigensys import (
    DirichletCharacter,
    classicality_guaranteed,
    classify_sym3,
    CubicExtParams,
    stabilizations,
    slope,
    sym3_lift,
    twist,
    twist_gl2,
)
from .hecke import GL2, GSP4
from .levels import sym3_level
from .scalars import DEFAULT_CAP, INF, PAdicContext, encode_scalar
from .suite import FAULTS, oracle_suite
from .weights import hodge_tate_weights

EXIT_OK, EXIT_INVALID, EXIT_COMPUTE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _primes(text: str) -> list:
    try:
        out = sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}")
    return out


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", help="write the result here instead of stdout")
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument(
        "--precision", type=int, default=DEFAULT_CAP, help=f"p-adic digit cap (default {DEFAULT_CAP})"
    )

    parser = _Parser(prog="sym3lift", description="Symmetric cube lifts of Hecke eigensystems.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("lift", parents=[common], help="Sym^3 lift of a stabilized GL2 system")
    p.add_argument("input")
    p.add_argument("--branch", type=int, choices=(1, 2, 3, 4), default=1)

    p = sub.add_parser("stabilize", parents=[common], help="the two p-stabilizations of a GL2 system")
    p.add_argument("input")

    p = sub.add_parser("slope", parents=[common], help="slope (and classicality for GSp4)")
    p.add_argument("input")

    p = sub.add_parser("classify", parents=[common], help="symmetric cube locus membership")
    p.add_argument("input")
    p.add_argument("--primes", type=_primes)
    p.add_argument("--allow-cubic-ext", action="store_true")

    p = sub.add_parser("twist", parents=[common], help="twist by a Dirichlet character")
    p.add_argument("input")
    p.add_argument(
        "--character",
        default="trivial",
        help="'trivial', 'legendre:q' for an odd prime q, or a JSON file with a character",
    )

    p = sub.add_parser("level", parents=[common], help="tame level of the lift")
    p.add_argument("N", type=int)

    p = sub.add_parser("weights", parents=[common], help="Hodge-Tate weights of a classical weight")
    p.add_argument("k", type=int, nargs="+", help="k (GL2) or k1 k2 (GSp4)")

    p = sub.add_parser("congruences", parents=[common], help="scan a dataset for Sym^3 congruences")
    p.add_argument("input", help='JSON file {"schema": 1, "gsp4": [...], "gl2": [...]}')
    p.add_argument("--primes", type=_primes, required=True)
    p.add_argument("--max-depth", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("oracle-suite", parents=[common], help="seeded identity checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--inject-fault", choices=FAULTS, help=argparse.SUPPRESS)
    return parser


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise wire.SchemaError(f"invalid JSON: {exc}", "")


def _load_system(path):
    return wire.decode_eigensystem(_load_json(path))


def _character(text: str) -> DirichletCharacter:
    if text == "trivial":
        return DirichletCharacter.trivial()
    if text.startswith("legendre:"):
        return DirichletCharacter.legendre(int(text.split(":", 1)[1]))
    obj = _load_json(text)
    wire.validate(obj, wire.CHARACTER_SCHEMA)
    return wire.decode_character(obj)


def _fmt_value(v) -> str:
    return "inf" if v == INF else str(Fraction(v))


def _table_from_mapping(d: dict) -> str:
    width = max(len(k) for k in d) if d else 0
    lines = []
    for k in sorted(d):
        v = d[k]
        if isinstance(v, (list, tuple)):
            v = ", ".join(map(str, v))
        lines.append(f"{k.ljust(width)}  {v}")
    return "\n".join(lines) + "\n"


def _classification_json(cls) -> dict:
    params = {}
    for ell, val in cls.params:
        if isinstance(val, CubicExtParams):
            params[str(ell)] = {"t": encode_scalar(val.t), "d": encode_scalar(val.d), "lambda_cubed": encode_scalar(val.m)}
        else:
            params[str(ell)] = {"a": encode_scalar(val[0]), "c": encode_scalar(val[1])}
    out = {"verdict": cls.verdict, "params": params, "flags": list(cls.flags)}
    if cls.witness is not None:
        out["witness"] = cls.witness
    if cls.branches is not None:
        out["branches"] = sorted(cls.branches)
    out["summary"] = _classification_summary(cls)
    return out


def _classification_summary(cls) -> str:
    if not cls.is_candidate:
        return f"not-sym3, witness {cls.witness}"
    if cls.branches is None:
        return "sym3-candidate"
    return "sym3-candidate, branch {" + ", ".join(map(str, sorted(cls.branches))) + "}"


def _dispatch(args) -> str:
    fmt = args.format
    if args.verb == "level":
        if args.N < 1:
            raise UsageError("N must be positive")
        m = sym3_level(args.N)
        return wire.dumps(m) if fmt == "json" else f"{m}\n"

    if args.verb == "weights":
        if len(args.k) == 1:
            (k,) = args.k
            data = {
                "group": GL2,
                "hodge_tate": list(hodge_tate_weights(k, GL2)),
                "sym3_weight": [2 * k - 1, k + 1],
                "sym3_hodge_tate": list(hodge_tate_weights((2 * k - 1, k + 1), GSP4)),
            }
        elif len(args.k) == 2:
            data = {"group": GSP4, "hodge_tate": list(hodge_tate_weights(tuple(args.k), GSP4))}
        else:
            raise UsageError("weights takes one (GL2) or two (GSp4) integers")
        return wire.dumps(data) if fmt == "json" else _table_from_mapping(data)

    if args.verb == "oracle-suite":
        res = oracle_suite(args.seed, args.trials, args.inject_fault)
        args.failed = not res.passed
        if fmt == "json":
            return wire.dumps(res.as_dict())
        rows = [f"{c.name:<24}{'pass' if c.passed else 'FAIL'}  ({c.trials} trials)" for c in res.checks]
        fail = res.first_failure
        if fail is not None:
            rows.append(f"first failure: {fail.name} reproducer {json.dumps(fail.reproducer, sort_keys=True)}")
        return "\n".join(rows) + "\n"

    if args.verb == "congruences":
        obj = _load_json(args.input)
        wire.validate(obj, wire.DATASET_SCHEMA)
        gsp4 = [wire.decode_eigensystem(x, check=False) for x in obj["gsp4"]]
        gl2 = [wire.decode_eigensystem(x, check=False) for x in obj["gl2"]]
        rep = scan_congruences(gsp4, gl2, args.primes, args.max_depth, jobs=args.jobs, cap=args.precision)
        return wire.dumps(rep.as_dict()) if fmt == "json" else rep.to_table() + "\n"

    x = _load_system(args.input)
    ctx = PAdicContext(x.p, args.precision)

    if args.verb == "lift":
        out = wire.encode_eigensystem(sym3_lift(x, args.branch))
        return wire.dumps(out) if fmt == "json" else _table_from_mapping({k: json.dumps(v, sort_keys=True) for k, v in out.items()})

    if args.verb == "stabilize":
        outs = [wire.encode_eigensystem(s) for s in stabilizations(x)]
        if fmt == "json":
            return wire.dumps(outs)
        return "".join(_table_from_mapping({k: json.dumps(v, sort_keys=True) for k, v in o.items()}) + "\n" for o in outs)

    if args.verb == "slope":
        data = {"slope": _fmt_value(slope(x, ctx)), "precision_cap": ctx.cap}
        if x.group == GSP4:
            data["classicality_guaranteed"] = classicality_guaranteed(x, ctx)
        return wire.dumps(data) if fmt == "json" else _table_from_mapping({k: str(v) for k, v in data.items()})

    if args.verb == "classify":
        cls = classify_sym3(x, args.allow_cubic_ext, args.primes)
        return wire.dumps(_classification_json(cls)) if fmt == "json" else _classification_summary(cls) + "\n"

    if args.verb == "twist":
        eta = _character(args.character)
        y = twist(x, eta) if x.group == GSP4 else twist_gl2(x, eta)
        out = wire.encode_eigensystem(y)
        return wire.dumps(out) if fmt == "json" else _table_from_mapping({k: json.dumps(v, sort_keys=True) for k, v in out.items()})

    raise UsageError(f"unknown verb {args.verb!r}")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    try:
        text = _dispatch(args)
    except (UsageError, wire.SchemaError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    except Exception as exc:  # library errors surface verbatim
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_COMPUTE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_COMPUTE if getattr(args, "failed", False) else EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
