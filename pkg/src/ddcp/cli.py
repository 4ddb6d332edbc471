"""Command-line interface.

Subcommands: hom, ext, end, approximate, check, classify, audit.
Exit codes: 0 success / property holds, 1 property fails (check, audit),
2 input error, 3 precondition violation.
"""

import argparse
import json
import sys

from .quiver import Algebra, InputError, Interval, ext_dim, hom_dim
from .derived import DerivedObject
from .endalg import (
    PreconditionError,
    end_of,
    is_hereditary,
    is_linear_A,
)
from .approx import min_left_approx_sequence
from . import deciders
from .classify import enumerate_and_classify, zero_path_audit

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3


def object_to_json(x):
    return {
        "n": x.alg.n,
        "summands": [
            {"a": iv.a, "b": iv.b, "shift": s} for iv, s in x.summands
        ],
    }


def object_from_json(data, n=None):
    if not isinstance(data, dict):
        raise InputError("object JSON must be a mapping")
    if n is None:
        n = data.get("n")
    if not isinstance(n, int):
        raise InputError("object JSON needs an integer n")
    alg = Algebra(n)
    summands = data.get("summands")
    if not isinstance(summands, list):
        raise InputError("object JSON needs a summand list")
    pairs = []
    for entry in summands:
        try:
            iv = alg.interval(int(entry["a"]), int(entry["b"]))
            pairs.append((iv, int(entry["shift"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError("malformed summand %r: %s" % (entry, exc))
    return DerivedObject(alg, pairs)


def _parse_interval(alg, text):
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError("interval must be 'a,b', got %r" % text)
    try:
        return alg.interval(int(parts[0]), int(parts[1]))
    except ValueError:
        raise InputError("interval must be two integers, got %r" % text)


def _parse_object_arg(text, n):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("invalid JSON: %s" % exc)
    return object_from_json(data, n)


def _morphism_json(f):
    return [
        {"from": k, "to": l, "scalar": str(c)}
        for (k, l), c in sorted(f.entries.items())
    ]


def cmd_hom(args):
    alg = Algebra(args.n)
    src = _parse_interval(alg, args.src)
    tgt = _parse_interval(alg, args.tgt)
    print(hom_dim(alg, src, tgt))
    return EXIT_OK


def cmd_ext(args):
    alg = Algebra(args.n)
    src = _parse_interval(alg, args.src)
    tgt = _parse_interval(alg, args.tgt)
    print(ext_dim(alg, src, tgt))
    return EXIT_OK


def cmd_end(args):
    x = _parse_object_arg(args.object, args.n)
    algebra = end_of(x)
    out = {
        "dimension": algebra.dim,
        "basis": [list(lab) for lab in algebra.basis],
        "idempotents": list(algebra.idempotents),
        "table": [
            [list(algebra.basis[i]), list(algebra.basis[j]), list(algebra.basis[k])]
            for (i, j), k in sorted(algebra.table.items())
        ],
    }
    if algebra.is_basic():
        out["quiver_arrows"] = [list(algebra.basis[a]) for a in algebra.arrows()]
        out["hereditary"] = is_hereditary(algebra)
        out["linear_chain"] = is_linear_A(algebra)
    else:
        out["basic"] = False
    print(json.dumps(out, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_approximate(args):
    y = _parse_object_arg(args.target, args.n)
    t = _parse_object_arg(args.wrt, args.n)
    seq = min_left_approx_sequence(y, t)
    out = {
        "y": object_to_json(y),
        "t0": object_to_json(seq.t0),
        "t1": object_to_json(seq.t1),
        "f": _morphism_json(seq.f),
        "g": _morphism_json(seq.g),
    }
    print(json.dumps(out, indent=2, sort_keys=True))
    return EXIT_OK


def _module_multiset(x):
    if any(s != 0 for _, s in x.summands):
        raise InputError("module checks require all shifts to be zero")
    out = {}
    for iv, _ in x.summands:
        out[iv] = out.get(iv, 0) + 1
    return out


def cmd_check(args):
    x = _parse_object_arg(args.object, args.n)
    alg = x.alg
    if args.mode == "dcp":
        report = deciders.check_module_dcp(alg, _module_multiset(x))
    elif args.mode == "tilting-module":
        report = deciders.check_tilting_module(alg, _module_multiset(x))
    elif args.mode == "ddcp":
        report = deciders.check_ddcp(x)
    elif args.mode == "ddcp-derived":
        report = deciders.check_ddcp_derived(x)
    elif args.mode == "tilting":
        report = deciders.check_tilting_complex(x)
    elif args.mode == "corners":
        report = deciders.verify_homology_corners(x)
    else:  # pragma: no cover - argparse restricts choices
        raise InputError("unknown mode %r" % args.mode)
    print(json.dumps(report.as_dict(), indent=2, sort_keys=True))
    if not report.applicable:
        return EXIT_PRECONDITION
    return EXIT_OK if report.verdict else EXIT_FALSE


def cmd_classify(args):
    alg = Algebra(args.n)
    result = enumerate_and_classify(alg, degree_window=args.window)
    if args.format == "json":
        print(json.dumps(result.as_dict(), indent=2, sort_keys=True))
    else:
        print("n = %d, lambda = %d" % (result.n, result.lambda_count))
        for x in result.survivors:
            label = result.matched[x]
            body = " + ".join(
                "X(%d,%d)[%d]" % (iv.a, iv.b, s) for iv, s in x.summands
            )
            print("%-4s %s" % (label, body))
    return EXIT_OK


def cmd_audit(args):
    alg = Algebra(args.n)
    ok = zero_path_audit(alg, args.length)
    print("all length-%d composites vanish: %s" % (args.length, ok))
    return EXIT_OK if ok else EXIT_FALSE


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ddcp",
        description=(
            "Exact computations in module and derived categories of "
            "linear-chain path algebras"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hom", help="dimension of a Hom space of intervals")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--from", dest="src", required=True, metavar="a,b")
    p.add_argument("--to", dest="tgt", required=True, metavar="c,d")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("ext", help="dimension of an Ext space of intervals")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--from", dest="src", required=True, metavar="a,b")
    p.add_argument("--to", dest="tgt", required=True, metavar="c,d")
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("end", help="endomorphism algebra of an object")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--object", required=True, metavar="JSON")
    p.set_defaults(func=cmd_end)

    p = sub.add_parser(
        "approximate", help="minimal left approximation sequence"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--target", required=True, metavar="JSON")
    p.add_argument("--wrt", required=True, metavar="JSON")
    p.set_defaults(func=cmd_approximate)

    p = sub.add_parser("check", help="run a property decider")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--object", required=True, metavar="JSON")
    p.add_argument(
        "--mode",
        required=True,
        choices=[
            "dcp",
            "tilting-module",
            "ddcp",
            "ddcp-derived",
            "tilting",
            "corners",
        ],
    )
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="enumerate all qualifying objects")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--window", type=int, default=2)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("audit", help="audit vanishing of long composites")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.set_defaults(func=cmd_audit)

    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad arguments, which matches the input-error code
        return exc.code if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print("precondition violation: %s" % exc, file=sys.stderr)
        return EXIT_PRECONDITION


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
