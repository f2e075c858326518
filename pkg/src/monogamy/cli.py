"""Command-line front end.

Subcommands: ``measure`` (measure vector of a state), ``bound`` (evaluate a
weighted bound), ``repro`` (bound-surface CSVs for the two worked
examples), ``verify`` (random-sampling verification suites).

Exit codes: 0 ok, 1 verification failure, 2 usage/parse error, 3 domain
error, 4 I/O error.  Numbers are serialized with 12 significant digits and
CSV output is locale-independent with ``\\n`` newlines.

The ``MONOGAMY_SEED`` environment variable supplies the default seed; all
other options are flag-driven.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable, Sequence

from . import bounds, verify
from .measures import MeasureKind, measure_vector
from .states import StateSpecError, parse_state_spec

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4


def _default_seed() -> int:
    return int(os.environ.get("MONOGAMY_SEED", "0"))


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def _write_csv(path: str, header: Sequence[str], rows: Iterable[tuple]):
    def emit(fh):
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")

    if path == "-":
        emit(sys.stdout)
    else:
        with open(path, "w", encoding="ascii", newline="") as fh:
            emit(fh)


def _parse_grid(text: str) -> verify.SweepGrid:
    """Grid spec 'start:stop:step,start:stop:step' (axis names positional)."""
    try:
        ax1, ax2 = text.split(",")
        s1 = [float(v) for v in ax1.split(":")]
        s2 = [float(v) for v in ax2.split(":")]
        if len(s1) != 3 or len(s2) != 3:
            raise ValueError
    except ValueError:
        raise StateSpecError(f"cannot parse grid {text!r}") from None
    return verify.SweepGrid("axis1", *s1, "axis2", *s2)


def cmd_measure(args) -> int:
    psi = parse_state_spec(args.state, default_seed=_default_seed())
    mv = measure_vector(psi, args.kind)
    print(f"one_vs_rest: {_fmt(mv.one_vs_rest)}")
    print("pairwise: [" + ", ".join(_fmt(v) for v in mv.pairwise) + "]")
    return EXIT_OK


def cmd_bound(args) -> int:
    psi = parse_state_spec(args.state, default_seed=_default_seed())
    mv = measure_vector(psi, args.kind)
    spec = bounds.BoundSpec(
        mode=args.mode,
        base_exp=args.base_exp,
        target_exp=args.target_exp,
        a=args.a,
        variant=args.variant,
        p=args.p,
    )
    fn = bounds.monogamy_bound if args.mode == "monogamy" else bounds.polygamy_bound
    rep = fn(mv, spec, strict=False)
    for name in ("bound_value", "measured_value", "margin", "a",
                 "max_admissible_a", "ratio_condition_ok", "base_relation_assumed"):
        print(f"{name}: {_fmt(getattr(rep, name))}")
    return EXIT_OK


def cmd_repro(args) -> int:
    grid = _parse_grid(args.grid) if args.grid else None
    header, rows = verify.dominance_scan(args.example, grid)
    _write_csv(args.out, header, rows)
    return EXIT_OK


_SUITES = ("scalar", "monogamy", "polygamy", "dominance", "all")


def cmd_verify(args) -> int:
    selected = _SUITES[:-1] if args.suite == "all" else (args.suite,)
    summaries = {}
    failed = False
    for suite in selected:
        if suite == "scalar":
            rep = verify.verify_scalar(args.n, seed=args.seed)
        elif suite == "monogamy":
            rep = verify.verify_monogamy_states(args.n, seed=args.seed, tol=args.tol)
        elif suite == "polygamy":
            rep = verify.verify_polygamy_states(args.n, seed=args.seed, tol=args.tol)
        else:
            rep = verify.VerificationReport()
            rep.merge(verify.verify_dominance("example1"))
            rep.merge(verify.verify_dominance("example2"))
        summaries[suite] = rep.summary()
        failed = failed or rep.failures > 0
    print(json.dumps(summaries, indent=2, sort_keys=True))
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monogamy",
        description="Weighted monogamy/polygamy bounds for multiqubit correlation measures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    kinds = [k.value for k in MeasureKind]

    p = sub.add_parser("measure", help="print the measure vector of a state")
    p.add_argument("--state", required=True,
                   help="schmidt3:l0,l1,l2,l3,l4[,phi] | wclass:a,b,c | haar:d1xd2x...[:seed]")
    p.add_argument("--kind", required=True, choices=kinds)
    p.set_defaults(fn=cmd_measure)

    p = sub.add_parser("bound", help="evaluate a weighted bound on a state")
    p.add_argument("--state", required=True)
    p.add_argument("--kind", required=True, choices=kinds)
    p.add_argument("--mode", required=True, choices=("monogamy", "polygamy"))
    p.add_argument("--a", type=float, default=None,
                   help="ratio parameter (default: tightest admissible)")
    p.add_argument("--base-exp", dest="base_exp", type=float, required=True,
                   help="base exponent r (monogamy) or s (polygamy)")
    p.add_argument("--target-exp", dest="target_exp", type=float, required=True,
                   help="target exponent alpha or beta")
    p.add_argument("--variant", default="ours", choices=bounds.VARIANTS)
    p.add_argument("--p", type=float, default=0.5, help="zjz1 parameter p (or q)")
    p.set_defaults(fn=cmd_bound)

    p = sub.add_parser("repro", help="write a bound-surface CSV for a worked example")
    p.add_argument("example", choices=("example1", "example2"))
    p.add_argument("--grid", default=None,
                   help="override grid: start:stop:step,start:stop:step")
    p.add_argument("--out", default="-", help="output CSV path, '-' for stdout")
    p.set_defaults(fn=cmd_repro)

    p = sub.add_parser("verify", help="run a verification suite, JSON summary to stdout")
    p.add_argument("--suite", required=True, choices=_SUITES)
    p.add_argument("--n", type=int, default=10000, help="samples per family")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is None and args.fn is cmd_verify:
        args.seed = _default_seed()
    try:
        return args.fn(args)
    except StateSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
