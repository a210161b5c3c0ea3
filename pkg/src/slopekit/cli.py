"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 precondition
error.
"""
from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .bracket import TooLarge, jones, kauffman_bracket
from .diagram import DiagramError, parse_pd
from .fixtures import FixtureError, load_fixtures
from .fox import ComponentCountMismatch, CrossingFreeComponent, alexander_knot, alexander_link2
from .laurent import PolynomialSyntaxError, format_lpoly
from .surgery import FramedLinkSyntaxError, NonIntegralFraming, first_homology, format_homology, parse_framed_link
from .twistfam import NonPositiveOmega, distinctness_report, family_alexander
from .verify import TAGS, run_checks

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3

_PRECONDITION = (TooLarge, CrossingFreeComponent, ComponentCountMismatch, NonIntegralFraming, NonPositiveOmega)
_INPUT = (DiagramError, FixtureError, PolynomialSyntaxError, FramedLinkSyntaxError, OSError)

INVARIANTS = {
    "alex": alexander_knot,
    "malex": alexander_link2,
    "jones": jones,
    "bracket": kauffman_bracket,
}


def load_diagram(source: str):
    if source.startswith("fixtures:"):
        return load_fixtures().diagram(source.split(":", 1)[1])
    return parse_pd(Path(source).read_text())


def load_framed(source: str):
    if source.startswith("fixtures:"):
        name = source.split(":", 1)[1]
        fs = load_fixtures()
        if name not in fs.framed:
            raise FixtureError(f"unknown framed-link fixture {name!r}")
        return fs.framed[name]
    return parse_framed_link(Path(source).read_text())


def parse_range(text: str) -> range:
    m = re.fullmatch(r"\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")
    a, b = int(m.group(1)), int(m.group(2))
    return range(a, b + 1)


def cmd_invariant(args) -> int:
    d = load_diagram(args.source)
    print(format_lpoly(INVARIANTS[args.invariant](d)))
    return EXIT_OK


def family_table(which: int, n_range) -> list:
    """(n, polynomial, class index) rows; classes are numbered by first use."""
    fam = load_fixtures().family(which)
    classes = distinctness_report(fam, n_range)
    cls = {n: i for i, group in enumerate(classes) for n in group}
    return [(n, family_alexander(fam, n), cls[n]) for n in n_range]


def cmd_family(args) -> int:
    for n, p, c in family_table(args.family, args.range):
        print(f"n={n}\t{format_lpoly(p)}\tclass={c}")
    return EXIT_OK


def cmd_homology(args) -> int:
    print(format_homology(first_homology(load_framed(args.source))))
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = run_checks(load_fixtures(), args.only)
    for c in checks:
        print(c.line())
    failed = sum(not c.ok for c in checks)
    print(f"# {len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="slopekit", description="Knot polynomials, twist families and surgery homology.")
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("invariant", help="compute a polynomial invariant of a PD diagram")
    p.add_argument("invariant", choices=sorted(INVARIANTS))
    p.add_argument("source", help="path to a PD file or fixtures:NAME")
    p.set_defaults(func=cmd_invariant)
    p = sub.add_parser("family", help="Alexander polynomials along a bundled twist family")
    p.add_argument("family", type=int, choices=(1, 2))
    p.add_argument("--range", type=parse_range, default=range(-3, 4), help="n range as a..b (default -3..3)")
    p.set_defaults(func=cmd_family)
    p = sub.add_parser("homology", help="first homology of a surgery on a framed link")
    p.add_argument("source", help="path to a framed-link file or fixtures:NAME")
    p.set_defaults(func=cmd_homology)
    p = sub.add_parser("verify-paper", help="run every golden check")
    p.add_argument("--only", choices=TAGS)
    p.set_defaults(func=cmd_verify)
    return ap


def _join_range(argv):
    """Let ``--range -2..3`` through; argparse would read -2..3 as an option."""
    out = list(argv)
    for i, a in enumerate(out[:-1]):
        if a == "--range":
            out[i:i + 2] = [f"--range={out[i + 1]}"]
            break
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(_join_range(argv))
    try:
        return args.func(args)
    except _PRECONDITION as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except _INPUT as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
