"""Regenerate the bundled diagram and pair fixtures from braid/plat words.

Run from the repository root:  python tools/make_fixtures.py
"""
from pathlib import Path

from slopekit.builders import braid_closure, plat, pretzel
from slopekit.diagram import format_pd, parse_pd
from slopekit.moves import MoveSpec, apply_move
from slopekit.twistfam import annotate, format_gate, orient_positive

OUT = Path(__file__).resolve().parents[1] / "src" / "slopekit" / "data"
SIX = [(2, 3), (4, 5), (1, 6)]


def word(*runs):
    out = []
    for g, k in runs:
        out += [g if k > 0 else -g] * abs(k)
    return out


def diagrams():
    unlink = parse_pd("Loop[1] Loop[2]")
    unlink = apply_move(unlink, MoveSpec("R1+", arc=1, sign=1))
    unlink = apply_move(unlink, MoveSpec("R1+", arc=2, sign=-1))
    return [
        ("unknot", "crossing-free circle", parse_pd("Loop[1]")),
        ("trefoil", "positive trefoil, knot-table PD code", parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]")),
        ("figure8", "closure of the 3-braid s1 s2^-1 s1 s2^-1", braid_closure([1, -2, 1, -2])),
        ("hopf", "two-crossing Hopf link", parse_pd("X[1,3,2,4] X[3,1,4,2]")),
        ("whitehead", "closure of the 3-braid s1^2 s2^-1 s1 s2^-1", braid_closure([1, 1, -2, 1, -2])),
        ("unlink2", "two unknots, each with one kink", unlink),
        ("pretzel_-5_-3_3", "pretzel knot P(-5,-3,3), three twist columns closed as a 6-plat",
         pretzel(-5, -3, 3)),
        ("8_6", "2-bridge knot 23/10: 4-plat of s2^3 s1^-3 s2^2, caps and cups (1,2)(3,4)",
         plat(word((2, 3), (1, -3), (2, 2)), 4, [(1, 2), (3, 4)], [(1, 2), (3, 4)])),
        ("9_42", "Montesinos knot 9_42: 6-plat of s1^-2 s2 s1^-1 s3^2 s5^3, caps/cups (2,3)(4,5)(1,6)",
         plat(word((1, -2), (2, 1), (1, -1), (3, 2), (5, 3)), 6, SIX, SIX)),
    ]


def pairs():
    fam1 = word((1, -1), (2, 1), (1, -2), (3, -3), (5, 2))
    # ring around positions 1..3 after five letters, then a negative full twist
    fam1 = fam1[:5] + [("c", 1, 3)] + word((1, -1), (2, -1)) * 3 + fam1[5:]
    return [
        ("kc_family1",
         "k = P(-5,-3,3) with a ring c around three strands; lk = 1.  Twisting once\n"
         "% gives 9_42.  Built so that its two-variable Alexander polynomial equals\n"
         "% the reference one; the reference k_{-1} Jones value is NOT reproduced,\n"
         "% so this is a polynomial-level stand-in, not the original link.",
         plat(fam1, 6, SIX, SIX)),
        ("unknot_axis2", "closure of s1 with its braid axis; k_n is the torus knot T(2, 2n+1)",
         braid_closure([1, ("c", 1, 2)])),
        ("trefoil_axis2", "closure of s1^3 with its braid axis",
         braid_closure([1, 1, 1, ("c", 1, 2)])),
        ("figure8_axis3", "closure of s1 s2^-1 s1 s2^-1 with its braid axis",
         braid_closure([1, -2, 1, -2, ("c", 1, 3)])),
        ("pretzel_ring3", "P(-5,-3,3) with a ring around positions 2..4 inside the first column",
         plat(word((1, -2)) + [("c", 2, 4)] + word((1, -3), (3, -3), (5, 3)), 6, SIX, SIX)),
    ]


def main():
    OUT.mkdir(exist_ok=True)
    lines = ["% Named PD diagrams: a 'name:' line, then one PD line.", ""]
    for name, note, d in diagrams():
        lines += [f"% {note}", f"name: {name}", format_pd(d), ""]
    (OUT / "diagrams.txt").write_text("\n".join(lines))
    lines = ["% Annotated pairs k u c: PD line, then 'c:' (0-based component) and 'gate:'.", ""]
    for name, note, d in pairs():
        c = next(i for i in (0, 1) if _ok(d, i))
        p = orient_positive(annotate(d, c))
        lines += [f"% {note}", f"name: {name}", format_pd(p.diagram), f"c: {p.c_component}",
                  f"gate: {format_gate(p.gate)}", ""]
    (OUT / "pairs.txt").write_text("\n".join(lines))


def _ok(d, c):
    try:
        annotate(d, c)
        return True
    except Exception:
        return False


if __name__ == "__main__":
    main()
