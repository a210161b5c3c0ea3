"""Golden checks re-deriving the reference polynomial and homology values.

Each check yields a :class:`Check` with an id, a tag used for filtering, a
status and the expected / obtained values as text.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .bracket import jones, q_mirror
from .fixtures import FixtureSet
from .diagram import linking_matrix_of, writhe
from .fox import (alexander_knot, alexander_link2, fox_matrix, fundamental_identity_holds,
                  link2_minor_quotient, wirtinger, _knot_delta)
from .laurent import equal_up_to_units, format_lpoly, lp_evaluate, lp_substitute_power, normal_form
from .moves import apply_move, random_move
from .surgery import FramedLink, Slope, first_homology, slope_after_twist
from .twistfam import (check_cor26, dual_polynomial, family_alexander, family_of,
                       insert_full_twists)

TAGS = ("alex", "jones", "twist", "dual", "homology", "invariance")


@dataclass
class Check:
    id: str
    tag: str
    ok: bool
    expected: str
    got: str

    @property
    def status(self) -> str:
        return "PASS" if self.ok else "FAIL"

    def line(self) -> str:
        return f"{self.id}\t{self.status}\texpected={self.expected}\tgot={self.got}"


def _txt(p) -> str:
    return format_lpoly(p)


def inequivalent(p, q) -> bool:
    """No unit multiple of p or of its mirror equals q."""
    return normal_form(p) != normal_form(q) and normal_form(q_mirror(p)) != normal_form(q)


def _family_value(fs: FixtureSet, name: str, n: int):
    return lp_substitute_power(fs.polynomial(name), "s", n)


def alex_checks(fs: FixtureSet):
    for diagram, fam, n in (("pretzel_-5_-3_3", "family1_knots", 0),
                            ("9_42", "family1_knots", 1),
                            ("8_6", "family2_knots", 1)):
        want = _family_value(fs, fam, n)
        got = alexander_knot(fs.diagram(diagram))
        yield Check(f"alex.{diagram}", "alex", equal_up_to_units(got, want), _txt(want), _txt(got))
    for fam, poly in ((1, "family1_knots"), (2, "family2_knots")):
        f = fs.family(fam)
        bad = [n for n in range(-5, 6)
               if not equal_up_to_units(family_alexander(f, n), _family_value(fs, poly, n))]
        yield Check(f"alex.substitution_family{fam}", "alex", not bad, "no mismatches in n=-5..5",
                    f"mismatches at {bad}" if bad else "no mismatches in n=-5..5")
    d2 = fs.polynomial("delta_kc_family1")
    torres = lp_substitute_power(d2, "y", 0)
    k0 = alexander_knot(fs.diagram("pretzel_-5_-3_3"))
    yield Check("alex.torres_family1", "alex", equal_up_to_units(torres, k0), _txt(k0), _txt(torres))
    if "kc_family1" in fs.pairs:
        got = family_of(fs.pairs["kc_family1"]).delta2
        yield Check("alex.pair_kc_family1", "alex", equal_up_to_units(got, d2), _txt(d2), _txt(got))


def jones_checks(fs: FixtureSet):
    for diagram, poly in (("9_42", "jones_k1_family1"), ("8_6", "jones_k1_family2")):
        want = fs.polynomial(poly)
        got = jones(fs.diagram(diagram))
        ok = got == want or q_mirror(got) == want
        yield Check(f"jones.{diagram}", "jones", ok, _txt(want) + " (up to mirror)", _txt(got))
    for tag, names in (("family1", ("jones_k1_family1", "jones_km1_family1")),
                       ("family2", ("jones_k1_family2", "jones_K1_family2", "jones_Km1_family2"))):
        polys = [fs.polynomial(n) for n in names]
        same = [(a, b) for (a, p), (b, q) in itertools.combinations(zip(names, polys), 2)
                if not inequivalent(p, q)]
        yield Check(f"jones.distinct_{tag}", "jones", not same, "pairwise inequivalent",
                    f"equivalent pairs {same}" if same else "pairwise inequivalent")


def twist_checks(fs: FixtureSet, n_range=range(-3, 4)):
    for name, pair in fs.pairs.items():
        if pair.omega < 1:
            continue
        fam = family_of(pair)
        bad = [n for n in n_range
               if not equal_up_to_units(alexander_knot(insert_full_twists(pair, n)), family_alexander(fam, n))]
        yield Check(f"twist.{name}", "twist", not bad, f"routes agree for n={n_range.start}..{n_range.stop - 1}",
                    f"disagree at {bad}" if bad else f"routes agree for n={n_range.start}..{n_range.stop - 1}")


def dual_checks(fs: FixtureSet):
    for fam in (1, 2):
        rep = check_cor26(fs.family(fam), range(-5, 6))
        bad = [r.n for r in rep.rows if not r.ok]
        yield Check(f"dual.cor26_family{fam}", "dual", rep.passed, "all n=-5..5",
                    f"fails at {bad}" if bad else "all n=-5..5")
    for name in ("delta_kc_family1", "delta_k0c_family2"):
        p = fs.polynomial(name)
        got = dual_polynomial(p)
        yield Check(f"dual.fixed_{name}", "dual", equal_up_to_units(got, p), _txt(p), _txt(got))


def homology_checks(fs: FixtureSet):
    bad = [lk for lk in range(-5, 6)
           if (first_homology(FramedLink.two_component(lk)) == []) != (abs(lk) == 1)]
    yield Check("homology.lk_sweep", "homology", not bad, "trivial iff |lk| = 1 for lk=-5..5",
                f"wrong at {bad}" if bad else "trivial iff |lk| = 1 for lk=-5..5")
    cases = [(Slope(0), n, 1, n) for n in range(-5, 6)] + \
            [(Slope(m), n, 1, m + n) for m in range(-3, 4) for n in range(-3, 4)]
    bad = [(f.p, n) for f, n, w, want in cases if slope_after_twist(f, n, w) != Slope(want)]
    yield Check("homology.slopes", "homology", not bad, "p + n*lk^2", f"wrong at {bad}" if bad else "p + n*lk^2")


KNOTS = ("trefoil", "figure8", "8_6", "9_42", "pretzel_-5_-3_3")
LINKS = ("hopf", "whitehead", "trefoil_axis2", "figure8_axis3")


def link_alexander_pair(d):
    """Normal forms for both variable orders: an invariant of the unordered link."""
    return frozenset(normal_form(alexander_link2(d, variables=v)) for v in ("xy", "yx"))


def _invariants(d):
    alex = normal_form(alexander_knot(d)) if d.n_components == 1 else link_alexander_pair(d)
    lks = sorted(v for i, row in enumerate(linking_matrix_of(d)) for v in row[i + 1:])
    return alex, jones(d), lks


def random_walk(d, steps: int, rng: random.Random):
    """Yield (move, before, after) for a random sequence of legal moves."""
    for _ in range(steps):
        m = random_move(d, rng)
        e = apply_move(d, m)
        yield m, d, e
        d = e


def invariance_checks(fs: FixtureSet, steps: int = 30, seed: int = 2024):
    rng = random.Random(seed)
    for name in KNOTS + LINKS:
        d0 = fs.diagram(name)
        ref = _invariants(d0)
        bad, count = [], 0
        for m, before, after in random_walk(d0, steps, rng):
            count += 1
            dw = writhe(after) - writhe(before)
            writhe_ok = dw == m.sign if m.kind == "R1+" else abs(dw) == 1 if m.kind == "R1-" else dw == 0
            if _invariants(after) != ref or not writhe_ok:
                bad.append(f"{m.kind}@{count}")
        yield Check(f"invariance.moves_{name}", "invariance", not bad, f"{steps} moves preserve Alexander, Jones, lk",
                    f"broken by {bad}" if bad else f"{count} moves preserve Alexander, Jones, lk")
    vals = {n: lp_evaluate(alexander_knot(fs.diagram(n)), 1) for n in KNOTS}
    yield Check("invariance.alexander_at_1", "invariance", all(abs(v) == 1 for v in vals.values()),
                "+-1 on every knot", str(vals))
    names = KNOTS + LINKS + ("unknot", "unlink2")
    vals = {n: lp_evaluate(jones(fs.diagram(n)), 1) for n in names}
    want = {n: (-2) ** (fs.diagram(n).n_components - 1) for n in names}
    yield Check("invariance.jones_at_1", "invariance", vals == want, str(want), str(vals))
    bad = []
    for n in KNOTS + LINKS:
        p = wirtinger(fs.diagram(n))
        for v in (("one",) if p.n_generators and fs.diagram(n).n_components == 1 else ("xy", "yx")):
            if not fundamental_identity_holds(fox_matrix(p, v)):
                bad.append(f"{n}/{v}")
    yield Check("invariance.fox_row_identity", "invariance", not bad, "every row abelianizes to 0",
                f"fails on {bad}" if bad else "every row abelianizes to 0")
    bad = []
    for n in KNOTS:
        d = fs.diagram(n)
        size = len(d)
        ref = normal_form(_knot_delta(d))
        bad += [f"{n}({r},{c})" for r in range(size) for c in range(size)
                if normal_form(_knot_delta(d, r, c)) != ref]
    for n in LINKS:
        d = fs.diagram(n)
        size = len(d)
        ref = normal_form(link2_minor_quotient(d))
        bad += [f"{n}({r},{c})" for r in range(size) for c in range(size)
                if normal_form(link2_minor_quotient(d, r, c)) != ref]
    yield Check("invariance.deletion_independence", "invariance", not bad, "all row/column choices agree",
                f"differ at {bad[:5]}" if bad else "all row/column choices agree")


_GROUPS = {"alex": alex_checks, "jones": jones_checks, "twist": twist_checks,
           "dual": dual_checks, "homology": homology_checks, "invariance": invariance_checks}


def run_checks(fs: FixtureSet, only: str | None = None) -> list:
    tags = TAGS if only is None else (only,)
    out = []
    for tag in tags:
        if tag not in _GROUPS:
            raise KeyError(f"unknown tag {tag!r}; choose from {', '.join(TAGS)}")
        out.extend(_GROUPS[tag](fs))
    return out
