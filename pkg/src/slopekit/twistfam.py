"""Twist families along an unknotted circle.

A pair k u c is stored with c drawn as a small ring around the strands of k
that pass through its disk (the *gate*): c runs over those strands one after
another, then back under them in reverse order.  Twisting n times along c
replaces the ring by n full twists of the gate strands.  The same family is
reachable on the polynomial side by substituting y -> t^(n*omega) into the
two-variable Alexander polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import (DiagramError, LinkDiagram, linking_number, orient_raw, remove_crossings,
                      reverse_component)
from .fox import alexander_link2
from .laurent import (LPoly, LPoly1, LPoly2, as_lpoly1, as_lpoly2, equal_up_to_units,
                      lp_exact_divide, lp_invert_vars, lp_substitute_power, normal_form, symmetrize)


class EmptyGate(DiagramError):
    pass


class NotEncircling(DiagramError):
    """The marked component is not a ring around a run of strands."""


class GateMismatch(DiagramError):
    pass


class NonPositiveOmega(ValueError):
    pass


@dataclass(frozen=True)
class GateStrand:
    over_crossing: int   # c passes over the strand here
    under_crossing: int  # and under it here
    outer: int           # strand arc outside the ring on the over side
    mid: int             # strand arc inside the ring
    inner: int           # strand arc outside the ring on the under side
    sign: int            # linking contribution of this strand


@dataclass(frozen=True)
class AnnotatedPair:
    diagram: LinkDiagram
    c_component: int
    gate: tuple           # ((mid arc, +-1), ...) in the order c passes over them
    omega: int
    name: str = ""

    @property
    def k_component(self) -> int:
        return 1 - self.c_component


def _ring(d: LinkDiagram, c: int):
    """Decode the ring structure of component ``c``.

    Returns (strands, handedness): GateStrand records in the order c passes
    over them, and +1 when the over edge runs west to east with the ring
    interior to the south in counterclockwise terms, -1 for the mirror frame.
    """
    if d.n_components != 2 or c not in (0, 1):
        raise NotEncircling("an annotated pair needs exactly two components")
    if c in (d.component_of[a] for a in d.loops):
        raise NotEncircling("the twisting circle has no crossings")
    arcs = d.components[c]
    visits = []  # (crossing, c over?) in c's order
    for a in arcs:
        ci, pos = d.head[a]
        if d.strand_components(ci) == (c, c):
            raise NotEncircling("the twisting circle crosses itself")
        visits.append((ci, pos % 2 == 1))
    n = len(visits)
    if n % 2 or n == 0:
        raise NotEncircling("the twisting circle must cross k an even, nonzero number of times")
    s = n // 2
    starts = [i for i in range(n) if visits[i][1] and not visits[i - 1][1]]
    if len(starts) != 1:
        raise NotEncircling("c must pass over all gate strands, then under all of them")
    visits = visits[starts[0]:] + visits[:starts[0]]
    arcs = arcs[starts[0]:] + arcs[:starts[0]]
    if not all(v[1] for v in visits[:s]) or any(v[1] for v in visits[s:]):
        raise NotEncircling("c must pass over all gate strands, then under all of them")
    strands = []
    for k in range(s):
        xo, yu = visits[k][0], visits[n - 1 - k][0]
        ox, uy = d.crossings[xo], d.crossings[yu]
        mids = {ox[0], ox[2]} & {uy[1], uy[3]}
        if not mids:
            raise NotEncircling("gate strands must pass straight through the ring")
        mid = min(mids)  # two shared arcs only on a 2-crossing ring; both are inside
        outer = ox[2] if ox[0] == mid else ox[0]
        inner = uy[3] if uy[1] == mid else uy[1]
        if d.signs[xo] != d.signs[yu]:
            raise NotEncircling("both crossings of a gate strand must have the same sign")
        strands.append(GateStrand(xo, yu, outer, mid, inner, d.signs[xo]))
    # model frame at the first over-crossing: ccw order E, N, W, S holds
    # (c leaving, outer, c arriving, mid)
    x = d.crossings[strands[0].over_crossing]
    i_out = 1 if x[1] == arcs[1] else 3
    hand = 1 if x[(i_out + 1) % 4] == strands[0].outer else -1
    return strands, hand


def annotate(d: LinkDiagram, c: int, name: str = "") -> AnnotatedPair:
    strands, _ = _ring(d, c)
    gate = tuple((g.mid, g.sign) for g in strands)
    omega = linking_number(d, 0, 1)
    return AnnotatedPair(d, c, gate, omega, name)


def check_gate(pair: AnnotatedPair):
    """Validate the stored gate against the diagram; raise GateMismatch."""
    derived = annotate(pair.diagram, pair.c_component)
    if derived.gate != tuple(pair.gate):
        raise GateMismatch(f"gate {list(pair.gate)} does not match the ring, expected {list(derived.gate)}")
    if pair.omega != derived.omega or sum(s for _, s in pair.gate) != derived.omega:
        raise GateMismatch(f"omega {pair.omega} disagrees with lk = {derived.omega}")


def orient_positive(pair: AnnotatedPair) -> AnnotatedPair:
    """Reverse c if needed so that lk(k, c) >= 0."""
    if pair.omega >= 0:
        return pair
    return annotate(reverse_component(pair.diagram, pair.c_component), pair.c_component, pair.name)


def format_gate(gate) -> str:
    return "[" + ", ".join(f"{a}{'+' if s > 0 else '-'}" for a, s in gate) + "]"


def parse_gate(text: str) -> tuple:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"gate must be bracketed: {text!r}")
    out = []
    for tok in body[1:-1].split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok[-1] not in "+-" or not tok[:-1].isdigit():
            raise ValueError(f"bad gate entry {tok!r}")
        out.append((int(tok[:-1]), 1 if tok[-1] == "+" else -1))
    return tuple(out)


# -- diagrammatic route ------------------------------------------------------

# generator sign, in the model frame, of the twists inserted for n > 0; with
# this choice n > 0 gives positive crossings between parallel gate strands
TWIST_HANDEDNESS = 1


def insert_full_twists(pair: AnnotatedPair, n) -> LinkDiagram:
    """Knot diagram of k_n: delete c and put n full twists into the gate.

    A full twist on s strands is the braid (s1 s2 ... s_{s-1})^s; for
    s = 1 or n = 0 the ring is simply deleted.  ``n`` may also be a sequence
    of twist counts, inserted one block after another without cancelling.
    """
    blocks = [n] if isinstance(n, int) else [int(v) for v in n]
    d = pair.diagram
    if not pair.gate:
        raise EmptyGate("gate is empty")
    strands, hand = _ring(d, pair.c_component)
    ring = [i for i in range(len(d)) if pair.c_component in d.strand_components(i)]
    s = len(strands)
    if s == 1 or not any(blocks):
        crossings, loops = remove_crossings(d.crossings, d.loops, ring)
        return LinkDiagram(crossings, [a for a in loops if a not in d.components[pair.c_component]])
    keep = [x for i, x in enumerate(d.crossings) if i not in set(ring)]
    nxt = max(d.arcs) + 1
    cur = [g.outer for g in strands]
    raw = []
    word = [(g, TWIST_HANDEDNESS * hand * (1 if b > 0 else -1))
            for b in blocks for g in list(range(1, s)) * (s * abs(b))]
    for g, gen in word:
        i = g - 1
        tl, tr = cur[i], cur[i + 1]
        bl, br = nxt, nxt + 1
        nxt += 2
        model = [tr, tl, bl, br]  # NE, NW, SW, SE
        u = 1 if gen > 0 else 0  # first slot of the under diagonal
        if hand < 0:  # mirror frame: reverse the cyclic order
            model = [model[0], model[3], model[2], model[1]]
            u = -u % 4
        raw.append(model[u:] + model[:u])
        cur[i], cur[i + 1] = bl, br
    final = {cur[p]: strands[p].inner for p in range(s)}
    raw = [[final.get(a, a) for a in x] for x in raw]
    pd = orient_raw([list(x) for x in keep] + raw, _anchors(d, ring))
    return LinkDiagram(pd, [a for a in d.loops if a not in d.components[pair.c_component]])


def _anchors(d, ring):
    """Arc directions at surviving crossings, re-indexed after deletion."""
    ring = set(ring)
    index = {}
    j = 0
    for i in range(len(d)):
        if i not in ring:
            index[i] = j
            j += 1
    out = {}
    for a, (u, v) in d.slots.items():
        for sl in (u, v):
            if sl[0] in index:
                out[a] = ((index[sl[0]], sl[1]), d.head[a] == sl)
    return out


# -- polynomial route --------------------------------------------------------

@dataclass(frozen=True)
class TwistFamily:
    delta2: LPoly2            # x -> k, y -> c
    omega: int
    base: AnnotatedPair | None = None
    name: str = ""


def family_of(pair: AnnotatedPair) -> TwistFamily:
    variables = "xy" if pair.k_component == 0 else "yx"
    return TwistFamily(alexander_link2(pair.diagram, variables=variables), pair.omega, pair, pair.name)


def _sym1(p: LPoly) -> LPoly1:
    return as_lpoly1(symmetrize(p, "at_one")[0])


def family_alexander(fam: TwistFamily, n: int) -> LPoly1:
    """Delta_{k_n}(t) from Delta_{k u c}(t, t^(n*omega)).

    For omega > 1 the Torres factor (t^omega - 1)/(t - 1) is divided out,
    so the result is the Alexander polynomial of the knot k_n itself.
    """
    if fam.omega <= 0:
        raise NonPositiveOmega(f"need omega > 0, got {fam.omega}; reverse c first")
    p = lp_substitute_power(fam.delta2, "y", n * fam.omega)
    if fam.omega > 1:
        t = LPoly1({1: 1})
        p = lp_exact_divide(p * (t - 1), t ** fam.omega - 1)
    return _sym1(p)


def dual_polynomial(delta2: LPoly) -> LPoly2:
    return as_lpoly2(symmetrize(lp_invert_vars(delta2, "y"), "lex")[0])


def dual_family(fam: TwistFamily) -> TwistFamily:
    return TwistFamily(dual_polynomial(fam.delta2), fam.omega, None, f"dual of {fam.name}".strip())


@dataclass
class Cor26Row:
    n: int
    lhs: LPoly1
    rhs: LPoly1
    ok: bool


@dataclass
class Cor26Report:
    rows: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows)


def check_cor26(fam: TwistFamily, n_range) -> Cor26Report:
    """Delta_{k_n} against Delta_{K_{-n}} computed from the dual polynomial."""
    if fam.omega != 1:
        raise NonPositiveOmega(f"the duality check needs omega = 1, got {fam.omega}")
    dual = dual_family(fam)
    rep = Cor26Report()
    for n in n_range:
        lhs = family_alexander(fam, n)
        rhs = family_alexander(dual, -n)
        rep.rows.append(Cor26Row(n, lhs, rhs, equal_up_to_units(lhs, rhs)))
    return rep


def distinctness_report(fam: TwistFamily, n_range) -> list:
    """Group n-values whose Alexander polynomials agree up to units."""
    classes = {}
    for n in n_range:
        classes.setdefault(normal_form(family_alexander(fam, n)), []).append(n)
    return [tuple(v) for v in classes.values()]
