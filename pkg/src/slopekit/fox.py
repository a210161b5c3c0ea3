"""Wirtinger presentations, Fox calculus and Alexander polynomials."""
from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import DiagramError, LinkDiagram
from .laurent import LPoly, as_lpoly1, as_lpoly2, lp_exact_divide, symmetrize


class CrossingFreeComponent(DiagramError):
    pass


class ComponentCountMismatch(DiagramError):
    pass


@dataclass(frozen=True)
class WirtingerPresentation:
    """One generator per over-arc, one conjugation relator per crossing.

    Relators are words of ``(generator, +-1)`` letters reading
    ``x_j^e x_i x_j^-e x_k^-1`` with x_i / x_k the incoming / outgoing
    under-arcs, x_j the over-arc and e the crossing sign.
    """
    n_generators: int
    relators: tuple
    component_of: tuple
    arc_generator: dict = field(repr=False, compare=False)


@dataclass(frozen=True)
class AlexanderMatrix:
    entries: tuple  # rows of LPoly
    abelianization: tuple  # generator -> monomial

    @property
    def shape(self):
        return len(self.entries), len(self.abelianization)


def wirtinger(d: LinkDiagram) -> WirtingerPresentation:
    if d.loops or any(not d.crossings_of(c) for c in range(d.n_components)):
        raise CrossingFreeComponent("every component needs a crossing; R1-stabilize first")
    parent = {a: a for a in d.slots}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in d.crossings:
        ra, rb = find(x[1]), find(x[3])
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    roots = sorted({find(a) for a in d.slots})
    gen_index = {r: i for i, r in enumerate(roots)}
    arc_gen = {a: gen_index[find(a)] for a in d.slots}
    relators = []
    for x, s in zip(d.crossings, d.signs):
        i, j, k = arc_gen[x[0]], arc_gen[x[1]], arc_gen[x[2]]
        relators.append(((j, s), (i, 1), (j, -s), (k, -1)))
    comp = tuple(d.component_of[r] for r in roots)
    return WirtingerPresentation(len(roots), tuple(relators), comp, arc_gen)


def _one(names):
    return LPoly.constant(1, names)


def abelianization(p: WirtingerPresentation, variables: str = "one") -> tuple:
    """Generator -> monomial: all t, or x / y by component."""
    if variables == "one":
        t = LPoly.monomial((1,), 1, ("t",))
        return tuple(t for _ in range(p.n_generators))
    ncomp = max(p.component_of) + 1
    if ncomp != 2:
        raise ComponentCountMismatch(f"two-variable labeling needs 2 components, got {ncomp}")
    x = LPoly.monomial((1, 0), 1, ("x", "y"))
    y = LPoly.monomial((0, 1), 1, ("x", "y"))
    swap = variables == "yx"
    return tuple((y if swap else x) if c == 0 else (x if swap else y) for c in p.component_of)


def fox_derivative(word, gen: int, phi: tuple) -> LPoly:
    names = phi[0].names
    prefix = _one(names)
    out = LPoly.constant(0, names)
    for g, e in word:
        if e == 1:
            if g == gen:
                out = out + prefix
            prefix = prefix * phi[g]
        else:
            prefix = prefix * phi[g] ** -1
            if g == gen:
                out = out - prefix
    return out


def fox_matrix(p: WirtingerPresentation, variables: str = "one") -> AlexanderMatrix:
    phi = abelianization(p, variables)
    rows = tuple(tuple(fox_derivative(r, g, phi) for g in range(p.n_generators)) for r in p.relators)
    return AlexanderMatrix(rows, phi)


def fundamental_identity_holds(m: AlexanderMatrix) -> bool:
    """Sum over g of entry(r, g) * (phi(g) - 1) vanishes for every row."""
    for row in m.entries:
        total = LPoly.constant(0, m.abelianization[0].names)
        for e, ph in zip(row, m.abelianization):
            total = total + e * (ph - 1)
        if not total.is_zero():
            return False
    return True


def minor(entries, drop_row: int, drop_col: int) -> list:
    return [[e for j, e in enumerate(row) if j != drop_col] for i, row in enumerate(entries) if i != drop_row]


def determinant(rows, names=("t",)) -> LPoly:
    """Fraction-free (Bareiss) elimination; every division is exact."""
    n = len(rows)
    if n == 0:
        return _one(names)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    names = rows[0][0].names
    a = [list(r) for r in rows]
    sign = 1
    prev = _one(names)
    for k in range(n - 1):
        cands = [i for i in range(k, n) if not a[i][k].is_zero()]
        if not cands:
            return LPoly.constant(0, names)
        piv = min(cands, key=lambda i: (len(a[i][k]), i))
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = akk * row_i[j] - aik * row_k[j]
                row_i[j] = num if prev.is_monomial() and prev == 1 else lp_exact_divide(num, prev)
            row_i[k] = LPoly.constant(0, names)
        prev = akk
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def _knot_delta(d: LinkDiagram, drop_row=None, drop_col=None) -> LPoly:
    if d.n_components != 1:
        raise ComponentCountMismatch(f"expected a knot, got {d.n_components} components")
    p = wirtinger(d)
    m = fox_matrix(p, "one")
    n = len(m.entries)
    r = n - 1 if drop_row is None else drop_row
    c = n - 1 if drop_col is None else drop_col
    return determinant(minor(m.entries, r, c), ("t",))


def alexander_knot(d: LinkDiagram, drop_row: int | None = None, drop_col: int | None = None):
    """Symmetrized Alexander polynomial of a knot diagram, normalized Delta(1) = 1."""
    raw = _knot_delta(d, drop_row, drop_col)
    return as_lpoly1(symmetrize(raw, "at_one")[0])


def link2_minor_quotient(d: LinkDiagram, drop_row: int | None = None, drop_col: int | None = None,
                         variables: str = "xy") -> LPoly:
    """D_j / (m_j - 1) for one choice of deleted row and column."""
    if d.n_components != 2:
        raise ComponentCountMismatch(f"expected 2 components, got {d.n_components}")
    p = wirtinger(d)
    m = fox_matrix(p, variables)
    names = ("x", "y")
    if p.n_generators != len(p.relators):
        # a component passing over everything can be lifted off: split link
        return LPoly.constant(0, names)
    n = len(m.entries)
    r = n - 1 if drop_row is None else drop_row
    c = n - 1 if drop_col is None else drop_col
    dj = determinant(minor(m.entries, r, c), names)
    return lp_exact_divide(dj, m.abelianization[c] - 1)


def alexander_link2(d: LinkDiagram, drop_row: int | None = None, drop_col: int | None = None,
                    variables: str = "xy"):
    """Two-variable Alexander polynomial of a 2-component link diagram.

    ``x`` belongs to component 0 (the one holding the lowest arc label)
    unless ``variables="yx"``.  The result is centered when the exponent
    spreads allow it; otherwise it is left in unit-normal form.
    """
    q = link2_minor_quotient(d, drop_row, drop_col, variables)
    return as_lpoly2(symmetrize(q, "lex")[0])
