"""Surgery slopes, linking matrices and first homology of surgered manifolds."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field


class NonIntegralFraming(ValueError):
    pass


class FramedLinkSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class Slope:
    """p/q with q >= 0 and gcd(p, q) = 1; 1/0 is the trivial filling."""
    p: int
    q: int = 1

    def __post_init__(self):
        p, q = self.p, self.q
        if (p, q) == (0, 0):
            raise ValueError("0/0 is not a slope")
        if q < 0:
            p, q = -p, -q
        g = math.gcd(p, q)
        p, q = p // g, q // g
        if q == 0:
            p = 1  # p/0 is the same slope for every p
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    @property
    def is_integral(self) -> bool:
        return self.q == 1

    @classmethod
    def parse(cls, text: str) -> "Slope":
        t = text.strip().lower()
        if t in ("inf", "infinity", "1/0", "oo"):
            return cls(1, 0)
        m = re.fullmatch(r"([+-]?\d+)(?:/(\d+))?", t)
        if not m:
            raise FramedLinkSyntaxError(f"bad slope {text!r}")
        return cls(int(m.group(1)), int(m.group(2) or 1))

    def __str__(self):
        if self.is_infinite:
            return "inf"
        return str(self.p) if self.q == 1 else f"{self.p}/{self.q}"


@dataclass(frozen=True)
class FramedLink:
    components: int
    linking: tuple            # symmetric matrix; the diagonal is ignored
    framings: tuple           # one Slope per component

    def __post_init__(self):
        n = self.components
        lk = tuple(tuple(int(v) for v in row) for row in self.linking)
        if len(lk) != n or any(len(r) != n for r in lk):
            raise ValueError("linking matrix has the wrong shape")
        for i in range(n):
            for j in range(n):
                if i != j and lk[i][j] != lk[j][i]:
                    raise ValueError("linking matrix must be symmetric")
        if len(self.framings) != n:
            raise ValueError("one framing per component")
        object.__setattr__(self, "linking", lk)
        object.__setattr__(self, "framings", tuple(self.framings))

    @classmethod
    def two_component(cls, lk: int, f1: Slope | int = 0, f2: Slope | int = 0) -> "FramedLink":
        f1 = f1 if isinstance(f1, Slope) else Slope(f1)
        f2 = f2 if isinstance(f2, Slope) else Slope(f2)
        return cls(2, ((0, lk), (lk, 0)), (f1, f2))

    def permuted(self, perm) -> "FramedLink":
        lk = tuple(tuple(self.linking[perm[i]][perm[j]] for j in range(self.components))
                   for i in range(self.components))
        return FramedLink(self.components, lk, tuple(self.framings[p] for p in perm))


def parse_framed_link(text: str) -> FramedLink:
    """``components: n``, ``lk: i j v`` and ``framing: i p/q|inf`` lines.

    Indices are 0-based; unset linking numbers are 0 and unset framings are
    0.  ``#`` and ``%`` start comments.
    """
    n = None
    lks, frs = {}, {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = re.split(r"[#%]", line, maxsplit=1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(":")
        key, parts = key.strip().lower(), rest.split()
        try:
            if key == "components" and len(parts) == 1:
                n = int(parts[0])
            elif key == "lk" and len(parts) == 3:
                i, j, v = map(int, parts)
                lks[i, j] = lks[j, i] = v
            elif key == "framing" and len(parts) == 2:
                frs[int(parts[0])] = Slope.parse(parts[1])
            else:
                raise FramedLinkSyntaxError(f"line {lineno}: cannot read {line!r}")
        except ValueError as exc:
            if isinstance(exc, FramedLinkSyntaxError):
                raise
            raise FramedLinkSyntaxError(f"line {lineno}: {exc}") from None
    if n is None or n < 1:
        raise FramedLinkSyntaxError("missing or invalid 'components:' line")
    for i, j in list(lks) + [(k, k) for k in frs]:
        if not (0 <= i < n and 0 <= j < n):
            raise FramedLinkSyntaxError(f"component index out of range in {(i, j)}")
        if i == j and (i, j) in lks:
            raise FramedLinkSyntaxError("a component does not link itself; use 'framing:'")
    lk = tuple(tuple(lks.get((i, j), 0) for j in range(n)) for i in range(n))
    return FramedLink(n, lk, tuple(frs.get(i, Slope(0)) for i in range(n)))


def linking_matrix(fl: FramedLink) -> list:
    """Framings on the diagonal, linking numbers off it; 1/0 components dropped."""
    keep = [i for i, f in enumerate(fl.framings) if not f.is_infinite]
    for i in keep:
        if not fl.framings[i].is_integral:
            raise NonIntegralFraming(f"component {i} has framing {fl.framings[i]}")
    return [[fl.framings[i].p if i == j else fl.linking[i][j] for j in keep] for i in keep]


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


@dataclass
class SmithForm:
    factors: list                 # d1 | d2 | ... on the diagonal
    U: list = field(repr=False)   # unimodular, rows
    V: list = field(repr=False)   # unimodular, columns
    diagonal: list = field(repr=False)


def smith_normal_form(M) -> SmithForm:
    """U * M * V = diag(d1, d2, ...), pivoting on the smallest |entry|."""
    A = [list(map(int, r)) for r in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U, V = _identity(m), _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in (A, V):
            for r in R:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):  # row dst += k * row src
        for R in (A, U):
            R[dst] = [a + k * b for a, b in zip(R[dst], R[src])]

    def add_col(dst, src, k):
        for R in (A, V):
            for r in R:
                r[dst] += k * r[src]

    for t in range(min(m, n)):
        while True:
            nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not nz:
                break
            _, i, j = min(nz)
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            if any(A[i][t] for i in range(t + 1, m)) or any(A[t][j] for j in range(t + 1, n)):
                continue  # a smaller remainder appeared; pivot again
            bad = [i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p]
            if bad:
                add_row(t, bad[0], 1)
                continue
            break
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    diag = [A[i][i] for i in range(min(m, n))]
    return SmithForm(diag, U, V, A)


def first_homology(fl: FramedLink) -> list:
    """Invariant factors other than 1 of H1 of the surgered manifold (0 = Z)."""
    M = linking_matrix(fl)
    if not M:
        return []
    return [d for d in smith_normal_form(M).factors if d != 1]


def format_homology(factors) -> str:
    if not factors:
        return "H1 = 0"
    parts = ["Z" if d == 0 else f"Z/{d}" for d in sorted(factors, key=lambda d: (d != 0, d))]
    return "H1 = " + " + ".join(parts)


def slope_after_twist(framing: Slope, n: int, omega: int) -> Slope:
    """Surgery slope carried by k_n: p + n * omega^2."""
    if not framing.is_integral:
        raise NonIntegralFraming(f"slope {framing} is not integral")
    return Slope(framing.p + n * omega * omega)
