"""Exact Laurent polynomials over the integers in one or two variables.

Polynomials are immutable sparse maps from exponent tuples to nonzero
Python integers, so coefficients never overflow.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Mapping


class NotDivisible(ArithmeticError):
    """Raised when an exact Laurent division has a nonzero remainder."""


class LPoly:
    """Sparse Laurent polynomial with integer coefficients.

    ``terms`` maps exponent tuples (one entry per variable) to coefficients.
    Variable names are carried for display only; equality ignores them.
    """

    __slots__ = ("_terms", "names", "_hash")

    def __init__(self, terms: Mapping[tuple, int] | None = None, names: Iterable[str] = ("t",)):
        names = tuple(names)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(names):
                raise ValueError(f"exponent {exp} does not match variables {names}")
            if c:
                clean[exp] = clean.get(exp, 0) + int(c)
        self._terms = {e: c for e, c in clean.items() if c}
        self.names = names
        self._hash = None

    # -- construction helpers -------------------------------------------------
    @staticmethod
    def constant(c: int, names: Iterable[str] = ("t",)) -> "LPoly":
        names = tuple(names)
        return _typed(None, {(0,) * len(names): c} if c else {}, names)

    @staticmethod
    def monomial(exps: Iterable[int], coeff: int = 1, names: Iterable[str] = ("t",)) -> "LPoly":
        return _typed(None, {tuple(exps): coeff} if coeff else {}, names)

    def _new(self, terms: dict) -> "LPoly":
        p = object.__new__(type(self))
        p._terms = terms
        p.names = self.names
        p._hash = None
        return p

    # -- basic structure ------------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms sorted by exponent (lexicographic, ascending)."""
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, *exps: int) -> int:
        return self._terms.get(tuple(exps), 0)

    def min_exponents(self) -> tuple:
        if not self._terms:
            return (0,) * self.nvars
        return tuple(min(e[i] for e in self._terms) for i in range(self.nvars))

    def max_exponents(self) -> tuple:
        if not self._terms:
            return (0,) * self.nvars
        return tuple(max(e[i] for e in self._terms) for i in range(self.nvars))

    def leading(self) -> tuple:
        """(exponent, coefficient) of the lexicographically largest term."""
        e = max(self._terms)
        return e, self._terms[e]

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # -- arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> "LPoly":
        if isinstance(other, LPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials over different variable sets")
            return other
        if isinstance(other, int):
            return self.constant(other, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return lp_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only exist for monomials")
            (e, c), = self._terms.items()
            if abs(c) != 1:
                raise ValueError("negative powers only exist for unit monomials")
            return self._new({tuple(k * x for x in e): c ** (-k)})
        result = self.constant(1, self.names)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.constant(other, self.names)
        if not isinstance(other, LPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def shift(self, exps: Iterable[int]) -> "LPoly":
        """Multiply by the monomial with exponents ``exps``."""
        exps = tuple(exps)
        return self._new({tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()})

    def rename(self, *names: str) -> "LPoly":
        p = self._new(dict(self._terms))
        p.names = tuple(names)
        return p

    # -- display --------------------------------------------------------------
    def __str__(self):
        return format_lpoly(self)

    def __repr__(self):
        return f"{type(self).__name__}({format_lpoly(self)!r})"


class LPoly1(LPoly):
    """One-variable Laurent polynomial; coefficients keyed by integer exponent."""

    __slots__ = ()

    def __init__(self, coeffs: Mapping[int, int] | None = None, var: str = "t"):
        super().__init__({(e,): c for e, c in (coeffs or {}).items()}, (var,))

    @property
    def coeffs(self) -> dict:
        return {e[0]: c for e, c in self._terms.items()}

    @property
    def var(self) -> str:
        return self.names[0]

    def degree_span(self) -> tuple:
        return self.min_exponents()[0], self.max_exponents()[0]


class LPoly2(LPoly):
    """Two-variable Laurent polynomial; coefficients keyed by (a, b)."""

    __slots__ = ()

    def __init__(self, coeffs: Mapping[tuple, int] | None = None, names: tuple = ("x", "y")):
        super().__init__(coeffs or {}, names)


def as_lpoly1(p: LPoly) -> LPoly1:
    q = LPoly1(None, p.names[0])
    q._terms = dict(p._terms)
    return q


def as_lpoly2(p: LPoly) -> LPoly2:
    q = LPoly2(None, p.names)
    q._terms = dict(p._terms)
    return q


def _typed(p: LPoly | None, terms: dict, names=None) -> LPoly:
    names = tuple(names or p.names)
    if len(names) == 1:
        q = LPoly1(None, names[0])
    elif len(names) == 2:
        q = LPoly2(None, names)
    else:
        q = LPoly(None, names)
    q._terms = terms
    return q


# ---------------------------------------------------------------------------
# ring operations
# ---------------------------------------------------------------------------

def lp_mul(p: LPoly, q: LPoly) -> LPoly:
    if p.nvars != q.nvars:
        raise ValueError("polynomials over different variable sets")
    out: dict = {}
    if p.nvars == 1:
        for (a,), c in p._terms.items():
            for (b,), d in q._terms.items():
                k = (a + b,)
                out[k] = out.get(k, 0) + c * d
    else:
        for e, c in p._terms.items():
            for f, d in q._terms.items():
                k = tuple(x + y for x, y in zip(e, f))
                out[k] = out.get(k, 0) + c * d
    return p._new({k: v for k, v in out.items() if v})


def lp_substitute_power(p: LPoly, target: str = "y", d: int = 1, var: str = "t") -> LPoly1:
    """Send the ``target`` variable to t**d and the other variable to t.

    ``target`` is one of the polynomial's variable names, or ``"x"``/``"y"``
    for the first/second slot.
    """
    if p.nvars != 2:
        raise ValueError("power substitution expects a two-variable polynomial")
    if target in p.names:
        slot = p.names.index(target)
    elif target in ("x", "y"):
        slot = "xy".index(target)
    else:
        raise ValueError(f"unknown variable {target!r}")
    wx, wy = (1, d) if slot == 1 else (d, 1)
    out: dict = {}
    for (a, b), c in p._terms.items():
        k = (wx * a + wy * b,)
        out[k] = out.get(k, 0) + c
    return _typed(p, {k: v for k, v in out.items() if v}, (var,))


def lp_invert_vars(p: LPoly, which: Iterable[str | int] = ("x", "y")) -> LPoly:
    """Replace each selected variable v by 1/v."""
    idx = set()
    for w in which:
        if isinstance(w, int):
            idx.add(w)
        elif w in p.names:
            idx.add(p.names.index(w))
        else:
            idx.add({"x": 0, "y": 1, "t": 0}[w])
    return p._new({tuple(-x if i in idx else x for i, x in enumerate(e)): c for e, c in p._terms.items()})


def lp_evaluate(p: LPoly, value: int) -> int:
    """Evaluate at a unit value (+1 or -1) in every variable."""
    if value not in (1, -1):
        raise ValueError("evaluation is only defined at +1 or -1")
    if value == 1:
        return sum(p._terms.values())
    return sum(c * (-1) ** (sum(e) % 2) for e, c in p._terms.items())


@dataclass(frozen=True)
class UnitNormalForm:
    polynomial: LPoly
    applied_unit: LPoly


def lp_normalize_units(p: LPoly) -> UnitNormalForm:
    """Divide out the unit +-x^a y^b that puts ``p`` in canonical position.

    Minimal exponents become 0 in every variable and the coefficient of the
    lexicographically smallest exponent becomes positive.
    """
    if p.is_zero():
        return UnitNormalForm(p, p.constant(1, p.names))
    lo = p.min_exponents()
    first = min(p._terms)
    sign = 1 if p._terms[first] > 0 else -1
    terms = {tuple(x - m for x, m in zip(e, lo)): sign * c for e, c in p._terms.items()}
    return UnitNormalForm(p._new(terms), p.monomial(lo, sign, p.names))


def normal_form(p: LPoly) -> LPoly:
    return lp_normalize_units(p).polynomial


def equal_up_to_units(p: LPoly, q: LPoly) -> bool:
    return p.nvars == q.nvars and normal_form(p) == normal_form(q)


def lp_exact_divide(p: LPoly, q: LPoly) -> LPoly:
    """Return r with p == q * r, raising NotDivisible otherwise.

    Long division by lexicographic leading terms.  Newton polytopes add
    under multiplication, so every quotient exponent must lie inside a box
    computed from the exponent ranges; leaving the box proves a remainder.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.nvars != q.nvars:
        raise ValueError("polynomials over different variable sets")
    if p.is_zero():
        return p._new({})
    plo, phi = p.min_exponents(), p.max_exponents()
    qlo, qhi = q.min_exponents(), q.max_exponents()
    lo = tuple(a - b for a, b in zip(plo, qlo))
    hi = tuple(a - b for a, b in zip(phi, qhi))
    if any(a > b for a, b in zip(lo, hi)):
        raise NotDivisible(f"{p} is not divisible by {q}")
    qe, qc = q.leading()
    qterms = list(q._terms.items())
    rem = dict(p._terms)
    quot: dict = {}
    while rem:
        e = max(rem)
        c = rem[e]
        k = tuple(a - b for a, b in zip(e, qe))
        if c % qc or any(x < a or x > b for x, a, b in zip(k, lo, hi)):
            raise NotDivisible(f"{p} is not divisible by {q}")
        m = c // qc
        quot[k] = m
        for f, d in qterms:
            g = tuple(x + y for x, y in zip(k, f))
            v = rem.get(g, 0) - m * d
            if v:
                rem[g] = v
            else:
                rem.pop(g, None)
    return p._new(quot)


# ---------------------------------------------------------------------------
# symmetrization
# ---------------------------------------------------------------------------

def symmetrize(p: LPoly, sign_rule: str = "lex") -> tuple:
    """Center the support of ``p`` about the origin.

    Returns ``(poly, centered)``.  When some variable has an odd exponent
    spread no centering exists; the unit-normal form is returned with
    ``centered=False``.  ``sign_rule`` is ``"lex"`` (lexicographically first
    coefficient positive) or ``"at_one"`` (value at 1 positive when nonzero).
    """
    if p.is_zero():
        return p, True
    nf = normal_form(p)
    spread = nf.max_exponents()
    centered = all(s % 2 == 0 for s in spread)
    out = nf.shift(tuple(-(s // 2) for s in spread)) if centered else nf
    if sign_rule == "at_one":
        v = lp_evaluate(out, 1)
        if v < 0 or (v == 0 and out._terms[min(out._terms)] < 0):
            out = -out
    elif out._terms[min(out._terms)] < 0:
        out = -out
    return out, centered


def is_symmetric(p: LPoly) -> bool:
    """True when p(v^-1, ...) == p exactly."""
    return lp_invert_vars(p, range(p.nvars)) == p


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def _monomial_text(exps, names) -> str:
    parts = []
    for e, n in zip(exps, names):
        if e == 0:
            continue
        parts.append(n if e == 1 else f"{n}^{e}")
    return "*".join(parts)


def format_lpoly(p: LPoly) -> str:
    """Sorted term list, e.g. ``-1*t^-2 + 2*t^-1 - 1 + 2*t - 1*t^2``."""
    if p.is_zero():
        return "0"
    out = []
    for i, (e, c) in enumerate(p.items()):
        mono = _monomial_text(e, p.names)
        mag = abs(c) if i else c
        body = f"{mag}*{mono}" if mono else f"{mag}"
        if i == 0:
            out.append(body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


_TERM_SPLIT = re.compile(r"(?<![\^*])(?=[+-])")
_FACTOR = re.compile(r"^(?:(\d+)|([A-Za-z]\w*)(?:\^(-?\d+))?)$")


class PolynomialSyntaxError(ValueError):
    pass


def parse_lpoly(text: str, names: Iterable[str] | None = None) -> LPoly:
    """Parse the sorted-term text format (order and spacing are free)."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise PolynomialSyntaxError("empty polynomial")
    raw = []
    for chunk in _TERM_SPLIT.split(s):
        if not chunk:
            continue
        sign = 1
        while chunk and chunk[0] in "+-":
            if chunk[0] == "-":
                sign = -sign
            chunk = chunk[1:]
        if not chunk:
            raise PolynomialSyntaxError(f"dangling sign in {text!r}")
        coeff, powers = sign, {}
        for fac in chunk.split("*"):
            m = _FACTOR.match(fac)
            if not m:
                raise PolynomialSyntaxError(f"bad factor {fac!r} in {text!r}")
            if m.group(1):
                coeff *= int(m.group(1))
            else:
                v = m.group(2)
                powers[v] = powers.get(v, 0) + int(m.group(3) or 1)
        raw.append((coeff, powers))
    seen = sorted({v for _, pw in raw for v in pw})
    if names is None:
        names = tuple(seen) if seen else ("t",)
    names = tuple(names)
    unknown = set(seen) - set(names)
    if unknown:
        raise PolynomialSyntaxError(f"unknown variables {sorted(unknown)} (expected {names})")
    terms: dict = {}
    for coeff, pw in raw:
        e = tuple(pw.get(n, 0) for n in names)
        terms[e] = terms.get(e, 0) + coeff
    return _typed(None, {e: c for e, c in terms.items() if c}, names)


def product(polys: Iterable[LPoly], one: LPoly) -> LPoly:
    return reduce(lp_mul, polys, one)
