"""Kauffman bracket state sum and the Jones polynomial.

The state enumeration is the hot loop.  A compiled kernel is used when the
extension was built; otherwise the pure-Python version runs with identical
results.  Set ``SLOPEKIT_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

from .diagram import LinkDiagram, writhe
from .laurent import LPoly1
from ._kernels import statesum_py

try:
    if os.environ.get("SLOPEKIT_PURE_PYTHON"):
        raise ImportError
    from ._kernels import statesum as _compiled
except ImportError:
    _compiled = None

HAVE_COMPILED = _compiled is not None


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class StateSumConfig:
    max_crossings: int = 24
    backend: str = "auto"  # "auto", "compiled" or "python"


DEFAULT_CONFIG = StateSumConfig()


def _kernel(backend: str):
    if backend == "python":
        return statesum_py.state_histogram
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled state-sum kernel is not available")
        return _compiled.state_histogram
    return (_compiled or statesum_py).state_histogram


def state_histogram(d: LinkDiagram, cfg: StateSumConfig = DEFAULT_CONFIG) -> dict:
    if len(d.crossings) > cfg.max_crossings:
        raise TooLarge(f"{len(d.crossings)} crossings exceeds the cap of {cfg.max_crossings}")
    index = {a: i for i, a in enumerate(sorted(d.slots))}
    cols = [[index[x[j]] for x in d.crossings] for j in range(4)]
    return _kernel(cfg.backend)(len(index), *cols)


def _delta_powers(top: int) -> list:
    delta = LPoly1({2: -1, -2: -1}, "A")
    out = [LPoly1({0: 1}, "A")]
    for _ in range(top):
        out.append(out[-1] * delta)
    return out


def kauffman_bracket(d: LinkDiagram, cfg: StateSumConfig = DEFAULT_CONFIG) -> LPoly1:
    """Unnormalized bracket: each state contributes A^(a-b) delta^(loops-1)."""
    n = len(d.crossings)
    hist = state_histogram(d, cfg) if n else {(0, 0): 1}
    extra = len(d.loops)
    top = max(loops for _, loops in hist) + extra
    powers = _delta_powers(top)
    total = LPoly1(None, "A")
    for (k, loops), count in sorted(hist.items()):
        total = total + powers[loops + extra - 1].shift((2 * k - n,)) * count
    return total


def jones(d: LinkDiagram, cfg: StateSumConfig = DEFAULT_CONFIG) -> LPoly1:
    """Jones polynomial V = (-A^3)^(-w) <D> with q = A^-4.

    When every exponent is a multiple of 4 the result is returned in ``q``.
    Otherwise (even component count) the A-form is returned with variable
    name ``A``; check ``result.var``.
    """
    w = writhe(d)
    br = kauffman_bracket(d, cfg)
    sign = -1 if w % 2 else 1
    v = br.shift((-3 * w,)) * sign
    if all(e % 4 == 0 for e in v.coeffs):
        return LPoly1({-e // 4: c for e, c in v.coeffs.items()}, "q")
    return v


def q_mirror(p: LPoly1) -> LPoly1:
    """q -> 1/q (or A -> 1/A)."""
    return LPoly1({-e: c for e, c in p.coeffs.items()}, p.var)


def equal_up_to_mirror(p: LPoly1, q: LPoly1) -> bool:
    return p == q or q_mirror(p) == q
