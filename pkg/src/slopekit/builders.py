"""Build PD codes from braid words, plat closures and pretzel columns.

Strands are drawn at integer positions and run downward.  Generator ``i``
(1-based) crosses positions i and i+1; ``+i`` is a positive crossing when
both strands point down, ``-i`` its inverse.  A word letter ``("c", lo, hi)``
draws a small unknotted circle around positions lo..hi: it passes over those
strands left to right and returns under them.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .diagram import LinkDiagram, canonical_relabel


class _Builder:
    def __init__(self, m: int):
        self.m = m
        self.next_id = 0
        self.top = [self._fresh() for _ in range(m)]
        self.cur = list(self.top)
        # crossings as (ccw segment ids, under slot pair, slots leaving "forward")
        self.crossings = []
        self.joins = []

    def _fresh(self) -> int:
        self.next_id += 1
        return self.next_id

    def sigma(self, g: int):
        i = abs(g) - 1
        if not 0 <= i < self.m - 1:
            raise ValueError(f"generator {g} out of range for {self.m} strands")
        tl, tr = self.cur[i], self.cur[i + 1]
        bl, br = self._fresh(), self._fresh()
        # positive: over strand runs TR -> BL, so the under diagonal is TL-BR
        # ccw order NE, NW, SW, SE
        under = (1, 3) if g > 0 else (0, 2)
        self.crossings.append(([tr, tl, bl, br], under, (2, 3)))
        self.cur[i], self.cur[i + 1] = bl, br

    def ring(self, lo: int, hi: int):
        """Thin circle around positions lo..hi (0-based), over the strands on
        its upper edge and under them on its lower edge.  It is oriented so
        that a downward strand links it positively."""
        s = hi - lo + 1
        h = [self._fresh() for _ in range(s + 1)]
        g = [self._fresh() for _ in range(s + 1)]
        for k in range(s):
            p = lo + k
            mid, bot = self._fresh(), self._fresh()
            # ccw order E, N, W, S
            self.crossings.append(([h[k + 1], self.cur[p], h[k], mid], (1, 3), (2, 3)))
            self.crossings.append(([g[k + 1], mid, g[k], bot], (0, 2), (0, 3)))
            self.cur[p] = bot
        self.join(h[0], g[0])
        self.join(h[s], g[s])

    def join(self, a: int, b: int):
        self.joins.append((a, b))

    def finish(self, orient_down: bool = True, reverse: Iterable[int] = ()) -> LinkDiagram:
        parent = {}

        def find(a):
            parent.setdefault(a, a)
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a, b in self.joins:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        raw = [[find(a) for a in seg] for seg, _, _ in self.crossings]
        unders = [u for _, u, _ in self.crossings]
        # orient each strand: segment label -> slot where it is entered
        slots = {}
        for ci, x in enumerate(raw):
            for p, a in enumerate(x):
                slots.setdefault(a, []).append((ci, p))
        for a, s in slots.items():
            if len(s) != 2:
                raise ValueError(f"segment {a} is not a proper arc ({len(s)} ends)")
        other = {}
        for s, t in slots.values():
            other[s], other[t] = t, s
        enter = {}
        seen = set()
        comps = []
        for ci in range(len(raw)):
            for p in self.crossings[ci][2]:
                if (ci, p) in seen:
                    continue
                # walking out of a bottom slot means travelling downward
                s0 = (ci, p) if orient_down else (ci, (p + 2) % 4)
                s = s0
                comp = []
                while True:
                    t = other[s]
                    seen.add(s)
                    seen.add(t)
                    comp.append((s, t))
                    s = (t[0], (t[1] + 2) % 4)
                    if s == s0:
                        break
                comps.append(comp)
        comps.sort(key=lambda c: min(min(s, t) for s, t in c))
        rev = set(reverse)
        for k, comp in enumerate(comps):
            for s, t in comp:
                if k in rev:
                    enter[raw[s[0]][s[1]]] = s
                else:
                    enter[raw[t[0]][t[1]]] = t
        pd = []
        for ci, x in enumerate(raw):
            u0, u1 = unders[ci]
            start = u0 if enter[x[u0]] == (ci, u0) else u1
            pd.append(tuple(x[(start + j) % 4] for j in range(4)))
        return canonical_relabel(LinkDiagram(pd))


def _run(b: _Builder, word):
    for g in word:
        if isinstance(g, tuple):  # ("c", lo, hi): encircling ring, 1-based
            b.ring(g[1] - 1, g[2] - 1)
        else:
            b.sigma(g)


def braid_closure(word: Sequence[int], strands: int | None = None, reverse: Iterable[int] = ()) -> LinkDiagram:
    """Closure of a braid word; every strand must take part in a crossing."""
    m = strands or (max(abs(g) for g in word if not isinstance(g, tuple)) + 1)
    b = _Builder(m)
    _run(b, word)
    for i in range(m):
        b.join(b.cur[i], b.top[i])
    return b.finish(reverse=reverse)


def plat(word: Sequence[int], strands: int, caps: Sequence[tuple], cups: Sequence[tuple],
         reverse: Iterable[int] = ()) -> LinkDiagram:
    """Close a braid with caps on top and cups below (1-based position pairs).

    The matchings must be non-crossing for the result to be planar.
    """
    b = _Builder(strands)
    _run(b, word)
    for i, j in caps:
        b.join(b.top[i - 1], b.top[j - 1])
    for i, j in cups:
        b.join(b.cur[i - 1], b.cur[j - 1])
    return b.finish(reverse=reverse)


def pretzel(*twists: int) -> LinkDiagram:
    """Standard pretzel diagram P(a1, ..., ak) with vertical twist columns.

    Column i holds |a_i| crossings of sign(a_i) between positions 2i-1, 2i.
    """
    k = len(twists)
    m = 2 * k
    word = []
    for i, a in enumerate(twists):
        g = 2 * i + 1
        word += [g if a > 0 else -g] * abs(a)
    pairs = [(2 * i, 2 * i + 1) for i in range(1, k)] + [(1, m)]
    return plat(word, m, pairs, pairs)
