"""Reidemeister moves on PD diagrams, used for invariance testing.

Every move returns a fresh :class:`LinkDiagram`; labels of untouched arcs are
kept and new arcs get labels above the current maximum.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .diagram import DiagramError, InconsistentOrientation, LinkDiagram, orient_raw, remove_crossings


class IllegalMoveSite(DiagramError):
    pass


@dataclass(frozen=True)
class MoveSpec:
    """A single Reidemeister move.

    kind is one of ``R1+``, ``R1-``, ``R2+``, ``R2-``, ``R3``.

    * ``R1+``: ``arc`` gets a kink; ``sign`` is its crossing sign and
      ``side`` (0 or 1) picks which side of the arc the curl lies on.
    * ``R1-``: ``crossing`` is a kink crossing to undo.
    * ``R2+``: ``face`` index and two arcs ``arc``/``arc2`` on its boundary;
      ``arc`` is pushed across ``arc2``, ``over`` says on which side.
    * ``R2-``: ``crossing``/``crossing2`` bound a bigon to remove.
    * ``R3``: ``face`` is a triangle, ``arc`` the edge whose strand slides.
    """
    kind: str
    arc: int | None = None
    arc2: int | None = None
    crossing: int | None = None
    crossing2: int | None = None
    face: int | None = None
    sign: int = 1
    side: int = 0
    over: bool = True


def _fresh(d: LinkDiagram, k: int) -> list:
    top = max(d.arcs, default=0)
    return list(range(top + 1, top + 1 + k))


def _replace_at(crossings: list, slot, label):
    ci, pos = slot
    x = list(crossings[ci])
    x[pos] = label
    crossings[ci] = tuple(x)


# -- R1 ---------------------------------------------------------------------

def _r1_add(d: LinkDiagram, m: MoveSpec) -> LinkDiagram:
    e = m.arc
    if e not in d.arcs:
        raise IllegalMoveSite(f"no arc {e}")
    if m.sign not in (1, -1) or m.side not in (0, 1):
        raise IllegalMoveSite("R1 needs sign +-1 and side 0/1")
    e2, lp = _fresh(d, 2)
    crossings = list(d.crossings)
    loops = list(d.loops)
    if e in d.loops:
        loops.remove(e)
        e2 = e
    else:
        _replace_at(crossings, d.head[e], e2)
    kinks = {
        (1, 0): (e, e2, lp, lp), (1, 1): (lp, lp, e2, e),
        (-1, 0): (e, lp, lp, e2), (-1, 1): (lp, e, e2, lp),
    }
    crossings.append(kinks[m.sign, m.side])
    return LinkDiagram(crossings, loops)


def _is_kink(x) -> bool:
    return any(x[i] == x[(i + 1) % 4] for i in range(4))


def _r1_remove(d: LinkDiagram, m: MoveSpec) -> LinkDiagram:
    ci = m.crossing
    if ci is None or not 0 <= ci < len(d) or not _is_kink(d.crossings[ci]):
        raise IllegalMoveSite(f"crossing {ci} is not a kink")
    crossings, loops = remove_crossings(d.crossings, d.loops, [ci])
    return LinkDiagram(crossings, loops)


# -- R2 ---------------------------------------------------------------------

def _face_edge(d: LinkDiagram, face, label):
    for s, t in face:
        if d.crossings[s[0]][s[1]] == label:
            return s, t
    raise IllegalMoveSite(f"arc {label} is not on the chosen face")


def _r2_add(d: LinkDiagram, m: MoveSpec) -> LinkDiagram:
    if m.face is None or not 0 <= m.face < len(d.faces):
        raise IllegalMoveSite(f"no face {m.face}")
    if m.arc == m.arc2:
        raise IllegalMoveSite("R2 needs two distinct arcs")
    face = d.faces[m.face]
    es, et = _face_edge(d, face, m.arc)
    fs, ft = _face_edge(d, face, m.arc2)
    e, f = m.arc, m.arc2
    e_mid, e_to, f_mid, f_to = _fresh(d, 4)
    crossings = list(d.crossings)
    # walking e from es to et with the face on the left, the finger of e
    # enters the face and crosses f twice
    _replace_at(crossings, et, e_to)
    _replace_at(crossings, ft, f_to)
    e_along = d.head[e] == et
    f_along = d.head[f] == ft
    # ccw E, N, W, S
    x1 = [f_mid, e_mid, f_to, e]
    x2 = [f, e_mid, f_mid, e_to]
    if m.over:  # e over, f under: f enters from E when travelling the walk way
        start1 = start2 = 0 if f_along else 2
    else:
        start1 = 3 if e_along else 1
        start2 = 1 if e_along else 3
    crossings.append(tuple(x1[(start1 + j) % 4] for j in range(4)))
    crossings.append(tuple(x2[(start2 + j) % 4] for j in range(4)))
    return LinkDiagram(crossings, d.loops)


def _bigons(d: LinkDiagram):
    """Faces with two edges at two distinct crossings, over/over on one side."""
    out = []
    for fi, face in enumerate(d.faces):
        if len(face) != 2:
            continue
        (s1, t1), (s2, t2) = face
        if s1[0] == t1[0]:
            continue
        if s1[1] % 2 == t1[1] % 2:
            out.append((fi, s1[0], t1[0]))
    return out


def _r2_remove(d: LinkDiagram, m: MoveSpec) -> LinkDiagram:
    pair = {m.crossing, m.crossing2}
    if not any({a, b} == pair for _, a, b in _bigons(d)):
        raise IllegalMoveSite(f"crossings {sorted(pair, key=str)} do not bound a removable bigon")
    crossings, loops = remove_crossings(d.crossings, d.loops, sorted(pair))
    return LinkDiagram(crossings, loops)


# -- R3 ---------------------------------------------------------------------

def _triangles(d: LinkDiagram):
    """(face index, arc label) for triangles whose edge strand can slide."""
    out = []
    for fi, face in enumerate(d.faces):
        if len(face) != 3 or len({s[0] for s, _ in face}) != 3:
            continue
        for s, t in face:
            if s[1] % 2 == t[1] % 2:
                out.append((fi, d.crossings[s[0]][s[1]]))
    return out


def _r3(d: LinkDiagram, m: MoveSpec) -> LinkDiagram:
    if (m.face, m.arc) not in _triangles(d):
        raise IllegalMoveSite(f"face {m.face} / arc {m.arc} is not an R3 site")
    face = d.faces[m.face]
    (ps, qt), = [(s, t) for s, t in face if d.crossings[s[0]][s[1]] == m.arc]
    P, Q = ps[0], qt[0]
    R, = {s[0] for s, _ in face} - {P, Q}
    tri = {s for s, _ in face} | {t for _, t in face}

    def ext(slot):
        # the straight-through partner of a triangle slot leaves the triangle
        return (slot[0], (slot[1] + 2) % 4)

    # triangle slots at each crossing
    at = {c: [sl for sl in tri if sl[0] == c] for c in (P, Q, R)}
    # P's slot on the edge to R, Q's slot on the edge to R
    pr = [sl for sl in at[P] if sl != ps][0]
    qr = [sl for sl in at[Q] if sl != qt][0]
    rp = d.other[pr]
    rq = d.other[qr]
    lab = lambda sl: d.crossings[sl[0]][sl[1]]
    # the moving strand and both others trade their outside arcs around the triangle
    swaps = [(ext(ps), ext(qt)), (ext(pr), ext(rp)), (ext(qr), ext(rq))]
    raw = [list(x) for x in d.crossings]
    for a, b in swaps:
        raw[a[0]][a[1]], raw[b[0]][b[1]] = lab(b), lab(a)
    moved = {P, Q, R}
    anchors = {}
    for a, (s, t) in d.slots.items():
        for sl in (s, t):
            if sl[0] not in moved:
                anchors[a] = (sl, d.head[a] == sl)
    try:
        pd = orient_raw(raw, anchors, {c: d.signs[c] for c in moved})
    except InconsistentOrientation as exc:
        raise IllegalMoveSite(str(exc)) from None
    return LinkDiagram(pd, d.loops)


_APPLY = {"R1+": _r1_add, "R1-": _r1_remove, "R2+": _r2_add, "R2-": _r2_remove, "R3": _r3}


def apply_move(d: LinkDiagram, m: MoveSpec) -> LinkDiagram:
    try:
        fn = _APPLY[m.kind]
    except KeyError:
        raise IllegalMoveSite(f"unknown move kind {m.kind!r}") from None
    out = fn(d, m)
    if out.n_components != d.n_components:
        raise IllegalMoveSite("move changed the number of components")
    return out


def legal_moves(d: LinkDiagram, kinds=("R1+", "R1-", "R2+", "R2-", "R3")) -> list:
    out = []
    if "R1+" in kinds:
        out += [MoveSpec("R1+", arc=a, sign=s, side=k) for a in d.arcs for s in (1, -1) for k in (0, 1)]
    if "R1-" in kinds:
        out += [MoveSpec("R1-", crossing=i) for i, x in enumerate(d.crossings) if _is_kink(x)]
    if "R2+" in kinds:
        for fi, face in enumerate(d.faces):
            labels = [d.crossings[s[0]][s[1]] for s, _ in face]
            for e, f in itertools.permutations(dict.fromkeys(labels), 2):
                out += [MoveSpec("R2+", face=fi, arc=e, arc2=f, over=o) for o in (True, False)]
    if "R2-" in kinds:
        out += [MoveSpec("R2-", crossing=a, crossing2=b) for _, a, b in _bigons(d)]
    if "R3" in kinds:
        out += [MoveSpec("R3", face=fi, arc=a) for fi, a in _triangles(d)]
    return out


def random_move(d: LinkDiagram, rng: random.Random, max_crossings: int = 14) -> MoveSpec:
    """Pick a move kind uniformly among those available, then a site."""
    by_kind = {}
    grow = len(d) < max_crossings
    for m in legal_moves(d):
        if m.kind in ("R1+", "R2+") and not grow:
            continue
        by_kind.setdefault(m.kind, []).append(m)
    kind = rng.choice(sorted(by_kind))
    return rng.choice(by_kind[kind])
