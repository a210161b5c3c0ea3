"""Oriented planar link diagrams described by PD codes.

A crossing is a 4-tuple of arc labels listed counterclockwise, starting at
the incoming under-strand.  Positions 0 and 2 carry the under-strand
(0 incoming), positions 1 and 3 the over-strand.  A crossing-free
component is written ``Loop[k]``.
"""
from __future__ import annotations

import itertools
import re
from collections import defaultdict
from typing import Iterable, Sequence


class DiagramError(ValueError):
    pass


class MalformedSyntax(DiagramError):
    pass


class ArcDegreeError(DiagramError):
    pass


class InconsistentOrientation(DiagramError):
    pass


class NonPlanarDiagram(DiagramError):
    pass


class SameComponent(DiagramError):
    pass


class LinkDiagram:
    """Immutable oriented link diagram.

    Derived data (components, orientation, signs, faces) is computed once
    at construction and validated.
    """

    def __init__(self, crossings: Iterable[Sequence[int]], loops: Iterable[int] = (), check_planar: bool = True):
        self.crossings = tuple(tuple(int(a) for a in x) for x in crossings)
        self.loops = tuple(sorted(int(a) for a in loops))
        for x in self.crossings:
            if len(x) != 4:
                raise MalformedSyntax(f"crossing {x} does not have four arcs")
        self._index_slots()
        self._orient()
        self.signs = tuple(self._sign(i) for i in range(len(self.crossings)))
        self.faces = self._faces()
        if check_planar:
            self._check_planar()

    # -- construction of derived data -----------------------------------------
    def _index_slots(self):
        slots = defaultdict(list)
        for ci, x in enumerate(self.crossings):
            for pos, a in enumerate(x):
                slots[a].append((ci, pos))
        bad = sorted(a for a, s in slots.items() if len(s) != 2)
        if bad:
            raise ArcDegreeError(f"arc labels not used exactly twice: {bad}")
        dup = set(self.loops) & set(slots)
        if dup or len(set(self.loops)) != len(self.loops):
            raise ArcDegreeError(f"loop labels reused: {sorted(dup) or list(self.loops)}")
        self.slots = dict(slots)
        self.other = {}
        for a, (s, t) in self.slots.items():
            self.other[s] = t
            self.other[t] = s

    def _orient(self):
        head = {}  # label -> slot where the arc enters a crossing
        comp_of = {}
        components = []
        labels = sorted(self.slots)
        for start in labels:
            if start in comp_of:
                continue
            # collect the cycle through straight-through connections
            s0 = self.slots[start][0]
            cycle_slots = []
            s = s0
            while True:
                t = self.other[s]
                cycle_slots.append((s, t))
                s = (t[0], (t[1] + 2) % 4)
                if s == s0:
                    break
                if len(cycle_slots) > 4 * len(self.crossings) + 2:
                    raise InconsistentOrientation("arc cycle does not close")
            # direction: s -> t means arc leaves at s and enters at t
            forward_ok = all(t[1] != 2 and s[1] != 0 for s, t in cycle_slots)
            backward_ok = all(s[1] != 2 and t[1] != 0 for s, t in cycle_slots)
            if not forward_ok and not backward_ok:
                raise InconsistentOrientation(f"no coherent orientation for the component through arc {start}")
            if forward_ok and backward_ok:
                # only over-crossings: orient so the lowest arc leaves its smaller slot
                forward_ok = s0 == min(self.slots[start])
            edges = cycle_slots if forward_ok else [(t, s) for s, t in reversed(cycle_slots)]
            seq = []
            for s, t in edges:
                a = self.crossings[s[0]][s[1]]
                head[a] = t
                seq.append(a)
            k = seq.index(min(seq))
            seq = seq[k:] + seq[:k]
            components.append(seq)
            for a in seq:
                comp_of[a] = len(components) - 1
        for a in self.loops:
            components.append([a])
            comp_of[a] = len(components) - 1
        order = sorted(range(len(components)), key=lambda i: min(components[i]))
        remap = {old: new for new, old in enumerate(order)}
        self.components = tuple(tuple(components[i]) for i in order)
        self.component_of = {a: remap[c] for a, c in comp_of.items()}
        self.head = head
        self.tail = {a: self.other[h] for a, h in head.items()}

    def _sign(self, ci: int) -> int:
        # over-strand entering at position 3 and leaving at 1 is positive
        return 1 if self.head[self.crossings[ci][3]] == (ci, 3) else -1

    def _faces(self):
        """Faces as cyclic lists of directed arcs ``(leave_slot, enter_slot)``.

        Walking with the face on the left, arrival through position i is
        followed by departure through position i + 3.
        """
        used = set()
        faces = []
        for ci in range(len(self.crossings)):
            for pos in range(4):
                s = (ci, pos)
                if s in used:
                    continue
                face = []
                while s not in used:
                    used.add(s)
                    t = self.other[s]
                    face.append((s, t))
                    s = (t[0], (t[1] + 3) % 4)
                faces.append(tuple(face))
        return tuple(faces)

    def _check_planar(self):
        parent = list(range(len(self.crossings)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for s, t in self.slots.values():
            parent[find(s[0])] = find(t[0])
        nverts = defaultdict(int)
        nfaces = defaultdict(int)
        for ci in range(len(self.crossings)):
            nverts[find(ci)] += 1
        for f in self.faces:
            nfaces[find(f[0][0][0])] += 1
        for r, v in nverts.items():
            if v - 2 * v + nfaces[r] != 2:
                raise NonPlanarDiagram("PD code does not describe a planar diagram")

    # -- queries --------------------------------------------------------------
    @property
    def arcs(self) -> tuple:
        return tuple(sorted(list(self.slots) + list(self.loops)))

    def __len__(self):
        return len(self.crossings)

    @property
    def n_components(self) -> int:
        return len(self.components)

    def strand_components(self, ci: int) -> tuple:
        """(under component, over component) at crossing ``ci``."""
        x = self.crossings[ci]
        return self.component_of[x[0]], self.component_of[x[1]]

    def crossings_of(self, comp: int) -> list:
        return [i for i in range(len(self.crossings)) if comp in self.strand_components(i)]

    def __eq__(self, other):
        return isinstance(other, LinkDiagram) and (self.crossings, self.loops) == (other.crossings, other.loops)

    def __hash__(self):
        return hash((self.crossings, self.loops))

    def __repr__(self):
        return f"LinkDiagram({format_pd(self)!r})"

    def __str__(self):
        return format_pd(self)


# ---------------------------------------------------------------------------
# invariants of the diagram itself
# ---------------------------------------------------------------------------

def crossing_signs(d: LinkDiagram) -> list:
    return list(d.signs)


def writhe(d: LinkDiagram) -> int:
    return sum(d.signs)


def linking_number(d: LinkDiagram, c1: int, c2: int) -> int:
    if c1 == c2:
        raise SameComponent("linking number needs two distinct components")
    for c in (c1, c2):
        if not 0 <= c < d.n_components:
            raise IndexError(f"no component {c}")
    total = 0
    for i, s in enumerate(d.signs):
        if set(d.strand_components(i)) == {c1, c2}:
            total += s
    return total // 2


def linking_matrix_of(d: LinkDiagram) -> list:
    n = d.n_components
    return [[0 if i == j else linking_number(d, i, j) for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# transformations
# ---------------------------------------------------------------------------

def _flip_under(x, sign):
    a, b, c, e = x
    # new under-strand is the old over-strand, entering at d for positive
    return (e, a, b, c) if sign > 0 else (b, c, e, a)


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Swap every over/under; negates all crossing signs."""
    return LinkDiagram([_flip_under(x, s) for x, s in zip(d.crossings, d.signs)], d.loops)


def reverse_component(d: LinkDiagram, comp: int) -> LinkDiagram:
    labels = set(d.components[comp])
    out = []
    for x in d.crossings:
        if x[0] in labels:
            x = (x[2], x[3], x[0], x[1])
        out.append(x)
    return LinkDiagram(out, d.loops)


def relabel(d: LinkDiagram, mapping: dict) -> LinkDiagram:
    return LinkDiagram([tuple(mapping[a] for a in x) for x in d.crossings], [mapping[a] for a in d.loops])


def canonical_relabel(d: LinkDiagram, start: int = 1) -> LinkDiagram:
    """Number arcs consecutively along each component in component order."""
    mapping = {}
    k = start
    for comp in d.components:
        for a in comp:
            mapping[a] = k
            k += 1
    return relabel(d, mapping)


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    off = max(d1.arcs, default=0)
    shifted = relabel(d2, {a: a + off for a in d2.arcs})
    return LinkDiagram(d1.crossings + shifted.crossings, d1.loops + shifted.loops)


def sublink(d: LinkDiagram, keep: Iterable[int]) -> LinkDiagram:
    """Delete every component not in ``keep``; crossings with them vanish."""
    keep = set(keep)
    drop = [i for i in range(len(d)) if not set(d.strand_components(i)) <= keep]
    crossings, loops = remove_crossings(d.crossings, d.loops, drop)
    return LinkDiagram(crossings, [a for a in loops if d.component_of[a] in keep])


def remove_crossings(crossings, loops, idxs):
    """Delete crossings and splice strands straight through them.

    Labels merged by a deletion are replaced by the smallest label of their
    class; classes left without any crossing become loops.
    """
    idxs = set(idxs)
    parent = {}

    def find(a):
        parent.setdefault(a, a)
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for i in idxs:
        a, b, c, e = crossings[i]
        union(a, c)
        union(b, e)
    kept = [tuple(find(a) for a in x) for i, x in enumerate(crossings) if i not in idxs]
    present = {a for x in kept for a in x}
    new_loops = set(loops)
    for i in idxs:
        for a in crossings[i]:
            r = find(a)
            if r not in present:
                new_loops.add(r)
    return kept, sorted(new_loops)


def orient_raw(raw, anchors=None, want_signs=None) -> list:
    """Orient ccw 4-lists whose under strand sits in slots 0/2.

    ``anchors`` maps a label to (slot, is_head) facts that survive the move;
    ``want_signs`` maps crossing index to its required sign.  Returns PD
    tuples for the first orientation that passes validation.
    """
    anchors = anchors or {}
    want_signs = want_signs or {}
    slots = {}
    for ci, x in enumerate(raw):
        for p, a in enumerate(x):
            slots.setdefault(a, []).append((ci, p))
    other = {}
    for s, t in slots.values():
        other[s], other[t] = t, s
    cycles, seen = [], set()
    for ci in range(len(raw)):
        for p in range(4):
            if (ci, p) in seen:
                continue
            s0 = s = (ci, p)
            cyc = []
            while True:
                t = other[s]
                seen.update((s, t))
                cyc.append((s, t))
                s = (t[0], (t[1] + 2) % 4)
                if s == s0:
                    break
            cycles.append(cyc)

    def heads(cyc, fwd):
        return {(t if fwd else s) for s, t in cyc}

    choices = []
    for cyc in cycles:
        fwd_heads = heads(cyc, True)
        opts = []
        for fwd in (True, False):
            hs = fwd_heads if fwd else heads(cyc, False)
            ok = True
            for s, t in cyc:
                a = raw[s[0]][s[1]]
                if a in anchors:
                    slot, is_head = anchors[a]
                    if slot in (s, t) and ((slot in hs) != is_head):
                        ok = False
            if ok:
                opts.append(fwd)
        choices.append(opts)
    for combo in itertools.product(*choices):
        enter = set()
        for cyc, fwd in zip(cycles, combo):
            enter |= heads(cyc, fwd)
        pd = []
        for ci, x in enumerate(raw):
            start = 0 if (ci, 0) in enter else 2
            pd.append(tuple(x[(start + j) % 4] for j in range(4)))
        try:
            cand = LinkDiagram(pd)
        except DiagramError:
            continue
        if all(cand.signs[ci] == s for ci, s in want_signs.items()):
            return pd
    raise InconsistentOrientation("no orientation of the rewritten diagram fits the constraints")


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"(X|Loop)\[\s*([^\]]*)\]")


def parse_pd(text: str) -> LinkDiagram:
    """Parse whitespace-separated ``X[a,b,c,d]`` / ``Loop[a]`` tokens.

    Lines starting with ``%`` are comments.  An optional ``PD[...]`` wrapper
    and commas between tokens are tolerated.
    """
    body = "\n".join(line.split("%", 1)[0] for line in text.splitlines())
    body = body.strip()
    if body.startswith("PD[") and body.endswith("]"):
        body = body[3:-1]
    crossings, loops = [], []
    pos = 0
    for m in _TOKEN.finditer(body):
        gap = body[pos:m.start()]
        if gap.strip(" \t\r\n,"):
            raise MalformedSyntax(f"unexpected text {gap.strip()!r}")
        pos = m.end()
        try:
            labels = [int(v) for v in m.group(2).split(",")]
        except ValueError:
            raise MalformedSyntax(f"non-integer arc label in {m.group(0)!r}") from None
        if any(a <= 0 for a in labels):
            raise MalformedSyntax(f"arc labels must be positive in {m.group(0)!r}")
        if m.group(1) == "X":
            if len(labels) != 4:
                raise MalformedSyntax(f"{m.group(0)!r} needs four labels")
            crossings.append(tuple(labels))
        else:
            if len(labels) != 1:
                raise MalformedSyntax(f"{m.group(0)!r} needs one label")
            loops.append(labels[0])
    if body[pos:].strip(" \t\r\n,"):
        raise MalformedSyntax(f"unexpected text {body[pos:].strip()!r}")
    if not crossings and not loops:
        raise MalformedSyntax("empty PD code")
    return LinkDiagram(crossings, loops)


def format_pd(d: LinkDiagram) -> str:
    toks = ["X[%d,%d,%d,%d]" % x for x in d.crossings]
    toks += ["Loop[%d]" % a for a in d.loops]
    return " ".join(toks)
