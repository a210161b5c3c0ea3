"""Bundled named diagrams, annotated pairs, polynomials and framed links.

Fixture files are plain text in the package's data directory.  A ``name:`` line opens a block; ``%`` lines
are comments.  Set ``SLOPEKIT_FIXTURES`` to read them from another directory.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .diagram import DiagramError, LinkDiagram, parse_pd
from .laurent import LPoly, parse_lpoly
from .surgery import FramedLink, parse_framed_link
from .twistfam import AnnotatedPair, TwistFamily, annotate, check_gate, parse_gate


class FixtureError(ValueError):
    pass


@dataclass
class FixtureSet:
    directory: Path
    diagrams: dict = field(default_factory=dict)
    pairs: dict = field(default_factory=dict)
    polynomials: dict = field(default_factory=dict)
    framed: dict = field(default_factory=dict)

    def diagram(self, name: str) -> LinkDiagram:
        if name in self.diagrams:
            return self.diagrams[name]
        if name in self.pairs:
            return self.pairs[name].diagram
        raise FixtureError(f"unknown diagram fixture {name!r}")

    def polynomial(self, name: str) -> LPoly:
        try:
            return self.polynomials[name]
        except KeyError:
            raise FixtureError(f"unknown polynomial fixture {name!r}") from None

    def family(self, which: int) -> TwistFamily:
        """The two bundled twist families; both have lk(k, c) = 1."""
        names = {1: "delta_kc_family1", 2: "delta_k0c_family2"}
        if which not in names:
            raise FixtureError(f"unknown family {which!r}; choose 1 or 2")
        return TwistFamily(self.polynomial(names[which]), 1, name=f"family {which}")


def default_directory() -> Path:
    env = os.environ.get("SLOPEKIT_FIXTURES")
    if env:
        return Path(env)
    return Path(str(resources.files("slopekit") / "data"))


def _blocks(text: str, source: str):
    """Yield (name, body lines) in file order."""
    name, body = None, []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if line.lower().startswith("name:"):
            if name is not None:
                yield name, body
            name, body = line.split(":", 1)[1].strip(), []
            if not name:
                raise FixtureError(f"{source}: empty fixture name")
        elif name is None:
            raise FixtureError(f"{source}: content before the first 'name:' line")
        else:
            body.append(line)
    if name is not None:
        yield name, body


def _read(directory: Path, fname: str):
    path = directory / fname
    if not path.exists():
        return []
    return list(_blocks(path.read_text(), str(path)))


def _parse_pair(name: str, body: list) -> AnnotatedPair:
    pd = [ln for ln in body if not ln.lower().startswith(("c:", "gate:"))]
    meta = {ln.split(":", 1)[0].strip().lower(): ln.split(":", 1)[1].strip()
            for ln in body if ln.lower().startswith(("c:", "gate:"))}
    if "c" not in meta or "gate" not in meta:
        raise FixtureError(f"pair {name!r} needs 'c:' and 'gate:' lines")
    d = parse_pd("\n".join(pd))
    pair = annotate(d, int(meta["c"]), name)
    stored = AnnotatedPair(d, int(meta["c"]), parse_gate(meta["gate"]), pair.omega, name)
    check_gate(stored)
    return stored


def load_fixtures(directory: str | Path | None = None) -> FixtureSet:
    directory = Path(directory) if directory is not None else default_directory()
    if not directory.is_dir():
        raise FixtureError(f"fixture directory {directory} does not exist")
    fs = FixtureSet(directory)
    for name, body in _read(directory, "diagrams.txt"):
        try:
            fs.diagrams[name] = parse_pd("\n".join(body))
        except DiagramError as exc:
            raise FixtureError(f"diagram {name!r}: {exc}") from exc
    for name, body in _read(directory, "pairs.txt"):
        try:
            fs.pairs[name] = _parse_pair(name, body)
        except (DiagramError, ValueError) as exc:
            raise FixtureError(f"pair {name!r}: {exc}") from exc
    for name, body in _read(directory, "polynomials.txt"):
        try:
            fs.polynomials[name] = parse_lpoly(" ".join(body))
        except ValueError as exc:
            raise FixtureError(f"polynomial {name!r}: {exc}") from exc
    for name, body in _read(directory, "framed.txt"):
        try:
            fs.framed[name] = parse_framed_link("\n".join(body))
        except ValueError as exc:
            raise FixtureError(f"framed link {name!r}: {exc}") from exc
    return fs
