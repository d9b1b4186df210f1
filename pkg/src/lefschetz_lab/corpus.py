"""Named complexes and generator specs."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .algebra import GradedIdeal
from .complexes import (
    SimplicialComplex,
    cross_polytope_boundary,
    cyclic_polytope_boundary,
    simplex_boundary,
)
from .errors import BadParameters, BadSpec, LabError


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    kind: str
    args: tuple[int, ...]
    label: str

    def build(self) -> SimplicialComplex:
        return generate(self.kind, self.args)


CORPUS = (
    CorpusEntry("simplex4", "simplex-boundary", (4,), "boundary of the 3-simplex"),
    CorpusEntry("simplex5", "simplex-boundary", (5,), "boundary of the 4-simplex"),
    CorpusEntry("simplex6", "simplex-boundary", (6,), "boundary of the 5-simplex"),
    CorpusEntry("cross2", "cross", (2,), "4-cycle"),
    CorpusEntry("cross3", "cross", (3,), "octahedron"),
    CorpusEntry("cross4", "cross", (4,), "boundary of the 16-cell"),
    CorpusEntry("cyclic6-3", "cyclic", (6, 3), "boundary of C(6,3)"),
    CorpusEntry("cyclic7-4", "cyclic", (7, 4), "boundary of C(7,4)"),
    CorpusEntry("cyclic10-6", "cyclic", (10, 6), "boundary of C(10,6)"),
)

ALIASES = {"tetrahedron": "simplex4", "octahedron": "cross3", "square": "cross2"}

_BY_NAME = {e.name: e for e in CORPUS}


def generate(kind: str, args) -> SimplicialComplex:
    """Resolve a generator spec such as ``("cyclic", (10, 6))``."""
    try:
        args = tuple(int(a) for a in args)
    except (TypeError, ValueError) as exc:
        raise BadSpec(f"non-integer generator arguments {args!r}") from exc
    try:
        if kind == "simplex-boundary" and len(args) == 1:
            return simplex_boundary(args[0])
        if kind == "cross" and len(args) == 1:
            return cross_polytope_boundary(args[0])
        if kind == "cyclic" and len(args) == 2:
            return cyclic_polytope_boundary(*args)
    except (BadParameters, ValueError) as exc:
        raise BadSpec(str(exc)) from exc
    raise BadSpec(f"unknown generator {kind!r} with {len(args)} argument(s)")


def entry(name: str) -> CorpusEntry:
    name = ALIASES.get(name, name)
    if name not in _BY_NAME:
        raise BadSpec(f"no corpus entry {name!r}")
    return _BY_NAME[name]


def resolve_complex(spec: str) -> tuple[str, SimplicialComplex]:
    """A corpus name, ``kind:a[:b]`` generator spec, or a path to complex JSON."""
    key = ALIASES.get(spec, spec)
    if key in _BY_NAME:
        return key, _BY_NAME[key].build()
    if ":" in spec and not os.path.exists(spec):
        kind, *args = spec.split(":")
        return spec, generate(kind, args)
    if os.path.exists(spec):
        try:
            with open(spec) as fh:
                data = json.load(fh)
            return os.path.basename(spec), SimplicialComplex.from_dict(data)
        except (OSError, ValueError, KeyError, TypeError, LabError) as exc:
            raise BadSpec(f"cannot read complex from {spec}: {exc}") from exc
    raise BadSpec(f"cannot resolve complex {spec!r}")


def load_input(spec: str, prime: int | None = None):
    """Either a complex (corpus, generator spec or JSON) or an ideal JSON document."""
    if os.path.exists(spec):
        try:
            with open(spec) as fh:
                data = json.load(fh)
        except (OSError, ValueError) as exc:
            raise BadSpec(f"cannot read {spec}: {exc}") from exc
        if isinstance(data, dict) and "generators" in data:
            return "ideal", GradedIdeal.from_dict(data, prime)
    return "complex", resolve_complex(spec)[1]
