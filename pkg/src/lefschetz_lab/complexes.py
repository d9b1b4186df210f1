"""Finite simplicial complexes stored by their facets.

Faces are sorted tuples of non-negative integer vertex labels.  A complex
keeps an explicit vertex set, which may be larger than its support (the
vertices that actually occur in some face); Stanley-Reisner ideals see the
difference as linear generators.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from math import comb
from typing import Iterable, Sequence

from .errors import BadParameters, FaceTooSmall, NotAFace, VertexClash

Face = tuple


def _face(vertices: Iterable[int]) -> Face:
    return tuple(sorted(set(int(v) for v in vertices)))


def _maximal(faces: Iterable[Face]) -> tuple[Face, ...]:
    """Drop every face contained in another one; result is sorted."""
    uniq = sorted(set(faces), key=lambda f: (-len(f), f))
    kept: list[frozenset] = []
    out = []
    for f in uniq:
        fs = frozenset(f)
        if any(fs <= k for k in kept):
            continue
        kept.append(fs)
        out.append(f)
    return tuple(sorted(out))


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its facets on an explicit vertex set.

    Use :meth:`from_faces` to build one from an arbitrary generating family;
    the plain constructor expects facets that already form an antichain.
    """

    vertices: tuple[int, ...]
    facets: tuple[Face, ...]

    def __post_init__(self):
        verts = tuple(sorted(set(self.vertices)))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "facets", _maximal(_face(f) for f in self.facets))
        if any(v < 0 for v in verts):
            raise BadParameters("vertex labels must be non-negative")
        vs = set(verts)
        for f in self.facets:
            if not set(f) <= vs:
                raise BadParameters(f"facet {f} uses vertices outside {verts}")

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]], vertices: Iterable[int] | None = None):
        faces = [_face(f) for f in faces]
        if vertices is None:
            vertices = sorted({v for f in faces for v in f})
        return cls(tuple(vertices), tuple(faces))

    # -- basic data ---------------------------------------------------------

    @property
    def dim(self) -> int:
        if not self.facets:
            return -2  # void complex, no faces at all
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    @cached_property
    def _facet_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(f) for f in self.facets)

    def is_face(self, s: Iterable[int]) -> bool:
        s = frozenset(s)
        return any(s <= f for f in self._facet_sets)

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        """All faces including the empty one, ordered by size then lexicographically."""
        out = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                out.update(combinations(f, k))
        return tuple(sorted(out, key=lambda f: (len(f), f)))

    def faces_of_dim(self, q: int) -> tuple[Face, ...]:
        return tuple(f for f in self.faces if len(f) == q + 1)

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        """Face counts ``(f_{-1}, f_0, ..., f_dim)``."""
        counts = [0] * (self.dim + 2)
        for f in self.faces:
            counts[len(f)] += 1
        return tuple(counts)

    @cached_property
    def h_vector(self) -> tuple[int, ...]:
        return h_from_f(self.f_vector)

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic, sum of (-1)^i f_i for i >= -1."""
        return sum((-1) ** (i - 1) * c for i, c in enumerate(self.f_vector))

    def minimal_nonfaces(self) -> tuple[Face, ...]:
        """Minimal non-faces over the vertex set; vertices off the support give singletons."""
        out = set()
        for v in self.vertices:
            if not self.is_face((v,)):
                out.add((v,))
        supp = self.support
        for f in self.faces:
            fs = set(f)
            for v in supp:
                if v in fs or (f and v < f[-1]):
                    continue
                # candidates are built in increasing order so each set is seen once
                cand = f + (v,)
                if self.is_face(cand):
                    continue
                if all(self.is_face(cand[:i] + cand[i + 1:]) for i in range(len(cand))):
                    out.add(cand)
        return tuple(sorted(out, key=lambda f: (len(f), f)))

    def is_cone(self) -> bool:
        """True if some vertex lies in every facet."""
        if not self.facets:
            return False
        common = set(self.facets[0]).intersection(*self.facets[1:])
        return bool(common)

    def restricted(self) -> "SimplicialComplex":
        """The same complex on its support as vertex set."""
        return SimplicialComplex(self.support, self.facets)

    # -- operations ---------------------------------------------------------

    def _require_face(self, s: Face):
        if not self.is_face(s):
            raise NotAFace(f"{tuple(s)} is not a face")

    def link(self, s: Iterable[int]) -> "SimplicialComplex":
        s = _face(s)
        self._require_face(s)
        ss = set(s)
        facets = [tuple(v for v in f if v not in ss) for f in self.facets if ss <= set(f)]
        verts = [v for v in self.support if v not in ss]
        return SimplicialComplex(tuple(verts), tuple(facets))

    def star(self, s: Iterable[int]) -> "SimplicialComplex":
        s = _face(s)
        self._require_face(s)
        ss = set(s)
        return SimplicialComplex(self.vertices, tuple(f for f in self.facets if ss <= set(f)))

    def stellar_subdivision(self, s: Iterable[int], j: int) -> "SimplicialComplex":
        """Stellar subdivision at face ``s`` with the new vertex ``j``."""
        s = _face(s)
        self._require_face(s)
        if len(s) < 2:
            raise FaceTooSmall("stellar subdivision needs a face of dimension >= 1")
        if j in self.vertices or j in self.support:
            raise VertexClash(f"new vertex {j} already present")
        ss = set(s)
        keep = [f for f in self.facets if not ss <= set(f)]
        cone = []
        for f in self.facets:
            if ss <= set(f):
                rest = tuple(v for v in f if v not in ss)
                for v in s:
                    cone.append(_face(rest + tuple(u for u in s if u != v) + (j,)))
        return SimplicialComplex(self.vertices + (j,), tuple(keep + cone))

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "facets": [list(f) for f in self.facets]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "SimplicialComplex":
        try:
            facets = [tuple(int(v) for v in f) for f in data["facets"]]
            vertices = data.get("vertices")
        except (KeyError, TypeError, ValueError) as exc:
            raise BadParameters(f"malformed complex document: {exc}") from exc
        if vertices is None:
            vertices = sorted({v for f in facets for v in f})
        return cls(tuple(int(v) for v in vertices), tuple(facets))

    @classmethod
    def from_json(cls, text: str) -> "SimplicialComplex":
        return cls.from_dict(json.loads(text))

    def digest(self) -> str:
        return hashlib.sha256(self.to_json().encode()).hexdigest()

    def __repr__(self):
        return f"SimplicialComplex(vertices={list(self.vertices)}, facets={len(self.facets)}, dim={self.dim})"


def h_from_f(f: Sequence[int]) -> tuple[int, ...]:
    """h-vector from ``(f_{-1}, ..., f_{d-1})``."""
    d = len(f) - 1
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def join(d1: SimplicialComplex, d2: SimplicialComplex) -> SimplicialComplex:
    if set(d1.vertices) & set(d2.vertices):
        raise VertexClash("join needs disjoint vertex sets")
    facets = [a + b for a, b in product(d1.facets, d2.facets)]
    return SimplicialComplex(d1.vertices + d2.vertices, tuple(facets))


def simplex(vertices: Iterable[int]) -> SimplicialComplex:
    """The full simplex 2^A."""
    verts = _face(vertices)
    return SimplicialComplex(verts, (verts,))


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the simplex on the vertices 1..n."""
    if n < 1:
        raise BadParameters("simplex_boundary needs n >= 1")
    verts = tuple(range(1, n + 1))
    return SimplicialComplex(verts, tuple(combinations(verts, n - 1)))


def cross_polytope_boundary(m: int) -> SimplicialComplex:
    """Join of m copies of S^0; vertex i is antipodal to i + m."""
    if m < 1:
        raise BadParameters("cross_polytope_boundary needs m >= 1")
    verts = tuple(range(1, 2 * m + 1))
    facets = [tuple(sorted(c)) for c in product(*[(i, i + m) for i in range(1, m + 1)])]
    return SimplicialComplex(verts, tuple(facets))


def gale_evenness(subset: Sequence[int], n: int) -> bool:
    s = set(subset)
    outside = [i for i in range(1, n + 1) if i not in s]
    for a, b in zip(outside, outside[1:]):
        if sum(1 for k in s if a < k < b) % 2:
            return False
    return True


def cyclic_polytope_boundary(n: int, dim: int) -> SimplicialComplex:
    """Boundary complex of the cyclic polytope C(n, dim) via Gale's evenness condition."""
    if not (n > dim >= 2):
        raise BadParameters("need n > dim >= 2")
    verts = tuple(range(1, n + 1))
    facets = tuple(c for c in combinations(verts, dim) if gale_evenness(c, n))
    return SimplicialComplex(verts, facets)
