"""Reduced simplicial homology over GF(p) and the Gorenstein* criterion."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf
from .complexes import SimplicialComplex
from .errors import BadParameters


@dataclass(frozen=True)
class ChainComplexGFp:
    p: int
    faces: tuple[tuple[tuple[int, ...], ...], ...]  # faces[k] = faces of dimension k - 1
    boundaries: tuple[np.ndarray, ...]  # boundaries[k] : C_{k-1} -> C_{k-2}, k >= 1

    @classmethod
    def of(cls, D: SimplicialComplex, p: int) -> "ChainComplexGFp":
        p = gf.check_prime(p)
        by_size: list[list] = [[] for _ in range(D.dim + 2)]
        for f in D.faces:
            by_size[len(f)].append(f)
        faces = tuple(tuple(fs) for fs in by_size)
        mats = [np.zeros((0, len(faces[0])), dtype=np.int64)]
        for k in range(1, len(faces)):
            index = {f: i for i, f in enumerate(faces[k - 1])}
            m = np.zeros((len(faces[k - 1]), len(faces[k])), dtype=np.int64)
            for j, f in enumerate(faces[k]):
                for i in range(len(f)):
                    m[index[f[:i] + f[i + 1:]], j] = 1 if i % 2 == 0 else p - 1
            mats.append(m)
        return cls(p, faces, tuple(mats))


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers; ``betti[0]`` is dimension -1."""

    betti: tuple[int, ...]
    p: int

    def __getitem__(self, i: int) -> int:
        k = i + 1
        return self.betti[k] if 0 <= k < len(self.betti) else 0

    def euler(self) -> int:
        return sum((-1) ** (k - 1) * b for k, b in enumerate(self.betti))

    def is_sphere(self, dim: int) -> bool:
        return all(b == (1 if k - 1 == dim else 0) for k, b in enumerate(self.betti)) and (
            -1 <= dim < len(self.betti) - 1
        )


def reduced_homology(D: SimplicialComplex, p: int = gf.DEFAULT_PRIME) -> HomologyProfile:
    if not D.facets:
        raise BadParameters("homology of the void complex is not defined")
    cc = ChainComplexGFp.of(D, p)
    ranks = [gf.rank(m, cc.p) if m.size else 0 for m in cc.boundaries] + [0]
    betti = []
    for k in range(len(cc.faces)):
        dim_c = len(cc.faces[k])
        betti.append(dim_c - ranks[k] - ranks[k + 1])
    return HomologyProfile(tuple(betti), cc.p)


def is_gorenstein_star(D: SimplicialComplex, p: int = gf.DEFAULT_PRIME) -> bool:
    """Homology-sphere test over GF(p).

    Requires the support to be the whole vertex set, no cone vertex, and for
    every face (the empty face included) a link whose reduced homology is
    that of a sphere of the link's dimension.
    """
    gf.check_prime(p)
    if not D.facets or tuple(D.support) != tuple(D.vertices):
        return False
    if D.is_cone():
        return False
    for s in D.faces:
        lk = D.link(s)
        if not reduced_homology(lk, p).is_sphere(lk.dim):
            return False
    return True
