"""Artinian reductions and randomized maximal-rank tests.

Over a finite field "general" is replaced by "random": a linear form that
gives maximal rank everywhere is a certificate, since maximal rank is an
open condition.  If every trial fails the verdict is ``NoWitnessFound``,
which is strong evidence but never a proof, and says nothing directly about
characteristic zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import gf
from .algebra import (
    DegreeSlice,
    GradedIdeal,
    HomogPoly,
    LinearSection,
    make_rng,
    product_matrix,
    random_linear_forms,
)
from .errors import DegreeOutOfRange, NotArtinian, NotGorensteinShaped
from .sequences import IntSeq, delta_plus

CHAR_CAVEAT = (
    "computed over GF({p}); a missing witness is evidence, not proof, and "
    "characteristic-zero statements are only approximated"
)

WLP, SLP, MQ, WLP_SHORTCUT = "WLP", "SLP", "M_q_p1", "WLP_gorenstein_shortcut"


def lefschetz_degrees(d: int) -> tuple[int, int]:
    """``(p1, p2)``: ``(d/2 - 1, d/2)`` for even d, ``((d-1)/2, (d-1)/2)`` for odd d."""
    if d % 2 == 0:
        return d // 2 - 1, d // 2
    return (d - 1) // 2, (d - 1) // 2


def trial_seeds(seed, trials: int) -> tuple[int, list[np.random.Generator]]:
    """Base seed and one independent generator per trial."""
    if isinstance(seed, np.random.Generator):
        base = int(seed.integers(0, 2**63 - 1))
    elif seed is None:
        base = 0
    else:
        base = int(seed)
    return base, [np.random.default_rng(np.random.SeedSequence([base, t])) for t in range(trials)]


class ArtinianAlgebra:
    """``R/(J + (f_1..f_t))`` with all graded pieces computed.

    The quotient by the linear forms is realised by solving the forms for
    some variables (see :class:`LinearSection`); ``reduced`` is the image of
    ``J`` in the remaining variables, which is isomorphic as a graded algebra.
    """

    def __init__(self, ideal: GradedIdeal, forms: Sequence[HomogPoly] = (), cap: int = 40):
        self.source = ideal
        self.forms = list(forms)
        self.section = LinearSection(ideal.ring, self.forms)
        self.reduced = self.section.map_ideal(ideal)
        self.ring = self.reduced.ring
        self.p = self.ring.p
        slices: list[DegreeSlice] = []
        for m in range(cap + 1):
            s = self.reduced.quotient_slice(m)
            if s.dim == 0:
                break
            slices.append(s)
        else:
            raise NotArtinian(f"no zero slice up to degree {cap}; add more linear forms")
        self.slices = slices

    @property
    def ideal(self) -> GradedIdeal:
        """The ideal ``J + (f_1..f_t)`` in the original ring."""
        return self.source.plus(self.forms)

    @property
    def socle_degree(self) -> int:
        return len(self.slices) - 1

    @property
    def hf(self) -> IntSeq:
        return IntSeq(tuple(s.dim for s in self.slices))

    def dim(self, i: int) -> int:
        return self.slices[i].dim if 0 <= i < len(self.slices) else 0

    def total_dim(self) -> int:
        return sum(s.dim for s in self.slices)

    def map_form(self, w: HomogPoly) -> HomogPoly:
        """Image in the reduced presentation of an element of the source ring."""
        if w.ring is self.ring:
            return w
        return self.section.map(w)

    def multiplication_matrix(self, u: HomogPoly, i: int) -> np.ndarray:
        """Matrix (rows = basis of F_i) of multiplication by ``u`` into ``F_{i + deg u}``."""
        u = self.map_form(u)
        j = i + (u.degree or 0)
        if self.dim(i) == 0 or self.dim(j) == 0 or u.is_zero():
            return np.zeros((self.dim(i), self.dim(j)), dtype=np.int64)
        prod = product_matrix(u, i)[self.slices[i].basis_columns]
        return self.slices[j].coordinates(prod)

    def map_rank(self, u: HomogPoly, i: int) -> int:
        m = self.multiplication_matrix(u, i)
        return gf.rank(m, self.p) if m.size else 0

    def quotient_hf(self, u: HomogPoly) -> IntSeq:
        """Hilbert function of ``F/(u)`` for a linear form ``u``."""
        vals = [self.dim(0)]
        for i in range(1, len(self.slices)):
            vals.append(self.dim(i) - self.map_rank(u, i - 1))
        return IntSeq(tuple(vals)).trimmed()

    def draw_form(self, rng, distinguished: int | None = None) -> HomogPoly:
        """Random linear form in the source variables (coefficient 1 on ``distinguished``)."""
        n = self.source.ring.n
        c = rng.integers(0, self.p, size=n)
        if distinguished is not None:
            c[distinguished] = 1
        return self.source.ring.linear_form(c)


def artinian_reduction(J: GradedIdeal, num_forms: int, rng=None, forms: Sequence[HomogPoly] | None = None,
                       variables: Sequence[int] | None = None, cap: int = 40) -> ArtinianAlgebra:
    """Append ``num_forms`` random linear forms (or the given ones) and build all slices."""
    if forms is None:
        forms = random_linear_forms(J.ring, num_forms, make_rng(rng), variables)
    return ArtinianAlgebra(J, forms, cap)


def multiplication_map_rank(F: ArtinianAlgebra, w: HomogPoly, i: int) -> int:
    if not 0 <= i <= F.socle_degree:
        raise DegreeOutOfRange(f"degree {i} outside 0..{F.socle_degree}")
    return F.map_rank(w, i)


@dataclass
class LefschetzVerdict:
    property: str
    certified: bool
    prime: int
    seed: int | None
    trials: int
    witness: list[int] | None = None
    ranks: list | None = None
    first_failing_degree: int | None = None
    hf: list[int] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def outcome(self) -> str:
        return "CertifiedTrue" if self.certified else "NoWitnessFound"

    def to_dict(self) -> dict:
        out = {
            "property": self.property,
            "outcome": self.outcome,
            "prime": self.prime,
            "seed": self.seed,
            "trials": self.trials,
            "hf": list(self.hf),
        }
        if self.witness is not None:
            out["witness"] = [int(c) for c in self.witness]
        if self.ranks is not None:
            out["ranks"] = self.ranks
        if self.first_failing_degree is not None:
            out["first_failing_degree"] = self.first_failing_degree
        if self.data:
            out["data"] = self.data
        if not self.certified:
            out["caveat"] = CHAR_CAVEAT.format(p=self.prime)
        return out


def _wlp_ranks(F: ArtinianAlgebra, w: HomogPoly) -> tuple[list[int], int | None]:
    ranks, bad = [], None
    for i in range(F.socle_degree):
        r = F.map_rank(w, i)
        ranks.append(r)
        if bad is None and r != min(F.dim(i), F.dim(i + 1)):
            bad = i
    return ranks, bad


def has_wlp(F: ArtinianAlgebra, trials: int = 3, rng=None, distinguished: int | None = None) -> LefschetzVerdict:
    """One fully maximal-rank trial certifies the WLP."""
    base, rngs = trial_seeds(rng, trials)
    first_bad = None
    for t, r in enumerate(rngs):
        w = F.draw_form(r, distinguished)
        ranks, bad = _wlp_ranks(F, w)
        if bad is None:
            return LefschetzVerdict(WLP, True, F.p, base, trials, w_coeffs(w), ranks, None,
                                    F.hf.to_list(), {"trial": t})
        first_bad = bad if first_bad is None else min(first_bad, bad)
    return LefschetzVerdict(WLP, False, F.p, base, trials, None, None, first_bad, F.hf.to_list())


def w_coeffs(w: HomogPoly) -> list[int]:
    return [int(c) for c in w.linear_coefficients()]


def has_slp(F: ArtinianAlgebra, trials: int = 3, rng=None, distinguished: int | None = None) -> LefschetzVerdict:
    base, rngs = trial_seeds(rng, trials)
    r = F.socle_degree
    if not F.hf.is_symmetric():
        return LefschetzVerdict(SLP, False, F.p, base, trials, None, None, 0, F.hf.to_list(),
                                {"reason": "hf_not_symmetric"})
    first_bad = None
    for t, g in enumerate(rngs):
        w = F.draw_form(g, distinguished)
        wr = F.map_form(w)
        ranks, bad = [], None
        for i in range(r // 2 + 1):
            m = F.multiplication_matrix(wr ** (r - 2 * i), i)
            rk = gf.rank(m, F.p) if m.size else 0
            ranks.append(rk)
            if bad is None and rk != F.dim(i):
                bad = i
        if bad is None:
            return LefschetzVerdict(SLP, True, F.p, base, trials, w_coeffs(w), ranks, None,
                                    F.hf.to_list(), {"trial": t})
        first_bad = bad if first_bad is None else min(first_bad, bad)
    return LefschetzVerdict(SLP, False, F.p, base, trials, None, None, first_bad, F.hf.to_list())


def has_wlp_gorenstein_shortcut(F: ArtinianAlgebra, p1: int | None = None, p2: int | None = None,
                                trials: int = 3, rng=None, distinguished: int | None = None) -> LefschetzVerdict:
    """WLP of a Gorenstein algebra from injectivity in the single degree ``p1``."""
    if not F.hf.is_symmetric():
        raise NotGorensteinShaped(f"Hilbert function {F.hf.to_list()} is not symmetric")
    d = F.socle_degree
    e1, e2 = lefschetz_degrees(d)
    p1 = e1 if p1 is None else p1
    p2 = e2 if p2 is None else p2
    if (p1, p2) != (e1, e2):
        raise NotGorensteinShaped(f"(p1, p2) must be {(e1, e2)} for socle degree {d}")
    base, rngs = trial_seeds(rng, trials)
    for t, g in enumerate(rngs):
        w = F.draw_form(g, distinguished)
        inj = F.map_rank(w, p1) == F.dim(p1) if p1 >= 0 else True
        surj = F.map_rank(w, p2) == F.dim(p2 + 1)
        if inj:
            return LefschetzVerdict(WLP_SHORTCUT, True, F.p, base, trials, w_coeffs(w), None, None,
                                    F.hf.to_list(), {"p1": p1, "p2": p2, "trial": t, "surjective_at_p2": surj})
    return LefschetzVerdict(WLP_SHORTCUT, False, F.p, base, trials, None, None, p1, F.hf.to_list(),
                            {"p1": p1, "p2": p2})


def m_property(B: ArtinianAlgebra, q: int, p1: int, trials: int = 3, rng=None,
               p2: int | None = None) -> LefschetzVerdict:
    """Injectivity of ``w^q : B_{p1-q} -> B_{p1}``, with the dual surjectivity cross-check.

    ``p2`` defaults to the value determined by ``d = socle(B) + q + 1``.
    """
    base, rngs = trial_seeds(rng, trials)
    if p2 is None:
        p2 = lefschetz_degrees(B.socle_degree + q + 1)[1]
    if p1 - q < 0:
        return LefschetzVerdict(MQ, True, B.p, base, trials, None, None, None, B.hf.to_list(),
                                {"vacuous": True, "q": q, "p1": p1, "p2": p2})
    agree = []
    for t, g in enumerate(rngs):
        w = B.draw_form(g)
        wq = B.map_form(w) ** q
        inj = B.map_rank(wq, p1 - q) == B.dim(p1 - q)
        if p2 - q >= 0:
            surj = B.map_rank(wq, p2 - q) == B.dim(p2)
        else:
            surj = B.dim(p2) == 0
        agree.append(inj == surj)
        if inj:
            return LefschetzVerdict(MQ, True, B.p, base, trials, w_coeffs(w), None, None, B.hf.to_list(),
                                    {"q": q, "p1": p1, "p2": p2, "surjective_form": surj,
                                     "forms_agree": all(agree), "trial": t})
    return LefschetzVerdict(MQ, False, B.p, base, trials, None, None, p1 - q, B.hf.to_list(),
                            {"q": q, "p1": p1, "p2": p2, "forms_agree": all(agree)})


def delta_plus_identity(F: ArtinianAlgebra, witness: Sequence[int]) -> bool:
    """``HF(F/(w)) == Delta^+(HF(F))`` for the linear form with the given coefficients."""
    w = F.source.ring.linear_form(witness)
    return F.quotient_hf(w).trimmed() == delta_plus(F.hf).trimmed()
