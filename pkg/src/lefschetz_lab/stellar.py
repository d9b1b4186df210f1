"""Stellar subdivisions of Gorenstein* complexes: the algebras A, B, C, G and their checks.

Conventions.  For a pair ``(D, sigma)`` the polynomial ring ``R`` has one
variable per vertex, ordered with the vertices of ``sigma`` first, and
``R[T]`` puts the extra variable ``T`` in front of them.  Under graded
revlex this gives ``T > x_sigma-variables > other variables``.  All random
linear forms ``f_1..f_{d+1}`` live in ``R`` (they never involve ``T``) and
are shared by every algebra of one instance.

Every check returns a :class:`CheckResult` whose status is one of
``pass``, ``VIOLATION``, ``not_applicable``, ``premise_not_established``,
``witness_absent`` or ``probe``.
"""

from __future__ import annotations

import json
import zlib
from math import comb
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import gf
from .algebra import (
    GradedIdeal,
    HomogPoly,
    LinearSection,
    PolyRing,
    colon_span,
    embed,
    ideal_quotient,
    monomial_hilbert_function,
    random_linear_forms,
    sr_hilbert_function_from_f,
    stanley_reisner_ideal,
)
from .complexes import SimplicialComplex
from .errors import (
    BadParameters,
    BadT,
    FaceTooSmall,
    NotAFace,
    NotArtinian,
    NotArtinianSeed,
    NotGorensteinStar,
)
from .homology import is_gorenstein_star
from .lefschetz import (
    ArtinianAlgebra,
    LefschetzVerdict,
    artinian_reduction,
    has_wlp,
    lefschetz_degrees,
    m_property,
)
from .sequences import IntSeq, delta_plus, delta_power

PASS, VIOLATION = "pass", "VIOLATION"
NOT_APPLICABLE, NO_PREMISE = "not_applicable", "premise_not_established"
WITNESS_ABSENT, PROBE = "witness_absent", "probe"


def derive_seed(seed: int, *tags) -> int:
    """Stable 63-bit seed for a named sub-computation."""
    words = [int(seed) & 0xFFFFFFFFFFFFFFFF]
    for t in tags:
        words.append(zlib.crc32(str(t).encode()) if isinstance(t, str) else int(t))
    state = np.random.SeedSequence(words).generate_state(2, np.uint32)
    return int((int(state[0]) << 31) ^ int(state[1]))


@dataclass
class CheckResult:
    name: str
    status: str
    data: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "data": self.data}


@lru_cache(maxsize=64)
def _gorenstein(D: SimplicialComplex, p: int) -> bool:
    return is_gorenstein_star(D, p)


class StellarInstance:
    """All objects attached to a Gorenstein* complex ``D`` and a face ``sigma``."""

    def __init__(self, D: SimplicialComplex, sigma: Iterable[int], prime: int = gf.DEFAULT_PRIME,
                 seed: int = 0, check: bool = True):
        sigma = tuple(sorted(int(v) for v in sigma))
        if len(sigma) < 2:
            raise FaceTooSmall("sigma must have dimension at least 1")
        if not D.is_face(sigma):
            raise NotAFace(f"{sigma} is not a face")
        self.prime = gf.check_prime(prime)
        if check and not _gorenstein(D, self.prime):
            raise NotGorensteinStar("complex is not Gorenstein* over GF(%d)" % self.prime)
        self.D = D
        self.sigma = sigma
        self.seed = int(seed)
        self.q = len(sigma) - 1
        self.d = D.dim + 1
        self.p1, self.p2 = lefschetz_degrees(self.d)
        self.L = D.link(sigma)
        self.new_vertex = max(D.vertices) + 1
        self.D_sigma = D.stellar_subdivision(sigma, self.new_vertex)

        order = list(sigma) + [v for v in D.vertices if v not in sigma]
        self.order = order
        n = len(order)
        self.R = PolyRing(n, self.prime, order)
        self.RT = PolyRing(n + 1, self.prime, ["T"] + order)
        self.I = stanley_reisner_ideal(D, ring=self.R)
        self.x_sigma = self.R.squarefree(range(self.q + 1))
        self.I_L = ideal_quotient(self.I, self.x_sigma)

        rng = np.random.default_rng(np.random.SeedSequence([self.seed & 0xFFFFFFFFFFFFFFFF, 0]))
        self.forms = random_linear_forms(self.R, self.d + 1, rng)
        self._verdicts: dict = {}

    # -- ideals in R[T] -----------------------------------------------------

    def lift(self, f: HomogPoly) -> HomogPoly:
        return embed(f, self.RT, range(1, self.R.n + 1))

    @cached_property
    def T(self) -> HomogPoly:
        return self.RT.var(0)

    def _rt(self, polys) -> list[HomogPoly]:
        return [self.lift(g) for g in polys]

    @cached_property
    def T_IL(self) -> list[HomogPoly]:
        return [self.T * g for g in self._rt(self.I_L.generators)]

    @cached_property
    def J_st(self) -> GradedIdeal:
        return GradedIdeal(self.RT, self._rt(self.I.generators) + [self.lift(self.x_sigma)] + self.T_IL)

    @cached_property
    def I_C(self) -> GradedIdeal:
        return GradedIdeal(self.RT, self._rt(self.I.generators) + [self.T ** (self.q + 1)] + self.T_IL)

    @cached_property
    def I_G(self) -> GradedIdeal:
        g = self.T ** (self.q + 1) - self.lift(self.x_sigma)
        return GradedIdeal(self.RT, self._rt(self.I.generators) + [g] + self.T_IL)

    @cached_property
    def I_Q(self) -> GradedIdeal:
        return GradedIdeal(self.RT, self._rt(self.I.generators) + self.T_IL)

    @cached_property
    def forms_T(self) -> list[HomogPoly]:
        return self._rt(self.forms)

    # -- algebras -------------------------------------------------------------

    @cached_property
    def A(self) -> ArtinianAlgebra:
        return ArtinianAlgebra(self.I, self.forms[: self.d])

    @cached_property
    def B(self) -> ArtinianAlgebra:
        return ArtinianAlgebra(self.I_L, self.forms[: self.d])

    @cached_property
    def C(self) -> ArtinianAlgebra:
        return ArtinianAlgebra(self.I_C, self.forms_T[: self.d])

    @cached_property
    def G(self) -> ArtinianAlgebra:
        return ArtinianAlgebra(self.I_G, self.forms_T[: self.d])

    @cached_property
    def sr_sigma(self) -> GradedIdeal:
        """Stanley-Reisner ideal of the subdivision, new vertex first."""
        return stanley_reisner_ideal(self.D_sigma, self.prime, [self.new_vertex] + self.order)

    def default_m_max(self) -> int:
        return self.d + self.q + 2

    def header(self) -> dict:
        return {
            "complex_hash": self.D.digest(),
            "sigma": list(self.sigma),
            "q": self.q,
            "d": self.d,
            "p1": self.p1,
            "p2": self.p2,
            "prime": self.prime,
            "seed": self.seed,
        }

    # -- cached randomized verdicts ------------------------------------------

    def verdict(self, which: str, trials: int) -> LefschetzVerdict:
        """WLP-type verdicts, each with its own derived seed."""
        key = (which, trials)
        if key in self._verdicts:
            return self._verdicts[key]
        s = derive_seed(self.seed, which)
        if which == "A":
            v = has_wlp(self.A, trials, s)
        elif which == "B":
            v = has_wlp(self.B, trials, s)
        elif which == "C":
            # w + T suffices: rescaling T makes it a general form
            v = has_wlp(self.C, trials, s, distinguished=0)
        elif which == "M":
            v = m_property(self.B, self.q, self.p1, trials, s, p2=self.p2)
        elif which == "D":
            F = artinian_reduction(self.I, self.d, derive_seed(self.seed, "forms-D"))
            v = has_wlp(F, trials, s)
        elif which == "D_sigma":
            F = artinian_reduction(self.sr_sigma, self.d, derive_seed(self.seed, "forms-D_sigma"))
            v = has_wlp(F, trials, s)
        elif which == "L":
            IL = stanley_reisner_ideal(self.L.restricted(), self.prime)
            F = artinian_reduction(IL, self.L.dim + 1, derive_seed(self.seed, "forms-L"))
            v = has_wlp(F, trials, s)
        else:
            raise BadParameters(f"unknown verdict {which!r}")
        self._verdicts[key] = v
        return v


def build_instance(D: SimplicialComplex, sigma: Iterable[int], prime: int = gf.DEFAULT_PRIME,
                   seed: int = 0) -> StellarInstance:
    return StellarInstance(D, sigma, prime, seed)


def _status(ok: bool) -> str:
    return PASS if ok else VIOLATION


# -- identities -------------------------------------------------------------------


def verify_hf_stellar_identity(inst: StellarInstance, m_max: int | None = None) -> CheckResult:
    """``HF(k[D_sigma]) = HF(k[D]) + sum_{i=1..q} HF(. - i, R/I_L)``.

    The left side comes from the face numbers of the subdivision, the right
    side from the Hilbert series of the two monomial ideals.
    """
    m_max = inst.default_m_max() if m_max is None else m_max
    lhs = sr_hilbert_function_from_f(inst.D_sigma.f_vector, m_max)
    hD = _series_hf(inst.I, m_max)
    hL = _series_hf(inst.I_L, m_max)
    rhs = [hD[m] + sum(hL[m - i] for i in range(1, inst.q + 1)) for m in range(m_max + 1)]
    left = lhs.window(0, m_max)
    bad = [m for m in range(m_max + 1) if left[m] != rhs[m]]
    return CheckResult("hf_stellar_identity", _status(not bad),
                       {"m_max": m_max, "lhs": left, "rhs": rhs, "mismatch_degrees": bad})


def _series_hf(J: GradedIdeal, m_max: int) -> IntSeq:
    gens = [next(iter(g.terms)) for g in J.generators]
    return monomial_hilbert_function(gens, J.ring.n, m_max).truncate(m_max)


def verify_C_decomposition(inst: StellarInstance) -> CheckResult:
    d, q = inst.d, inst.q
    hA, hB, hC = inst.A.hf, inst.B.hf, inst.C.hf
    rhs = [hA[m] + sum(hB[m - j] for j in range(1, q + 1)) for m in range(d + 2)]
    lhs = [hC[m] for m in range(d + 2)]
    ok_sum = lhs == rhs
    ok_top = hC[d] == 1 and inst.C.socle_degree == d
    ok_sym = all(hC[i] == hC[d - i] for i in range(d + 1))
    return CheckResult("C_decomposition", _status(ok_sum and ok_top and ok_sym), {
        "hf_C": hC.to_list(), "hf_A": hA.to_list(), "hf_B": hB.to_list(), "rhs": rhs,
        "sum_identity": ok_sum, "top_degree_one_dim": ok_top, "symmetric": ok_sym,
    })


def verify_G_properties(inst: StellarInstance, m_max: int | None = None, full_ring: bool = True) -> CheckResult:
    """HF(G) = HF(C), dim G = dim A + q dim B, and (optionally) HF(R[T]/I_G) = HF(k[D_sigma])."""
    hG, hC = inst.G.hf, inst.C.hf
    ok_gc = hG.trimmed() == hC.trimmed()
    dims = (inst.G.total_dim(), inst.A.total_dim(), inst.B.total_dim())
    ok_dim = dims[0] == dims[1] + inst.q * dims[2]
    data = {"hf_G": hG.to_list(), "hf_C": hC.to_list(), "hf_equal": ok_gc,
            "dim_G": dims[0], "dim_A": dims[1], "dim_B": dims[2], "dimension_identity": ok_dim}
    ok_full = True
    if full_ring:
        m_max = inst.default_m_max() if m_max is None else m_max
        lhs = inst.I_G.hilbert_function(m_max, "macaulay").window(0, m_max)
        rhs = sr_hilbert_function_from_f(inst.D_sigma.f_vector, m_max).window(0, m_max)
        ok_full = lhs == rhs
        data.update({"m_max": m_max, "hf_RT_mod_IG": lhs, "hf_D_sigma": rhs, "full_ring_identity": ok_full})
    return CheckResult("G_properties", _status(ok_gc and ok_dim and ok_full), data)


def verify_initial_ideal(inst: StellarInstance, m_max: int | None = None) -> CheckResult:
    """Leading monomials of I_G agree with the monomials of I_C in each degree."""
    m_max = inst.default_m_max() if m_max is None else m_max
    bad = []
    for m in range(m_max + 1):
        if inst.I_G.initial_span(m) != inst.I_C.monomial_span(m):
            bad.append(m)
    hIC = _series_hf(inst.I_C, m_max).window(0, m_max)
    hDs = sr_hilbert_function_from_f(inst.D_sigma.f_vector, m_max).window(0, m_max)
    ok_hf = hIC == hDs
    return CheckResult("initial_ideal", _status(not bad and ok_hf), {
        "m_max": m_max, "mismatch_degrees": bad, "hf_RT_mod_IC": hIC, "hf_D_sigma": hDs, "hf_equal": ok_hf,
    })


def verify_IQ_hf(inst: StellarInstance, m_max: int | None = None, ts: Sequence[int] | None = None) -> CheckResult:
    """``HF(m, R[T]/I_Q) = HF(m, k[D]) + sum_{j=1..m} HF(m-j, R/I_L)``, plus the drop under
    ``T - f_1, f_2, .., f_t``, which must be ``Delta^t`` for a regular sequence."""
    m_max = inst.default_m_max() if m_max is None else m_max
    hQ = inst.I_Q.hilbert_function(m_max, "macaulay")
    lhs = hQ.window(0, m_max)
    hD = _series_hf(inst.I, m_max)
    hL = _series_hf(inst.I_L, m_max)
    rhs = [hD[m] + sum(hL[m - j] for j in range(1, m + 1)) for m in range(m_max + 1)]
    ok_id = lhs == rhs
    ts = affordable_ts(inst, m_max, 0) if ts is None else ts
    regular = {}
    fT = inst.forms_T
    for t in ts:
        seq = [inst.T - fT[0]] + fT[1:t]
        sec = LinearSection(inst.RT, seq)
        h = sec.map_ideal(inst.I_Q).hilbert_function(m_max, "macaulay").window(0, m_max)
        expect = delta_power(IntSeq(tuple(lhs), 0, False), t).window(0, m_max)
        regular[str(t)] = {"hf": h, "delta_power": expect, "match": h == expect}
    ok_reg = all(v["match"] for v in regular.values())
    return CheckResult("IQ_hf", _status(ok_id and ok_reg), {
        "m_max": m_max, "lhs": lhs, "rhs": rhs, "identity": ok_id, "regular_sequence": regular,
    })


def affordable_ts(inst: StellarInstance, m_max: int, extra: int) -> list[int]:
    """Values of t in 1..d whose quotient ring stays within the dense slice size.

    After ``t`` linear forms the ring has ``n + 1 - t`` variables and the
    largest slice needed is in degree ``m_max + extra``; t = d is always kept.
    """
    n = inst.R.n
    keep = []
    for t in range(1, inst.d + 1):
        if t == inst.d or comb(m_max + extra + n - t, n - t) <= gf.Span.DENSE_LIMIT:
            keep.append(t)
    return keep


# -- theorem checks -----------------------------------------------------------------


def _implication(premises: Sequence[LefschetzVerdict], conclusion: LefschetzVerdict) -> str:
    if not all(p.certified for p in premises):
        return NO_PREMISE
    return PASS if conclusion.certified else VIOLATION


def check_theorem_stellar(inst: StellarInstance, trials: int = 3) -> CheckResult:
    """WLP(A) and M_{q,p1}(B) imply the WLP for a general reduction of k[D_sigma]."""
    a, m, s = inst.verdict("A", trials), inst.verdict("M", trials), inst.verdict("D_sigma", trials)
    return CheckResult("theorem_stellar", _implication([a, m], s), {
        "wlp_A": a.to_dict(), "m_property_B": m.to_dict(), "wlp_D_sigma": s.to_dict(),
    })


def check_lemmas(inst: StellarInstance, trials: int = 3) -> CheckResult:
    """The supporting equivalences: WLP(A) = WLP(k[D]), WLP(B) = WLP(k[L]),
    WLP(C) = [WLP(A) and M(B)], and WLP(C) implies WLP(k[D_sigma])."""
    v = {k: inst.verdict(k, trials) for k in ("A", "B", "C", "M", "D", "L", "D_sigma")}
    c = {k: x.certified for k, x in v.items()}
    rel = {
        "A_iff_D": c["A"] == c["D"],
        "B_iff_L": c["B"] == c["L"],
        "C_iff_A_and_M": c["C"] == (c["A"] and c["M"]),
        "C_implies_D_sigma": (not c["C"]) or c["D_sigma"],
    }
    return CheckResult("lemmas", _status(all(rel.values())), {
        "relations": rel, "outcomes": {k: x.outcome for k, x in v.items()},
    })


def check_theorem_down(inst: StellarInstance, trials: int = 3) -> CheckResult:
    """For ``q > p2``: WLP for k[D_sigma] implies WLP for k[D]."""
    if inst.q <= inst.p2:
        return CheckResult("theorem_down", NOT_APPLICABLE, {"q": inst.q, "p2": inst.p2})
    s, D = inst.verdict("D_sigma", trials), inst.verdict("D", trials)
    return CheckResult("theorem_down", _implication([s], D), {"wlp_D_sigma": s.to_dict(), "wlp_D": D.to_dict()})


def check_iff(inst: StellarInstance, trials: int = 3) -> CheckResult:
    """For ``2q > d`` the two WLP verdicts coincide."""
    if 2 * inst.q <= inst.d:
        return CheckResult("iff", NOT_APPLICABLE, {"q": inst.q, "d": inst.d})
    s, D = inst.verdict("D_sigma", trials), inst.verdict("D", trials)
    return CheckResult("iff", _status(s.certified == D.certified),
                       {"wlp_D_sigma": s.to_dict(), "wlp_D": D.to_dict()})


def check_iff_chain(D: SimplicialComplex, faces: Sequence[Sequence[int]], prime: int = gf.DEFAULT_PRIME,
                    seed: int = 0, trials: int = 3) -> list[CheckResult]:
    """Apply :func:`check_iff` along a user-given sequence of subdivisions."""
    out = []
    for k, s in enumerate(faces):
        inst = StellarInstance(D, s, prime, derive_seed(seed, "chain", k))
        out.append(check_iff(inst, trials))
        D = inst.D_sigma
    return out


# -- the colon ideals P_a, P_b, P_c --------------------------------------------------


class Section5Bundle:
    """``L = (I, f1 I_L, f2..f_t)`` and its colons by ``x_sigma`` and ``f1^{q+1}``.

    Every ideal here contains ``f2..f_t``, so all of them are handled in the
    smaller ring ``R/(f2..f_t)``.  ``t`` defaults to ``d + 1``.
    """

    def __init__(self, inst: StellarInstance, t: int | None = None):
        self.inst = inst
        t = inst.d + 1 if t is None else t
        self.t = t
        self.section = LinearSection(inst.R, inst.forms[1:t])
        sec = self.section
        f1 = sec.map(inst.forms[0])
        self.f1 = f1
        self.x_sigma = sec.map(inst.x_sigma)
        self.u_b = f1 ** (inst.q + 1)
        IL = [sec.map(g) for g in inst.I_L.generators]
        self.L = GradedIdeal(sec.target, [sec.map(g) for g in inst.I.generators] + [f1 * g for g in IL])
        self.P_c = GradedIdeal(sec.target, IL)
        self.K_a = self.L.plus([self.x_sigma])
        self.K_b = self.L.plus([self.u_b])
        self._a: dict[int, gf.Span] = {}
        self._b: dict[int, gf.Span] = {}

    @property
    def ring(self) -> PolyRing:
        return self.section.target

    def P_a(self, m: int) -> gf.Span:
        if m not in self._a:
            self._a[m] = colon_span(self.L, self.x_sigma, m)
        return self._a[m]

    def P_b(self, m: int) -> gf.Span:
        if m not in self._b:
            self._b[m] = colon_span(self.L, self.u_b, m)
        return self._b[m]


def build_section5(inst: StellarInstance, t: int | None = None) -> Section5Bundle:
    return Section5Bundle(inst, t)


def _intersection_dim(a: gf.Span, b: gf.Span) -> int:
    both = gf.Span(a.ncols, a.p)
    both.add_dense(a.basis_dense())
    both.add_dense(b.basis_dense())
    return a.rank + b.rank - both.rank


def compare_Pa_Pb_Pc(bundle: Section5Bundle, m_max: int | None = None) -> CheckResult:
    inst = bundle.inst
    m_max = inst.default_m_max() if m_max is None else m_max
    ring = bundle.ring
    rows = []
    for m in range(m_max + 1):
        a, b, c = bundle.P_a(m), bundle.P_b(m), bundle.P_c.span(m)
        size = ring.dim(m)
        inter = _intersection_dim(a, b)
        rows.append({
            "degree": m,
            "hf_a": size - a.rank,
            "hf_b": size - b.rank,
            "hf_c": size - c.rank,
            "a_equals_b": a.equals(b),
            "c_in_a_and_b": a.contains_span(c) and b.contains_span(c),
            "dim_a_cap_b": inter,
            "dim_c": c.rank,
        })
    ineq = all(r["hf_b"] <= r["hf_a"] for r in rows)
    contained = all(r["c_in_a_and_b"] for r in rows)
    low = inst.p1 - inst.q
    summary = {
        "m_max": m_max,
        "hf_a_equals_hf_b": all(r["hf_a"] == r["hf_b"] for r in rows),
        "P_a_equals_P_b": all(r["a_equals_b"] for r in rows),
        "P_c_strictly_inside_intersection": any(r["dim_c"] < r["dim_a_cap_b"] for r in rows),
        "hf_b_le_hf_a": ineq,
        "P_c_contained": contained,
        # open question: do P_b and P_c agree in degrees <= p1 - q?
        "P_b_equals_P_c_up_to_p1_minus_q": None if low < 0 else all(
            bundle.P_b(m).equals(bundle.P_c.span(m)) for m in range(low + 1)
        ),
        "degrees": rows,
    }
    return CheckResult("section5", _status(ineq and contained), summary)


def verify_triple_equality(inst: StellarInstance, t: int, m_max: int | None = None) -> CheckResult:
    """``(I, f1 I_L, f2..f_t) : x_sigma = (..) : f1^{q+1} = (I_L, f2..f_t)`` degreewise."""
    if not 1 <= t <= inst.d:
        raise BadT(f"t must lie in 1..{inst.d}, got {t}")
    m_max = inst.default_m_max() if m_max is None else m_max
    bundle = Section5Bundle(inst, t)
    bad = []
    for m in range(m_max + 1):
        a, b, c = bundle.P_a(m), bundle.P_b(m), bundle.P_c.span(m)
        if not (a.equals(c) and b.equals(c)):
            bad.append(m)
    return CheckResult("triple_equality", _status(not bad), {"t": t, "m_max": m_max, "mismatch_degrees": bad})


def probe_conjecture_G(inst: StellarInstance, trials: int = 3) -> CheckResult:
    """Compare ``HF(G/(f_{d+1}))`` with ``Delta^+(HF(G))`` for fresh forms; reports only."""
    G = inst.G
    target = delta_plus(G.hf).trimmed().to_list()
    rng = np.random.default_rng(np.random.SeedSequence([derive_seed(inst.seed, "conjecture-G")]))
    rows = []
    for k in range(trials):
        c = rng.integers(0, inst.prime, size=inst.R.n)
        w = inst.lift(inst.R.linear_form(c))
        got = G.quotient_hf(w).to_list()
        rows.append({"trial": k, "hf_quotient": got, "equal": got == target})
    return CheckResult("conjecture_G", PROBE, {
        "hf_G": G.hf.to_list(), "delta_plus": target, "trials": rows,
        "equal_count": sum(r["equal"] for r in rows),
    })


# -- Artinian seeds ---------------------------------------------------------------------


class ArtinianSeed:
    """The stellar constructions applied to an arbitrary Artinian ideal ``I``.

    No linear forms are appended: ``R/I`` is already Artinian, and so are
    ``R[T]/(I, T^{q+1}, T I_L)`` and ``R[T]/(I, T^{q+1} - x_sigma, T I_L)``.
    """

    def __init__(self, I: GradedIdeal, x_sigma: HomogPoly, q: int):
        if x_sigma.ring is not I.ring or not x_sigma.is_monomial() or x_sigma.is_zero():
            raise NotArtinianSeed("x_sigma must be a monomial of the ideal's ring")
        if q < 1:
            raise NotArtinianSeed("q must be at least 1")
        try:
            self.socle = I.socle_degree()
        except NotArtinian as exc:
            raise NotArtinianSeed(str(exc)) from exc
        self.I, self.x_sigma, self.q = I, x_sigma, q
        R = I.ring
        self.R = R
        self.I_L = ideal_quotient(I, x_sigma)
        self.degenerate = self.I_L.is_unit()
        self.RT = PolyRing(R.n + 1, R.p, ["T"] + list(R.labels))
        pos = range(1, R.n + 1)
        T = self.RT.var(0)
        lift = lambda f: embed(f, self.RT, pos)  # noqa: E731
        base = [lift(g) for g in I.generators]
        t_il = [T * lift(g) for g in self.I_L.generators]
        self.I_C = GradedIdeal(self.RT, base + [T ** (q + 1)] + t_il)
        self.I_G = GradedIdeal(self.RT, base + [T ** (q + 1) - lift(x_sigma)] + t_il)

    def wlp(self, which: str, trials: int = 3, seed: int = 0) -> LefschetzVerdict:
        J = {"I": self.I, "C": self.I_C, "G": self.I_G}[which]
        return has_wlp(ArtinianAlgebra(J, ()), trials, derive_seed(seed, "seed-wlp", which))

    def report(self, trials: int = 3, seed: int = 0) -> dict:
        out = {
            "socle_degree": self.socle,
            "degenerate": self.degenerate,
            "I_L_generators": len(self.I_L.generators),
        }
        for k in ("I", "C", "G"):
            out[k] = self.wlp(k, trials, seed).to_dict()
        return out


def build_artinian_seed(I: GradedIdeal, x_sigma: HomogPoly, q: int) -> ArtinianSeed:
    return ArtinianSeed(I, x_sigma, q)


def scse_ideal(p: int = gf.DEFAULT_PRIME) -> tuple[GradedIdeal, HomogPoly]:
    """``(x1^3, x2^3, x3^3, x4^3, (x1+x2+x3+x4)^3)`` and the monomial ``x1 x2``."""
    R = PolyRing(4, p, [1, 2, 3, 4])
    xs = [R.var(i) for i in range(4)]
    s = xs[0] + xs[1] + xs[2] + xs[3]
    return GradedIdeal(R, [x ** 3 for x in xs] + [s ** 3]), xs[0] * xs[1]


# -- reports ---------------------------------------------------------------------------

CHECKS = (
    "hf_stellar_identity", "C_decomposition", "G_properties", "initial_ideal", "IQ_hf",
    "theorem_stellar", "lemmas", "theorem_down", "iff", "section5", "triple_equality", "conjecture_G",
)


def run_checks(inst: StellarInstance, names: Sequence[str] = CHECKS, trials: int = 3,
               m_max: int | None = None) -> dict:
    out = []
    for name in names:
        if name == "hf_stellar_identity":
            r = verify_hf_stellar_identity(inst, m_max)
        elif name == "C_decomposition":
            r = verify_C_decomposition(inst)
        elif name == "G_properties":
            r = verify_G_properties(inst, m_max)
        elif name == "initial_ideal":
            r = verify_initial_ideal(inst, m_max)
        elif name == "IQ_hf":
            r = verify_IQ_hf(inst, m_max)
        elif name == "theorem_stellar":
            r = check_theorem_stellar(inst, trials)
        elif name == "lemmas":
            r = check_lemmas(inst, trials)
        elif name == "theorem_down":
            r = check_theorem_down(inst, trials)
        elif name == "iff":
            r = check_iff(inst, trials)
        elif name == "section5":
            r = compare_Pa_Pb_Pc(build_section5(inst), m_max)
        elif name == "triple_equality":
            mm = inst.default_m_max() if m_max is None else m_max
            ts = affordable_ts(inst, mm, inst.q + 1)
            rs = [verify_triple_equality(inst, t, mm) for t in ts]
            bad = {str(x.data["t"]): x.data["mismatch_degrees"] for x in rs if x.status != PASS}
            r = CheckResult("triple_equality", _status(not bad), {
                "m_max": mm, "t_checked": ts,
                "t_skipped": [t for t in range(1, inst.d + 1) if t not in ts], "failures": bad,
            })
        elif name == "conjecture_G":
            r = probe_conjecture_G(inst, trials)
        else:
            raise BadParameters(f"unknown check {name!r}")
        out.append(r.to_dict())
    return {"instance": inst.header(), "checks": out}


def has_violation(report: dict) -> bool:
    return any(c["status"] == VIOLATION for c in report["checks"])


def dumps(report) -> str:
    return json.dumps(report, indent=2, sort_keys=True)
