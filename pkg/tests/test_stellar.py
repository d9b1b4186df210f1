import pytest

from lefschetz_lab.algebra import GradedIdeal, PolyRing
from lefschetz_lab.complexes import (
    cross_polytope_boundary,
    cyclic_polytope_boundary,
    simplex,
    simplex_boundary,
)
from lefschetz_lab.errors import BadT, FaceTooSmall, NotAFace, NotArtinianSeed, NotGorensteinStar
from lefschetz_lab.stellar import (
    CHECKS,
    NO_PREMISE,
    NOT_APPLICABLE,
    PASS,
    PROBE,
    VIOLATION,
    _implication,
    affordable_ts,
    build_artinian_seed,
    build_instance,
    build_section5,
    check_iff,
    check_iff_chain,
    check_lemmas,
    check_theorem_down,
    check_theorem_stellar,
    compare_Pa_Pb_Pc,
    derive_seed,
    has_violation,
    probe_conjecture_G,
    run_checks,
    scse_ideal,
    verify_C_decomposition,
    verify_G_properties,
    verify_IQ_hf,
    verify_hf_stellar_identity,
    verify_initial_ideal,
    verify_triple_equality,
)
from lefschetz_lab.lefschetz import LefschetzVerdict

import oracles

P = 32003
TET = simplex_boundary(4)
OCT = cross_polytope_boundary(3)


@pytest.fixture(scope="module")
def tet_edge():
    return build_instance(TET, (1, 2), P, 0)


@pytest.fixture(scope="module")
def oct_edge():
    return build_instance(OCT, (1, 2), P, 0)


def faces_of(D):
    return {frozenset(f) for f in D.faces}


# -- construction ---------------------------------------------------------------------------


def test_instance_tetrahedron_edge(tet_edge):
    i = tet_edge
    assert (i.q, i.d, i.p1, i.p2) == (1, 3, 1, 1)
    assert i.L.restricted().facets == ((3,), (4,))
    assert faces_of(i.L) == oracles.link(faces_of(TET), (1, 2))
    assert len(i.forms) == 4
    assert i.RT.labels[0] == "T"


def test_instance_octahedron_edge(oct_edge):
    # the link of an edge of the octahedron is two antipodal points
    assert faces_of(oct_edge.L) == oracles.link(faces_of(OCT), (1, 2))
    assert oct_edge.L.restricted().facets == ((3,), (6,))
    assert (oct_edge.q, oct_edge.d) == (1, 3)


def test_instance_cyclic_edge():
    D = cyclic_polytope_boundary(10, 6)
    e = next(f for f in D.faces_of_dim(1))
    i = build_instance(D, e, P, 0)
    assert (i.q, i.d, i.p1, i.p2) == (1, 6, 2, 3)


def test_instance_errors():
    with pytest.raises(FaceTooSmall):
        build_instance(TET, (1,))
    with pytest.raises(NotAFace):
        build_instance(cross_polytope_boundary(2), (1, 3))
    with pytest.raises(NotGorensteinStar):
        build_instance(simplex((1, 2, 3)), (1, 2))


def test_instance_header_and_seed_determinism():
    a = build_instance(OCT, (2, 3), P, 17)
    b = build_instance(OCT, (2, 3), P, 17)
    assert [f.to_dict() for f in a.forms] == [f.to_dict() for f in b.forms]
    h = a.header()
    assert set(h) == {"complex_hash", "sigma", "q", "d", "p1", "p2", "prime", "seed"}
    assert derive_seed(1, "A") != derive_seed(1, "B") and derive_seed(1, "A") == derive_seed(1, "A")


def test_socle_degrees_of_A_and_B(oct_edge):
    # A_d and B_{d-q-1} are one-dimensional
    assert oct_edge.A.dim(oct_edge.d) == 1
    assert oct_edge.B.dim(oct_edge.d - oct_edge.q - 1) == 1


# -- identities -----------------------------------------------------------------------------


def _oracle_identity_sides(inst, m_max):
    lhs = oracles.sr_hf(inst.D_sigma.facets, inst.D_sigma.vertices, m_max)
    hD = oracles.sr_hf(inst.D.facets, inst.D.vertices, m_max)
    # R/I_L is the face ring of the star of sigma on all vertices of D
    hL = oracles.sr_hf(inst.D.star(inst.sigma).facets, inst.D.vertices, m_max)
    rhs = [hD[m] + sum(hL[m - i] for i in range(1, inst.q + 1) if m - i >= 0) for m in range(m_max + 1)]
    return lhs, rhs


@pytest.mark.parametrize("D, s", [(TET, (1, 2)), (OCT, (1, 2)), (TET, (1, 2, 3))])
def test_hf_stellar_identity(D, s):
    inst = build_instance(D, s)
    r = verify_hf_stellar_identity(inst, 6)
    lhs, rhs = _oracle_identity_sides(inst, 6)
    assert lhs == rhs
    assert r.status == PASS and r.data["lhs"] == lhs and r.data["rhs"] == rhs


def test_hf_identity_in_degree_zero(tet_edge):
    r = verify_hf_stellar_identity(tet_edge, 0)
    assert r.data["lhs"] == [1] and r.data["rhs"] == [1]


@pytest.mark.parametrize("D, s", [(TET, (1, 2)), (OCT, (1, 2)), (OCT, (1, 2, 3)), (simplex_boundary(5), (1, 2, 3))])
def test_C_decomposition_against_h_vectors(D, s):
    inst = build_instance(D, s)
    r = verify_C_decomposition(inst)
    assert r.status == PASS
    h_sub = list(oracles.h_vector(oracles.f_vector(inst.D_sigma.facets)))
    assert r.data["hf_C"] == h_sub
    assert r.data["hf_A"] == list(oracles.h_vector(oracles.f_vector(D.facets)))
    assert inst.C.dim(inst.d + 1) == 0


def test_C_decomposition_tetrahedron_values(tet_edge):
    assert verify_C_decomposition(tet_edge).data["hf_C"] == [1, 2, 2, 1]


def test_C_decomposition_cyclic_edge():
    D = cyclic_polytope_boundary(10, 6)
    inst = build_instance(D, (1, 2))
    r = verify_C_decomposition(inst)
    assert r.status == PASS
    assert r.data["hf_C"] == list(oracles.h_vector(oracles.f_vector(inst.D_sigma.facets)))


@pytest.mark.parametrize("D, s", [(TET, (1, 2)), (OCT, (1, 2))])
def test_G_properties(D, s):
    inst = build_instance(D, s)
    r = verify_G_properties(inst, 6)
    assert r.status == PASS
    assert r.data["hf_RT_mod_IG"] == oracles.sr_hf(inst.D_sigma.facets, inst.D_sigma.vertices, 6)
    assert r.data["dim_B"] >= 1
    assert r.data["dim_G"] == r.data["dim_A"] + inst.q * r.data["dim_B"]


@pytest.mark.parametrize("D, s", [(TET, (1, 2)), (OCT, (1, 2)), (TET, (2, 3, 4))])
def test_initial_ideal(D, s):
    inst = build_instance(D, s)
    r = verify_initial_ideal(inst, 6)
    assert r.status == PASS and not r.data["mismatch_degrees"]
    assert r.data["hf_RT_mod_IC"] == oracles.sr_hf(inst.D_sigma.facets, inst.D_sigma.vertices, 6)


def test_initial_spans_empty_below_generators(tet_edge):
    assert tet_edge.I_G.initial_span(1) == set() == tet_edge.I_C.monomial_span(1)


def test_IQ_identity_and_regular_sequence(tet_edge):
    r = verify_IQ_hf(tet_edge, 6, ts=[1, 2, 3])
    assert r.status == PASS
    assert r.data["lhs"][0] == 1
    assert r.data["regular_sequence"]["3"]["match"]
    assert affordable_ts(tet_edge, 6, 0)[-1] == tet_edge.d


# -- theorem checks ----------------------------------------------------------------------------


def _verdict(ok):
    return LefschetzVerdict("WLP", ok, P, 0, 1)


def test_implication_semantics():
    assert _implication([_verdict(False)], _verdict(False)) == NO_PREMISE
    assert _implication([_verdict(True)], _verdict(False)) == VIOLATION
    assert _implication([_verdict(True), _verdict(True)], _verdict(True)) == PASS


@pytest.mark.parametrize("D, s", [(TET, (1, 2)), (OCT, (1, 2))])
def test_theorem_stellar(D, s):
    inst = build_instance(D, s)
    r = check_theorem_stellar(inst, 3)
    assert r.status == PASS
    assert r.data["wlp_A"]["outcome"] == "CertifiedTrue"


def test_lemmas_hold(oct_edge):
    r = check_lemmas(oct_edge, 3)
    assert r.status == PASS and all(r.data["relations"].values())


def test_theorem_down_guards():
    assert check_theorem_down(build_instance(TET, (1, 2))).status == NOT_APPLICABLE
    assert check_theorem_down(build_instance(simplex_boundary(5), (1, 2, 3))).status == NOT_APPLICABLE
    r = check_theorem_down(build_instance(TET, (1, 2, 3)))
    assert r.status == PASS


def test_iff_guards_and_agreement():
    assert check_iff(build_instance(TET, (1, 2, 3))).status == PASS
    assert check_iff(build_instance(simplex_boundary(6), (1, 2, 3, 4))).status == PASS
    assert check_iff(build_instance(cyclic_polytope_boundary(10, 6), (1, 2))).status == NOT_APPLICABLE


def test_iff_chain():
    rs = check_iff_chain(TET, [(1, 2, 3), (1, 2, 4)])
    assert [r.status for r in rs] == [PASS, PASS]


# -- colon ideals ------------------------------------------------------------------------------


def test_section5_tetrahedron(tet_edge):
    r = compare_Pa_Pb_Pc(build_section5(tet_edge), 6)
    assert r.status == PASS and r.data["hf_b_le_hf_a"] and r.data["P_c_contained"]
    row0 = r.data["degrees"][0]
    assert (row0["hf_a"], row0["hf_b"], row0["hf_c"]) == (1, 1, 1)


def test_section5_cyclic_edge():
    inst = build_instance(cyclic_polytope_boundary(10, 6), (1, 2))
    r = compare_Pa_Pb_Pc(build_section5(inst))
    assert r.status == PASS
    assert r.data["hf_a_equals_hf_b"]
    assert not r.data["P_a_equals_P_b"]
    assert r.data["P_c_strictly_inside_intersection"]


@pytest.mark.parametrize("t", [1, 2, 3])
def test_triple_equality_tetrahedron(tet_edge, t):
    assert verify_triple_equality(tet_edge, t, 6).status == PASS


def test_triple_equality_guard(tet_edge):
    with pytest.raises(BadT):
        verify_triple_equality(tet_edge, 4)
    with pytest.raises(BadT):
        verify_triple_equality(tet_edge, 0)


def test_probe_conjecture_G(tet_edge):
    r = probe_conjecture_G(tet_edge, 2)
    assert r.status == PROBE
    hG = r.data["hf_G"]
    d = [hG[0]] + [max(0, hG[i] - hG[i - 1]) for i in range(1, len(hG))]
    while d and d[-1] == 0:
        d.pop()
    assert r.data["delta_plus"] == d
    assert len(r.data["trials"]) == 2


# -- Artinian seeds ----------------------------------------------------------------------------


def test_scse_seed():
    I, x = scse_ideal(P)
    s = build_artinian_seed(I, x, 1)
    assert not s.degenerate
    assert s.wlp("C", 3).outcome == "NoWitnessFound"
    assert s.wlp("G", 3).outcome == "CertifiedTrue"


def test_seed_colon_of_monomial_ideal():
    R = PolyRing(2)
    x, y = R.var(0), R.var(1)
    s = build_artinian_seed(GradedIdeal(R, [x * x, y * y]), x * y, 1)
    assert s.I_L.span(1).rank == 2  # (x, y)
    assert not s.degenerate


def test_seed_degenerate_when_x_sigma_in_ideal():
    R = PolyRing(2)
    x, y = R.var(0), R.var(1)
    s = build_artinian_seed(GradedIdeal(R, [x * x, y * y, x * y]), x * y, 1)
    assert s.degenerate


def test_seed_errors():
    R = PolyRing(2)
    x, y = R.var(0), R.var(1)
    with pytest.raises(NotArtinianSeed):
        build_artinian_seed(GradedIdeal(R, [x * x]), x * y, 1)
    with pytest.raises(NotArtinianSeed):
        build_artinian_seed(GradedIdeal(R, [x * x, y * y]), x + y, 1)


# -- driver ---------------------------------------------------------------------------------------


def test_run_checks_tetrahedron_triangle():
    inst = build_instance(TET, (1, 2, 3))
    rep = run_checks(inst, CHECKS, 3)
    assert [c["name"] for c in rep["checks"]] == list(CHECKS)
    assert not has_violation(rep)
    statuses = {c["name"]: c["status"] for c in rep["checks"]}
    assert statuses["iff"] == PASS and statuses["conjecture_G"] == PROBE


def test_run_checks_is_reproducible():
    a = run_checks(build_instance(OCT, (1, 2), P, 5), ["lemmas", "section5"])
    b = run_checks(build_instance(OCT, (1, 2), P, 5), ["lemmas", "section5"])
    assert a == b
