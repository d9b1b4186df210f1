import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lefschetz_lab.algebra import (
    GradedIdeal,
    HomogPoly,
    LinearSection,
    PolyRing,
    colon_span,
    ideal_quotient,
    ideal_quotient_slice,
    make_rng,
    monomial_hilbert_function,
    random_linear_forms,
    sr_hilbert_function_from_f,
    stanley_reisner_ideal,
)
from lefschetz_lab.complexes import cross_polytope_boundary, cyclic_polytope_boundary, simplex_boundary
from lefschetz_lab.errors import BadParameters
from lefschetz_lab.sequences import delta

import oracles

P = 32003
TET = simplex_boundary(4)
SQUARE = cross_polytope_boundary(2)


def gens_of(J):
    return sorted(next(iter(g.terms)) for g in J.generators)


# -- monomial order -----------------------------------------------------------------


def test_revlex_basis_order():
    R = PolyRing(3)
    b = R.basis(2)
    mons = [b.monomial(i) for i in range(b.size)]
    # x0^2 > x0x1 > x1^2 > x0x2 > x1x2 > x2^2
    assert mons == [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]


def test_revlex_matches_definition():
    R = PolyRing(4)
    b = R.basis(3)
    mons = [np.array(b.monomial(i)) for i in range(b.size)]
    for i in range(len(mons) - 1):
        diff = mons[i] - mons[i + 1]
        last = diff[np.flatnonzero(diff)[-1]]
        assert last < 0  # earlier monomial is larger


@pytest.mark.parametrize("gens, m, lead", [
    (lambda x, y: [x * x - y * y], 2, {(2, 0)}),
    (lambda x, y: [x + y], 1, {(1, 0)}),
])
def test_initial_span_examples(gens, m, lead):
    R = PolyRing(2)
    J = GradedIdeal(R, gens(R.var(0), R.var(1)))
    assert J.initial_span(m) == lead


# -- Stanley-Reisner ideals --------------------------------------------------------------


def test_sr_ideal_examples():
    assert gens_of(stanley_reisner_ideal(TET)) == [(1, 1, 1, 1)]
    assert gens_of(stanley_reisner_ideal(SQUARE)) == [(0, 1, 0, 1), (1, 0, 1, 0)]
    O = stanley_reisner_ideal(cross_polytope_boundary(3))
    pos = {lab: i for i, lab in enumerate(O.ring.labels)}
    got = {tuple(sorted(O.ring.labels[i] for i, e in enumerate(g) if e)) for g in gens_of(O)}
    assert got == {(1, 4), (2, 5), (3, 6)}
    assert pos == {v: v - 1 for v in range(1, 7)}


def test_sr_variable_order():
    J = stanley_reisner_ideal(SQUARE, order=[3, 1, 2, 4])
    assert J.ring.labels == (3, 1, 2, 4)
    with pytest.raises(BadParameters):
        stanley_reisner_ideal(SQUARE, order=[1, 2, 3])


# -- degree spans and Hilbert functions ---------------------------------------------------


def test_degree_span_ranks():
    R = PolyRing(1)
    assert GradedIdeal(R, [R.var(0) ** 2]).span(3).rank == 1
    J = stanley_reisner_ideal(TET)
    assert J.span(4).rank == 1 and J.span(5).rank == 4 and J.span(3).rank == 0


def test_hf_examples():
    assert stanley_reisner_ideal(TET).hilbert_function(5, "macaulay").window(0, 5) == [1, 4, 10, 20, 34, 52]
    assert stanley_reisner_ideal(SQUARE).hilbert_function(5, "macaulay").window(0, 5) == [1, 4, 8, 12, 16, 20]
    R = PolyRing(1)
    h = GradedIdeal(R, [R.var(0) ** 2]).hilbert_function(6)
    assert h.exact and h.values == (1, 1)


@pytest.mark.parametrize("D", [TET, SQUARE, cross_polytope_boundary(3), cyclic_polytope_boundary(6, 3)])
def test_hf_three_ways(D):
    J = stanley_reisner_ideal(D)
    brute = oracles.sr_hf(D.facets, D.vertices, 5)
    assert J.hilbert_function(5, "macaulay").window(0, 5) == brute
    assert J.hilbert_function(5, "series").window(0, 5) == brute
    assert sr_hilbert_function_from_f(D.f_vector, 5).window(0, 5) == brute


def test_hf_of_non_monomial_ideal():
    R = PolyRing(3)
    x, y, z = (R.var(i) for i in range(3))
    J = GradedIdeal(R, [x * x - y * z, y * y - x * z])
    # complete intersection of two quadrics: HF = (1, 3, 4, 4, ...)
    assert J.hilbert_function(6).window(0, 6) == [1, 3, 4, 4, 4, 4, 4]


gen_lists = st.lists(st.lists(st.integers(0, 3), min_size=3, max_size=3), min_size=1, max_size=5)


@settings(max_examples=50, deadline=None)
@given(gen_lists)
def test_monomial_hf_against_counting(gens):
    gens = [tuple(g) for g in gens if sum(g) > 0] or [(1, 0, 0)]
    R = PolyRing(3)
    J = GradedIdeal(R, [R.monomial(g) for g in gens])
    brute = oracles.monomial_hf(gens, 3, 7)
    assert monomial_hilbert_function(gens, 3, 7).window(0, 7) == brute
    assert J.hilbert_function(7, "macaulay").window(0, 7) == brute


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_regular_linear_form_drops_hf_by_delta(seed):
    # a general linear form is regular on the Cohen-Macaulay ring k[D]
    J = stanley_reisner_ideal(cross_polytope_boundary(3))
    f = random_linear_forms(J.ring, 1, seed)
    sec = LinearSection(J.ring, f)
    lhs = sec.map_ideal(J).hilbert_function(6).window(0, 6)
    rhs = delta(J.hilbert_function(6)).window(0, 6)
    assert lhs == rhs


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(0, 5))
def test_initial_span_has_rank_many_monomials(seed, m):
    R = PolyRing(3)
    rng = np.random.default_rng(seed)
    gens = []
    for _ in range(2):
        c = rng.integers(0, P, size=R.dim(2))
        gens.append(HomogPoly.from_row(R, 2, {i: int(v) for i, v in enumerate(c)}))
    J = GradedIdeal(R, gens)
    assert len(J.initial_span(m)) == J.span(m).rank


# -- colon ideals ----------------------------------------------------------------------------


def test_colon_of_tetrahedron_ideal():
    J = stanley_reisner_ideal(TET)
    R = J.ring
    u = R.squarefree([0, 1])
    Q = ideal_quotient(J, u)
    assert gens_of(Q) == [(0, 0, 1, 1)]
    expect = GradedIdeal(R, [R.squarefree([2, 3])])
    for m in range(7):
        assert colon_span(J, u, m).equals(expect.span(m))


def test_colon_by_one_is_identity():
    J = stanley_reisner_ideal(SQUARE)
    for m in range(5):
        assert colon_span(J, J.ring.one(), m).equals(J.span(m))


@pytest.mark.parametrize("D", [TET, cross_polytope_boundary(3), cyclic_polytope_boundary(7, 4)])
def test_colon_by_face_is_star_ideal(D):
    J = stanley_reisner_ideal(D)
    R = J.ring
    for s in D.faces:
        if not s:
            continue
        u = R.squarefree([R.index_of_label(v) for v in s])
        star = stanley_reisner_ideal(D.star(s), ring=R)
        for m in range(4):
            assert colon_span(J, u, m).equals(star.span(m))
            assert colon_span(J, u, m).contains_span(J.span(m))


def test_colon_non_monomial_against_kernel_definition():
    R = PolyRing(3)
    x, y, z = (R.var(i) for i in range(3))
    J = GradedIdeal(R, [x ** 3, y ** 3, z ** 3, (x + y + z) ** 2 * x])
    u = x + y.scale(2)
    Q = ideal_quotient(J, u)
    for m in range(6):
        b = R.basis(m)
        for i in range(b.size):
            mono = R.monomial(b.monomial(i))
            assert Q.contains(mono) == J.contains(mono * u)
    assert ideal_quotient_slice(J, u, 1).dim == 3 - colon_span(J, u, 1).rank


def test_colon_contains_the_ideal_for_random_forms():
    R = PolyRing(3)
    x, y, z = (R.var(i) for i in range(3))
    J = GradedIdeal(R, [x * y, z ** 2 - x * y, y ** 3])
    u = random_linear_forms(R, 1, 7)[0]
    for m in range(5):
        assert colon_span(J, u, m).contains_span(J.span(m))


# -- linear forms ----------------------------------------------------------------------------


def test_random_linear_forms_contract():
    R = PolyRing(4)
    assert random_linear_forms(PolyRing(3), 0, 1) == []
    a = random_linear_forms(R, 4, 42)
    b = random_linear_forms(R, 4, 42)
    assert [f.to_dict() for f in a] == [f.to_dict() for f in b]
    coeffs = [f.linear_coefficients() for f in a]
    assert oracles.rank_mod_p(coeffs, P) == 4
    assert all(not f.is_zero() for f in a)
    with pytest.raises(BadParameters):
        random_linear_forms(R, 5, 1)


def test_linear_section_is_quotient_by_forms():
    J = stanley_reisner_ideal(cross_polytope_boundary(3))
    forms = random_linear_forms(J.ring, 2, make_rng(3))
    sec = LinearSection(J.ring, forms)
    big = J.plus(forms)
    small = sec.map_ideal(J)
    assert sec.target.n == 4
    assert small.hilbert_function(5).window(0, 5) == big.hilbert_function(5).window(0, 5)
    for f in forms:
        assert sec.map(f).is_zero()


# -- polynomials and serialization ----------------------------------------------------------


def test_poly_arithmetic():
    R = PolyRing(2, 7)
    x, y = R.var(0), R.var(1)
    assert ((x + y) ** 7) == x ** 7 + y ** 7  # Frobenius in characteristic 7
    assert (x - x).is_zero()
    with pytest.raises(BadParameters):
        x + x * y


def test_ideal_json_round_trip():
    R = PolyRing(3)
    x, y, z = (R.var(i) for i in range(3))
    J = GradedIdeal(R, [x * x - y * z.scale(P - 3), z ** 3])
    K = GradedIdeal.from_json(J.to_json())
    assert [g.to_dict() for g in K.generators] == [g.to_dict() for g in J.generators]
    doc = json.loads(J.to_json())
    assert set(doc) >= {"n", "generators"}


@pytest.mark.parametrize("doc", [{"generators": []}, {"n": 2, "generators": [{"degree": 3, "terms": [[[1, 1], 1]]}]},
                                 {"n": 2, "generators": [{"terms": [[[1], 1]]}]}])
def test_ideal_json_rejects_malformed(doc):
    with pytest.raises(BadParameters):
        GradedIdeal.from_dict(doc)
