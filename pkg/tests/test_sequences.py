import pytest
from hypothesis import given, settings, strategies as st

from lefschetz_lab.errors import UnboundedSupport
from lefschetz_lab.sequences import (
    IntSeq,
    delta,
    delta_plus,
    delta_power,
    gamma,
    gamma_power,
    point_mass,
)

HF_TET = IntSeq((1, 4, 10, 20, 34, 52, 74, 100, 130), 0, False)  # k[boundary of tetrahedron], m <= 8


def test_delta_inverts_gamma_on_truncated_hf():
    assert delta(gamma(HF_TET)).values == HF_TET.values


def test_delta_plus_example():
    h = IntSeq((1, 4, 10, 4, 1))
    assert delta_plus(h).window(0, 7) == [1, 3, 6, 0, 0, 0, 0, 0]


def test_gamma_squared_of_point_mass_is_two_variable_ring():
    g = gamma_power(point_mass(0), 2, length=8)
    assert g.window(0, 7) == [m + 1 for m in range(8)]
    assert not g.exact


def test_gamma_rejects_callables():
    with pytest.raises(UnboundedSupport):
        gamma(lambda m: 1)


def test_truncated_values_are_unknown():
    g = gamma(IntSeq((1, 1)))
    with pytest.raises(IndexError):
        g[5]
    assert g[-3] == 0


def test_symmetry_and_unimodality():
    assert IntSeq((1, 3, 3, 1)).is_symmetric()
    assert not IntSeq((1, 3, 2)).is_symmetric()
    assert IntSeq((1, 3, 3, 1)).is_unimodal()
    assert not IntSeq((1, 3, 1, 2)).is_unimodal()


def test_arithmetic_and_shift():
    a, b = IntSeq((1, 2)), IntSeq((0, 1, 1))
    assert (a + b).values == (1, 3, 1)
    assert (a - b).values == (1, 1, -1)
    assert a.shift(2).window(0, 3) == [0, 0, 1, 2]
    assert IntSeq.from_mapping({2: 5, 4: 1}).window(0, 4) == [0, 0, 5, 0, 1]


seqs = st.lists(st.integers(-50, 50), min_size=1, max_size=12)


@settings(max_examples=80, deadline=None)
@given(seqs, st.integers(-3, 3))
def test_delta_gamma_inverse(values, start):
    h = IntSeq(tuple(values), start)
    assert delta(gamma(h)).window(start - 2, h.stop - 1) == h.window(start - 2, h.stop - 1)
    assert gamma(delta(h)).window(start - 2, h.stop - 1) == h.window(start - 2, h.stop - 1)


@settings(max_examples=80, deadline=None)
@given(seqs, st.integers(0, 4))
def test_delta_power_is_iterated_delta(values, q):
    h = IntSeq(tuple(values))
    d = h
    for _ in range(q):
        d = delta(d)
    assert delta_power(h, q) == d


@settings(max_examples=80, deadline=None)
@given(seqs)
def test_delta_plus_is_clipped_delta(values):
    h = IntSeq(tuple(values))
    assert delta_plus(h).values == tuple(max(0, v) for v in delta(h).values)
