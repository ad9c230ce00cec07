"""Minor times Gamma-series expansions."""

from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from sp4gt.diagrams import HighestWeight, HWLabel
from sp4gt.gamma import GammaSeries, Lattice
from sp4gt.group import eval_assignment, sample_set
from sp4gt.highest import B2_SLOT_NAMES, V0, V1, delta_series, delta_vector
from sp4gt.ideals import PLUCKER, normal_form
from sp4gt.lemma import (
    CrossCheck,
    HypothesisError,
    InconsistentExpansion,
    NotApplicable,
    associated_shifts,
    aux_sum,
    coeff_cs_closed_form,
    coeff_cs_crosscheck,
    expansion_residual,
    multiply_minor,
    verify_expansion,
)
from sp4gt.minors import bpoly
from sp4gt.verify import LEMMA_MINORS, lemma_pairs

SUB = Lattice([V1], B2_SLOT_NAMES)
B2 = Lattice([V0, V1], B2_SLOT_NAMES)
EMPTY = Lattice([], B2_SLOT_NAMES)
SAMPLES = sample_set(20, seed=31)


def test_empty_lattice_gives_single_term():
    s = GammaSeries(EMPTY, (1, 0, 2, 0, 0, 1))
    for X in ("b[-2]", "b[2,-1]", "b[-2,1]"):
        e = multiply_minor(s, X)
        assert e.terms == {(): 1}
        assert verify_expansion(s, X, e)


def test_single_point_series_times_free_minor():
    s = GammaSeries(SUB, (1, 0, 0, 0, 0, 0))
    assert len(s.support) == 1
    e = multiply_minor(s, "b[-2]")
    assert e.terms == {(0,): 1}


def test_delta_series_for_1_1():
    s = delta_series(HWLabel(0, 1, 1, 1, 1, 1)).bare()
    e = multiply_minor(s, "b[2,-1]")
    assert e.unique and e.terms == {(0,): 1}
    assert verify_expansion(s, "b[2,-1]", e)
    assert e.to_json() == {"base_shift": [0, 0, 0, 0, 0, 0, 0, 1], "coeffs": [{"s": [0], "c": "1"}]}


def test_two_term_expansion_by_hand():
    """-b[-1] b[1] b[-2,1] = 2 F_base - F_(base+r), checked through the flag relation."""
    s = GammaSeries(SUB, delta_vector(HWLabel(0, 1, 1, 1, 0, 0)))
    assert s.expand() == -bpoly("b[-1]") * bpoly("b[1]")
    e = multiply_minor(s, "b[-2,1]")
    assert e.terms == {(0,): 2, (1,): -1}
    assert e.shifts[0].r_vector == (-1, 0, 0, -1, 1, 0, 1)
    base = e.series((0,)).expand()
    assert base == -bpoly("b[-2,1]") * bpoly("b[-1]") * bpoly("b[1]") + bpoly("b[-2,-1]") * bpoly("b[1]") ** 2 * Fraction(1, 2)
    assert e.series((1,)).expand() == -bpoly("b[1]") * bpoly("b[-2]") * bpoly("b[-1,1]")


def test_closed_form_disagrees_on_the_hand_example():
    s = GammaSeries(SUB, delta_vector(HWLabel(0, 1, 1, 1, 0, 0)))
    c0 = coeff_cs_crosscheck(s.shift, SUB, "b[-2,1]", 0)
    c1 = coeff_cs_crosscheck(s.shift, SUB, "b[-2,1]", 1)
    assert (c0.solved, c0.closed_form) == (2, Fraction(2, 3))
    assert (c1.solved, c1.closed_form) == (-1, Fraction(-5, 6))
    assert c0.applicable and not c0.agrees


def test_factorial_factor_for_repeated_slot():
    # b[-2] already has exponent 1, so b[-2] * z^g/g! = 2 * z^(g+e)/(g+e)!
    s = GammaSeries(SUB, (0, 1, 1, 0, 1, 0))
    e = multiply_minor(s, "b[-2]")
    assert e.terms == {(0,): 2}
    assert verify_expansion(s, "b[-2]", e)


def test_closed_form_not_applicable():
    assert coeff_cs_closed_form((-5, -5, 0, 0, 0, 0), SUB, "b[-2,-1]", 0) is NotApplicable
    assert coeff_cs_closed_form((0,) * 6, B2, "b[-2,-1]", 0) is NotApplicable
    assert not NotApplicable


def test_aux_sum_small():
    # v = (1,-1): t ranges over 0..1 for gamma (0,1)
    assert aux_sum((0, 1), (1, -1), 0) == 2
    assert aux_sum((0, 1), (1, -1), 1) == 1 + 2
    with pytest.raises(ValueError):
        aux_sum((0, 0), (1, 1), 0)


def test_r_vector_orientation():
    _, shifts = associated_shifts(SUB)
    (r,) = shifts
    plus, minus, third = r.relation
    assert [r.r_vector[i] for i in plus] == [-1, -1]
    assert all(r.r_vector[i] == 1 for i in third)
    assert all(r.r_vector[i] == 0 for i in minus)


def test_hypothesis_errors():
    s = GammaSeries(B2, (1, 1, 1, 1, 1, 1))
    with pytest.raises(HypothesisError):
        multiply_minor(s, "b[-2]")
    with pytest.raises(HypothesisError):
        associated_shifts(B2, strict=True)


def test_inconsistent_expansion_is_reported():
    # X on the minus side of a single-point series
    s = GammaSeries(SUB, (0, 0, 1, 0, 0, 0))
    assert len(s.support) == 1
    with pytest.raises(InconsistentExpansion):
        multiply_minor(s, "b[-2,1]")


# ---------------------------------------------------------------------------
# invariants over all downstream pairs


@pytest.mark.parametrize("w", ["1,0", "1,1", "3/2,1/2", "2,1", "2,2"])
def test_downstream_pairs(w):
    pairs, _ = lemma_pairs(HighestWeight.parse(w))
    assert len(pairs) >= 10
    for name, s, X, e in pairs:
        res = expansion_residual(s, X, e)
        assert normal_form(res, PLUCKER).is_zero(), (name, X)
        for g in SAMPLES:
            assert eval_assignment(res, g) == 0


@given(
    st.lists(st.integers(-1, 2), min_size=6, max_size=6),
    st.sampled_from(LEMMA_MINORS),
    st.booleans(),
)
def test_random_expansions_hold(shift, X, full):
    lat = B2 if full else SUB
    s = GammaSeries(lat, shift)
    try:
        e = multiply_minor(s, X)
    except (HypothesisError, InconsistentExpansion):
        assume(False)
    assert verify_expansion(s, X, e)
    res = expansion_residual(s, X, e)
    assert all(eval_assignment(res, g) == 0 for g in SAMPLES[:3])
