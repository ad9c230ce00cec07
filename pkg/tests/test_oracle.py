"""The brute-force representation oracle."""

import pytest

from sp4gt.diagrams import HighestWeight, enumerate_labels, weights_up_to, weyl_dim
from sp4gt.ideals import SYMPLECTIC, normal_form
from sp4gt.minors import MinorPoly, bpoly
from sp4gt.operators import apply_operator, f
from sp4gt.oracle import (
    LOWERING,
    NotInSpan,
    branching,
    build_irrep,
    expand_in_basis,
    h_highest_subspace,
    highest_vector,
    operator_matrix,
    poly_weight,
)


def W(text):
    return HighestWeight.parse(text)


def test_trivial_rep():
    r = build_irrep(W("0,0"))
    assert r.dim == 1 and r.basis[0] == MinorPoly.constant(1)


def test_spinor_is_the_defining_rep():
    r = build_irrep(W("1/2,1/2"))
    assert r.dim == 4
    for name in ("b[-2]", "b[-1]", "b[1]", "b[2]"):
        assert r.contains(bpoly(name))


def test_vector_rep():
    r = build_irrep(W("1,0"))
    assert r.dim == 5
    assert r.contains(bpoly("b[-2,-1]")) and r.contains(bpoly("b[1,2]"))
    assert not r.contains(bpoly("b[-2]"))


def test_h_highest_examples():
    r = build_irrep(W("1,0"))
    top = h_highest_subspace(r, 1)
    assert len(top) == 1
    assert top[0].is_scalar_multiple_of(bpoly("b[-2,-1]")) is not None
    assert len(h_highest_subspace(r, 0)) == 2
    assert h_highest_subspace(r, 2) == []


def test_coordinates():
    r = build_irrep(W("1,1"))
    for k, p in enumerate(r.basis):
        assert expand_in_basis(p, r) == [int(j == k) for j in range(r.dim)]
    op = f(1, -2)
    M = operator_matrix(r, op)
    for j, p in enumerate(r.basis):
        image = normal_form(apply_operator(op, p), SYMPLECTIC)
        rebuilt = MinorPoly.zero()
        for i in range(r.dim):
            if M[i][j]:
                rebuilt = rebuilt + r.basis[i] * M[i][j]
        assert rebuilt == image
    with pytest.raises(NotInSpan):
        expand_in_basis(MinorPoly.constant(1), build_irrep(W("1,0")))


def test_highest_vector_weight():
    for w in weights_up_to(2):
        hv = highest_vector(w)
        assert poly_weight(hv) == w.sp4_weight()
        for i, j in ((-2, -1), (-2, 1), (-2, 2), (-1, 1)):
            assert normal_form(apply_operator(f(i, j), hv), SYMPLECTIC).is_zero()


@pytest.mark.parametrize("w", weights_up_to(3), ids=str)
def test_dimension_equals_weyl(w):
    assert build_irrep(w).dim == weyl_dim(w)


@pytest.mark.parametrize("w", weights_up_to(2), ids=str)
def test_branching(w):
    br = branching(build_irrep(w))
    assert sum((2 * s + 1) * n for s, n in br.items()) == weyl_dim(w)
    for s, n in br.items():
        assert n == len(enumerate_labels(w, s2=s))


def test_branching_example():
    assert branching(build_irrep(W("1,0"))) == {1: 1, 0: 2}


def test_lowering_list():
    assert set(LOWERING) == {(-1, -2), (1, -2), (2, -2), (1, -1)}
