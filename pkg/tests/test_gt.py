"""The Gelfand-Tsetlin type basis and its eleven-slot Gamma form."""

import pytest

from sp4gt.diagrams import GTDiagram, HighestWeight, enumerate_diagrams, weights_up_to, weyl_dim
from sp4gt.gamma import gkz_verify
from sp4gt.gt import (
    BGC_FROZEN,
    BGC_PRINTED,
    bgc_diff,
    bgc_omega,
    bgc_series,
    compare_routes,
    gt_basis,
    gt_function,
    lower,
    same_lattice,
    satisfies_selection_rule,
)
from sp4gt.highest import sp4_highest_function
from sp4gt.ideals import SYMPLECTIC, normal_form
from sp4gt.minors import MinorPoly, bpoly
from sp4gt.oracle import build_irrep


def D(text):
    return GTDiagram.parse(text)


def W(text):
    return HighestWeight.parse(text)


def test_gt_function_examples():
    assert gt_function(D("0;1,0;1,0;1,1")) == bpoly("b[-2,-1]")
    want = normal_form(bpoly("b[1,-1]") + bpoly("b[-2,2]"), SYMPLECTIC)
    assert gt_function(D("0;1,0;1,0;1,0")) == want
    assert gt_function(D("0;1,0;1,0;1,-1")) == bpoly("b[1,2]")


def test_invalid_diagram_rejected():
    with pytest.raises(ValueError):
        gt_function(D("1;1,0;1,0;1,1"))


def test_small_bases():
    assert gt_basis(W("0,0"))[1] == [MinorPoly.constant(1)]
    _, funcs = gt_basis(W("1/2,1/2"))
    assert len(funcs) == 4
    assert all(p.total_degree() == 1 for p in funcs)
    assert {next(iter(p.symbols_used())).name for p in funcs} == {"b[-2]", "b[-1]", "b[1]", "b[2]"}


@pytest.mark.parametrize("w", weights_up_to("5/2"), ids=str)
def test_basis_spans_oracle(w):
    diagrams, funcs = gt_basis(w)
    r = build_irrep(w)
    assert len(funcs) == r.dim == weyl_dim(w) == len(diagrams)
    assert all(r.contains(g) for g in funcs)


def test_p0_functions_are_the_transfer_seeds():
    for w in weights_up_to(2):
        for d in enumerate_diagrams(w):
            if d.depth == 0:
                assert gt_function(d) == normal_form(sp4_highest_function(d.label).expand(), SYMPLECTIC)


def test_lowering_past_the_bottom_vanishes():
    d = D("0;1,0;1,0;1,-1")
    seed = sp4_highest_function(d.label).expand()
    assert lower(seed, 3).is_zero()


# ---------------------------------------------------------------------------
# eleven-slot data


def test_omega_formula():
    d = D("1;2,1;2,1;1,0")
    # (0,0,p,0,0,s2-m1-p,k2-s2,2(m1-k1)+sigma,0,2k1-sigma,0)
    assert bgc_omega(d) == (0, 0, 1, 0, 0, -1, 1, 1, 0, 1, 0)
    assert bgc_omega(d, printed_fifth=True) == (0, 0, 1, 0, 0, -1, 1, 1, 0, 3, 0)


@pytest.mark.parametrize("w", weights_up_to(3), ids=str)
def test_eleven_slot_series_gkz_and_selection(w):
    for d in enumerate_diagrams(w):
        s = bgc_series(d)
        assert satisfies_selection_rule(s.shift)
        assert gkz_verify(s.bare()).passed


@pytest.mark.parametrize("w", weights_up_to("5/2"), ids=str)
def test_dual_routes_agree(w):
    for d in enumerate_diagrams(w):
        c = compare_routes(d)
        assert c.agree, str(d)


def test_printed_slot_breaks_agreement():
    bad = [d for d in enumerate_diagrams(W("1,0")) if not compare_routes(d, BGC_PRINTED).agree]
    assert len(bad) == 1
    total = sum(not compare_routes(d, BGC_PRINTED).agree for d in enumerate_diagrams(W("2,1")))
    assert total == 11


def test_generator_diff():
    diff = bgc_diff()
    status = {g["generator"]: g["status"] for g in diff["generators"]}
    assert status == {"v0": "identical", "w0": "identical", "v1": "identical",
                      "v2": "negated", "v3": "different", "v4": "negated"}
    assert diff["slots"] == [{"position": 2, "frozen": "b[1,-1]", "printed": "b[-1,1]"}]
    assert diff["same_lattice"] is True
    assert same_lattice(BGC_FROZEN, BGC_FROZEN)
