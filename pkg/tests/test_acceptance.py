"""The ten acceptance criteria, run exactly as stated.

Each test prints one PASS/FAIL line when it finishes; the lines are
repeated in the terminal summary.
"""

import time

import pytest

from conftest import ACCEPTANCE_LINES
from sp4gt.action import FROZEN_SIGN, structure_constants, verify_lie_suite
from sp4gt.diagrams import HighestWeight, enumerate_diagrams, enumerate_labels, weights_up_to, weyl_dim
from sp4gt.gamma import gkz_verify
from sp4gt.gt import bgc_diff, bgc_series, compare_routes, gt_basis, gt_function
from sp4gt.highest import check_h_highest, delta_series, rebase_h_highest, sp4_highest_function
from sp4gt.linalg import rank
from sp4gt.oracle import branching, build_irrep
from sp4gt.verify import suite_covering, suite_principal_lemma

# every weight with m2 <= 2
UP_TO_2 = weights_up_to(2)
# weights up to [2,1] and [3/2,1/2]: everything with m2 <= 2 except [2,2]
UP_TO_21 = [w for w in UP_TO_2 if w != HighestWeight.parse("2,2")]


def report(capsys, n, title, ok, detail=""):
    line = f"criterion {n:>2} {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES[n] = line
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


@pytest.fixture(scope="module")
def lie_reports():
    return {w.key(): verify_lie_suite(w) for w in UP_TO_2}


def test_criterion_01_dimension(capsys):
    start = time.perf_counter()
    weights = weights_up_to("7/2")
    bad = [str(w) for w in weights
           if not len(enumerate_diagrams(w)) == weyl_dim(w) == build_irrep(w, use_cache=False).dim]
    elapsed = time.perf_counter() - start
    ok = len(weights) == 20 and not bad and elapsed < 120
    report(capsys, 1, "dimension coherence", ok, f"{len(weights)} weights, {elapsed:.1f}s, mismatches {bad}")


def _coordinate_rank(w):
    r = build_irrep(w)
    _, funcs = gt_basis(w)
    cols = [r.coordinates(g) for g in funcs]
    return len(cols), r.dim, rank([list(c) for c in cols])


def test_criterion_02_basis(capsys):
    start = time.perf_counter()
    bad = []
    for w in UP_TO_21:
        n, dim, rk = _coordinate_rank(w)
        if not n == dim == rk:
            bad.append(f"{w}: {n} functions, dim {dim}, rank {rk}")
    elapsed = time.perf_counter() - start
    report(capsys, 2, "basis correctness", not bad and elapsed < 300,
           f"{len(UP_TO_21)} weights, {elapsed:.1f}s, failures {bad}")


def test_criterion_03_h_structure(capsys):
    bad_top, bad_branch, pairs = [], [], 0
    for w in UP_TO_2:
        for d in enumerate_diagrams(w):
            if d.depth == 0:
                if not check_h_highest(d.label, gt_function(d)).passed:
                    bad_top.append(str(d))
        br = branching(build_irrep(w))
        for s2 in sorted({l.s2 for l in enumerate_labels(w)}, key=lambda s: s.to_fraction()):
            pairs += 1
            if br.get(s2.to_fraction(), 0) != len(enumerate_labels(w, s2)):
                bad_branch.append(f"{w} s2={s2}")
    ok = not bad_top and not bad_branch
    report(capsys, 3, "h-structure", ok,
           f"{pairs} (weight, s2) pairs, h-highest failures {bad_top}, branching failures {bad_branch}")


def test_criterion_04_lie_closure(capsys, lie_reports):
    assert len(structure_constants()) == 45
    bad = {}
    for w in UP_TO_2:
        rep = lie_reports[w.key()]
        if rep.commutator_failures or not rep.eigen.diagonal or rep.sign != FROZEN_SIGN:
            bad[str(w)] = len(rep.commutator_failures)
    report(capsys, 4, "Lie closure", not bad, f"{len(UP_TO_2)} weights x 45 brackets, failures {bad}")


def test_criterion_05_ladder(capsys, lie_reports):
    lowering, derived, printed = [], [], []
    for w in UP_TO_2:
        lad = lie_reports[w.key()].ladder
        if not lad["lowering_matches"]:
            lowering.append(str(w))
        if not lad["raising_matches_derived"]:
            derived.append(str(w))
        if not lad["raising_matches_printed"]:
            printed.append(str(w))
    ok = not lowering and not derived
    report(capsys, 5, "ladder law", ok,
           f"lowering failures {lowering}, derived raising failures {derived}, "
           f"printed raising formula fails at {printed}")


def test_criterion_06_gkz(capsys):
    count, bad = 0, []
    for w in UP_TO_2:
        families = []
        for l in enumerate_labels(w):
            families += [sp4_highest_function(l), delta_series(l), rebase_h_highest(l)]
        families += [bgc_series(d) for d in enumerate_diagrams(w)]
        for s in families:
            count += 1
            if not gkz_verify(s.bare()).passed:
                bad.append(f"{w} {s.shift}")
    report(capsys, 6, "GKZ", not bad, f"{count} series, failures {bad}")


def test_criterion_07_principal_lemma(capsys):
    pairs, nf_bad, ev_bad, disagreements, applicable = 0, [], [], [], 0
    for w in UP_TO_2:
        rep = suite_principal_lemma(w, samples=20)
        nf, ev, cross = rep.checks
        pairs += nf.detail["pairs"]
        nf_bad += nf.detail["failures"]
        ev_bad += ev.detail["failures"]
        applicable += cross.detail["applicable"]
        disagreements += cross.detail["disagreements"]
    ok = pairs >= 10 and not nf_bad and not ev_bad and not disagreements
    report(capsys, 7, "principal lemma", ok,
           f"{pairs} pairs, normal-form failures {len(nf_bad)}, sample failures {len(ev_bad)}, "
           f"closed-form disagreements {len(disagreements)} of {applicable}")


def test_criterion_08_covering(capsys):
    rep = suite_covering(HighestWeight.parse("0,0"), samples=100)
    checks = {c.name: c for c in rep.checks}
    wanted = ["orthogonal images", "determinant one", "homomorphism", "table identities (squared form)"]
    ok = all(checks[n].passed for n in wanted) and checks["homomorphism"].detail["pairs"] == 50
    report(capsys, 8, "covering fidelity", ok,
           ", ".join(f"{n}: {checks[n].passed}" for n in wanted))


def test_criterion_09_dual_route(capsys):
    bad, count = [], 0
    for w in UP_TO_21:
        for d in enumerate_diagrams(w):
            count += 1
            if not compare_routes(d).agree:
                bad.append(str(d))
    diff = bgc_diff()
    emitted = len(diff["generators"]) == 6 and bool(diff["slots"])
    statuses = {g["generator"]: g["status"] for g in diff["generators"]}
    report(capsys, 9, "dual-route agreement", not bad and emitted,
           f"{count} diagrams, disagreements {bad}, frozen vs printed {statuses}, slots {diff['slots']}")


def test_criterion_10_casimir(capsys, lie_reports):
    bad = {}
    for w in UP_TO_2:
        rep = lie_reports[w.key()]
        if rep.casimir is None or rep.casimir != rep.casimir_hv:
            bad[str(w)] = (rep.casimir, rep.casimir_hv)
    values = {str(w): str(lie_reports[w.key()].casimir) for w in UP_TO_2}
    report(capsys, 10, "Casimir", not bad, f"values {values}")
