"""Verification suites.

Each suite runs the invariant checks of one part of the package for one
highest weight and returns a ``SuiteReport``.  The command line and the
acceptance tests call these functions; no check lives anywhere else.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .diagrams import HighestWeight, enumerate_diagrams, enumerate_labels, weyl_dim
from .exact import QSqrt2, format_fraction
from .gamma import GammaSeries, Lattice, enumerate_support, gkz_verify, naive_support
from .group import (
    antidiagonal_form,
    covering_map,
    determinant,
    eval_assignment,
    eval_on,
    identity,
    matmul,
    random_matrix,
    random_symplectic,
    sample_set,
    transpose,
)
from .gt import BGC_FROZEN, bgc_diff, bgc_series, compare_routes, gt_basis, satisfies_selection_rule
from .highest import (
    B2_SLOT_NAMES,
    V1,
    check_h_highest,
    delta_series,
    omega_vector,
    delta_vector,
    rebase_h_highest,
    so5_highest_function,
    sp4_highest_function,
)
from .ideals import PLUCKER, SYMPLECTIC, generators, normal_form, theta
from .lemma import (
    HypothesisError,
    InconsistentExpansion,
    NotApplicable,
    coeff_cs_crosscheck,
    expansion_residual,
    multiply_minor,
)
from .minors import B_ALPHABET, MinorPoly
from .oracle import branching, build_irrep
from .tables import ALL_ENTRIES

DEFAULT_SEED = 20240601
SUITES = ("gkz", "plucker", "basis", "lie", "principal-lemma", "covering")


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self):
        out = {"name": self.name, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class SuiteReport:
    suite: str
    weight: HighestWeight
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, passed, **detail):
        self.checks.append(Check(name, bool(passed), detail))

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_json(self):
        return {
            "suite": self.suite,
            "weight": self.weight.to_json(),
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


# ---------------------------------------------------------------------------


def _support_agrees(series: GammaSeries) -> bool:
    """Compare the support with a box scan over generator coordinates.

    Low-rank lattices are scanned in a box wide enough to catch every
    point, so the sets must coincide.  For higher ranks the scan is kept
    small; it must land inside the enumerated support, and every
    enumerated point must be admissible.
    """
    found = sorted(enumerate_support(series.lattice, series.shift))
    if series.lattice.rank <= 2:
        radius = max([abs(x) for x in series.shift] + [0]) + 2
        return found == sorted(naive_support(series.lattice, series.shift, radius))
    admissible = all(all(a + b >= 0 for a, b in zip(series.shift, v)) for v in found)
    return admissible and set(naive_support(series.lattice, series.shift, 2)) <= set(found)


def suite_gkz(w: HighestWeight, seed: int = DEFAULT_SEED, samples: int = 20) -> SuiteReport:
    rep = SuiteReport("gkz", w)
    families = []
    for l in enumerate_labels(w):
        families.append((f"transfer {l}", sp4_highest_function(l)))
        families.append((f"delta {l}", delta_series(l)))
        families.append((f"omega {l}", rebase_h_highest(l)))
    for d in enumerate_diagrams(w):
        families.append((f"eleven-slot {d}", bgc_series(d)))
    bad_gkz, bad_support = [], []
    for name, s in families:
        if not gkz_verify(s.bare()).passed:
            bad_gkz.append(name)
        if not _support_agrees(s):
            bad_support.append(name)
    rep.add("gkz equations", not bad_gkz, series=len(families), failures=bad_gkz)
    rep.add("support matches box scan", not bad_support, failures=bad_support)
    bad_sel = [str(d) for d in enumerate_diagrams(w) if not satisfies_selection_rule(bgc_series(d).shift)]
    rep.add("selection rule", not bad_sel, failures=bad_sel)
    return rep


# ---------------------------------------------------------------------------


def _random_poly(rng: random.Random, terms=3, degree=3):
    syms = [s for s in B_ALPHABET.symbols if s.primes == 0]
    p = MinorPoly.zero()
    for _ in range(terms):
        m = MinorPoly.constant(Fraction(rng.randint(-3, 3), rng.randint(1, 2)))
        for _ in range(rng.randint(1, degree)):
            m = m * MinorPoly.symbol(rng.choice(syms))
        p = p + m
    return p


def suite_plucker(w: HighestWeight, seed: int = DEFAULT_SEED, samples: int = 20) -> SuiteReport:
    rep = SuiteReport("plucker", w)
    rng = random.Random(seed)
    gens = generators(PLUCKER)
    rep.add("relations reduce to zero", all(normal_form(g, PLUCKER).is_zero() for g in gens))
    rep.add("theta reduces to zero modulo the symplectic ideal", normal_form(theta(), SYMPLECTIC).is_zero())
    mats = [random_matrix(seed + k) for k in range(samples)]
    rep.add(
        "relations vanish on random 4x4 matrices",
        all(eval_on(g, M) == 0 for g in gens for M in mats),
        matrices=len(mats),
    )
    group = sample_set(samples, seed)
    rep.add("theta vanishes on Sp(4) samples", all(eval_assignment(theta(), s) == 0 for s in group))
    idem = mult = vanish = True
    for _ in range(samples):
        g, h = _random_poly(rng), _random_poly(rng)
        ng, nh = normal_form(g, SYMPLECTIC), normal_form(h, SYMPLECTIC)
        idem &= normal_form(ng, SYMPLECTIC) == ng
        mult &= normal_form(g * h, SYMPLECTIC) == normal_form(ng * nh, SYMPLECTIC)
        s = group[rng.randrange(len(group))]
        vanish &= eval_assignment(ng - g, s) == 0
    rep.add("normal form idempotent", idem)
    rep.add("normal form multiplicative", mult)
    rep.add("reduction is invisible on the group", vanish)
    # functions of this weight: raw and reduced forms agree on samples
    ok = True
    for l in enumerate_labels(w):
        raw = sp4_highest_function(l).expand()
        red = normal_form(raw, SYMPLECTIC)
        ok &= all(eval_assignment(raw - red, s) == 0 for s in group[:5])
    rep.add("highest functions agree with their normal forms on samples", ok)
    return rep


# ---------------------------------------------------------------------------


def _so5_transfer_scalar(l, group):
    """Scalar c with so5 function = c * sp4 function on all samples (None if none)."""
    a_poly = so5_highest_function(l)
    b_poly = sp4_highest_function(l).expand()
    ratio = None
    for s in group:
        av = eval_assignment(a_poly, s)
        bv = eval_assignment(b_poly, s)
        if bv == 0:
            if av != QSqrt2(0):
                return None
            continue
        r = av / QSqrt2(bv)
        if ratio is None:
            ratio = r
        elif r != ratio:
            return None
    return ratio


def suite_basis(w: HighestWeight, seed: int = DEFAULT_SEED, samples: int = 20) -> SuiteReport:
    rep = SuiteReport("basis", w)
    diagrams = enumerate_diagrams(w)
    r = build_irrep(w)
    dim = weyl_dim(w)
    rep.add("dimension", len(diagrams) == dim == r.dim, diagrams=len(diagrams), weyl=dim, oracle=r.dim)
    try:
        _, funcs = gt_basis(w)
        spans = all(r.contains(g) for g in funcs)
        rep.add("basis independent and spanning", spans and len(funcs) == r.dim)
    except ArithmeticError as exc:
        rep.add("basis independent and spanning", False, error=str(exc))
    routes = [compare_routes(d) for d in diagrams]
    rep.add(
        "operator and Gamma routes agree",
        all(c.agree for c in routes),
        disagreements=[str(c.diagram) for c in routes if not c.agree],
        scalars=sorted({format_fraction(c.scalar) for c in routes if c.agree}),
    )
    rep.add("eleven-slot generators", True, frozen_vs_printed=bgc_diff())
    hh = []
    for l in enumerate_labels(w):
        chk = check_h_highest(l, sp4_highest_function(l).expand())
        if not chk.passed:
            hh.append(str(l))
    rep.add("p=0 functions are h-highest with eigenvalue 2 s2", not hh, failures=hh)
    br = branching(r)
    counts = {}
    for l in enumerate_labels(w):
        key = l.s2.to_fraction()
        counts[key] = counts.get(key, 0) + 1
    rep.add(
        "branching equals label count",
        br == counts,
        measured={format_fraction(k): v for k, v in sorted(br.items())},
        labels={format_fraction(k): v for k, v in sorted(counts.items())},
    )
    rep.add("branching sums to dimension", sum((2 * k + 1) * v for k, v in br.items()) == dim)
    if w.is_integer:
        group = sample_set(min(samples, 20), seed)
        bad = []
        for l in enumerate_labels(w):
            c = _so5_transfer_scalar(l, group)
            if c is None or c == QSqrt2(0):
                bad.append(str(l))
        rep.add("so5 functions pull back to the sp4 functions", not bad, failures=bad)
    return rep


# ---------------------------------------------------------------------------


def suite_lie(w: HighestWeight, seed: int = DEFAULT_SEED, samples: int = 20) -> SuiteReport:
    from .action import verify_lie_suite

    rep = SuiteReport("lie", w)
    lie = verify_lie_suite(w)
    data = lie.to_json()
    rep.add("commutators", not lie.commutator_failures, failures=data["commutator_failures"])
    rep.add("cartan diagonal", lie.eigen.diagonal)
    rep.add("cartan eigenvalues follow the measured formula", lie.eigen.measured_formula_holds, report=data["cartan"])
    rep.add("lowering ladder s2-s1+1", data["ladder"]["lowering_matches"])
    rep.add(
        "raising ladder s2+s1+1",
        data["ladder"]["raising_matches_derived"],
        printed_formula_matches=data["ladder"]["raising_matches_printed"],
    )
    rep.add("casimir scalar equals highest-vector value", lie.casimir is not None and lie.casimir == lie.casimir_hv,
            value=data["casimir"])
    rep.add("support report", True, **data["support"])
    return rep


# ---------------------------------------------------------------------------

LEMMA_MINORS = ("b[-2,-1]", "b[-2,1]", "b[-1]", "b[1]", "b[-2]", "b[2]", "b[-1,1]", "b[2,-1]")


def lemma_series(w: HighestWeight):
    """(name, series) pairs over the six-slot lattice and its rank-one sublattice."""
    sub = Lattice([V1], B2_SLOT_NAMES)
    out = []
    for l in enumerate_labels(w):
        seen = set()
        for tag, vec in (("delta", delta_vector(l)), ("omega", omega_vector(l))):
            out.append((f"{tag} {l}", delta_series(l) if tag == "delta" else rebase_h_highest(l)))
            if vec not in seen:
                seen.add(vec)
                out.append((f"rank-one {tag} {l}", GammaSeries(sub, vec)))
    return out


def lemma_pairs(w: HighestWeight):
    """All (name, series, minor, expansion) with an expansion; skipped counts."""
    found, skipped = [], {"hypothesis": 0, "inconsistent": 0}
    for name, s in lemma_series(w):
        for X in LEMMA_MINORS:
            try:
                e = multiply_minor(s, X)
            except HypothesisError:
                skipped["hypothesis"] += 1
                continue
            except InconsistentExpansion:
                skipped["inconsistent"] += 1
                continue
            found.append((name, s, X, e))
    return found, skipped


def check_lemma_pair(s, X, e, group):
    res = expansion_residual(s, X, e)
    nf = normal_form(res, PLUCKER).is_zero()
    ev = all(eval_assignment(res, g) == 0 for g in group)
    cross = []
    if s.lattice.rank == 1:
        for key in sorted(e.terms):
            cc = coeff_cs_crosscheck(s.shift, s.lattice, X, key[0])
            if cc is not NotApplicable:
                cross.append(cc)
    return nf, ev, cross


def suite_principal_lemma(w: HighestWeight, seed: int = DEFAULT_SEED, samples: int = 20) -> SuiteReport:
    rep = SuiteReport("principal-lemma", w)
    group = sample_set(samples, seed)
    pairs, skipped = lemma_pairs(w)
    bad_nf, bad_ev, disagree = [], [], []
    applicable = 0
    multi = 0
    for name, s, X, e in pairs:
        nf, ev, cross = check_lemma_pair(s, X, e, group)
        multi += len(e.terms) > 1
        if not nf:
            bad_nf.append(f"{name} * {X}")
        if not ev:
            bad_ev.append(f"{name} * {X}")
        for cc in cross:
            applicable += 1
            if not cc.agrees:
                disagree.append({"pair": f"{name} * {X}", "s": cc.s, "solved": format_fraction(cc.solved),
                                 "closed_form": format_fraction(cc.closed_form)})
    rep.add("expansion identity in normal form", not bad_nf, pairs=len(pairs), multi_term=multi,
            skipped=skipped, failures=bad_nf)
    rep.add("expansion identity on group samples", not bad_ev, samples=len(group), failures=bad_ev)
    rep.add("closed-form coefficients agree where applicable", not disagree, applicable=applicable,
            disagreements=disagree)
    return rep


# ---------------------------------------------------------------------------


def _is_orthogonal(N) -> bool:
    J = antidiagonal_form(2)
    return matmul(matmul(N, J), transpose(N)) == J


def suite_covering(w: HighestWeight, seed: int = DEFAULT_SEED, samples: int = 20) -> SuiteReport:
    rep = SuiteReport("covering", w)
    group = sample_set(samples, seed)
    rep.add("orthogonal images", all(_is_orthogonal(s.so5_image) for s in group), samples=len(group))
    rep.add("determinant one", all(determinant(s.so5_image) == 1 for s in group))
    rep.add("identity maps to identity", covering_map(identity(4)) == identity(5))
    minus = [[-x for x in row] for row in identity(4)]
    rep.add("minus identity maps to identity", covering_map(minus) == identity(5))
    pairs = max(1, samples // 2)
    hom = True
    for k in range(pairs):
        A = random_symplectic(seed + 2 * k + 1)
        B = random_symplectic(seed + 2 * k + 2)
        hom &= covering_map(matmul(A, B)) == matmul(covering_map(A), covering_map(B))
    rep.add("homomorphism", hom, pairs=pairs)
    exact_bad, square_bad = [], []
    for entry in ALL_ENTRIES:
        a_sym, orient = entry.a_symbol, entry.a_orientation
        b_poly = entry.b_poly()
        c = entry.factor()
        for s in group:
            av = s.a_values[a_sym] * orient
            bv = eval_assignment(b_poly, s)
            if av != c * QSqrt2(bv):
                exact_bad.append(entry.a_name)
                break
            if av * av != c * c * QSqrt2(bv * bv):
                square_bad.append(entry.a_name)
                break
    rep.add("table identities (exact, in Q(sqrt 2))", not exact_bad, failures=exact_bad)
    rep.add("table identities (squared form)", not square_bad, failures=square_bad)
    return rep


SUITE_FUNCTIONS = {
    "gkz": suite_gkz,
    "plucker": suite_plucker,
    "basis": suite_basis,
    "lie": suite_lie,
    "principal-lemma": suite_principal_lemma,
    "covering": suite_covering,
}


def run_suites(w: HighestWeight, suite: str = "all", seed: int = DEFAULT_SEED, samples: int = 20):
    names = SUITES if suite == "all" else (suite,)
    return [SUITE_FUNCTIONS[n](w, seed=seed, samples=samples) for n in names]
