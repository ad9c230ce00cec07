"""Matrices of the sp4 generators in the Gelfand-Tsetlin type basis.

A matrix is computed analytically: apply the operator to each basis
function, reduce modulo the symplectic ideal, take coordinates in the
oracle space and convert them to GT coordinates.  The diagram
transformations attached to f[-1,1] and f[-2,2] are kept as predicted
sparsity patterns and compared with the computed matrices.

Convention.  The substitution operators realize f[i,j] as a homomorphism,
so rho(x) is used as is (``FROZEN_SIGN = 1``); ``determine_sign`` recovers
this bit from the four-dimensional representation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .diagrams import GTDiagram, HighestWeight
from .exact import format_fraction
from .gt import gt_basis
from .ideals import SYMPLECTIC, normal_form
from .linalg import inverse, mat_add, mat_mul, mat_scale, mat_sub, solve, zeros
from .minors import MinorPoly
from .operators import SP4_BASIS, OperatorSpec, apply_operator, f, f_matrix, parse_operator
from .oracle import build_irrep, highest_vector

FROZEN_SIGN = 1

INDICES = (-2, -1, 1, 2)


# ---------------------------------------------------------------------------
# GT coordinates


class GTFrame:
    """Diagrams, basis functions and the change of basis to the oracle space."""

    def __init__(self, w: HighestWeight):
        self.weight = w
        self.diagrams, self.functions = gt_basis(w)
        self.rep = build_irrep(w)
        n = len(self.functions)
        if n != self.rep.dim:
            raise ArithmeticError("GT basis and oracle space differ in dimension")
        cols = [self.rep.coordinates(g) for g in self.functions]
        self.change = [[cols[j][i] for j in range(n)] for i in range(n)]
        self.change_inv = inverse(self.change) if n else []
        self.index = {d: k for k, d in enumerate(self.diagrams)}

    @property
    def dim(self) -> int:
        return len(self.functions)

    def coordinates(self, p: MinorPoly):
        c = self.rep.coordinates(normal_form(p, SYMPLECTIC))
        return [sum((row[k] * c[k] for k in range(self.dim) if c[k]), Fraction(0)) for row in self.change_inv]


_FRAMES = {}


def gt_frame(w: HighestWeight) -> GTFrame:
    key = w.key()
    if key not in _FRAMES:
        _FRAMES[key] = GTFrame(w)
    return _FRAMES[key]


# ---------------------------------------------------------------------------
# predicted transitions


def _flip_up(d):
    # sigma=0, k1 -> sigma=1, k1+1 ; sigma=1, k1 -> sigma=0, k1
    return d.replace(sigma=1, k1=d.k1 + 1) if d.sigma == 0 else d.replace(sigma=0)


def _flip_down(d):
    # sigma=1, k1 -> sigma=0, k1-1 ; sigma=0, k1 -> sigma=1, k1
    return d.replace(sigma=0, k1=d.k1 - 1) if d.sigma == 1 else d.replace(sigma=1)


def _move(**delta):
    flip = delta.pop("flip", None)

    def apply(d):
        kw = {k: getattr(d, k) + v for k, v in delta.items()}
        out = d.replace(**kw)
        if flip == "up":
            out = _flip_up(out)
        elif flip == "down":
            out = _flip_down(out)
        return out

    return apply


ELEMENTARY = {
    "f[-1,1]": (
        _move(s2=1, s1=1),
        _move(s2=1, flip="down"),
        _move(s2=1, s1=1),
        _move(k2=1, s2=1, s1=-1),
    ),
    "f[-2,2]": (
        _move(k1=1, s2=1, s1=1),
        _move(s1=-1, flip="up"),
        _move(k2=1, s2=1, s1=1),
        _move(s2=2, s1=2),
    ),
}

R_SHIFTS = (
    _move(s1=1, flip="up"),
    _move(k2=-1, s2=-2),
    _move(k2=-1, s2=-1, flip="up"),
    _move(s2=-1, flip="down"),
)


def _in_box(d: GTDiagram, bound) -> bool:
    vals = (d.k2, d.k1, d.s2, d.s1)
    return all(-bound <= v.to_fraction() <= bound for v in vals)


def predicted_targets(name: str, d: GTDiagram):
    """Diagrams reachable by one elementary move followed by any r-shifts."""
    if name not in ELEMENTARY:
        return None
    bound = 2 * d.m2.to_fraction() + 4
    seen = set()
    frontier = [mv(d) for mv in ELEMENTARY[name]]
    frontier = [x for x in frontier if _in_box(x, bound)]
    seen.update(frontier)
    while frontier:
        nxt = []
        for x in frontier:
            for mv in R_SHIFTS:
                y = mv(x)
                if y not in seen and _in_box(y, bound):
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return {x for x in seen if x.is_valid()}


def predicted_support(name: str, diagrams):
    """Set of (target, source) index pairs, or None if no prediction exists."""
    index = {d: k for k, d in enumerate(diagrams)}
    if name in ELEMENTARY:
        out = set()
        for j, d in enumerate(diagrams):
            for t in predicted_targets(name, d):
                if t in index:
                    out.add((index[t], j))
        return out
    if name in ("f[1,-2]", "f[-2,1]"):
        step = -1 if name == "f[1,-2]" else 1
        out = set()
        for j, d in enumerate(diagrams):
            t = d.replace(s1=d.s1 + step)
            if t in index:
                out.add((index[t], j))
        return out
    if name in ("f[-2,-2]", "f[-1,-1]", "f[1,1]", "f[2,2]"):
        return {(j, j) for j in range(len(diagrams))}
    return None


# ---------------------------------------------------------------------------
# matrices


@dataclass
class GeneratorMatrix:
    generator: OperatorSpec
    weight: HighestWeight
    diagrams: list
    matrix: list
    predicted_support: set | None = None

    def entries(self):
        return [
            (i, j, x)
            for i, row in enumerate(self.matrix)
            for j, x in enumerate(row)
            if x
        ]

    def unpredicted(self):
        """Nonzero entries outside the predicted pattern."""
        if self.predicted_support is None:
            return []
        return [(i, j, x) for i, j, x in self.entries() if (i, j) not in self.predicted_support]

    def to_json(self):
        out = {
            "generator": self.generator.name,
            "weight": self.weight.to_json(),
            "diagrams": [str(d) for d in self.diagrams],
            "entries": [[i, j, format_fraction(x)] for i, j, x in self.entries()],
        }
        if self.predicted_support is not None:
            out["outside_prediction"] = [
                {"row": str(self.diagrams[i]), "column": str(self.diagrams[j]), "value": format_fraction(x)}
                for i, j, x in self.unpredicted()
            ]
        return out


_MATRICES = {}


def generator_matrix(w: HighestWeight, g) -> GeneratorMatrix:
    if isinstance(g, tuple):
        g = f(*g)
    key = (w.key(), g)
    if key not in _MATRICES:
        frame = gt_frame(w)
        n = frame.dim
        cols = [frame.coordinates(apply_operator(g, p)) for p in frame.functions]
        _MATRICES[key] = [[cols[j][i] * FROZEN_SIGN for j in range(n)] for i in range(n)]
    frame = gt_frame(w)
    mat = [list(row) for row in _MATRICES[key]]
    return GeneratorMatrix(g, w, frame.diagrams, mat, predicted_support(g.name, frame.diagrams))


def _all_matrices(w: HighestWeight):
    return {ij: generator_matrix(w, ij).matrix for ij in SP4_BASIS}


# ---------------------------------------------------------------------------
# Lie brackets in the defining representation


def _bracket4(x, y):
    return mat_sub(mat_mul(x, y), mat_mul(y, x))


def _decompose(m):
    """Coordinates of a 4x4 matrix on SP4_BASIS (None if outside the span)."""
    cols = [[Fraction(v) for row in f_matrix(*ij) for v in row] for ij in SP4_BASIS]
    rows = [[cols[k][e] for k in range(len(cols))] for e in range(16)]
    res = solve(rows, [Fraction(v) for row in m for v in row])
    return None if res is None else res[0]


def structure_constants():
    """{(x, y): coordinates of [x, y] on SP4_BASIS} for the 45 unordered pairs."""
    out = {}
    for x, y in combinations(SP4_BASIS, 2):
        br = _bracket4([list(map(Fraction, r)) for r in f_matrix(*x)], [list(map(Fraction, r)) for r in f_matrix(*y)])
        coords = _decompose(br)
        if coords is None:
            raise ArithmeticError("bracket left the algebra")
        out[(x, y)] = coords
    return out


def _combination(mats, coords, n):
    acc = zeros(n)
    for ij, c in zip(SP4_BASIS, coords):
        if c:
            acc = mat_add(acc, mat_scale(mats[ij], c))
    return acc


def commutator_failures(mats, n, sign=1):
    """Pairs whose bracket is not represented, with rho replaced by sign * rho."""
    bad = []
    for (x, y), coords in structure_constants().items():
        lhs = _bracket4([[sign * v for v in r] for r in mats[x]], [[sign * v for v in r] for r in mats[y]])
        rhs = mat_scale(_combination(mats, coords, n), sign)
        if lhs != rhs:
            bad.append((x, y))
    return bad


def determine_sign() -> int:
    """The sign making rho a homomorphism on the four-dimensional representation."""
    w = HighestWeight.parse("1/2,1/2")
    mats = _all_matrices(w)
    for sign in (1, -1):
        if not commutator_failures(mats, 4, sign):
            return sign
    raise ArithmeticError("neither sign closes the brackets")


# ---------------------------------------------------------------------------
# Cartan eigenvalues


def _is_diagonal(m) -> bool:
    return all(not x for i, row in enumerate(m) for j, x in enumerate(row) if i != j)


def printed_cartan(d: GTDiagram):
    """(lambda[-2], lambda[-1]) as given by the closed formulas."""
    lam2 = d.sigma + 2 * (d.k2 + d.k1).to_fraction() - (d.m2 + d.m1).to_fraction() - d.s2.to_fraction()
    return (lam2, d.s1.to_fraction())


def measured_cartan_formula(d: GTDiagram):
    """Eigenvalues of 1/2(f[-2,-2]+f[-1,-1]) and 1/2(f[-2,-2]-f[-1,-1]) on the basis."""
    second = 2 * (d.k2 + d.k1).to_fraction() - (d.m2 + d.m1).to_fraction() - d.s2.to_fraction() - d.sigma
    return (d.s1.to_fraction(), second)


# naming: which printed value goes with the sum element; signs for each slot
CONVENTIONS = tuple((swap, e1, e2) for swap in (False, True) for e1 in (1, -1) for e2 in (1, -1))


def _apply_convention(pair, conv):
    swap, e1, e2 = conv
    a, b = pair
    if swap:
        a, b = b, a
    return (e1 * a, e2 * b)


@dataclass
class EigenReport:
    weight: HighestWeight
    diagonal: bool
    cartan_values: list  # per diagram (sum element, difference element)
    per_diagram_match: dict = field(default_factory=dict)
    multiset_match: dict = field(default_factory=dict)
    measured_formula_holds: bool = False

    def matching_conventions(self, per_diagram=False):
        table = self.per_diagram_match if per_diagram else self.multiset_match
        return [c for c, ok in table.items() if ok]

    def to_json(self):
        return {
            "weight": self.weight.to_json(),
            "diagonal": self.diagonal,
            "cartan_values": [[format_fraction(a), format_fraction(b)] for a, b in self.cartan_values],
            "measured_formula_holds": self.measured_formula_holds,
            "conventions_matching_multiset": [list(c) for c in self.matching_conventions()],
            "conventions_matching_per_diagram": [list(c) for c in self.matching_conventions(True)],
        }


def eigen_report(w: HighestWeight) -> EigenReport:
    frame = gt_frame(w)
    a = generator_matrix(w, (-2, -2)).matrix
    b = generator_matrix(w, (-1, -1)).matrix
    plus = mat_scale(mat_add(a, b), Fraction(1, 2))
    minus = mat_scale(mat_sub(a, b), Fraction(1, 2))
    diag = _is_diagonal(plus) and _is_diagonal(minus)
    values = [(plus[k][k], minus[k][k]) for k in range(frame.dim)]
    printed = [printed_cartan(d) for d in frame.diagrams]
    per, multi = {}, {}
    for conv in CONVENTIONS:
        mapped = [_apply_convention(p, conv) for p in printed]
        per[conv] = diag and mapped == values
        multi[conv] = diag and Counter(mapped) == Counter(values)
    holds = diag and all(measured_cartan_formula(d) == v for d, v in zip(frame.diagrams, values))
    return EigenReport(w, diag, values, per, multi, holds)


# the convention under which the closed formulas name the two Cartan elements:
# lambda[-1] belongs to the sum element, lambda[-2] to the difference element
FROZEN_CARTAN_CONVENTION = (True, 1, 1)


# ---------------------------------------------------------------------------
# ladders


def ladder_report(w: HighestWeight):
    """Measured ladder coefficients of f[1,-2] and f[-2,1] against both formulas."""
    frame = gt_frame(w)
    lower = generator_matrix(w, (1, -2)).matrix
    upper = generator_matrix(w, (-2, 1)).matrix
    rows = []
    ok_lower = True
    ok_upper_derived = True
    ok_upper_printed = True
    for j, d in enumerate(frame.diagrams):
        s2, s1 = d.s2.to_fraction(), d.s1.to_fraction()
        for step, mat in ((-1, lower), (1, upper)):
            t = d.replace(s1=d.s1 + step)
            i = frame.index.get(t)
            col = [mat[r][j] for r in range(frame.dim)]
            measured = col[i] if i is not None else Fraction(0)
            off_target = any(x for r, x in enumerate(col) if r != i)
            if step == -1:
                expect = s2 - s1 + 1 if i is not None else Fraction(0)
                ok_lower &= measured == expect and not off_target
                rows.append({"generator": "f[1,-2]", "source": str(d), "measured": format_fraction(measured),
                             "formula": format_fraction(expect)})
            else:
                derived = s2 + s1 + 1 if i is not None else Fraction(0)
                printed = s2 - s1 + 1 if i is not None else Fraction(0)
                ok_upper_derived &= measured == derived and not off_target
                ok_upper_printed &= measured == printed and not off_target
                rows.append({"generator": "f[-2,1]", "source": str(d), "measured": format_fraction(measured),
                             "derived": format_fraction(derived), "printed": format_fraction(printed)})
    return {
        "weight": w.to_json(),
        "lowering_matches": ok_lower,
        "raising_matches_derived": ok_upper_derived,
        "raising_matches_printed": ok_upper_printed,
        "entries": rows,
    }


# ---------------------------------------------------------------------------
# Casimir


ALL_PAIRS = tuple((i, j) for i in INDICES for j in INDICES)


def casimir_scalar(w: HighestWeight) -> Fraction:
    """sum over all 16 ordered (i, j) of rho(f[i,j]) rho(f[j,i]), as a scalar."""
    frame = gt_frame(w)
    n = frame.dim
    if n == 0:
        raise ValueError("empty representation")
    mats = {ij: generator_matrix(w, ij).matrix for ij in ALL_PAIRS}
    acc = zeros(n)
    for i, j in ALL_PAIRS:
        acc = mat_add(acc, mat_mul(mats[(i, j)], mats[(j, i)]))
    c = acc[0][0]
    for a in range(n):
        for b in range(n):
            if acc[a][b] != (c if a == b else 0):
                raise ArithmeticError("Casimir element is not scalar")
    return c


def casimir_on_highest_vector(w: HighestWeight) -> Fraction:
    """The same sum applied as operators to the highest vector alone."""
    hv = normal_form(highest_vector(w), SYMPLECTIC)
    acc = MinorPoly.zero()
    for i, j in ALL_PAIRS:
        acc = acc + apply_operator(f(i, j), apply_operator(f(j, i), hv))
    acc = normal_form(acc, SYMPLECTIC)
    c = acc.is_scalar_multiple_of(hv)
    if c is None:
        raise ArithmeticError("highest vector is not an eigenvector of the Casimir sum")
    return c


def casimir_formula(w: HighestWeight) -> Fraction:
    """<lambda, lambda + 2 rho> in the normalization of the 16-term sum."""
    a, b = w.sp4_weight()
    a, b = Fraction(a), Fraction(b)
    # 16-term sum = 2 * sum_i x_i (x_i + 2 rho_i) with rho = (2, 1) in these coordinates
    return 2 * (a * (a + 4) + b * (b + 2))


# ---------------------------------------------------------------------------
# suite


@dataclass
class LieReport:
    weight: HighestWeight
    sign: int
    commutator_failures: list
    eigen: EigenReport
    ladder: dict
    support: dict
    casimir: Fraction | None
    casimir_hv: Fraction | None

    @property
    def passed(self) -> bool:
        return (
            not self.commutator_failures
            and self.eigen.diagonal
            and self.eigen.measured_formula_holds
            and self.ladder["lowering_matches"]
            and self.ladder["raising_matches_derived"]
            and self.casimir is not None
            and self.casimir == self.casimir_hv
        )

    def to_json(self):
        return {
            "weight": self.weight.to_json(),
            "passed": self.passed,
            "sign": self.sign,
            "commutator_failures": [[list(x), list(y)] for x, y in self.commutator_failures],
            "cartan": self.eigen.to_json(),
            "ladder": self.ladder,
            "support": self.support,
            "casimir": None if self.casimir is None else format_fraction(self.casimir),
            "casimir_highest_vector": None if self.casimir_hv is None else format_fraction(self.casimir_hv),
        }


def verify_lie_suite(w: HighestWeight) -> LieReport:
    frame = gt_frame(w)
    n = frame.dim
    mats = _all_matrices(w)
    fails = commutator_failures(mats, n, FROZEN_SIGN)
    support = {}
    for name in ("f[-1,1]", "f[-2,2]"):
        g = generator_matrix(w, parse_operator(name))
        support[name] = {
            "nonzero": len(g.entries()),
            "outside_prediction": g.to_json()["outside_prediction"],
        }
    try:
        cas = casimir_scalar(w)
    except ArithmeticError:
        cas = None
    try:
        cas_hv = casimir_on_highest_vector(w)
    except ArithmeticError:
        cas_hv = None
    return LieReport(w, FROZEN_SIGN, fails, eigen_report(w), ladder_report(w), support, cas, cas_hv)
