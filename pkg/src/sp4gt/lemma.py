"""Multiplying a Gamma-series by a minor.

If a lattice generator has the quadruple form v = e[X1] + e[X2] - e[X3] - e[X4]
and the minors satisfy a three-term relation

    c12 b[X1] b[X2] + c34 b[X3] b[X4] + c56 b[X5] b[X6] = 0,

then modulo the Plücker ideal

    b[X] F_gamma = sum over s >= 0 of C_s F_(gamma + e[X] + s r),

with one shift direction r = e[X5] + e[X6] - e[X1] - e[X2] per such generator.
Generators without an associated relation contribute no direction.

``multiply_minor`` finds the C_s by expanding both sides in normal form and
solving the linear system exactly.  ``coeff_cs_crosscheck`` evaluates the
closed-form ratio of auxiliary sums for rank-one lattices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .exact import MultiIndex, format_fraction, reciprocal_factorial
from .gamma import GammaSeries, Lattice, Slot
from .ideals import PLUCKER, generators, normal_form
from .linalg import solve
from .minors import MinorPoly, MinorSymbol, parse_symbol, specialize_primes


class HypothesisError(ValueError):
    """The lattice does not have the shape the expansion needs."""


class InconsistentExpansion(ArithmeticError):
    """No combination of shifted series reproduces the product."""


class _NotApplicable:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "NotApplicable"

    def __bool__(self):
        return False


NotApplicable = _NotApplicable()


@dataclass(frozen=True)
class RShift:
    alpha: int
    r_vector: MultiIndex
    relation: tuple  # ((X1, X2), (X3, X4), (X5, X6)) as slot indices


@dataclass
class PLExpansion:
    lattice: Lattice
    base_shift: MultiIndex
    prefactor: MinorPoly
    shifts: list
    terms: dict = field(default_factory=dict)  # s tuple -> Fraction
    unique: bool = True

    def series(self, s) -> GammaSeries:
        shift = self.base_shift
        for k, r in zip(s, self.shifts):
            shift = shift + r.r_vector * k
        return GammaSeries(self.lattice, shift, self.prefactor)

    def rhs(self) -> MinorPoly:
        out = MinorPoly.zero(self.prefactor.alphabet)
        for s, c in sorted(self.terms.items()):
            out = out + self.series(s).expand() * c
        return out

    def to_json(self):
        return {
            "base_shift": list(self.base_shift),
            "coeffs": [{"s": list(s), "c": format_fraction(c)} for s, c in sorted(self.terms.items())],
        }


# ---------------------------------------------------------------------------
# relation detection


def _bare(poly: MinorPoly):
    """(sign, unprimed symbol) if poly is +-one symbol, else None."""
    if len(poly.terms) != 1:
        return None
    (m, c), = poly.terms.items()
    if sum(m) != 1 or abs(c) != 1:
        return None
    k = m.index(1)
    return int(c), poly.alphabet.symbols[k].unprimed()


def _relation_table():
    """Each three-term Plücker generator as a list of (coefficient, (sym, sym))."""
    out = []
    for g in generators(PLUCKER):
        terms = []
        for m, c in g.terms.items():
            syms = []
            for k, e in enumerate(m):
                syms.extend([g.alphabet.symbols[k]] * e)
            terms.append((c, tuple(syms)))
        if len(terms) == 3:
            out.append(terms)
    return out


_RELATIONS = _relation_table()


def _quadruple(v):
    plus = [i for i, x in enumerate(v) if x == 1]
    minus = [i for i, x in enumerate(v) if x == -1]
    if len(plus) == 2 and len(minus) == 2 and all(x in (0, 1, -1) for x in v):
        return plus, minus
    return None


def _find_relation(syms, pair_a, pair_b):
    key_a = {syms[pair_a[0]].name, syms[pair_a[1]].name}
    key_b = {syms[pair_b[0]].name, syms[pair_b[1]].name}
    for rel in _RELATIONS:
        names = [{s.name for s in pair} for _, pair in rel]
        if key_a in names and key_b in names:
            rest = [pair for (_, pair), n in zip(rel, names) if n not in (key_a, key_b)]
            if len(rest) == 1:
                return rest[0]
    return None


def associated_shifts(lat: Lattice, strict: bool = False):
    """Relation-carrying generators and the extra slots their r-vectors need.

    Returns (slots, shifts): the slot list extended by any missing minors,
    and one RShift per generator with an associated relation.
    """
    slots = list(lat.symbols)
    bare = [_bare(specialize_primes(s.poly)) for s in slots]
    syms = [b[1] if b else None for b in bare]
    found = []
    for alpha, v in enumerate(lat.generators):
        quad = _quadruple(v)
        if quad is None or any(syms[i] is None for i in quad[0] + quad[1]):
            if strict:
                raise HypothesisError(f"generator {alpha} is not of the form e1+e2-e3-e4 in minors")
            continue
        third = _find_relation(syms, quad[0], quad[1])
        if third is None:
            if strict:
                raise HypothesisError(f"no three-term relation is associated with generator {alpha}")
            continue
        idx56 = []
        for sym in third:
            pos = next((i for i, s in enumerate(syms) if s == sym and i not in idx56), None)
            if pos is None:
                slots.append(Slot.of(sym.name))
                syms.append(sym)
                pos = len(slots) - 1
            idx56.append(pos)
        found.append((alpha, quad, tuple(idx56)))
    n = len(slots)
    shifts = []
    for alpha, (plus, minus), idx56 in found:
        r = [0] * n
        for i in idx56:
            r[i] += 1
        for i in plus:
            r[i] -= 1
        shifts.append(RShift(alpha, MultiIndex(r), (tuple(plus), tuple(minus), idx56)))
    return slots, shifts


def _locate(slots, X):
    """Slot index of the minor X, appending a new slot if needed."""
    if isinstance(X, str):
        sign, sym = parse_symbol(X)
        if sym is None:
            raise ValueError(f"{X!r} is identically zero")
    else:
        sym = X
    exact = MinorPoly.symbol(sym)
    for i, s in enumerate(slots):
        if s.poly == exact or s.poly == -exact:
            return i, slots
    target = sym.unprimed()
    for i, s in enumerate(slots):
        b = _bare(specialize_primes(s.poly))
        if b and b[1] == target:
            return i, slots
    slots = slots + [Slot.of(sym.name)]
    return len(slots) - 1, slots


def _pad(v, n):
    return MultiIndex(tuple(v) + (0,) * (n - len(v)))


# ---------------------------------------------------------------------------
# the expansion


def _vector(p: MinorPoly):
    return normal_form(specialize_primes(p), PLUCKER).terms


def multiply_minor(series: GammaSeries, X, strict: bool = False, max_order: int | None = None) -> PLExpansion:
    """Expand X times series as a combination of r-shifted series."""
    slots, shifts = associated_shifts(series.lattice, strict=strict)
    xi, slots = _locate(slots, X)
    carrying = {r.alpha for r in shifts}
    for alpha, g in enumerate(series.lattice.generators):
        if alpha not in carrying and xi < len(g) and g[xi]:
            raise HypothesisError(f"{X} sits on generator {alpha}, which has no associated relation")
    n = len(slots)
    lat = Lattice([_pad(g, n) for g in series.lattice.generators], slots)
    shifts = [RShift(r.alpha, _pad(r.r_vector, n), r.relation) for r in shifts]
    gamma = _pad(series.shift, n)
    base = gamma + MultiIndex.unit(n, xi)

    xpoly = slots[xi].poly
    lhs_series = GammaSeries(lat, gamma, series.prefactor)
    lhs = _vector(lhs_series.expand() * xpoly)

    degree = sum(base)
    bound = degree if max_order is None else max_order
    candidates = []
    for s in product(range(bound + 1), repeat=len(shifts)):
        shift = base
        for k, r in zip(s, shifts):
            shift = shift + r.r_vector * k
        g = GammaSeries(lat, shift, series.prefactor)
        if g.support:
            candidates.append((s, g))
    # triangular order: lower total shift first
    candidates.sort(key=lambda sg: (sum(sg[0]), sg[0]))
    cols = [_vector(g.expand()) for _, g in candidates]
    keys = sorted(set(lhs).union(*[set(c) for c in cols]))
    if not keys:
        return PLExpansion(lat, base, series.prefactor, shifts, {})
    matrix = [[c.get(k, Fraction(0)) for c in cols] for k in keys]
    rhs = [lhs.get(k, Fraction(0)) for k in keys]
    if not cols:
        raise InconsistentExpansion("no shifted series has nonempty support")
    res = solve(matrix, rhs)
    if res is None:
        raise InconsistentExpansion("the product is not a combination of shifted series")
    x, null = res
    terms = {s: c for (s, _), c in zip(candidates, x) if c}
    return PLExpansion(lat, base, series.prefactor, shifts, terms, unique=not null)


def expansion_residual(series: GammaSeries, X, exp: PLExpansion) -> MinorPoly:
    """X * series - sum C_s F_s, before any reduction (specialized primes)."""
    xi, slots = _locate(list(exp.lattice.symbols), X)
    lhs = series.expand() * slots[xi].poly
    return specialize_primes(lhs - exp.rhs())


def verify_expansion(series: GammaSeries, X, exp: PLExpansion) -> bool:
    return normal_form(expansion_residual(series, X, exp), PLUCKER).is_zero()


# ---------------------------------------------------------------------------
# closed-form coefficients for a single relation-carrying generator


def _pochhammer_weight(t: int, s: int) -> Fraction:
    """(t+1)(t+2)...(t+s)/s!"""
    num = 1
    for j in range(1, s + 1):
        num *= t + j
    return Fraction(num) * reciprocal_factorial(s)


def aux_sum(gamma, v, s: int, t_min=None) -> Fraction:
    """F^s_gamma(1): sum over t of (t+1)...(t+s)/s! / (gamma + t v)!.

    t runs over Z, or over t >= t_min when t_min is given.
    """
    gamma = tuple(gamma)
    lo, hi = None, None
    for g, x in zip(gamma, v):
        if x > 0:
            b = -(g // x)  # smallest t with g + t x >= 0
            lo = b if lo is None else max(lo, b)
        elif x < 0:
            b = g // (-x)
            hi = b if hi is None else min(hi, b)
        elif g < 0:
            return Fraction(0)
    if lo is None or hi is None:
        raise ValueError("auxiliary sum is unbounded")
    if t_min is not None:
        lo = max(lo, t_min)
    total = Fraction(0)
    for t in range(lo, hi + 1):
        c = _pochhammer_weight(t, s)
        if not c:
            continue
        for g, x in zip(gamma, v):
            c *= reciprocal_factorial(g + t * x)
        total += c
    return total


def _closed_form(g, v, r, ex, s: int, t_min):
    def F(gamma, k):
        return aux_sum(gamma, v, k, t_min)

    gv = g + v
    top = gv + ex + r * s
    den = F(top, s)
    if den == 0:
        return NotApplicable
    value = F(gv, s) / den
    for p in range(s):
        d1 = F(top, 0)
        d2 = F(gv + r * p + ex, 0)
        if d1 == 0 or d2 == 0:
            return NotApplicable
        value -= F(gv, p) * F(top, s - p) / (d1 * d2)
    return value


def coeff_cs_closed_form(shift, lat: Lattice, X, s: int):
    """The closed-form C_s for a rank-one lattice, or NotApplicable.

    The auxiliary sums are read with t over all integers and with t >= 0;
    if the two readings give different values the result is NotApplicable.
    """
    slots, shifts = associated_shifts(lat)
    if lat.rank != 1 or len(shifts) != 1:
        return NotApplicable
    xi, slots = _locate(slots, X)
    n = len(slots)
    v = _pad(lat.generators[0], n)
    r = _pad(shifts[0].r_vector, n)
    g = _pad(shift, n)
    ex = MultiIndex.unit(n, xi)
    full = _closed_form(g, v, r, ex, s, None)
    half = _closed_form(g, v, r, ex, s, 0)
    if full is NotApplicable or half is NotApplicable or full != half:
        return NotApplicable
    return full


@dataclass
class CrossCheck:
    s: int
    closed_form: object
    solved: Fraction

    @property
    def applicable(self) -> bool:
        return self.closed_form is not NotApplicable

    @property
    def agrees(self) -> bool:
        return self.applicable and self.closed_form == self.solved


def coeff_cs_crosscheck(shift, lat: Lattice, X, s: int):
    """Compare the closed form with the solved coefficient; NotApplicable if undefined."""
    cf = coeff_cs_closed_form(shift, lat, X, s)
    if cf is NotApplicable:
        return NotApplicable
    exp = multiply_minor(GammaSeries(lat, shift), X)
    return CrossCheck(s, cf, exp.terms.get((s,), Fraction(0)))
