"""Gelfand-Tsetlin type basis for the chain sp4 > h.

The basis vector of a diagram d with lowering depth p = s2 - s1 is

    f[1,-2]^p / p!  applied to the h-highest function of its label,

computed as sum over p1 + p2 = p of E[2,-1]^p1 E[1,-2]^p2 / (p1! p2!)
(the two substitution operators commute).  Before lowering, b[1] and b[2]
in the seed are renamed b1', b2'; the operators emit b1'', b2''; all
primes are identified afterwards.  Results are taken modulo the
symplectic ideal.

The same lowering applied to a pure seed b[2,-1]^(m2-k2) F_omega over the
six-slot lattice is again a Gamma-series, now over an eleven-slot lattice
(``BGC_FROZEN``).  ``omega_routes`` compares both sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .diagrams import GTDiagram, HighestWeight, enumerate_diagrams, weyl_dim
from .exact import MultiIndex
from .gamma import GammaSeries, Lattice, gkz_verify
from .highest import omega_vector, rebase_h_highest, rebase_prefactor, sp4_highest_function
from .ideals import SYMPLECTIC, normal_form
from .linalg import EchelonSpace, rank
from .minors import MinorPoly, prime_substitute, specialize_primes
from .operators import E, apply_power

# ---------------------------------------------------------------------------
# lowering by the commuting substitution operators


def lower(seed: MinorPoly, p: int, ideal=SYMPLECTIC) -> MinorPoly:
    """f[1,-2]^p / p! applied to seed through primed symbols."""
    primed = prime_substitute(seed, 1)
    e12 = E(1, -2, primed_output=True)
    e21 = E(2, -1, primed_output=True)
    total = MinorPoly.zero()
    for p2 in range(p + 1):
        part = apply_power(e12, primed, p2)
        if part.is_zero():
            continue
        part = apply_power(e21, part, p - p2)
        total = total + part * Fraction(1, factorial(p2) * factorial(p - p2))
    out = specialize_primes(total)
    return normal_form(out, ideal) if ideal else out


def gt_function(d: GTDiagram) -> MinorPoly:
    if not d.is_valid():
        raise ValueError(f"invalid diagram {d}")
    seed = sp4_highest_function(d.label).expand()
    return lower(seed, d.depth)


class LinearDependence(ArithmeticError):
    pass


_BASIS_CACHE = {}


def gt_basis(w: HighestWeight):
    key = w.key()
    if key in _BASIS_CACHE:
        return _BASIS_CACHE[key]
    diagrams = enumerate_diagrams(w)
    funcs = []
    space = EchelonSpace()
    for d in diagrams:
        g = gt_function(d)
        if not space.add(g.terms):
            raise LinearDependence(f"basis function of {d} depends on the previous ones")
        funcs.append(g)
    if len(funcs) != weyl_dim(w):
        raise ArithmeticError("basis size differs from the Weyl dimension")
    _BASIS_CACHE[key] = (diagrams, funcs)
    return diagrams, funcs


# ---------------------------------------------------------------------------
# the eleven-slot lattice


BGC_SLOTS_FROZEN = (
    "b1''", "b2''", "b[1,-1]", "b[-2,2]", "b[1,2]", "b[-2,-1]",
    "b[-2,1]", "b[-1]", "-b1'", "b[-2]", "b2'",
)
BGC_SLOTS_PRINTED = (
    "b1''", "b2''", "b[-1,1]", "b[-2,2]", "b[1,2]", "b[-2,-1]",
    "b[-2,1]", "b[-1]", "-b1'", "b[-2]", "b2'",
)


def _vec(**coords):
    names = ["d1", "d2", "a", "b", "c", "z1", "z2", "z3", "z4", "z5", "z6"]
    v = [0] * 11
    for k, x in coords.items():
        v[names.index(k)] = x
    return tuple(v)


# slot shorthands: d1 = b1'', d2 = b2'', a = b[1,-1], b = b[-2,2], c = b[1,2],
# z1..z6 = the six slots of the seed lattice
BGC_GENERATORS_FROZEN = {
    "v0": _vec(z3=1, z4=1, z5=-1, z6=-1),
    "w0": _vec(a=1, b=-1),
    "v1": _vec(z1=1, z2=-1, z3=-1, z4=1),
    "v2": _vec(a=1, b=1, c=-1, z1=-1),
    "v3": _vec(a=1, d2=-1, z1=-1, z3=1),
    "v4": _vec(a=1, d1=-1, z1=-1, z5=1),
}

BGC_GENERATORS_PRINTED = {
    "v0": _vec(z3=1, z4=1, z5=-1, z6=-1),
    "w0": _vec(a=1, b=-1),
    "v1": _vec(z1=1, z2=-1, z3=-1, z4=1),
    "v2": _vec(z1=1, c=1, a=-1, b=-1),
    # printed with e[2,1]; the only slot with indices {1,2} is b[1,2]
    "v3": _vec(d2=1, a=1, z3=-1, c=-1),
    "v4": _vec(d1=1, z1=1, z5=-1, a=-1),
}


@dataclass(frozen=True)
class BGCData:
    symbol_order: tuple
    generators: dict
    name: str

    def lattice(self) -> Lattice:
        return Lattice(list(self.generators.values()), self.symbol_order)


BGC_FROZEN = BGCData(BGC_SLOTS_FROZEN, BGC_GENERATORS_FROZEN, "frozen")
BGC_PRINTED = BGCData(BGC_SLOTS_PRINTED, BGC_GENERATORS_PRINTED, "printed")


def bgc_omega(d: GTDiagram, printed_fifth: bool = False) -> MultiIndex:
    """(0,0,s2-s1,0,0,s1-m1,k2-s2,2(m1-k1)+sigma,0,2k1-sigma,0)."""
    o6 = omega_vector(d.label, printed=printed_fifth)
    p = d.depth
    return MultiIndex((0, 0, p, 0, 0, o6[0] - p) + tuple(o6[1:]))


SELECTION_ZERO_SLOTS = (0, 1, 3, 4, 8, 10)


def satisfies_selection_rule(omega) -> bool:
    return all(omega[i] == 0 for i in SELECTION_ZERO_SLOTS)


def bgc_series(d: GTDiagram, data: BGCData = BGC_FROZEN) -> GammaSeries:
    return GammaSeries(data.lattice(), bgc_omega(d), rebase_prefactor(d.label))


def omega_gamma_route(d: GTDiagram, data: BGCData = BGC_FROZEN) -> MinorPoly:
    s = bgc_series(d, data)
    return normal_form(specialize_primes(s.expand()), SYMPLECTIC)


def omega_operator_route(d: GTDiagram) -> MinorPoly:
    seed = rebase_h_highest(d.label).expand()
    return lower(seed, d.depth)


@dataclass
class RouteComparison:
    diagram: GTDiagram
    scalar: Fraction | None
    operator_zero: bool
    gkz_passed: bool
    selection_rule: bool

    @property
    def agree(self) -> bool:
        return self.scalar is not None and self.scalar != 0

    def to_json(self):
        return {
            "diagram": self.diagram.to_json(),
            "agree": self.agree,
            "scalar": None if self.scalar is None else str(self.scalar),
            "gkz": self.gkz_passed,
            "selection_rule": self.selection_rule,
        }


def compare_routes(d: GTDiagram, data: BGCData = BGC_FROZEN) -> RouteComparison:
    op = omega_operator_route(d)
    series = bgc_series(d, data)
    gm = normal_form(specialize_primes(series.expand()), SYMPLECTIC)
    scalar = gm.is_scalar_multiple_of(op) if not op.is_zero() else (Fraction(1) if gm.is_zero() else None)
    if scalar == 0 and not op.is_zero():
        scalar = None
    return RouteComparison(
        d,
        scalar,
        op.is_zero(),
        gkz_verify(series.bare()).passed,
        satisfies_selection_rule(series.shift),
    )


def lattice_index_relation(data_a: BGCData, data_b: BGCData):
    """(rank of a, rank of b, rank of the union): equal lattices give equal ranks."""
    ga = [list(v) for v in data_a.generators.values()]
    gb = [list(v) for v in data_b.generators.values()]
    return rank(ga), rank(gb), rank(ga + gb)


def same_lattice(data_a: BGCData, data_b: BGCData) -> bool:
    """True if each generator set lies in the integer span of the other."""
    return _in_span(data_a, data_b) and _in_span(data_b, data_a)


def _in_span(src: BGCData, dst: BGCData) -> bool:
    from .linalg import solve

    gens = [list(v) for v in dst.generators.values()]
    cols = [[gens[j][i] for j in range(len(gens))] for i in range(11)]
    for v in src.generators.values():
        res = solve(cols, list(v))
        if res is None or any(x.denominator != 1 for x in res[0]):
            return False
    return True


def bgc_diff():
    """Generator-by-generator difference between the frozen and printed lists."""
    out = []
    for key in BGC_GENERATORS_FROZEN:
        fz, pr = BGC_GENERATORS_FROZEN[key], BGC_GENERATORS_PRINTED[key]
        if fz == pr:
            status = "identical"
        elif tuple(-x for x in pr) == fz:
            status = "negated"
        else:
            status = "different"
        out.append({"generator": key, "frozen": list(fz), "printed": list(pr), "status": status})
    slots = [
        {"position": i, "frozen": a, "printed": b}
        for i, (a, b) in enumerate(zip(BGC_SLOTS_FROZEN, BGC_SLOTS_PRINTED))
        if a != b
    ]
    return {"generators": out, "slots": slots, "same_lattice": same_lattice(BGC_FROZEN, BGC_PRINTED)}
