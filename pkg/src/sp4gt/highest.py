"""h-highest vectors: the SO(5) functions, their Sp(4) images and variants.

For a valid label (sigma; m2, m1; k2, k1; s2) the SO(5) function is

    a[-2,0]^sigma a[1]^(m2-k2) a[-2,-1]^(k1-sigma) F_gamma(a[-2], a[-1], a[-2,1], a[-1,1])

over the rank-one lattice Z(1,-1,-1,1), gamma = (s2-m1, k2-s2, m1-k1, 0).
Pulling it back through the covering map gives a Gamma-series of the same
shape whose last two arguments are the quadratic images of a[-2,1] and
a[-1,1].  That pull-back is what ``sp4_highest_function`` returns.

Two further families are built on the six-slot lattice spanned by
v1 = (1,-1,-1,1,0,0) and v0 = (0,0,1,1,-1,-1) over
(b[-2,-1], b[-2,1], b[-1], -b[1], b[-2], b[2]):
``delta_series`` (the split form of the pull-back) and ``rebase_h_highest``
(the leading pure functions b[2,-1]^(m2-k2) F_omega).  Neither is
h-highest for every label; see ``check_h_highest``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from fractions import Fraction

from .diagrams import HWLabel, enumerate_labels
from .exact import QSqrt2
from .gamma import GammaSeries, Lattice, Slot
from .ideals import SYMPLECTIC, normal_form
from .minors import A_ALPHABET, B_ALPHABET, MinorPoly, bpoly
from .operators import apply_operator, f
from .oracle import poly_weight
from .tables import transfer_map

B1_GENERATOR = (1, -1, -1, 1)
SO5_SLOTS = ("a[-2]", "a[-1]", "a[-2,1]", "a[-1,1]")

B2_SLOT_NAMES = ("b[-2,-1]", "b[-2,1]", "b[-1]", "-b[1]", "b[-2]", "b[2]")
V1 = (1, -1, -1, 1, 0, 0)
V0 = (0, 0, 1, 1, -1, -1)


def _i(x) -> int:
    return x.to_int() if hasattr(x, "to_int") else int(x)


def gamma_vector(l: HWLabel):
    return (_i(l.s2 - l.m1), _i(l.k2 - l.s2), _i(l.m1 - l.k1), 0)


def b1_lattice_so5() -> Lattice:
    return Lattice([B1_GENERATOR], SO5_SLOTS)


def sp4_transfer_slots():
    """Pull-backs of a[-2], a[-1], a[-2,1], a[-1,1] (scalars dropped, signs kept)."""
    tm = transfer_map()
    out = []
    for name in SO5_SLOTS:
        sym = MinorPoly.symbol(name).symbols_used().pop()
        factor, poly = tm[sym]
        if not factor.is_rational():
            raise AssertionError("slot pull-backs are rational")
        out.append(Slot.composite(_label(factor.a, poly), poly * factor.a))
    return tuple(out)


def _label(c, poly):
    text = str(poly)
    if c == 1:
        return text
    if c == -1:
        return f"-({text})"
    return f"{c}*({text})"


@cache
def b1_lattice_sp4() -> Lattice:
    return Lattice([B1_GENERATOR], sp4_transfer_slots())


@cache
def b2_lattice() -> Lattice:
    return Lattice([V0, V1], B2_SLOT_NAMES)


def so5_highest_function(l: HWLabel) -> MinorPoly:
    l.validate()
    if not l.m2.is_integer:
        raise ValueError("the SO(5) realization is polynomial only for integer weights")
    pref = (
        MinorPoly.symbol("a[-2,0]") ** l.sigma
        * MinorPoly.symbol("a[1]") ** _i(l.m2 - l.k2)
        * MinorPoly.symbol("a[-2,-1]") ** (_i(l.k1) - l.sigma)
    )
    return GammaSeries(b1_lattice_so5(), gamma_vector(l), pref).expand()


def sp4_prefactor(l: HWLabel) -> MinorPoly:
    """(b[-2] b[-1])^sigma b[-1,2]^(m2-k2) b[-2]^(2(k1-sigma)), combined."""
    return (
        bpoly("b[-2]") ** (l.k1.twice - l.sigma)
        * bpoly("b[-1]") ** l.sigma
        * bpoly("b[-1,2]") ** _i(l.m2 - l.k2)
    )


def sp4_highest_function(l: HWLabel) -> GammaSeries:
    """The Sp(4) h-highest function of a label as a Gamma-series over B1."""
    l.validate()
    return GammaSeries(b1_lattice_sp4(), gamma_vector(l), sp4_prefactor(l))


def delta_vector(l: HWLabel):
    return (_i(l.s2 - l.m1), _i(l.k2 - l.s2), 2 * _i(l.m1 - l.k1), 0, 0, 0)


def delta_series(l: HWLabel) -> GammaSeries:
    """Prefactor times F_delta over the six-slot lattice B2."""
    l.validate()
    return GammaSeries(b2_lattice(), delta_vector(l), sp4_prefactor(l))


def omega_vector(l: HWLabel, printed: bool = False):
    """(s2-m1, k2-s2, 2(m1-k1)+sigma, 0, 2k1-sigma, 0).

    With printed=True the fifth entry is 2k2-sigma, as printed.
    """
    fifth = l.k2.twice - l.sigma if printed else l.k1.twice - l.sigma
    return (_i(l.s2 - l.m1), _i(l.k2 - l.s2), 2 * _i(l.m1 - l.k1) + l.sigma, 0, fifth, 0)


def rebase_prefactor(l: HWLabel) -> MinorPoly:
    return bpoly("b[2,-1]") ** _i(l.m2 - l.k2)


def rebase_h_highest(l: HWLabel) -> GammaSeries:
    """b[2,-1]^(m2-k2) F_omega over B2."""
    l.validate()
    return GammaSeries(b2_lattice(), omega_vector(l), rebase_prefactor(l))


# ---------------------------------------------------------------------------
# transfer of a-polynomials


def transfer_to_sp4(p: MinorPoly):
    """Pull an a-polynomial back to Sp(4): returns (rational part, sqrt2 part)."""
    if p.alphabet is not A_ALPHABET:
        raise ValueError("expected an a-alphabet polynomial")
    tm = transfer_map()
    syms = A_ALPHABET.symbols
    rat = MinorPoly.zero(B_ALPHABET)
    irr = MinorPoly.zero(B_ALPHABET)
    for m, c in p.terms.items():
        scal = QSqrt2(c)
        term = MinorPoly.constant(1)
        for k, e in enumerate(m):
            if e:
                factor, poly = tm[syms[k]]
                scal = scal * factor ** e
                term = term * poly ** e
        rat = rat + term * scal.a
        irr = irr + term * scal.b
    return rat, irr


# ---------------------------------------------------------------------------
# checks


@dataclass
class HighestCheck:
    label: HWLabel
    annihilated: bool
    h_cartan: Fraction | None
    weight: tuple | None
    nonzero: bool

    @property
    def passed(self) -> bool:
        return self.nonzero and self.annihilated and self.h_cartan == 2 * self.label.s2.to_fraction()


def check_h_highest(l: HWLabel, p: MinorPoly) -> HighestCheck:
    """Raising-annihilation and h-Cartan eigenvalue of p modulo the symplectic ideal."""
    q = normal_form(p, SYMPLECTIC)
    if q.is_zero():
        return HighestCheck(l, False, None, None, False)
    raised = normal_form(apply_operator(f(-2, 1), q), SYMPLECTIC)
    cart = normal_form(apply_operator(f(-2, -2), q) - apply_operator(f(1, 1), q), SYMPLECTIC)
    ev = cart.is_scalar_multiple_of(q)
    try:
        wt = poly_weight(q)
    except ValueError:
        wt = None
    return HighestCheck(l, raised.is_zero(), ev, wt, True)


def cartan_components(p: MinorPoly):
    """Eigenvalues of 1/2(f[-2,-2]+f[-1,-1]) and 1/2(f[-2,-2]-f[-1,-1]) on p."""
    wt = poly_weight(normal_form(p, SYMPLECTIC))
    if wt is None:
        return None
    x, y = wt
    return (Fraction(x + y, 2), Fraction(x - y, 2))


def labels_for(w, s2=None):
    return enumerate_labels(w, s2)
