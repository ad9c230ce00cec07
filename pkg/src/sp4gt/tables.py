"""The minor dictionary between SO(5) and Sp(4) under the covering map.

Each entry states  a-minor = sign * sqrt(2)^k * (b-polynomial)  with
k in {-1, 0, 1}.  The signs are measured with the basis fixed in
``group`` (all-ones anti-diagonal form) and frozen here; ``printed_sign``
records the sign shown in the published tables so the difference can be
reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import QSqrt2
from .minors import MinorPoly, MinorSymbol, parse_symbol


def _b(name):
    return MinorPoly.symbol(name)


@dataclass(frozen=True)
class TableEntry:
    a_name: str
    b_expr: str
    sqrt2_power: int
    sign: int
    printed_sign: int

    @property
    def a_symbol(self) -> MinorSymbol:
        sgn, sym = parse_symbol(self.a_name)
        return sym

    @property
    def a_orientation(self) -> int:
        """+1 if a_name is canonical, -1 if written with reversed indices."""
        return parse_symbol(self.a_name)[0]

    def b_poly(self) -> MinorPoly:
        return _parse_b_expr(self.b_expr)

    def factor(self) -> QSqrt2:
        """Scalar c with a_name = c * b_poly."""
        base = QSqrt2(self.sign)
        if self.sqrt2_power == 1:
            return base * QSqrt2(0, 1)
        if self.sqrt2_power == -1:
            return base * QSqrt2(0, Fraction(1, 2))
        return base


def _parse_b_expr(text: str) -> MinorPoly:
    """Parse sums of +/- products of b-symbols, e.g. 'b[-2]*b[2]-b[-1]*b[1]'."""
    out = None
    text = text.replace(" ", "")
    tokens = []
    cur = ""
    for ch in text:
        if ch in "+-" and cur and not cur.endswith(("[", ",")):
            tokens.append(cur)
            cur = ch
        else:
            cur += ch
    tokens.append(cur)
    for tok in tokens:
        sgn = 1
        if tok.startswith("-"):
            sgn, tok = -1, tok[1:]
        elif tok.startswith("+"):
            tok = tok[1:]
        term = MinorPoly.constant(sgn)
        for factor in tok.split("*"):
            if "^" in factor:
                name, e = factor.split("^")
                term = term * _b(name) ** int(e)
            else:
                term = term * _b(factor)
        out = term if out is None else out + term
    return out


T1 = (
    TableEntry("a[-2]", "b[-2,-1]", 0, 1, 1),
    TableEntry("a[-1]", "b[-2,1]", 0, 1, 1),
    TableEntry("a[0]", "b[1,-1]+b[-2,2]", -1, 1, 1),
    TableEntry("a[1]", "b[2,-1]", 0, -1, 1),
    TableEntry("a[2]", "b[1,2]", 0, -1, 1),
)

T2 = (
    TableEntry("a[-2,-1]", "b[-2]^2", 0, 1, 1),
    TableEntry("a[-2,0]", "b[-2]*b[-1]", 1, -1, 1),
    TableEntry("a[-1,0]", "b[-2]*b[1]", 1, -1, 1),
    TableEntry("a[-2,2]", "b[-2]*b[2]+b[-1]*b[1]", 0, 1, 1),
    TableEntry("a[-1,1]", "b[-2]*b[2]-b[-1]*b[1]", 0, 1, 1),
    TableEntry("a[0,1]", "b[-1]*b[2]", 1, -1, 1),
    TableEntry("a[0,2]", "b[1]*b[2]", 1, 1, -1),
    TableEntry("a[-2,1]", "b[-1]^2", 0, -1, 1),
    TableEntry("a[2,-1]", "b[1]^2", 0, -1, -1),
    TableEntry("a[1,2]", "b[2]^2", 0, -1, 1),
)

ALL_ENTRIES = T1 + T2


def transfer_map():
    """a-symbol -> (QSqrt2 factor, b-polynomial) for canonical a-symbols."""
    out = {}
    for e in ALL_ENTRIES:
        out[e.a_symbol] = (e.factor() * e.a_orientation, e.b_poly())
    return out


def sign_differences():
    return [e for e in ALL_ENTRIES if e.sign != e.printed_sign]
