"""Minor symbols and sparse polynomials in them.

Two alphabets are used.  The a-alphabet holds the SO(5) minors a[i] (first
row) and a[i,j] (first two rows), with indices in {-2,-1,0,1,2}.  The
b-alphabet holds the Sp(4) minors b[i], b[i,j] with indices in {-2,-1,1,2}
plus the auxiliary primed copies b1', b1'', b2', b2''.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import kernels
from .exact import format_fraction, parse_fraction

SO5_INDICES = (-2, -1, 0, 1, 2)
SP4_INDICES = (-2, -1, 1, 2)


@dataclass(frozen=True, order=True)
class MinorSymbol:
    """One minor symbol.

    kind is "A1", "A2", "B1", "B1P" or "B2"; ``idx`` holds the column
    indices in increasing order; ``primes`` is 1 or 2 for B1P symbols.
    """

    kind: str
    idx: tuple
    primes: int = 0

    def __post_init__(self):
        allowed = SO5_INDICES if self.kind.startswith("A") else SP4_INDICES
        if any(i not in allowed for i in self.idx):
            raise ValueError(f"index out of range for {self.kind}: {self.idx}")
        if self.kind in ("A2", "B2"):
            if len(self.idx) != 2 or self.idx[0] >= self.idx[1]:
                raise ValueError(f"pair symbols need increasing distinct indices: {self.idx}")
        elif len(self.idx) != 1:
            raise ValueError(f"single symbols take one index: {self.idx}")
        if self.kind == "B1P":
            if self.idx[0] not in (1, 2) or self.primes not in (1, 2):
                raise ValueError("primed symbols are b1', b1'', b2', b2''")
        elif self.primes:
            raise ValueError("only B1P symbols carry primes")

    @property
    def name(self) -> str:
        if self.kind == "B1P":
            return f"b{self.idx[0]}" + "'" * self.primes
        letter = "a" if self.kind.startswith("A") else "b"
        return f"{letter}[{','.join(str(i) for i in self.idx)}]"

    @property
    def order(self) -> int:
        """1 for first-row minors, 2 for two-row minors."""
        return 2 if self.kind in ("A2", "B2") else 1

    def unprimed(self) -> "MinorSymbol":
        if self.kind == "B1P":
            return MinorSymbol("B1", self.idx)
        return self

    def __str__(self):
        return self.name


def a(*idx) -> MinorSymbol:
    return MinorSymbol("A1" if len(idx) == 1 else "A2", tuple(idx))


def b(*idx) -> MinorSymbol:
    return MinorSymbol("B1" if len(idx) == 1 else "B2", tuple(idx))


class Alphabet:
    """An ordered list of symbols; its order is the variable order."""

    def __init__(self, name: str, symbols):
        self.name = name
        self.symbols = tuple(symbols)
        self.index = {s: k for k, s in enumerate(self.symbols)}
        self.by_name = {s.name: s for s in self.symbols}

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, sym):
        return sym in self.index

    def __repr__(self):
        return f"Alphabet({self.name!r}, {len(self)} symbols)"


A_ALPHABET = Alphabet(
    "a",
    [a(i) for i in SO5_INDICES] + [a(i, j) for i, j in combinations(SO5_INDICES, 2)],
)
B_ALPHABET = Alphabet(
    "b",
    [b(i) for i in SP4_INDICES]
    + [MinorSymbol("B1P", (1,), 1), MinorSymbol("B1P", (1,), 2),
       MinorSymbol("B1P", (2,), 1), MinorSymbol("B1P", (2,), 2)]
    + [b(i, j) for i, j in combinations(SP4_INDICES, 2)],
)

_NAME_RE = re.compile(r"^([ab])\[\s*(-?\d)\s*(?:,\s*(-?\d)\s*)?\]$")
_PRIMED_RE = re.compile(r"^b([12])('{1,2})$")


def parse_symbol(text: str):
    """Parse a symbol name into (sign, MinorSymbol).

    Pair names may be given in either order; b[2,-1] parses as (-1, b[-1,2]).
    A repeated index gives sign 0 and symbol None.
    """
    text = text.strip()
    m = _PRIMED_RE.match(text)
    if m:
        return 1, MinorSymbol("B1P", (int(m.group(1)),), len(m.group(2)))
    m = _NAME_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse symbol {text!r}")
    letter, i, j = m.group(1), int(m.group(2)), m.group(3)
    if j is None:
        return 1, MinorSymbol("A1" if letter == "a" else "B1", (i,))
    j = int(j)
    if i == j:
        return 0, None
    kind = "A2" if letter == "a" else "B2"
    if i < j:
        return 1, MinorSymbol(kind, (i, j))
    return -1, MinorSymbol(kind, (j, i))


def alphabet_of(sym: MinorSymbol) -> Alphabet:
    return A_ALPHABET if sym.kind.startswith("A") else B_ALPHABET


class MinorPoly:
    """Sparse polynomial with exact rational coefficients over one alphabet."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms=None, *, _trusted=False):
        self.alphabet = alphabet
        if terms is None:
            self.terms = {}
        elif _trusted:
            self.terms = terms
        else:
            n = len(alphabet)
            clean = {}
            for m, c in terms.items():
                m = tuple(int(e) for e in m)
                if len(m) != n or any(e < 0 for e in m):
                    raise ValueError(f"bad exponent vector {m}")
                c = Fraction(c)
                if c:
                    clean[m] = clean.get(m, 0) + c
            self.terms = {m: c for m, c in clean.items() if c}

    # construction helpers
    @classmethod
    def zero(cls, alphabet=B_ALPHABET):
        return cls(alphabet, {}, _trusted=True)

    @classmethod
    def constant(cls, c, alphabet=B_ALPHABET):
        c = Fraction(c)
        if not c:
            return cls.zero(alphabet)
        return cls(alphabet, {tuple([0] * len(alphabet)): c}, _trusted=True)

    @classmethod
    def symbol(cls, sym, power: int = 1, coeff=1):
        if isinstance(sym, str):
            sign, sym = parse_symbol(sym)
            if sym is None:
                raise ValueError("repeated index gives the zero minor")
            coeff = coeff * sign ** power
        alph = alphabet_of(sym)
        m = [0] * len(alph)
        m[alph.index[sym]] = power
        return cls(alph, {tuple(m): Fraction(coeff)})

    @classmethod
    def monomial(cls, exps: dict, coeff=1, alphabet=None):
        """Monomial from {symbol or name: exponent}."""
        out = None
        for s, e in exps.items():
            f = cls.symbol(s, e)
            out = f if out is None else out * f
        if out is None:
            return cls.constant(coeff, alphabet or B_ALPHABET)
        return out * Fraction(coeff)

    # arithmetic
    def _same(self, other):
        if self.alphabet is not other.alphabet:
            raise ValueError("alphabet mismatch")

    def _lift(self, other):
        if isinstance(other, MinorPoly):
            self._same(other)
            return other
        return MinorPoly.constant(other, self.alphabet)

    def copy(self):
        return MinorPoly(self.alphabet, dict(self.terms), _trusted=True)

    def __add__(self, other):
        o = self._lift(other)
        return MinorPoly(self.alphabet, kernels.poly_add_into(dict(self.terms), o.terms), _trusted=True)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return MinorPoly(self.alphabet, kernels.poly_add_into(dict(self.terms), o.terms, -1), _trusted=True)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return MinorPoly(self.alphabet, {m: -c for m, c in self.terms.items()}, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, MinorPoly):
            self._same(other)
            return MinorPoly(self.alphabet, kernels.poly_mul(self.terms, other.terms), _trusted=True)
        c = Fraction(other)
        if not c:
            return MinorPoly.zero(self.alphabet)
        return MinorPoly(self.alphabet, {m: v * c for m, v in self.terms.items()}, _trusted=True)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Fraction(c))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        return MinorPoly(self.alphabet, kernels.poly_pow(self.terms, n, len(self.alphabet)), _trusted=True)

    def __eq__(self, other):
        if isinstance(other, MinorPoly):
            return self.alphabet is other.alphabet and self.terms == other.terms
        try:
            return self == self._lift(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    # inspection
    def symbols_used(self):
        used = set()
        for m in self.terms:
            for k, e in enumerate(m):
                if e:
                    used.add(self.alphabet.symbols[k])
        return used

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def degrees_by_order(self):
        """Set of (order-1 degree, order-2 degree) pairs over the monomials."""
        orders = [s.order for s in self.alphabet.symbols]
        out = set()
        for m in self.terms:
            d1 = sum(e for e, o in zip(m, orders) if o == 1)
            d2 = sum(e for e, o in zip(m, orders) if o == 2)
            out.add((d1, d2))
        return out

    def is_scalar_multiple_of(self, other: "MinorPoly"):
        """Return c with self == c * other, or None."""
        self._same(other)
        if not self.terms:
            return Fraction(0)
        if not other.terms:
            return None
        if set(self.terms) != set(other.terms):
            return None
        m0 = next(iter(other.terms))
        c = self.terms[m0] / other.terms[m0]
        for m, v in other.terms.items():
            if self.terms[m] != c * v:
                return None
        return c

    def sorted_terms(self):
        """Terms from the largest monomial down (degree, then lexicographic)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def monomial_dict(self, m):
        return {self.alphabet.symbols[k].name: e for k, e in enumerate(m) if e}

    # serialization
    def to_json(self):
        return [
            {"coeff": format_fraction(c), "monomial": self.monomial_dict(m)}
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data, alphabet=None):
        out = None
        for term in data:
            mono = cls.monomial(term["monomial"], parse_fraction(term["coeff"]), alphabet)
            out = mono if out is None else out + mono
        if out is None:
            return cls.zero(alphabet or B_ALPHABET)
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                f"{n}^{e}" if e > 1 else n for n, e in self.monomial_dict(m).items()
            )
            if not mono:
                parts.append(format_fraction(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{format_fraction(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MinorPoly({self})"


def bpoly(text_or_sym, power=1):
    """Shorthand for a b-alphabet symbol as a polynomial."""
    return MinorPoly.symbol(text_or_sym, power)


def specialize_primes(p: MinorPoly) -> MinorPoly:
    """Replace b1', b1'' by b[1] and b2', b2'' by b[2]."""
    if p.alphabet is not B_ALPHABET:
        return p
    alph = B_ALPHABET
    target = {}
    for k, s in enumerate(alph.symbols):
        target[k] = alph.index[s.unprimed()]
    out = {}
    n = len(alph)
    for m, c in p.terms.items():
        nm = [0] * n
        for k, e in enumerate(m):
            if e:
                nm[target[k]] += e
        nm = tuple(nm)
        v = out.get(nm, 0) + c
        if v:
            out[nm] = v
        else:
            del out[nm]
    return MinorPoly(alph, out, _trusted=True)


def prime_substitute(p: MinorPoly, primes: int) -> MinorPoly:
    """Rename b[1], b[2] to their primed copies with the given prime count."""
    alph = B_ALPHABET
    ren = {
        alph.index[b(1)]: alph.index[MinorSymbol("B1P", (1,), primes)],
        alph.index[b(2)]: alph.index[MinorSymbol("B1P", (2,), primes)],
    }
    out = {}
    for m, c in p.terms.items():
        nm = list(m)
        for src, dst in ren.items():
            if nm[src]:
                nm[dst] += nm[src]
                nm[src] = 0
        nm = tuple(nm)
        out[nm] = out.get(nm, 0) + c
    return MinorPoly(alph, {m: c for m, c in out.items() if c}, _trusted=True)
