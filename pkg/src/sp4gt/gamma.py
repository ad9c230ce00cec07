"""Lattice Gamma-series with finite support.

For a lattice L in Z^N, a shift g and arguments z_1..z_N,

    F_g(z) = sum over v in L of  z^(g+v) / (g+v)!

where the reciprocal factorial of a negative integer is 0, so only the
lattice points with g+v >= 0 contribute.  Arguments ("slots") are usually
signed minor symbols; a slot may also be a polynomial, in which case the
series is a composite and the GKZ checks are made on formal variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import floor, ceil

from . import kernels
from .exact import MultiIndex, reciprocal_factorial
from .linalg import nullspace, rank
from .minors import B_ALPHABET, MinorPoly, parse_symbol


class UnboundedSupport(ValueError):
    """A nonzero combination of lattice generators is nonnegative."""


@dataclass(frozen=True)
class Slot:
    """One argument of a Gamma-series: a label and the polynomial it stands for."""

    label: str
    poly: MinorPoly

    @classmethod
    def of(cls, text: str) -> "Slot":
        """Build from a signed symbol name such as 'b[-2,1]' or '-b[1]'."""
        t = text.strip()
        sgn = 1
        if t.startswith("-"):
            sgn, t = -1, t[1:]
        s, sym = parse_symbol(t)
        if sym is None:
            raise ValueError(f"{text!r} is identically zero")
        return cls(text.strip(), MinorPoly.symbol(sym) * (sgn * s))

    @classmethod
    def composite(cls, label: str, poly: MinorPoly) -> "Slot":
        return cls(label, poly)

    def is_simple(self) -> bool:
        return len(self.poly.terms) == 1 and sum(next(iter(self.poly.terms))) == 1

    def __str__(self):
        return self.label


def slots(*names):
    return tuple(Slot.of(n) for n in names)


class Lattice:
    """A sublattice of Z^N given by independent generators over named slots."""

    def __init__(self, generators, symbols):
        self.symbols = tuple(s if isinstance(s, Slot) else Slot.of(s) for s in symbols)
        n = len(self.symbols)
        self.generators = tuple(MultiIndex(g) for g in generators)
        for g in self.generators:
            if len(g) != n:
                raise ValueError("generator length does not match the symbol list")
        if rank([list(g) for g in self.generators]) != len(self.generators):
            raise ValueError("lattice generators are linearly dependent")

    @property
    def ambient_dim(self) -> int:
        return len(self.symbols)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def orthogonal_basis(self):
        """Integer basis of the orthogonal complement of the lattice."""
        return nullspace([list(g) for g in self.generators], self.ambient_dim)

    def to_json(self):
        return {
            "symbols": [s.label for s in self.symbols],
            "lattice": [list(g) for g in self.generators],
        }

    def __repr__(self):
        return f"Lattice(rank={self.rank}, N={self.ambient_dim})"


# ---------------------------------------------------------------------------
# support enumeration by Fourier-Motzkin elimination


def _normalize(ineq):
    coeffs, const = ineq
    nums = [c for c in coeffs if c] + ([const] if const else [])
    if not nums:
        return ineq
    den = 1
    for x in list(coeffs) + [const]:
        den = den * x.denominator // _gcd(den, x.denominator)
    ints = [int(x * den) for x in coeffs]
    c = int(const * den)
    g = 0
    for x in ints:
        g = _gcd(g, abs(x))
    if g == 0:
        return (tuple(Fraction(0) for _ in ints), Fraction(1 if c >= 0 else -1))
    # the constant of an integer-only constraint may be floored
    return tuple(Fraction(x, g) for x in ints), Fraction(floor(Fraction(c, g)))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _eliminate(system, var):
    pos, neg, rest = [], [], []
    for coeffs, const in system:
        c = coeffs[var]
        (pos if c > 0 else neg if c < 0 else rest).append((coeffs, const))
    out = set(rest)
    for pc, pk in pos:
        for nc, nk in neg:
            a, b_ = pc[var], -nc[var]
            coeffs = tuple(b_ * x + a * y for x, y in zip(pc, nc))
            const = b_ * pk + a * nk
            out.add(_normalize((coeffs, const)))
    # drop trivially satisfied constraints; keep infeasible ones
    cleaned = set()
    for coeffs, const in out:
        if all(c == 0 for c in coeffs):
            if const < 0:
                return None
            continue
        cleaned.add((coeffs, const))
    # remove constraints dominated by a parallel one
    best = {}
    for coeffs, const in cleaned:
        if coeffs not in best or const < best[coeffs]:
            best[coeffs] = const
    return [(c, k) for c, k in best.items()]


def _projections(system, k):
    """chain[j] is the system over variables 0..j (later ones eliminated)."""
    chain = [None] * k
    cur = system
    chain[k - 1] = cur
    for var in range(k - 1, 0, -1):
        if cur is None:
            chain[var - 1] = None
        else:
            cur = _eliminate(cur, var)
            chain[var - 1] = cur
    return chain


def _bounds(system, var, fixed):
    lo, hi = None, None
    for coeffs, const in system:
        c = coeffs[var]
        rhs = const + sum(coeffs[t] * fixed[t] for t in range(var))
        if c > 0:
            b_ = ceil(-rhs / c)
            lo = b_ if lo is None else max(lo, b_)
        elif c < 0:
            b_ = floor(rhs / -c)
            hi = b_ if hi is None else min(hi, b_)
        elif rhs < 0:
            return 1, 0
    return lo, hi


def _cone_is_pointed(gens):
    """True iff no nonzero real t has sum t_a g_a >= 0."""
    k = len(gens)
    n = len(gens[0])
    system = [(tuple(Fraction(g[i]) for g in gens), Fraction(0)) for i in range(n)]
    for var in range(k):
        cur = system
        for other in range(k):
            if other != var and cur is not None:
                cur = _eliminate(cur, other)
        if cur is None:
            return True
        has_lo = any(c[var] > 0 for c, _ in cur)
        has_hi = any(c[var] < 0 for c, _ in cur)
        if not (has_lo and has_hi):
            return False
    return True


def enumerate_support(lat: Lattice, shift) -> list:
    """All lattice vectors v with shift + v >= 0, sorted lexicographically."""
    shift = MultiIndex(shift)
    if len(shift) != lat.ambient_dim:
        raise ValueError("shift length does not match the lattice")
    gens = lat.generators
    k = len(gens)
    if k == 0:
        return [MultiIndex.zero(lat.ambient_dim)] if shift.is_nonnegative() else []
    if not _cone_is_pointed(gens):
        raise UnboundedSupport("a nonzero nonnegative combination of generators exists")
    n = lat.ambient_dim
    system = [
        _normalize((tuple(Fraction(g[i]) for g in gens), Fraction(shift[i]))) for i in range(n)
    ]
    chain = _projections(system, k)
    out = []
    fixed = [0] * k

    def rec(var):
        sysv = chain[var]
        if sysv is None:
            return
        lo, hi = _bounds(sysv, var, fixed)
        if lo is None or hi is None:
            raise UnboundedSupport("support polytope is unbounded")
        for t in range(lo, hi + 1):
            fixed[var] = t
            if var + 1 < k:
                rec(var + 1)
            else:
                v = [0] * n
                for a in range(k):
                    if fixed[a]:
                        for i in range(n):
                            v[i] += fixed[a] * gens[a][i]
                if all(shift[i] + v[i] >= 0 for i in range(n)):
                    out.append(MultiIndex(v))
        fixed[var] = 0

    rec(0)
    out.sort()
    return out


def naive_support(lat: Lattice, shift, radius: int):
    """Box scan over generator coordinates in [-radius, radius]; test oracle."""
    from itertools import product

    shift = MultiIndex(shift)
    out = set()
    for t in product(range(-radius, radius + 1), repeat=lat.rank):
        v = [0] * lat.ambient_dim
        for a, ta in enumerate(t):
            for i in range(lat.ambient_dim):
                v[i] += ta * lat.generators[a][i]
        if all(s + x >= 0 for s, x in zip(shift, v)):
            out.add(MultiIndex(v))
    return sorted(out)


# ---------------------------------------------------------------------------


class GammaSeries:
    """prefactor * F_shift over a lattice, with support fixed at construction."""

    def __init__(self, lattice: Lattice, shift, prefactor: MinorPoly | None = None):
        self.lattice = lattice
        self.shift = MultiIndex(shift)
        if len(self.shift) != lattice.ambient_dim:
            raise ValueError("shift length does not match the lattice")
        alph = lattice.symbols[0].poly.alphabet if lattice.symbols else B_ALPHABET
        self.prefactor = prefactor if prefactor is not None else MinorPoly.constant(1, alph)
        self.support = enumerate_support(lattice, self.shift)

    @property
    def symbols(self):
        return self.lattice.symbols

    def points(self):
        """Exponent vectors shift + v over the support."""
        return [self.shift + v for v in self.support]

    def formal_terms(self):
        """The bare series as {exponent tuple: coefficient} in formal variables."""
        out = {}
        for u in self.points():
            c = Fraction(1)
            for e in u:
                c *= reciprocal_factorial(e)
            out[tuple(u)] = c
        return out

    def expand(self) -> MinorPoly:
        syms = self.symbols
        alph = self.prefactor.alphabet
        powers = [{0: MinorPoly.constant(1, alph)} for _ in syms]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = syms[i].poly ** e
            return cache[e]

        acc = {}
        for u, c in self.formal_terms().items():
            term = {tuple([0] * len(alph)): c}
            for i, e in enumerate(u):
                if e:
                    term = kernels.poly_mul(term, power(i, e).terms)
            kernels.poly_add_into(acc, term)
        body = MinorPoly(alph, acc, _trusted=True)
        return body * self.prefactor

    def differentiate(self, i: int) -> "GammaSeries":
        used = self.prefactor.symbols_used()
        if used & self.symbols[i].poly.symbols_used():
            raise ValueError(f"prefactor involves the symbol of slot {i}")
        return GammaSeries(self.lattice, self.shift - MultiIndex.unit(len(self.shift), i), self.prefactor)

    def with_shift(self, shift) -> "GammaSeries":
        return GammaSeries(self.lattice, shift, self.prefactor)

    def bare(self) -> "GammaSeries":
        return GammaSeries(self.lattice, self.shift)

    def to_json(self):
        out = self.lattice.to_json()
        out["shift"] = list(self.shift)
        out["prefactor"] = self.prefactor.to_json()
        return out

    def __repr__(self):
        return f"GammaSeries(shift={list(self.shift)}, rank={self.lattice.rank}, support={len(self.support)})"


def expand(s: GammaSeries) -> MinorPoly:
    return s.expand()


def differentiate(s: GammaSeries, i: int) -> GammaSeries:
    return s.differentiate(i)


# ---------------------------------------------------------------------------
# formal calculus on {exponent tuple: coeff}


def formal_partial(terms, i, times=1):
    out = {}
    for m, c in terms.items():
        e = m[i]
        if e < times:
            continue
        f = Fraction(1)
        for t in range(times):
            f *= e - t
        nm = list(m)
        nm[i] -= times
        out[tuple(nm)] = out.get(tuple(nm), 0) + c * f
    return {m: c for m, c in out.items() if c}


def formal_partial_multi(terms, exps):
    for i, e in enumerate(exps):
        if e:
            terms = formal_partial(terms, i, e)
    return terms


@dataclass
class GKZReport:
    euler: list
    box: list

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.euler) and all(ok for _, ok in self.box)

    def to_json(self):
        return {
            "passed": self.passed,
            "euler": [{"alpha": list(a), "ok": ok} for a, ok in self.euler],
            "box": [{"generator": list(v), "ok": ok} for v, ok in self.box],
        }


def gkz_verify(s: GammaSeries) -> GKZReport:
    """Check the Euler and box equations of the bare series in formal variables."""
    terms = s.formal_terms()
    gamma = s.shift
    euler = []
    for alpha in s.lattice.orthogonal_basis():
        value = sum(a * g for a, g in zip(alpha, gamma))
        ok = True
        # sum_i alpha_i z_i d/dz_i acts on z^u by alpha . u
        for u in terms:
            if sum(a * e for a, e in zip(alpha, u)) != value:
                ok = False
                break
        euler.append((tuple(alpha), ok))
    box = []
    for v in s.lattice.generators:
        plus = [max(x, 0) for x in v]
        minus = [max(-x, 0) for x in v]
        lhs = formal_partial_multi(terms, plus)
        rhs = formal_partial_multi(terms, minus)
        box.append((tuple(v), lhs == rhs))
    return GKZReport(euler, box)
