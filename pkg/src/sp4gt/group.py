"""Exact group samples: random symplectic matrices and the covering map.

Sp(4) preserves the form w = e[-2]^e[2] + e[-1]^e[1].  Matrices act on row
vectors from the right, rows and columns indexed by (-2,-1,1,2).  The
covering Sp(4) -> SO(5) is the action on the five-dimensional subspace of
wedge^2 V cut out by w, with basis

    v[-2] = e[-2]^e[-1]      v[-1] = e[-2]^e[1]
    v[0]  = (e[-2]^e[2] - e[-1]^e[1]) / sqrt(2)
    v[1]  = e[-1]^e[2]       v[2]  = e[2]^e[1]

in which the induced symmetric form is anti-diagonal with all entries 1.
The rational variant uses v0' = sqrt(2) v[0]; there the form has a 2 in
the middle.  Entry (r, c) of an image is the coefficient of v[c] in the
image of v[r].
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .exact import QSqrt2
from .minors import A_ALPHABET, B_ALPHABET, SO5_INDICES, SP4_INDICES, MinorPoly, MinorSymbol
from .operators import f_matrix

Matrix = list  # list of rows


def identity(n):
    return [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]


def matmul(x, y):
    n, k, m = len(x), len(y), len(y[0])
    return [[sum((x[r][t] * y[t][c] for t in range(k)), Fraction(0)) for c in range(m)] for r in range(n)]


def transpose(x):
    return [list(r) for r in zip(*x)]


def determinant(x):
    """Exact determinant by fraction-free elimination over Fractions."""
    m = [list(r) for r in x]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                q = m[r][c] / m[c][c]
                m[r] = [a - q * b for a, b in zip(m[r], m[c])]
    return det


def _pos(i):
    return SP4_INDICES.index(i)


def symplectic_form():
    J = [[Fraction(0)] * 4 for _ in range(4)]
    J[_pos(-2)][_pos(2)] = Fraction(1)
    J[_pos(2)][_pos(-2)] = Fraction(-1)
    J[_pos(-1)][_pos(1)] = Fraction(1)
    J[_pos(1)][_pos(-1)] = Fraction(-1)
    return J


def is_symplectic(M) -> bool:
    J = symplectic_form()
    return matmul(matmul(transpose(M), J), M) == J


def antidiagonal_form(middle=1):
    Q = [[Fraction(0)] * 5 for _ in range(5)]
    for k in range(5):
        Q[k][4 - k] = Fraction(1)
    Q[2][2] = Fraction(middle)
    return Q


ROOT_PAIRS = tuple((i, j) for i in SP4_INDICES for j in SP4_INDICES if i != j)


def _exp_nilpotent(N):
    """exp(N) for a nilpotent 4x4 matrix, as a finite sum."""
    out = identity(4)
    term = identity(4)
    for k in range(1, 5):
        term = [[x / k for x in row] for row in matmul(term, N)]
        if all(x == 0 for row in term for x in row):
            break
        out = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(out, term)]
    return out


def random_symplectic(seed: int, steps: int = 6):
    """Product of ``steps`` factors exp(t f) over nilpotent root elements f."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    rng = random.Random(seed)
    M = identity(4)
    for _ in range(steps):
        i, j = rng.choice(ROOT_PAIRS)
        t = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        N = [[t * x for x in row] for row in f_matrix(i, j)]
        M = matmul(M, _exp_nilpotent(N))
    return M


# the five basis bivectors as {(i, j): coeff} with i < j
_COVER_BASIS = (
    {(-2, -1): 1},
    {(-2, 1): 1},
    {(-2, 2): 1, (-1, 1): -1},
    {(-1, 2): 1},
    {(1, 2): -1},
)


def _wedge_rows(M, i, j):
    """Coordinates of (e_i M) ^ (e_j M) on the pairs k < l."""
    ri, rj = M[_pos(i)], M[_pos(j)]
    return {
        (k, l): ri[_pos(k)] * rj[_pos(l)] - ri[_pos(l)] * rj[_pos(k)]
        for k, l in combinations(SP4_INDICES, 2)
    }


def _coords(biv):
    """Coordinates of a bivector of the invariant subspace in the rational basis."""
    return [
        biv[(-2, -1)],
        biv[(-2, 1)],
        biv[(-2, 2)],
        biv[(-1, 2)],
        -biv[(1, 2)],
    ]


def covering_map(M):
    """Rational image of M in the basis (v[-2], v[-1], v0', v[1], v[2]).

    The image preserves the anti-diagonal form with middle entry 2.
    """
    if not is_symplectic(M):
        raise ValueError("matrix is not symplectic")
    rows = []
    for vec in _COVER_BASIS:
        img = {kl: Fraction(0) for kl in combinations(SP4_INDICES, 2)}
        for (i, j), c in vec.items():
            for kl, x in _wedge_rows(M, i, j).items():
                img[kl] += c * x
        if img[(-2, 2)] + img[(-1, 1)] != 0:
            raise ArithmeticError("image left the invariant subspace")
        rows.append(_coords(img))
    return rows


def covering_map_sqrt2(M):
    """Image of M in the orthonormalized basis, entries in Q(sqrt 2).

    N = D^-1 N' D with D = diag(1, 1, sqrt2, 1, 1) in row-vector coordinates.
    """
    Np = covering_map(M)
    s = QSqrt2(0, 1)
    out = []
    for r in range(5):
        row = []
        for c in range(5):
            x = QSqrt2(Np[r][c])
            if r == 2 and c != 2:
                x = x / s
            if c == 2 and r != 2:
                x = x * s
            row.append(x)
        out.append(row)
    return out


@dataclass
class GroupSample:
    """An Sp(4) element together with its SO(5) image and all minor values."""

    sp4_matrix: list
    so5_image: list
    b_values: dict = field(default_factory=dict)
    a_values: dict = field(default_factory=dict)

    @property
    def minor_values(self):
        out = dict(self.b_values)
        out.update(self.a_values)
        return out


def b_minor_values(M):
    top, second = M[_pos(-2)], M[_pos(-1)]
    vals = {}
    for i in SP4_INDICES:
        vals[MinorSymbol("B1", (i,))] = top[_pos(i)]
    for i, j in combinations(SP4_INDICES, 2):
        vals[MinorSymbol("B2", (i, j))] = top[_pos(i)] * second[_pos(j)] - top[_pos(j)] * second[_pos(i)]
    for k in (1, 2):
        for pr in (1, 2):
            vals[MinorSymbol("B1P", (k,), pr)] = vals[MinorSymbol("B1", (k,))]
    return vals


def a_minor_values(N):
    """Minor values of an SO(5) matrix given over Q(sqrt 2)."""
    p = SO5_INDICES.index
    top, second = N[p(-2)], N[p(-1)]
    vals = {}
    for i in SO5_INDICES:
        vals[MinorSymbol("A1", (i,))] = top[p(i)]
    for i, j in combinations(SO5_INDICES, 2):
        vals[MinorSymbol("A2", (i, j))] = top[p(i)] * second[p(j)] - top[p(j)] * second[p(i)]
    return vals


def make_sample(M) -> GroupSample:
    N = covering_map(M)
    return GroupSample(
        sp4_matrix=M,
        so5_image=N,
        b_values=b_minor_values(M),
        a_values=a_minor_values(covering_map_sqrt2(M)),
    )


def random_sample(seed: int, steps: int = 6) -> GroupSample:
    return make_sample(random_symplectic(seed, steps))


def sample_set(count: int, seed: int = 0, steps: int = 6):
    return [random_sample(seed * 100003 + k, steps) for k in range(count)]


def eval_assignment(p: MinorPoly, sample: GroupSample):
    """Evaluate p on a sample; b-polynomials give a Fraction, a-polynomials a QSqrt2."""
    alph = p.alphabet
    values = sample.b_values if alph is B_ALPHABET else sample.a_values
    vals = []
    for s in alph.symbols:
        vals.append(values.get(s))
    zero = Fraction(0) if alph is B_ALPHABET else QSqrt2(0)
    total = zero
    for m, c in p.terms.items():
        term = zero + c
        for k, e in enumerate(m):
            if e:
                v = vals[k]
                if v is None:
                    raise KeyError(f"no value for {alph.symbols[k].name}")
                term = term * (v ** e)
        total = total + term
    return total


def eval_on(p: MinorPoly, M):
    """Evaluate on a bare 4x4 matrix (b-alphabet only, no symplectic check)."""
    return eval_assignment(p, GroupSample(M, [], b_minor_values(M), {}))


def random_matrix(seed: int, lo=-4, hi=4):
    """A random rational 4x4 matrix, used where only GL(4) identities matter."""
    rng = random.Random(seed)
    return [[Fraction(rng.randint(lo, hi), rng.randint(1, 3)) for _ in range(4)] for _ in range(4)]
