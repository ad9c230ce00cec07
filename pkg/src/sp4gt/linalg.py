"""Exact linear algebra over the rationals on sparse rows."""

from __future__ import annotations

from fractions import Fraction

from . import kernels


def _size(x: Fraction) -> int:
    return x.numerator.bit_length() + x.denominator.bit_length()


class EchelonSpace:
    """Incrementally maintained reduced row echelon form of sparse vectors.

    Vectors are dicts key -> Fraction.  Each stored row has pivot entry 1
    and no other stored row has a nonzero entry in its pivot column.
    Optionally tracks how each row is expressed in the inserted vectors.
    """

    def __init__(self, track: bool = False):
        self.rows = {}
        self.pivots = []
        self.track = track
        self.combos = {}
        self.count = 0

    def __len__(self):
        return len(self.pivots)

    def reduce(self, vec):
        return kernels.sparse_dot_rows(self.rows, self.pivots, vec)

    def _reduce_tracked(self, vec, combo):
        v = dict(vec)
        combo = dict(combo)
        for col in self.pivots:
            c = v.get(col)
            if c:
                kernels.poly_add_into(v, self.rows[col], -c)
                kernels.poly_add_into(combo, self.combos[col], -c)
        return v, combo

    def add(self, vec) -> bool:
        """Insert vec; return True if it was independent of the span."""
        # rejected vectors leave no trace, so accepted rows are numbered densely
        idx = len(self.pivots)
        self.count += 1
        if self.track:
            v, combo = self._reduce_tracked(vec, {idx: Fraction(1)})
        else:
            v, combo = self.reduce(vec), None
        if not v:
            return False
        # pivot: the entry with the smallest bit-size, ties by key order
        col = min(v, key=lambda k: (_size(v[k]), k))
        c = v[col]
        v = {k: x / c for k, x in v.items()}
        if combo is not None:
            combo = {k: x / c for k, x in combo.items()}
        for pcol in self.pivots:
            row = self.rows[pcol]
            x = row.get(col)
            if x:
                kernels.poly_add_into(row, v, -x)
                if combo is not None:
                    kernels.poly_add_into(self.combos[pcol], combo, -x)
        self.rows[col] = v
        self.pivots.append(col)
        if combo is not None:
            self.combos[col] = combo
        return True

    def contains(self, vec) -> bool:
        return not self.reduce(vec)

    def coordinates(self, vec):
        """Coordinates of vec in terms of the stored rows (keyed by pivot)."""
        rem = self.reduce(vec)
        if rem:
            return None
        return {col: vec.get(col, Fraction(0)) for col in self.pivots if vec.get(col)}


def rank(rows) -> int:
    space = EchelonSpace()
    for r in rows:
        space.add({k: Fraction(x) for k, x in enumerate(r) if x})
    return len(space)


def solve(matrix, rhs):
    """Solve matrix * x = rhs exactly.

    ``matrix`` is a list of rows (dense); returns (particular solution,
    nullspace basis) or None if inconsistent.  Free variables are set to 0.
    """
    n = len(matrix[0]) if matrix else 0
    m = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(matrix, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pc = m[r][c]
        m[r] = [x / pc for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                q = m[i][c]
                m[i] = [x - q * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    for i in range(r, len(m)):
        if m[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = m[i][n]
    free = [c for c in range(n) if c not in pivots]
    null = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -m[i][fc]
        null.append(v)
    return x, null


def nullspace(matrix, ncols=None):
    """Basis of {x : matrix x = 0} as integer vectors."""
    if not matrix:
        n = ncols or 0
        return [[int(i == j) for j in range(n)] for i in range(n)]
    res = solve(matrix, [0] * len(matrix))
    _, null = res
    out = []
    for v in null:
        den = 1
        for x in v:
            den = den * x.denominator // _gcd(den, x.denominator)
        out.append([int(x * den) for x in v])
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def mat_mul(x, y):
    k = len(y)
    m = len(y[0]) if y else 0
    return [[sum((row[t] * y[t][c] for t in range(k)), Fraction(0)) for c in range(m)] for row in x]


def mat_sub(x, y):
    return [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(x, y)]


def mat_add(x, y):
    return [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(x, y)]


def mat_scale(x, c):
    return [[a * c for a in r] for r in x]


def zeros(n, m=None):
    return [[Fraction(0)] * (m if m is not None else n) for _ in range(n)]


def eye(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def inverse(x):
    n = len(x)
    m = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(x)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        pc = m[c][c]
        m[c] = [v / pc for v in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                q = m[i][c]
                m[i] = [a - q * b for a, b in zip(m[i], m[c])]
    return [row[n:] for row in m]
