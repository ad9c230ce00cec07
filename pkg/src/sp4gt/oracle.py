"""Brute-force construction of irreducible representations as polynomial spaces.

The representation with highest weight [m2, m1] is realized inside the
functions on Sp(4) (polynomials in b-minors modulo the symplectic ideal) as
the span of everything reachable from b[-2,-1]^(m2-m1) * b[-2]^(2 m1) by
the four lowering operators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .diagrams import HighestWeight, weyl_dim
from .ideals import SYMPLECTIC, normal_form
from .linalg import EchelonSpace, solve
from .minors import B_ALPHABET, MinorPoly, bpoly
from .operators import apply_operator, f

RAISING = ((-2, -1), (-2, 1), (-2, 2), (-1, 1))
LOWERING = ((-1, -2), (1, -2), (2, -2), (1, -1))


class NotInSpan(ValueError):
    pass


def _index_weights():
    """Per b-alphabet variable: contribution to the (f[-2,-2], f[-1,-1]) weight."""
    out = []
    for s in B_ALPHABET.symbols:
        x = sum((i == -2) - (i == 2) for i in s.idx)
        y = sum((i == -1) - (i == 1) for i in s.idx)
        out.append((x, y))
    return out


_WEIGHTS = _index_weights()


def monomial_weight(m):
    x = sum(e * w[0] for e, w in zip(m, _WEIGHTS))
    y = sum(e * w[1] for e, w in zip(m, _WEIGHTS))
    return (x, y)


def split_by_weight(p: MinorPoly):
    parts = {}
    for m, c in p.terms.items():
        parts.setdefault(monomial_weight(m), {})[m] = c
    return parts


def poly_weight(p: MinorPoly):
    """The sp4 weight of a weight-homogeneous polynomial (None if zero)."""
    ws = {monomial_weight(m) for m in p.terms}
    if not ws:
        return None
    if len(ws) > 1:
        raise ValueError("polynomial is not weight-homogeneous")
    return ws.pop()


def highest_vector(w: HighestWeight) -> MinorPoly:
    a_ = (w.m2 - w.m1).to_int()
    b_ = w.m1.twice
    return bpoly("b[-2,-1]") ** a_ * bpoly("b[-2]") ** b_


@dataclass
class RepSpace:
    weight: HighestWeight
    basis: list = field(default_factory=list)
    weight_table: dict = field(default_factory=dict)
    spaces: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _insert(self, p: MinorPoly) -> bool:
        wt = poly_weight(p)
        space = self.spaces.setdefault(wt, EchelonSpace(track=True))
        if space.add(p.terms):
            self.weight_table.setdefault(wt, []).append(len(self.basis))
            self.basis.append(p)
            return True
        return False

    def coordinates(self, p: MinorPoly):
        """Exact coordinates of a normal-form polynomial on the basis."""
        coords = [Fraction(0)] * self.dim
        for wt, part in split_by_weight(p).items():
            space = self.spaces.get(wt)
            if space is None:
                raise NotInSpan(f"weight {wt} does not occur")
            rem, combo = space._reduce_tracked(part, {})
            if rem:
                raise NotInSpan("polynomial is not in the span")
            # part = sum over pivots of part[pivot] * row, rows are combos of inserted vectors
            local = self.weight_table[wt]
            for col in space.pivots:
                c = part.get(col)
                if c:
                    for k, x in space.combos[col].items():
                        coords[local[k]] += c * x
        return coords

    def contains(self, p: MinorPoly) -> bool:
        try:
            self.coordinates(p)
            return True
        except NotInSpan:
            return False

    def to_json(self):
        return {
            "weight": self.weight.to_json(),
            "dim": self.dim,
            "basis": [p.to_json() for p in self.basis],
        }


_CACHE = {}


def build_irrep(w: HighestWeight, use_cache: bool = True) -> RepSpace:
    key = w.key()
    if use_cache and key in _CACHE:
        return _CACHE[key]
    rep = RepSpace(w)
    hv = normal_form(highest_vector(w), SYMPLECTIC)
    rep._insert(hv)
    frontier = [hv]
    cap = int(4 * (w.m2 + w.m1).to_fraction()) + 8
    ops = [f(i, j) for i, j in LOWERING]
    steps = 0
    while frontier:
        steps += 1
        if steps > cap:
            raise RuntimeError("closure did not terminate within the depth cap")
        nxt = []
        for p in frontier:
            for op in ops:
                q = normal_form(apply_operator(op, p), SYMPLECTIC)
                if q and rep._insert(q):
                    nxt.append(q)
        frontier = nxt
    if use_cache:
        _CACHE[key] = rep
    return rep


def expand_in_basis(p: MinorPoly, r: RepSpace):
    return r.coordinates(p)


def operator_matrix(r: RepSpace, op, ideal=SYMPLECTIC):
    """Matrix of op on r.basis: column j holds the coordinates of op(basis[j])."""
    n = r.dim
    cols = [r.coordinates(normal_form(apply_operator(op, p), ideal)) for p in r.basis]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def h_highest_subspace(r: RepSpace, s) -> list:
    """Kernel of f[-2,1] inside the eigenspace of f[-2,-2] - f[1,1] with eigenvalue 2s."""
    twice_s = int(Fraction(s) * 2) if not hasattr(s, "twice") else s.twice
    raise_op = f(-2, 1)
    out = []
    for wt, idxs in sorted(r.weight_table.items()):
        if wt[0] + wt[1] != twice_s:
            continue
        images = [r.coordinates(normal_form(apply_operator(raise_op, r.basis[k]), SYMPLECTIC)) for k in idxs]
        rows = [[images[j][i] for j in range(len(idxs))] for i in range(r.dim)]
        rows = [row for row in rows if any(row)]
        if not rows:
            kernel = [[Fraction(int(a == b)) for b in range(len(idxs))] for a in range(len(idxs))]
        else:
            _, kernel = solve(rows, [0] * len(rows))
        for vec in kernel:
            p = MinorPoly.zero(B_ALPHABET)
            for c, k in zip(vec, idxs):
                if c:
                    p = p + r.basis[k] * c
            out.append(p)
    return out


def branching(r: RepSpace):
    """Map s2 -> dim of the h-highest subspace."""
    out = {}
    twice_vals = sorted({wt[0] + wt[1] for wt in r.weight_table if wt[0] + wt[1] >= 0}, reverse=True)
    for t in twice_vals:
        d = len(h_highest_subspace(r, Fraction(t, 2)))
        if d:
            out[Fraction(t, 2)] = d
    return out
