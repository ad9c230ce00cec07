"""Plücker ideals on the b-alphabet and normal forms modulo them.

The monomial order is degree-then-lexicographic with the variables in the
b-alphabet order: b[-2], b[-1], b[1], b[2], b1', b1'', b2', b2'', then the
pairs b[-2,-1], b[-2,1], b[-2,2], b[-1,1], b[-1,2], b[1,2].

Two ideals are provided.  PLUCKER is generated by the three-term relations
of the first-row/two-row flag plus the Grassmann relation; these hold for
any 4x4 matrix.  SYMPLECTIC adds theta = b[-2,2] + b[-1,1], which vanishes
on Sp(4).  Functions on Sp(4) spanned by irreducible representations live
in the quotient by SYMPLECTIC.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import kernels
from .minors import B_ALPHABET, SP4_INDICES, MinorPoly, bpoly

__all__ = [
    "PLUCKER",
    "SYMPLECTIC",
    "flag_relations",
    "grassmann_relation",
    "theta",
    "generators",
    "groebner_basis",
    "normal_form",
    "in_ideal",
]

PLUCKER = "plucker"
SYMPLECTIC = "symplectic"


def flag_relations():
    """B_i1 B_i2,i3 - B_i2 B_i1,i3 + B_i3 B_i1,i2 for i1 < i2 < i3."""
    out = []
    for i1, i2, i3 in combinations(SP4_INDICES, 3):
        out.append(
            bpoly(f"b[{i1}]") * bpoly(f"b[{i2},{i3}]")
            - bpoly(f"b[{i2}]") * bpoly(f"b[{i1},{i3}]")
            + bpoly(f"b[{i3}]") * bpoly(f"b[{i1},{i2}]")
        )
    return out


def grassmann_relation():
    return (
        bpoly("b[-2,-1]") * bpoly("b[1,2]")
        - bpoly("b[-2,1]") * bpoly("b[-1,2]")
        + bpoly("b[-2,2]") * bpoly("b[-1,1]")
    )


def theta():
    return bpoly("b[-2,2]") + bpoly("b[-1,1]")


def generators(ideal: str = PLUCKER):
    gens = flag_relations() + [grassmann_relation()]
    if ideal == SYMPLECTIC:
        gens.append(theta())
    elif ideal != PLUCKER:
        raise ValueError(f"unknown ideal {ideal!r}")
    return gens


def _key(m):
    return (sum(m), m)


def _lead(p):
    return max(p, key=_key)


def _monic(p):
    lm = _lead(p)
    c = p[lm]
    return {m: v / c for m, v in p.items()}


def _rules(basis):
    rules = []
    for g in basis:
        lm = _lead(g)
        rules.append((lm, [(m, c) for m, c in g.items() if m != lm]))
    return rules


def _spoly(f, g):
    lf, lg = _lead(f), _lead(g)
    lcm = tuple(max(x, y) for x, y in zip(lf, lg))
    def shifted(p, lm):
        q = tuple(x - y for x, y in zip(lcm, lm))
        c = p[lm]
        return {tuple(x + y for x, y in zip(m, q)): v / c for m, v in p.items()}
    return kernels.poly_add_into(shifted(f, lf), shifted(g, lg), -1)


def _buchberger(polys):
    basis = [_monic(p) for p in polys if p]
    pairs = list(combinations(range(len(basis)), 2))
    while pairs:
        i, j = pairs.pop()
        li, lj = _lead(basis[i]), _lead(basis[j])
        # coprime leading monomials give a zero S-polynomial remainder
        if all(x == 0 or y == 0 for x, y in zip(li, lj)):
            continue
        r = kernels.reduce_poly(_spoly(basis[i], basis[j]), _rules(basis))
        if r:
            basis.append(_monic(r))
            k = len(basis) - 1
            pairs.extend((t, k) for t in range(k))
    # minimal basis
    leads = [_lead(g) for g in basis]
    keep = []
    for k, g in enumerate(basis):
        redundant = False
        for t, lt in enumerate(leads):
            if t == k:
                continue
            if all(a >= c for a, c in zip(leads[k], lt)) and (leads[k] != lt or t < k):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    # interreduce
    reduced = []
    for k, g in enumerate(keep):
        others = keep[:k] + keep[k + 1:]
        lm = _lead(g)
        tail = {m: c for m, c in g.items() if m != lm}
        tail = kernels.reduce_poly(tail, _rules(others))
        tail[lm] = Fraction(1)
        reduced.append(tail)
    reduced.sort(key=lambda p: _key(_lead(p)))
    return reduced


@lru_cache(maxsize=None)
def _basis_terms(ideal: str):
    return tuple(
        tuple(sorted(g.items())) for g in _buchberger([g.terms for g in generators(ideal)])
    )


def groebner_basis(ideal: str = PLUCKER):
    """Reduced Groebner basis as a list of monic MinorPoly."""
    return [MinorPoly(B_ALPHABET, dict(t), _trusted=True) for t in _basis_terms(ideal)]


@lru_cache(maxsize=None)
def _cached_rules(ideal: str):
    return _rules([dict(t) for t in _basis_terms(ideal)])


def normal_form(p: MinorPoly, ideal: str = PLUCKER) -> MinorPoly:
    """Unique reduced representative of p modulo the chosen ideal."""
    if p.alphabet is not B_ALPHABET:
        raise ValueError("normal_form works on the b-alphabet only")
    return MinorPoly(B_ALPHABET, kernels.reduce_poly(p.terms, _cached_rules(ideal)), _trusted=True)


def in_ideal(p: MinorPoly, ideal: str = PLUCKER) -> bool:
    return normal_form(p, ideal).is_zero()
