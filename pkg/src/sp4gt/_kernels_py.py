"""Pure-Python polynomial kernels.

Polynomials are dicts mapping exponent tuples to Fractions.  The compiled
module ``_kernels`` exports the same functions with the same semantics.
"""

from fractions import Fraction
import heapq

BACKEND = "python"


def poly_add_into(acc, other, scale=1):
    """acc += scale * other, in place; zero coefficients are dropped."""
    for m, c in other.items():
        v = acc.get(m, 0) + scale * c
        if v:
            acc[m] = v
        else:
            acc.pop(m, None)
    return acc


def poly_mul(a, b):
    out = {}
    if len(a) > len(b):
        a, b = b, a
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple([x + y for x, y in zip(ma, mb)])
            v = out.get(m, 0) + ca * cb
            if v:
                out[m] = v
            else:
                del out[m]
    return out


def poly_pow(a, n, nvars):
    result = {tuple([0] * nvars): Fraction(1)}
    base = a
    while n:
        if n & 1:
            result = poly_mul(result, base)
        n >>= 1
        if n:
            base = poly_mul(base, base)
    return result


def _key(m):
    # max-heap key for the degree-then-lexicographic order
    return (-sum(m), tuple([-e for e in m]))


def reduce_poly(p, rules):
    """Full normal form of p modulo a Groebner basis.

    ``rules`` is a list of (lead, tail) pairs where the basis element is
    lead + sum(tail) with a monic leading monomial, tail given as a list of
    (exponent, coefficient) pairs.
    """
    work = dict(p)
    heap = [(_key(m), m) for m in work]
    heapq.heapify(heap)
    out = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, 0)
        if not c:
            continue
        for lead, tail in rules:
            if all(e >= l for e, l in zip(m, lead)):
                q = [e - l for e, l in zip(m, lead)]
                for tm, tc in tail:
                    nm = tuple([x + y for x, y in zip(q, tm)])
                    old = work.get(nm)
                    if old is None:
                        work[nm] = -c * tc
                        heapq.heappush(heap, (_key(nm), nm))
                    else:
                        work[nm] = old - c * tc
                break
        else:
            out[m] = c
    return out


def apply_derivation(p, table):
    """Apply a derivation given on generators.

    ``table[i]`` is a list of (target, coeff): the derivation sends
    variable i to sum(coeff * variable target).
    """
    out = {}
    for m, c in p.items():
        for i, e in enumerate(m):
            if e == 0:
                continue
            images = table[i]
            if not images:
                continue
            for target, coeff in images:
                nm = list(m)
                nm[i] -= 1
                nm[target] += 1
                nm = tuple(nm)
                v = out.get(nm, 0) + c * e * coeff
                if v:
                    out[nm] = v
                else:
                    del out[nm]
    return out


def sparse_dot_rows(rows, pivots, vec):
    """Reduce ``vec`` (dict col -> Fraction) against echelon ``rows``.

    ``rows`` maps pivot column to a dict row whose pivot entry is 1.
    ``pivots`` is the pivot list in insertion order.  Returns the reduced
    vector; the caller decides what to do with a nonzero remainder.
    """
    v = dict(vec)
    for col in pivots:
        c = v.get(col)
        if c:
            for k, x in rows[col].items():
                nv = v.get(k, 0) - c * x
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
    return v
