# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled polynomial kernels; same API and semantics as _kernels_py."""

from fractions import Fraction
import heapq

from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM, PyTuple_GET_ITEM, PyTuple_GET_SIZE
from cpython.ref cimport Py_INCREF

BACKEND = "compiled"


cdef inline tuple _add_exp(tuple a, tuple b):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(a), i
    cdef tuple out = PyTuple_New(n)
    cdef object x
    for i in range(n):
        x = <long>(<object>PyTuple_GET_ITEM(a, i)) + <long>(<object>PyTuple_GET_ITEM(b, i))
        Py_INCREF(x)
        PyTuple_SET_ITEM(out, i, x)
    return out


cdef inline bint _divides(tuple lead, tuple m):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(m), i
    for i in range(n):
        if <long>(<object>PyTuple_GET_ITEM(m, i)) < <long>(<object>PyTuple_GET_ITEM(lead, i)):
            return False
    return True


cdef inline tuple _quot_times(tuple m, tuple lead, tuple t):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(m), i
    cdef tuple out = PyTuple_New(n)
    cdef object x
    for i in range(n):
        x = (<long>(<object>PyTuple_GET_ITEM(m, i)) - <long>(<object>PyTuple_GET_ITEM(lead, i))
             + <long>(<object>PyTuple_GET_ITEM(t, i)))
        Py_INCREF(x)
        PyTuple_SET_ITEM(out, i, x)
    return out


cdef inline tuple _key(tuple m):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(m), i
    cdef long total = 0
    cdef tuple neg = PyTuple_New(n)
    cdef long e
    cdef object x
    for i in range(n):
        e = <long>(<object>PyTuple_GET_ITEM(m, i))
        total += e
        x = -e
        Py_INCREF(x)
        PyTuple_SET_ITEM(neg, i, x)
    return (-total, neg)


def poly_add_into(dict acc, other, scale=1):
    cdef object m, c, v
    for m, c in other.items():
        v = acc.get(m, 0) + scale * c
        if v:
            acc[m] = v
        else:
            acc.pop(m, None)
    return acc


def poly_mul(dict a, dict b):
    cdef dict out = {}
    cdef tuple ma, mb, m
    cdef object ca, cb, v
    if len(a) > len(b):
        a, b = b, a
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = _add_exp(ma, mb)
            v = out.get(m, 0) + ca * cb
            if v:
                out[m] = v
            else:
                del out[m]
    return out


def poly_pow(dict a, long n, long nvars):
    cdef dict result = {tuple([0] * nvars): Fraction(1)}
    cdef dict base = a
    while n:
        if n & 1:
            result = poly_mul(result, base)
        n >>= 1
        if n:
            base = poly_mul(base, base)
    return result


def reduce_poly(p, list rules):
    cdef dict work = dict(p)
    cdef list heap = [(_key(m), m) for m in work]
    cdef dict out = {}
    cdef tuple m, lead, tm, nm
    cdef object c, tc, old
    cdef list tail
    heapq.heapify(heap)
    while heap:
        m = heapq.heappop(heap)[1]
        c = work.pop(m, 0)
        if not c:
            continue
        for lead, tail in rules:
            if _divides(lead, m):
                for tm, tc in tail:
                    nm = _quot_times(m, lead, tm)
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
    cdef dict out = {}
    cdef tuple m, nm
    cdef object c, coeff, v
    cdef Py_ssize_t i, n
    cdef long e, target
    cdef list buf
    for m, c in p.items():
        n = PyTuple_GET_SIZE(m)
        for i in range(n):
            e = <long>(<object>PyTuple_GET_ITEM(m, i))
            if e == 0:
                continue
            images = table[i]
            if not images:
                continue
            for target, coeff in images:
                buf = list(m)
                buf[i] = e - 1
                buf[target] = buf[target] + 1
                nm = tuple(buf)
                v = out.get(nm, 0) + c * e * coeff
                if v:
                    out[nm] = v
                else:
                    del out[nm]
    return out


def sparse_dot_rows(dict rows, pivots, vec):
    cdef dict v = dict(vec)
    cdef dict row
    cdef object col, c, k, x, nv
    for col in pivots:
        c = v.get(col)
        if c:
            row = rows[col]
            for k, x in row.items():
                nv = v.get(k, 0) - c * x
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
    return v
