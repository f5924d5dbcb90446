# cython: language_level=3
"""Compiled kernels for Laurent polynomial arithmetic.

Same contract as ``_kernels_py``: polynomials are dicts {int exponent:
nonzero int coefficient}.  Coefficients stay Python ints (arbitrary
precision is part of the contract), the win is the compiled dict traffic.
"""

IMPLEMENTATION = "cython"


def map_add(dict a, dict b):
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    cdef dict out = dict(a)
    cdef object e, c, s
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def map_iadd_scaled(dict acc, dict b, coeff, shift):
    if not coeff or not b:
        return acc
    cdef object e, c, k, s
    for e, c in b.items():
        k = e + shift
        s = acc.get(k, 0) + coeff * c
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
    return acc


def map_mul(dict a, dict b):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    cdef dict out = {}
    cdef object ea, ca, eb, cb, k, s
    for ea, ca in a.items():
        for eb, cb in b.items():
            k = ea + eb
            s = out.get(k, 0) + ca * cb
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def map_scale_shift(dict a, coeff, shift):
    if not coeff:
        return {}
    if coeff == 1 and shift == 0:
        return dict(a)
    cdef dict out = {}
    cdef object e, c
    for e, c in a.items():
        out[e + shift] = coeff * c
    return out


def map_bar(dict a):
    cdef dict out = {}
    cdef object e, c
    for e, c in a.items():
        out[-e] = c
    return out
