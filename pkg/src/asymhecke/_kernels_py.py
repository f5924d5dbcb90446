"""Pure-Python kernels for Laurent polynomial arithmetic.

Polynomials are plain dicts mapping integer exponents to nonzero integer
coefficients.  These functions are the hot inner loop of every Hecke-algebra
computation; a compiled twin lives in ``_kernels.pyx`` with the same
signatures and the active implementation is chosen in ``laurent.py``.
"""

IMPLEMENTATION = "pure-python"


def map_add(a, b):
    """Sum of two coefficient maps, canonical (no zero values)."""
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def map_iadd_scaled(acc, b, coeff, shift):
    """In-place acc += coeff * v^shift * b.  Returns acc."""
    if not coeff or not b:
        return acc
    for e, c in b.items():
        k = e + shift
        s = acc.get(k, 0) + coeff * c
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
    return acc


def map_mul(a, b):
    """Product of two coefficient maps."""
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            k = ea + eb
            s = out.get(k, 0) + ca * cb
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def map_scale_shift(a, coeff, shift):
    """coeff * v^shift * a as a fresh map."""
    if not coeff:
        return {}
    if coeff == 1 and shift == 0:
        return dict(a)
    return {e + shift: coeff * c for e, c in a.items()}


def map_bar(a):
    """Exponent negation v -> v^-1."""
    return {-e: c for e, c in a.items()}
