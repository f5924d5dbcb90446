"""Exact arithmetic in Z[v, v^-1] with v = q^(1/2).

Everything Hecke-side has coefficients here.  Working in v keeps half-integer
powers of q exact; q itself is v**2.  Coefficients are Python ints, so there
is no overflow and no floating point anywhere.

The coefficient-map kernels are swappable: a compiled Cython implementation
is used when available, the pure-Python twin otherwise.  Set
``ASYMHECKE_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os
import re

from . import _kernels_py

if os.environ.get("ASYMHECKE_PURE"):
    _k = _kernels_py
else:
    try:
        from . import _kernels as _k  # type: ignore[attr-defined]
    except ImportError:
        _k = _kernels_py

KERNEL_IMPLEMENTATION = _k.IMPLEMENTATION


class LaurentPoly:
    """Integer-coefficient Laurent polynomial in v.

    Immutable; the coefficient dict maps exponent -> nonzero coefficient
    (canonical form, zero never stored).
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=None, *, _raw=False):
        if coeffs is None:
            coeffs = {}
        if not _raw:
            coeffs = {e: c for e, c in dict(coeffs).items() if c}
        self.coeffs = coeffs
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> "LaurentPoly":
        return cls({0: n} if n else {}, _raw=True)

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls({exp: coeff} if coeff else {}, _raw=True)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        return LaurentPoly(_k.map_add(self.coeffs, other.coeffs), _raw=True)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(_k.map_scale_shift(self.coeffs, -1, 0), _raw=True)

    def __sub__(self, other):
        other = _coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        return LaurentPoly(_k.map_mul(self.coeffs, other.coeffs), _raw=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers only for monomials; invert explicitly")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale_shift(self, coeff: int, shift: int) -> "LaurentPoly":
        """coeff * v^shift * self."""
        return LaurentPoly(_k.map_scale_shift(self.coeffs, coeff, shift), _raw=True)

    def bar(self) -> "LaurentPoly":
        """The bar involution v -> v^-1."""
        return LaurentPoly(_k.map_bar(self.coeffs), _raw=True)

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coefficient_of(self, exp: int) -> int:
        return self.coeffs.get(exp, 0)

    def in_A_plus(self) -> bool:
        """True iff self lies in Z[v], i.e. every exponent is >= 0."""
        return all(e >= 0 for e in self.coeffs)

    def min_exp(self):
        """Smallest exponent with nonzero coefficient; None for 0."""
        return min(self.coeffs) if self.coeffs else None

    def max_exp(self):
        return max(self.coeffs) if self.coeffs else None

    def substitute_square(self) -> "LaurentPoly":
        """Reinterpret exponents as powers of the square root: p(v) -> p(v^2).

        Used to move between polynomials in q and polynomials in v = q^(1/2).
        """
        return LaurentPoly({2 * e: c for e, c in self.coeffs.items()}, _raw=True)

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.coeffs.items()))
        return self._hash

    # -- serialization ---------------------------------------------------

    def to_string(self, var: str = "v") -> str:
        """Text form like ``3*v^-1 + 2 + v^4`` (ascending exponents)."""
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                term = str(c)
            else:
                pw = var if e == 1 else f"{var}^{e}"
                if c == 1:
                    term = pw
                elif c == -1:
                    term = f"-{pw}"
                else:
                    term = f"{c}*{pw}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            if term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out

    @classmethod
    def from_string(cls, s: str, var: str = "v") -> "LaurentPoly":
        s = s.strip()
        if s in ("0", ""):
            return ZERO
        s = s.replace(" - ", " + -")
        coeffs: dict = {}
        for raw in s.split(" + "):
            term = raw.strip()
            sign = 1
            while term[:1] in ("+", "-"):
                if term[0] == "-":
                    sign = -sign
                term = term[1:].strip()
            m = re.fullmatch(
                rf"(?P<c>\d+)?(?:(?(c)\*|)(?P<v>{re.escape(var)})(?:\^(?P<e>-?\d+))?)?",
                term,
            )
            if not m or (m.group("c") is None and m.group("v") is None):
                raise ValueError(f"bad Laurent term: {raw!r}")
            c = sign * (int(m.group("c")) if m.group("c") is not None else 1)
            if m.group("v") is None:
                e = 0
            else:
                e = int(m.group("e")) if m.group("e") is not None else 1
            coeffs[e] = coeffs.get(e, 0) + c
        return cls(coeffs)

    def __repr__(self):
        return f"LaurentPoly({self.to_string()})"


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.from_int(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


ZERO = LaurentPoly()
ONE = LaurentPoly.from_int(1)
V = LaurentPoly.monomial(1, 1)
VINV = LaurentPoly.monomial(1, -1)
Q = LaurentPoly.monomial(1, 2)
QINV = LaurentPoly.monomial(1, -2)


def v_power(n: int) -> LaurentPoly:
    return LaurentPoly.monomial(1, n)
