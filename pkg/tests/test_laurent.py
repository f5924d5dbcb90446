import pytest
from hypothesis import given, strategies as st

from asymhecke import _kernels_py
from asymhecke.laurent import (LaurentPoly, ONE, Q, QINV, V, VINV, ZERO,
                               v_power)

coeff_maps = st.dictionaries(
    st.integers(-8, 8),
    st.integers(-50, 50).filter(bool),
    max_size=6,
)
polys = coeff_maps.map(LaurentPoly)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO


@given(polys, polys)
def test_bar_is_ring_involution(a, b):
    assert a.bar().bar() == a
    assert (a + b).bar() == a.bar() + b.bar()
    assert (a * b).bar() == a.bar() * b.bar()


@given(polys)
def test_string_round_trip(a):
    assert LaurentPoly.from_string(a.to_string()) == a


def test_basic_constants():
    assert V * VINV == ONE
    assert Q == V * V
    assert Q * QINV == ONE
    assert v_power(3) == V * V * V
    # (v + v^-1)^2 = v^2 + 2 + v^-2
    assert (V + VINV) ** 2 == Q + LaurentPoly.from_int(2) + QINV


def test_a_plus_membership():
    assert (V + ONE).in_A_plus()
    assert not (V + VINV).in_A_plus()
    assert ZERO.in_A_plus()
    # A+ is closed under + and *
    a, b = V + ONE, Q + V
    assert (a + b).in_A_plus() and (a * b).in_A_plus()


def test_coefficient_and_extremes():
    p = LaurentPoly({-2: 3, 0: -1, 5: 7})
    assert p.coefficient_of(-2) == 3
    assert p.coefficient_of(1) == 0
    assert p.min_exp() == -2 and p.max_exp() == 5


def test_substitute_square():
    p = ONE + V  # 1 + v
    assert p.substitute_square() == ONE + Q


def test_from_string_examples():
    assert LaurentPoly.from_string("3*v^-1 + 2 + v^4") == LaurentPoly(
        {-1: 3, 0: 2, 4: 1}
    )
    assert LaurentPoly.from_string("-v^-1 - v") == -(V + VINV)
    assert LaurentPoly.from_string("0") == ZERO
    with pytest.raises(ValueError):
        LaurentPoly.from_string("v^x")


@given(coeff_maps, coeff_maps, st.integers(-5, 5), st.integers(-3, 3))
def test_kernel_parity(a, b, coeff, shift):
    """Compiled and pure kernels agree on canonical maps."""
    _kernels = pytest.importorskip("asymhecke._kernels")
    assert _kernels.map_add(a, b) == _kernels_py.map_add(a, b)
    assert _kernels.map_mul(a, b) == _kernels_py.map_mul(a, b)
    assert _kernels.map_bar(a) == _kernels_py.map_bar(a)
    assert _kernels.map_scale_shift(a, coeff, shift) == \
        _kernels_py.map_scale_shift(a, coeff, shift)
    acc1, acc2 = dict(b), dict(b)
    _kernels.map_iadd_scaled(acc1, a, coeff, shift)
    _kernels_py.map_iadd_scaled(acc2, a, coeff, shift)
    assert acc1 == acc2
