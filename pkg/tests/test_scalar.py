import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cofrob.errors import DivisionByZero, IncompatibleConductor
from cofrob.scalar import (
    field,
    format_scalar,
    invert,
    order_of_unity,
    parse_scalar,
    primitive_root,
    promote,
    root_of_unity,
)

CONDUCTORS = [1, 2, 3, 4, 5, 8, 12]


def test_root_of_unity_examples():
    assert root_of_unity(field(4), 2) == -1
    assert root_of_unity(field(1), 0) == 1
    z = root_of_unity(field(3), 1)
    assert z ** 3 == 1 and z != 1


def test_invert_examples():
    f1, f3, f4 = field(1), field(3), field(4)
    assert invert(f1(2)) == f1(Fraction(1, 2))
    z3 = f3.zeta()
    assert invert(z3) == z3 ** 2
    z4 = f4.zeta()
    assert invert(1 + z4) == (1 - z4) / 2
    with pytest.raises(DivisionByZero):
        invert(f3.zero)
    with pytest.raises(ZeroDivisionError):
        f3.one / f3.zero


def test_order_examples():
    f = field(3)
    assert order_of_unity(-f.one) == 2
    assert order_of_unity(f.zeta()) == 3
    assert order_of_unity(f(2)) is None
    assert order_of_unity(f.zero) is None


def test_promote_examples():
    assert promote(field(1)(-1), field(4)) == -1
    z2 = field(2).zeta()
    assert promote(z2, field(6)) == root_of_unity(field(6), 3)
    assert promote(field(3).zeta(), field(12)) == root_of_unity(field(12), 4)
    with pytest.raises(IncompatibleConductor):
        promote(field(3).zeta(), field(4))


def test_mixed_fields_refuse():
    with pytest.raises(IncompatibleConductor):
        field(3).zeta() + field(4).zeta()


def test_primitive_root_in_even_twin():
    # Q(zeta_3) holds a primitive 6th root as -zeta_3^2
    w = primitive_root(field(3), 6)
    assert order_of_unity(w) == 6


def test_text_round_trip():
    f = field(12)
    x = parse_scalar("1/2 - 3*z^2 + z", f)
    assert parse_scalar(format_scalar(x), f) == x
    assert parse_scalar("z^3", field(3)) == 1


@st.composite
def elements(draw, n):
    f = field(n)
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7),
                           min_size=f.degree, max_size=f.degree))
    return f.from_coeffs(coeffs)


@pytest.mark.parametrize("n", CONDUCTORS)
@given(data=st.data())
def test_field_axioms(n, data):
    a, b, c = (data.draw(elements(n)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a:
        assert a * invert(a) == 1


@pytest.mark.parametrize("n,m", [(1, 4), (2, 6), (3, 12), (4, 8), (5, 10)])
@given(data=st.data())
def test_promote_is_ring_map(n, m, data):
    a, b = data.draw(elements(n)), data.draw(elements(n))
    t = field(m)
    assert promote(a * b, t) == promote(a, t) * promote(b, t)
    assert promote(a + b, t) == promote(a, t) + promote(b, t)


def test_order_of_roots_exhaustive():
    for n in range(1, 25):
        f = field(n)
        for k in range(n):
            assert order_of_unity(root_of_unity(f, k)) == n // math.gcd(n, k)
