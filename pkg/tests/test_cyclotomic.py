import cmath
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gspringer.cyclotomic import Cyclotomic, cyclotomic_polynomial


def to_complex(x: Cyclotomic) -> complex:
    z = cmath.exp(2j * cmath.pi / x.n)
    return sum(float(c) * z ** k for k, c in enumerate(x.coeffs))


orders = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 24])


@st.composite
def elements(draw, n=None):
    n = n or draw(orders)
    mult = draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))
    scale = draw(st.sampled_from([Fraction(1), Fraction(1, 2), Fraction(-2, 3)]))
    return Cyclotomic.from_exponents(n, [scale * m for m in mult])


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert len(cyclotomic_polynomial(12)) - 1 == 4


def test_roots_of_unity_sum_to_zero():
    for n in (2, 3, 5, 6, 12):
        total = sum((Cyclotomic.root_of_unity(n, k) for k in range(n)), Cyclotomic.from_int(n, 0))
        assert total == 0
        assert Cyclotomic.root_of_unity(n, 1) * Cyclotomic.root_of_unity(n, n - 1) == 1


@given(elements(), elements())
def test_arithmetic_matches_complex_numbers(a, b):
    assert abs(to_complex(a + b) - (to_complex(a) + to_complex(b))) < 1e-9
    assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-8
    assert abs(to_complex(a - b) - (to_complex(a) - to_complex(b))) < 1e-9
    assert abs(to_complex(a.conjugate()) - to_complex(a).conjugate()) < 1e-9


@given(elements(), st.sampled_from([2, 3, 4]))
def test_lift_preserves_value(a, k):
    assert a.lift(a.n * k) == a
    assert abs(to_complex(a.lift(a.n * k)) - to_complex(a)) < 1e-9


def test_lift_requires_divisibility():
    with pytest.raises(ValueError):
        Cyclotomic.root_of_unity(4, 1).lift(6)


def test_equality_across_fields_and_with_rationals():
    i4 = Cyclotomic.root_of_unity(4, 1)
    i12 = Cyclotomic.root_of_unity(12, 3)
    assert i4 == i12
    assert i4 * i4 == -1
    assert Cyclotomic.from_int(5, Fraction(3, 4)) == Fraction(3, 4)
    assert hash(Cyclotomic.from_int(7, 2)) == hash(Cyclotomic.from_int(3, 2))
    assert Cyclotomic.root_of_unity(3, 1) != 1
    assert Cyclotomic.from_int(3, 2).is_rational() and not i4.is_rational()


def test_str_is_exact():
    assert "z4" in str(Cyclotomic.root_of_unity(4, 1))
    assert str(Cyclotomic.from_int(3, 2)) == "2"
