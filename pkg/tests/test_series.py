from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from bmcycles.fields import GF, QQ, Fp, format_scalar, parse_scalar
from bmcycles.series import PrecisionError, Series, SeriesMatrix

u = sympy.Symbol("u")


def to_sympy(s: Series):
    return sum(sympy.Rational(c.numerator, c.denominator) * u**k for k, c in s.coeffs.items())


def test_prime_field_arithmetic():
    F = GF(7)
    a = F(3)
    assert a * F(5) == 1
    assert 1 / a == 5
    assert a**-1 == 5
    assert F(Fraction(1, 2)) == 4
    assert -a == 4
    assert not F(14)
    with pytest.raises(ZeroDivisionError):
        a / F(0)


def test_field_validation():
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        QQ(Fp(1, 5))


def test_parse_and_format():
    assert parse_scalar(QQ, "3/4") == Fraction(3, 4)
    assert format_scalar(Fraction(3, 4)) == "3/4"
    assert format_scalar(Fraction(4, 2)) == 2
    assert format_scalar(GF(5)(7)) == 2


def test_precision_propagation():
    a = Series(QQ, {0: 1, 1: 2}, prec=4)
    b = Series(QQ, {-1: 1}, prec=2)
    c = a * b
    # min(4 + (-1), 2 + 0)
    assert c.prec == 2
    assert (a + b).prec == 2
    assert a.deriv().prec == 3
    with pytest.raises(PrecisionError):
        c.coefficient(2)
    assert c.coefficient(-1) == 1


def test_exact_times_truncated_zero():
    z = Series(QQ, {}, prec=3)
    assert (z * Series.monomial(QQ, 1, -2)).prec == 1
    assert Series.zero(QQ).is_zero()
    with pytest.raises(PrecisionError):
        z.is_zero()


def test_inverse_matches_sympy():
    s = Series(QQ, {1: 2, 2: -1, 3: Fraction(1, 3)})
    inv = s.inverse(prec=6)
    ref = sympy.series(1 / to_sympy(s), u, 0, 6).removeO()
    assert sympy.expand(to_sympy(inv) - ref) == 0
    assert inv.prec == 6


def test_truncated_inverse_precision():
    s = Series(QQ, {1: 1, 2: 1}, prec=5)
    inv = s.inverse()
    assert inv.prec == 5 - 2
    assert (s * inv).agrees(Series.one(QQ))


def test_monomial_inverse_exact():
    s = Series.monomial(GF(5), 3, -2)
    assert s.inverse() == Series.monomial(GF(5), 2, 2)


def test_inverse_needs_precision_for_exact_nonmonomial():
    with pytest.raises(ValueError):
        Series(QQ, {0: 1, 1: 1}).inverse()


def test_shift_center_and_order():
    p = Series(QQ, {0: 2, 1: -3, 2: 1})  # (u-1)(u-2)
    assert p.order_at(1) == 1
    assert p.order_at(2) == 1
    assert p.order_at(3) == 0
    q = p.shift_center(1)  # u (u - 1)
    assert q == Series(QQ, {1: -1, 2: 1})
    assert Series(QQ, {-1: 1}).order_at(2) == 0
    assert Series(QQ, {-1: 1}).order_at(0) == -1


def test_divmod():
    a = Series(QQ, {0: -1, 2: 1})
    b = Series(QQ, {0: -1, 1: 1})
    q, r = a.divmod(b)
    assert q == Series(QQ, {0: 1, 1: 1}) and not r.coeffs


def test_subs_scale():
    s = Series(GF(5), {-1: 1, 2: 1}, prec=4)
    t = s.subs_scale(2)
    assert t.coefficient(-1) == 3  # 2^-1 mod 5
    assert t.coefficient(2) == 4
    assert t.prec == 4


small = st.integers(-3, 3)


@st.composite
def exact_series(draw, lo=-2, hi=3):
    coeffs = draw(st.dictionaries(st.integers(lo, hi), small, max_size=4))
    return Series(QQ, coeffs)


@given(exact_series(), exact_series(), exact_series())
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(exact_series(), exact_series())
def test_leibniz(a, b):
    assert (a * b).deriv() == a.deriv() * b + a * b.deriv()


@given(exact_series(), st.integers(1, 6))
def test_truncation_commutes_with_product(a, n):
    b = Series(QQ, {0: 1, 1: 2, 4: -1})
    assert (a.truncate(n) * b).agrees(a * b)


def test_matrix_det_adjugate():
    F = QQ
    X = SeriesMatrix.build(F, [[Series(F, {0: 1, 1: 1}), 2], [Series(F, {-1: 1}), 3]])
    adj = X.adjugate()
    prod = X @ adj
    d = X.det()
    for i in range(2):
        for j in range(2):
            assert prod[i, j] == (d if i == j else Series.zero(F))


def test_matrix_inverse_truncated():
    F = GF(7)
    X = SeriesMatrix.build(F, [[Series(F, {0: 1, 1: 1}, 6), Series(F, {1: 1}, 6)],
                               [Series(F, {}, 6), Series(F, {0: 2}, 6)]])
    Y = X.inverse()
    I = X @ Y
    assert I.agrees(SeriesMatrix.identity(F, 2))
    assert I.precision is not None
