import pytest
from hypothesis import given, settings, strategies as st

from fullrank.qseries import (
    NonUnitConstantTerm,
    QSeries,
    RingMismatch,
    qs_dz,
    qs_invert,
    qs_mul,
    qs_pochhammer,
)
from fullrank.rankstats import r1_series
from fullrank.rings import CyclotomicElt, LaurentPoly

z = LaurentPoly.z()
zi = LaurentPoly.monomial(-1)


def ints(coeffs, order=None):
    return QSeries(coeffs, order, ("Z",))


def test_mul_examples():
    assert qs_mul(ints([1, 1, 0], 4), ints([1, -1], 4)) == ints([1, 0, -1], 4)
    a = ints([3, 1, 4, 1, 5])
    assert a * QSeries.one(4) == a
    geometric = ints([1] * 11)
    assert qs_mul(ints([1, -1], 10), geometric) == QSeries.one(10)


def test_order_propagates_as_minimum():
    a = ints([1, 2, 3, 4, 5, 6])
    b = ints([1, 1, 1])
    assert (a * b).order == 2
    assert (a + b).order == 2


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        qs_mul(ints([1, 1]), QSeries([LaurentPoly.const(1)], 1))


def test_pochhammer_examples():
    assert qs_pochhammer(1, 1, 2, 5) == ints([1, -1, -1, 1], 5)
    zq = qs_pochhammer(z, 1, 1, 3)
    assert zq.coeffs[:2] == (LaurentPoly.const(1), -z)
    assert all(c.is_zero() for c in zq.coeffs[2:])


def test_partition_count_from_inverse_euler_product():
    # the five partitions of 4: 4, 3+1, 2+2, 2+1+1, 1+1+1+1
    inv = qs_invert(qs_pochhammer(1, 1, None, 10))
    assert inv[4] == 5
    assert list(inv.coeffs) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_invert_examples():
    assert qs_invert(ints([1, -1], 6)) == ints([1] * 7)
    assert qs_invert(QSeries.one(5)) == QSeries.one(5)
    with pytest.raises(NonUnitConstantTerm):
        qs_invert(ints([0, 1, 1]))
    with pytest.raises(NonUnitConstantTerm):
        qs_invert(ints([2, 1]))


def test_invert_over_laurent_and_cyclotomic():
    a = qs_pochhammer(z, 1, None, 8)
    assert qs_mul(a, qs_invert(a)) == QSeries.one(8, ("Laurent",))
    w = CyclotomicElt(5, z)
    b = QSeries([w, CyclotomicElt(5, 3), CyclotomicElt(5, 1 + z)], 2)
    assert qs_mul(b, qs_invert(b)) == QSeries.one(2, ("cyclotomic", 5))


def test_dz_examples():
    s = QSeries([LaurentPoly(), LaurentPoly(), z + zi], 2)
    assert qs_dz(s)[2] == 1 - z ** -2
    c = QSeries([LaurentPoly.const(7)] * 3, 2)
    assert all(x.is_zero() for x in qs_dz(c))
    with pytest.raises(TypeError):
        qs_dz(ints([1, 2]))


def test_second_derivative_reflection_identity():
    # f(y) = f(1/y) gives f''(1/x) = x^4 f''(x) + 2 x^3 f'(x), termwise
    r = r1_series(12)
    d1 = qs_dz(r)
    d2 = qs_dz(d1)
    for n in range(13):
        assert d2[n].substitute_power(-1) == z ** 4 * d2[n] + 2 * z ** 3 * d1[n]


small_series = st.lists(st.integers(-4, 4), min_size=6, max_size=6)
laurent = st.dictionaries(st.integers(-3, 3), st.integers(-3, 3), max_size=3).map(LaurentPoly)
laurent_series = st.lists(laurent, min_size=4, max_size=4).map(lambda cs: QSeries(cs, 3, ("Laurent",)))


@settings(max_examples=50, deadline=None)
@given(small_series, small_series, small_series)
def test_mul_commutative_associative(a, b, c):
    a, b, c = ints(a), ints(b), ints(c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@settings(max_examples=50, deadline=None)
@given(small_series)
def test_invert_round_trip(a):
    a = ints([1] + a[1:])
    assert qs_mul(a, qs_invert(a)) == QSeries.one(5)


@settings(max_examples=40, deadline=None)
@given(laurent_series, laurent_series)
def test_dz_linear_and_leibniz(a, b):
    assert qs_dz(a + b) == qs_dz(a) + qs_dz(b)
    assert qs_dz(a * b) == qs_dz(a) * b + a * qs_dz(b)
