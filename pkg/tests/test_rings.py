from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from fullrank.rings import (
    CyclicResidue,
    CyclotomicElt,
    LaurentPoly,
    NotDivisible,
    RatFunc,
    cyc_eval,
    cyclic_reduce,
    cyclotomic_poly,
    lp_exact_div,
    lp_mul,
    lp_substitute_power,
)

z = LaurentPoly.z()
zi = LaurentPoly.monomial(-1)


laurent = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=5).map(LaurentPoly)
nonzero_laurent = laurent.filter(lambda p: not p.is_zero())


def test_canonical_form_drops_zeros():
    p = LaurentPoly({0: 1, 3: 0, -2: 0})
    assert p.items() == [(0, 1)]
    assert LaurentPoly().items() == []
    assert (z - z).is_zero()


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (1 - z, 1 + z, 1 - z ** 2),
        (zi + 1, z, 1 + z),
        (1 - z, 1 + z + z ** 2, 1 - z ** 3),
    ],
)
def test_lp_mul(a, b, expected):
    assert lp_mul(a, b) == expected


def test_lp_exact_div():
    assert lp_exact_div(1 - z ** 3, 1 - z) == 1 + z + z ** 2
    assert lp_exact_div(z ** 2 - z ** -2, z - zi) == z + zi
    with pytest.raises(NotDivisible):
        lp_exact_div(1 - z ** 2, 1 - z ** 3)
    with pytest.raises(NotDivisible):
        lp_exact_div(1 + z, 2 * z)
    with pytest.raises(ZeroDivisionError):
        lp_exact_div(z, LaurentPoly())


def test_lp_substitute_power():
    p = z + z ** 4 + z ** 7
    assert lp_substitute_power(p, 2) == z ** 2 + z ** 8 + z ** 14
    assert cyclic_reduce(lp_substitute_power(p, 2), 9) == CyclicResidue(9, z ** 2 + z ** 5 + z ** 8)
    assert lp_substitute_power(p, 1) == p
    assert lp_substitute_power(1 + z, -1) == 1 + zi


def test_cyclic_reduce():
    assert cyclic_reduce(zi, 5).residue == z ** 4
    assert cyclic_reduce(z ** 9 + z, 9).residue == 1 + z
    # folding exponents does not see the relation among the primitive ninth roots
    witness = cyclic_reduce(z + z ** 4 + z ** 7, 9)
    assert witness.residue == z + z ** 4 + z ** 7
    assert witness


def test_cyclotomic_poly():
    assert cyclotomic_poly(5) == 1 + z + z ** 2 + z ** 3 + z ** 4
    assert cyclotomic_poly(1) == z - 1
    assert cyclotomic_poly(9) == z ** 6 + z ** 3 + 1


@pytest.mark.parametrize("c", range(1, 31))
def test_cyclotomic_product_over_divisors(c):
    prod = LaurentPoly.const(1)
    for d in range(1, c + 1):
        if c % d == 0:
            prod = prod * cyclotomic_poly(d)
    assert prod == z ** c - 1


@pytest.mark.parametrize("c", [2, 3, 5, 7, 11, 13])
def test_prime_cyclotomic_is_geometric_sum(c):
    assert cyclotomic_poly(c) == sum((z ** i for i in range(c)), LaurentPoly())


def test_cyclotomic_degree_matches_root_count():
    # degree of Phi_c equals the number of primitive c-th roots
    for c in range(1, 40):
        assert cyclotomic_poly(c).high == sum(1 for b in range(1, c + 1) if gcd(b, c) == 1)


def test_cyc_eval_examples():
    assert not cyc_eval(sum((z ** i for i in range(5)), LaurentPoly()), 5)
    prod = (1 - z) * (1 - z ** 2) * (1 - z ** 3) * (1 - z ** 4)
    assert cyc_eval(prod, 5) == 5
    assert cyc_eval(z + z ** 4 + z ** 7, 9) == 0
    assert cyc_eval(z ** 2 + z ** 5 + z ** 8, 9) == 0


@pytest.mark.parametrize("c", range(3, 16, 2))
def test_norm_of_one_minus_zeta_product(c):
    prod = LaurentPoly.const(1)
    for i in range(1, c):
        prod = prod * (1 - z ** i)
    assert cyc_eval(prod, c) == c


def test_cyclotomic_division_and_norm():
    a = cyc_eval(1 - z, 5)
    assert a.norm() == 5
    q = CyclotomicElt(5, 5) / a
    assert q * a == 5
    with pytest.raises(NotDivisible):
        CyclotomicElt(5, 1) / a
    assert cyc_eval(1 - z, 9).norm() == 3
    assert cyc_eval(1 - z, 15).norm() == 1


def test_cyclotomic_ring_mismatch():
    with pytest.raises(ValueError):
        CyclotomicElt(5, 1) + CyclotomicElt(7, 1)


def test_galois_conjugation_permutes_roots():
    w = cyc_eval(z, 9)
    assert w.galois(2) == w * w
    with pytest.raises(ValueError):
        w.galois(3)


def test_ratfunc_canonical_sign_and_content():
    r = RatFunc(2 - 2 * z, -4 * z)
    assert r.num == z - 1
    assert r.den == 2 * z
    assert r == RatFunc(3 * z - 3, 6 * z)


def test_ratfunc_arithmetic_and_derivative():
    r = RatFunc(1, 1 - z)
    assert (r * (1 - z)).to_laurent() == 1
    assert r.derivative() == RatFunc(1, (1 - z) ** 2)
    assert (RatFunc(1 - z ** 3, 1 - z)).to_laurent() == 1 + z + z ** 2
    with pytest.raises(NotDivisible):
        RatFunc(1, 1 - z).to_laurent()
    with pytest.raises(ZeroDivisionError):
        RatFunc(1, 0)


def test_ratfunc_evaluates_in_cyclotomic_ring():
    # (1 - z^3) / (1 - z) = 1 + z + z^2 vanishes at a primitive cube root
    assert RatFunc(1 - z ** 3, 1 - z).evaluate_cyclotomic(3) == 0
    assert RatFunc(3, (1 - z) * (1 - z ** 2)).evaluate_cyclotomic(3) == 1


def test_laurent_evaluation_and_symmetry():
    p = z + zi
    assert p(2) == Fraction(5, 2)
    assert p.is_symmetric()
    assert not (z + 1).is_symmetric()
    assert (z ** 3 - z).derivative() == 3 * z ** 2 - 1


# ring axioms


@settings(max_examples=60, deadline=None)
@given(laurent, laurent, laurent)
def test_laurent_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + (-a) == 0


@settings(max_examples=60, deadline=None)
@given(laurent, nonzero_laurent)
def test_exact_division_round_trip(a, b):
    assert lp_exact_div(lp_mul(a, b), b) == a


@settings(max_examples=40, deadline=None)
@given(laurent, laurent, st.sampled_from([3, 5, 7, 9, 15]))
def test_cyc_eval_is_a_ring_homomorphism(a, b, c):
    assert cyc_eval(a * b, c) == cyc_eval(a, c) * cyc_eval(b, c)
    assert cyc_eval(a + b, c) == cyc_eval(a, c) + cyc_eval(b, c)


@settings(max_examples=40, deadline=None)
@given(laurent, st.sampled_from([5, 9, 15]), st.integers(1, 30))
def test_unit_substitution_permutes_residue_positions(p, c, m):
    r = cyclic_reduce(p, c)
    image = cyclic_reduce(lp_substitute_power(p, m), c)
    if gcd(m, c) == 1:
        assert sorted(image.coeffs) == sorted(r.coeffs)
        for b in range(c):
            assert image.coeffs[(b * m) % c] == r.coeffs[b]
