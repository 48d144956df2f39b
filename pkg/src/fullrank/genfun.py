"""Full-rank generating functions over Laurent and cyclotomic coefficients.

``rk_coefficients`` specializes Andrews' k-variable generating function at
``x_i = z^i`` and recovers, for each power of ``q``, the exact Laurent
polynomial ``sum_m NF_k(m, n) z^m``.  Every term denominator is cleared over
one common product and the division is done once per coefficient, so
specializations that are singular term by term (``z`` a root of unity) need
no limiting process: evaluate the exact polynomial instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import List, Tuple

from sympy import factorint

from .qseries import QSeries, qs_dz
from .rankstats import RankTable, r1_series
from .rings import (
    CyclicResidue,
    CyclotomicElt,
    LaurentPoly,
    NotDivisible,
    RatFunc,
    cyc_eval,
    cyclic_reduce,
)


class ExactDivisionFailed(NotDivisible):
    """A quotient that must be a polynomial was not; indicates a bug upstream."""


class NonIntegerCoefficient(ArithmeticError):
    pass


@dataclass(frozen=True)
class RkSeries:
    marks: int
    order: int
    coeffs: Tuple[LaurentPoly, ...]

    def __getitem__(self, n) -> LaurentPoly:
        return self.coeffs[n]

    def as_qseries(self) -> QSeries:
        return QSeries(self.coeffs, self.order, ("Laurent",))


def term_denominator(i: int, k: int) -> LaurentPoly:
    """``prod_{j != i} (z^i - z^j)(1 - z^(-i-j))`` for ``1 <= i <= k``."""
    z = LaurentPoly.monomial
    out = LaurentPoly.const(1)
    for j in range(1, k + 1):
        if j != i:
            out = out * (z(i) - z(j)) * (1 - z(-i - j))
    return out


@lru_cache(maxsize=None)
def rk_coefficients(k: int, order: int) -> RkSeries:
    """Coefficients of ``q^0 .. q^order`` in ``R_k(z, z^2, ..., z^k; q)``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    r1 = r1_series(order)
    dens = [term_denominator(i, k) for i in range(1, k + 1)]
    common = LaurentPoly.const(1)
    for d in dens:
        common = common * d
    cofactors = []
    for i in range(k):
        cof = LaurentPoly.const(1)
        for j, d in enumerate(dens):
            if j != i:
                cof = cof * d
        cofactors.append(cof)
    out = []
    for n in range(order + 1):
        num = LaurentPoly()
        for i in range(1, k + 1):
            num = num + r1[n].substitute_power(i) * cofactors[i - 1]
        try:
            out.append(num.exact_div(common))
        except NotDivisible as exc:
            raise ExactDivisionFailed(f"q^{n} coefficient of R_{k} is not a Laurent polynomial") from exc
    return RkSeries(k, order, tuple(out))


def reduce_mod(s: RkSeries, c: int) -> List[CyclicResidue]:
    """Per-``q^n`` residues mod ``z^c - 1``: coefficient ``b`` is ``NF_k(b, c, n)``."""
    if c < 2:
        raise ValueError("c must be >= 2")
    return [cyclic_reduce(p, c) for p in s.coeffs]


def substitute_root(s: RkSeries, c: int, d: int) -> QSeries:
    """``R_k(zeta^d, zeta^(2d), ..., zeta^(kd); q)`` with ``zeta`` a primitive ``c``-th root."""
    if c < 2 or not 1 <= d <= c:
        raise ValueError("need c >= 2 and 1 <= d <= c")
    vals = [cyc_eval(p.substitute_power(d), c) for p in s.coeffs]
    return QSeries(vals, s.order, ("cyclotomic", c))


# Divisor classes and the Moebius/totient coefficient


def mobius(n: int) -> int:
    f = factorint(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def totient(n: int) -> int:
    out = n
    for p in factorint(n):
        out = out // p * (p - 1)
    return out


def divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def mobius_coeff(l: int, c: int, d: int, r: int) -> int:
    """Weight of the divisor class ``r`` of ``c`` in ``R_l(zeta_c^d, ...)``.

    ``mu(c/(g d)) * phi(c/r) / phi(c/(g d))`` with ``g = gcd(r, c/d)``.  The
    weight does not depend on ``l``; it is accepted for symmetry with callers.
    """
    if c % d or c % r:
        raise ValueError(f"need d | c and r | c (c={c}, d={d}, r={r})")
    g = gcd(r, c // d)
    m = c // (g * d)
    num = mobius(m) * totient(c // r)
    q, rem = divmod(num, totient(m))
    if rem:
        raise NonIntegerCoefficient(f"{num}/{totient(m)} is not an integer")
    return q


def class_root_sum(c: int, d: int, r: int) -> CyclotomicElt:
    """``sum of zeta_c^(b d)`` over residues ``b`` with ``gcd(b, c) = r`` (``r = c`` means ``b = 0``)."""
    total = CyclotomicElt(c, 0)
    for b in range(c):
        if gcd(b, c) == r:
            total = total + cyc_eval(LaurentPoly.monomial(b * d), c)
    return total


def divisor_class_counts(residue: CyclicResidue) -> dict:
    """``{r: coefficient at exponent r mod c}`` for each divisor ``r`` of ``c``."""
    c = residue.c
    return {r: residue.coeffs[r % c] for r in divisors(c)}


def mobius_combination(l: int, c: int, d: int, residue: CyclicResidue) -> int:
    """``sum_{r | c} mobius_coeff(l, c, d, r) NF_l(r, c, n)`` for one ``q^n`` residue."""
    return sum(mobius_coeff(l, c, d, r) * cnt for r, cnt in divisor_class_counts(residue).items())


# The explicit c = 9, d = 3 derivative chain


def _lp(d):
    return LaurentPoly(d)


def c9_pipeline(order: int) -> QSeries:
    """``R_4(x, 1/x, 1, x; q)`` from ``R_1`` and its first two ``z``-derivatives, at ``x = zeta_3``.

    The three removable singularities of the four-term sum have been cleared
    by differentiation; what remains is a single rational function of ``x``
    per power of ``q`` whose denominator does not vanish at ``zeta_3``.
    """
    r1 = r1_series(order)
    d1 = qs_dz(r1)
    d2 = qs_dz(d1)
    x = LaurentPoly.z()
    one_minus_x = 1 - x
    one_minus_xinv = 1 - x ** -1
    one_minus_xinv2 = 1 - x ** -2
    base = one_minus_x ** 3 * one_minus_xinv ** 3
    second_w = x ** 4 * (x - 1) ** 2 * one_minus_xinv ** 2 * one_minus_xinv2
    first_w = 2 * one_minus_x ** 2 * one_minus_xinv ** 2 * (-(x ** 3) - 2 * x ** 2 - 2 * x)
    zeroth_w = 2 * (1 - x ** 2) ** 2 * one_minus_xinv2
    prefactor = RatFunc(-(x ** -4), 2 * base * one_minus_xinv2 ** 3)
    vals = []
    for n in range(order + 1):
        at_one = r1[n](1)
        bracket = d2[n] * second_w + d1[n] * first_w + r1[n] * zeroth_w
        value = RatFunc(at_one, base) + prefactor * bracket
        try:
            vals.append(value.evaluate_cyclotomic(3))
        except NotDivisible as exc:
            raise ExactDivisionFailed(f"q^{n} value is not integral in Z[zeta_3]") from exc
    return QSeries(vals, order, ("cyclotomic", 3))


def c9_closed_form(order: int) -> QSeries:
    """``(2 R(1) + 3 w^2 R''(w) + 2 (w - 1) R'(w) - 2 R(w)) / 54`` at ``w = zeta_3``."""
    r1 = r1_series(order)
    d1 = qs_dz(r1)
    d2 = qs_dz(d1)
    w = cyc_eval(LaurentPoly.z(), 3)
    vals = []
    for n in range(order + 1):
        total = (
            2 * r1[n](1)
            + 3 * w * w * cyc_eval(d2[n], 3)
            + 2 * (w - 1) * cyc_eval(d1[n], 3)
            - 2 * cyc_eval(r1[n], 3)
        )
        try:
            vals.append(total / 54)
        except NotDivisible as exc:
            raise ExactDivisionFailed(f"q^{n}: {total} is not divisible by 54") from exc
    return QSeries(vals, order, ("cyclotomic", 3))


def embed_zeta3(x: CyclotomicElt) -> CyclotomicElt:
    """Map ``Z[zeta_3]`` into ``Z[zeta_9]`` via ``zeta_3 = zeta_9^3``."""
    return cyc_eval(x.residue.substitute_power(3), 9)


def zeta3_expansion(n: int, table: RankTable) -> Tuple[Fraction, Fraction]:
    """Rational and ``zeta_3`` parts of the residue-class form of ``R_4(zeta_3, ...)`` at ``q^n``.

    Returns ``(a, b)`` with the ``q^n`` coefficient equal to ``a + b zeta_3``;
    ``b`` must vanish because the coefficient is an integer.
    """
    a = b = 0
    row = table.row(n)
    N = lambda m: row.get(m, 0)
    span = n // 3 + 2
    for k in range(-span, span + 1):
        a += (27 * k * k + 3 * k) * N(3 * k) - 6 * k * N(3 * k + 1) - (27 * k * k + 33 * k + 6) * N(3 * k + 2)
        b += 6 * k * N(3 * k) + (27 * k * k + 15 * k) * N(3 * k + 1) - (27 * k * k + 39 * k + 12) * N(3 * k + 2)
    return Fraction(a, 54), Fraction(b, 54)


def zeta3_expansion_unreduced(n: int, table: RankTable) -> Tuple[Fraction, Fraction, Fraction]:
    """Coefficients on ``1, zeta_3, zeta_3^2`` before eliminating ``zeta_3^2``."""
    a = b = e = 0
    row = table.row(n)
    N = lambda m: row.get(m, 0)
    span = n // 3 + 2
    for k in range(-span, span + 1):
        a += (27 * k * k - 3 * k) * N(3 * k) - 6 * k * N(3 * k + 1) + 2 * N(3 * k + 2)
        b += (27 * k * k + 15 * k) * N(3 * k + 1) - (6 * k + 4) * N(3 * k + 2)
        e += (27 * k * k + 33 * k + 8) * N(3 * k + 2) - 6 * k * N(3 * k)
    return Fraction(a, 54), Fraction(b, 54), Fraction(e, 54)


def c9_rank_sum(n: int, table: RankTable) -> int:
    """``sum_{k>=1} k^2 N(3k, n) - k(k+1)/2 (N(3k+1, n) + N(3k+2, n))``, asserted integral."""
    row = table.row(n)
    N = lambda m: row.get(m, 0)
    total = Fraction(0)
    for k in range(1, n // 3 + 2):
        total += k * k * N(3 * k) - Fraction(k * (k + 1), 2) * (N(3 * k + 1) + N(3 * k + 2))
    if total.denominator != 1:
        raise NonIntegerCoefficient(f"rank sum at n={n} is {total}")
    return int(total)
