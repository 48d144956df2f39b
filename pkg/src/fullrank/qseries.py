"""Truncated power series in ``q`` over the exact coefficient rings."""

from __future__ import annotations

from fractions import Fraction

from .rings import CyclicResidue, CyclotomicElt, LaurentPoly, NotDivisible, RatFunc


class RingMismatch(TypeError):
    pass


class NonUnitConstantTerm(ArithmeticError):
    pass


def ring_of(x):
    """Hashable key naming the coefficient ring of ``x``."""
    if isinstance(x, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(x, int):
        return ("Z",)
    if isinstance(x, Fraction):
        return ("Q",)
    if isinstance(x, LaurentPoly):
        return ("Laurent",)
    if isinstance(x, RatFunc):
        return ("RatFunc",)
    if isinstance(x, CyclotomicElt):
        return ("cyclotomic", x.c)
    if isinstance(x, CyclicResidue):
        return ("cyclic", x.c)
    raise TypeError(f"unsupported coefficient type {type(x).__name__}")


def ring_zero(ring):
    kind = ring[0]
    if kind == "Z":
        return 0
    if kind == "Q":
        return Fraction(0)
    if kind == "Laurent":
        return LaurentPoly()
    if kind == "RatFunc":
        return RatFunc(0)
    if kind == "cyclotomic":
        return CyclotomicElt(ring[1], 0)
    if kind == "cyclic":
        return CyclicResidue(ring[1], 0)
    raise ValueError(f"unknown ring {ring!r}")


def ring_one(ring):
    return ring_zero(ring) + 1


def unit_inverse(x):
    """Inverse of a unit of the coefficient ring, or ``NonUnitConstantTerm``."""
    ring = ring_of(x)
    kind = ring[0]
    if kind == "Z":
        if x in (1, -1):
            return x
    elif kind == "Q":
        if x:
            return 1 / x
    elif kind == "Laurent":
        if x.is_monomial() and abs(x.leading_coeff()) == 1:
            return x ** -1
    elif kind == "RatFunc":
        if not x.num.is_zero():
            return 1 / x
    elif kind == "cyclotomic":
        if x and abs(x.norm()) == 1:
            return CyclotomicElt(x.c, 1) / x
    elif kind == "cyclic":
        nz = [(e, a) for e, a in enumerate(x.coeffs) if a]
        if len(nz) == 1 and abs(nz[0][1]) == 1:
            e, a = nz[0]
            return CyclicResidue(x.c, LaurentPoly.monomial(-e, a))
    raise NonUnitConstantTerm(f"constant term {x} is not a unit")


class QSeries:
    """``a_0 + a_1 q + ... + a_N q^N  (mod q^(N+1))`` with exact coefficients.

    ``order`` is the truncation bound ``N``.  Binary operations truncate to the
    smaller order of the two operands.
    """

    __slots__ = ("coeffs", "order", "ring")

    def __init__(self, coeffs, order=None, ring=None):
        coeffs = list(coeffs)
        if ring is None:
            if not coeffs:
                raise ValueError("cannot infer the coefficient ring of an empty series")
            ring = ring_of(coeffs[0])
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        zero = ring_zero(ring)
        coeffs = coeffs[: order + 1]
        coeffs += [zero] * (order + 1 - len(coeffs))
        for a in coeffs:
            if ring_of(a) != ring:
                raise RingMismatch(f"coefficient {a!r} is not in ring {ring}")
        self.coeffs = tuple(coeffs)
        self.order = order
        self.ring = ring

    @classmethod
    def constant(cls, value, order: int) -> QSeries:
        ring = ring_of(value)
        return cls([value], order, ring)

    @classmethod
    def one(cls, order: int, ring=("Z",)) -> QSeries:
        return cls([ring_one(ring)], order, ring)

    @classmethod
    def monomial(cls, value, power: int, order: int) -> QSeries:
        ring = ring_of(value)
        zero = ring_zero(ring)
        return cls([zero] * power + [value], order, ring)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        return other

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.ring == other.ring and self.order == other.order and self.coeffs == other.coeffs

    __hash__ = None

    def __neg__(self):
        return QSeries([-a for a in self.coeffs], self.order, self.ring)

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        return QSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n, self.ring)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        return QSeries([a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n, self.ring)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return qs_mul(self, other)
        # scalar from the same ring (or a plain int)
        if not isinstance(other, int) and ring_of(other) != self.ring:
            raise RingMismatch(f"scalar in {ring_of(other)} vs series over {self.ring}")
        return QSeries([a * other for a in self.coeffs], self.order, self.ring)

    def __rmul__(self, other):
        return self * other

    def map(self, fn, ring=None) -> QSeries:
        """Apply ``fn`` to every coefficient."""
        out = [fn(a) for a in self.coeffs]
        return QSeries(out, self.order, ring if ring is not None else ring_of(out[0]))

    def shift(self, k: int) -> QSeries:
        """Multiply by ``q**k``, dropping terms past the order."""
        zero = ring_zero(self.ring)
        return QSeries([zero] * k + list(self.coeffs), self.order, self.ring)

    def truncate(self, order: int) -> QSeries:
        return QSeries(self.coeffs, min(order, self.order), self.ring)

    def __repr__(self):
        terms = ", ".join(str(a) for a in self.coeffs)
        return f"QSeries([{terms}], order={self.order})"


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    n = min(a.order, b.order)
    zero = ring_zero(a.ring)
    out = [zero] * (n + 1)
    ac, bc = a.coeffs, b.coeffs
    for i in range(n + 1):
        x = ac[i]
        if not x:
            continue
        for j in range(n + 1 - i):
            y = bc[j]
            if y:
                out[i + j] = out[i + j] + x * y
    return QSeries(out, n, a.ring)


def qs_pochhammer(u, start: int, count, order: int) -> QSeries:
    """``prod_{i=0}^{count-1} (1 - u q^(start+i))`` truncated at ``order``.

    ``count=None`` takes every factor that can still affect the truncation.
    """
    if start < 1:
        raise ValueError("start must be >= 1")
    ring = ring_of(u)
    one = ring_one(ring)
    zero = ring_zero(ring)
    if count is None:
        count = max(0, order - start + 1)
    elif count < 0:
        raise ValueError("count must be non-negative")
    coeffs = [one] + [zero] * order
    for i in range(count):
        s = start + i
        if s > order:
            break
        for n in range(order, s - 1, -1):
            prev = coeffs[n - s]
            if prev:
                coeffs[n] = coeffs[n] - u * prev
    return QSeries(coeffs, order, ring)


def qs_invert(a: QSeries) -> QSeries:
    b0 = unit_inverse(a.coeffs[0])
    zero = ring_zero(a.ring)
    out = [b0]
    ac = a.coeffs
    for n in range(1, a.order + 1):
        acc = zero
        for k in range(1, n + 1):
            if ac[k]:
                acc = acc + ac[k] * out[n - k]
        out.append(-(acc * b0) if acc else zero)
    return QSeries(out, a.order, a.ring)


def qs_dz(a: QSeries) -> QSeries:
    """Termwise derivative in ``z`` of each coefficient."""
    if a.ring[0] not in ("Laurent", "RatFunc"):
        raise TypeError(f"cannot differentiate coefficients in {a.ring}")
    return QSeries([c.derivative() for c in a.coeffs], a.order, a.ring)


__all__ = [
    "NonUnitConstantTerm",
    "NotDivisible",
    "QSeries",
    "RingMismatch",
    "qs_dz",
    "qs_invert",
    "qs_mul",
    "qs_pochhammer",
    "ring_of",
    "ring_one",
    "ring_zero",
]
