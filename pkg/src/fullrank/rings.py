"""Exact coefficient rings.

Integer Laurent polynomials in one variable ``z``, quotients of them, and the
two residue rings used to study residue classes of exponents:

* ``CyclicResidue`` -- ``Z[z]/(z^c - 1)``, where exponents are only folded
  mod ``c`` and coefficients keep their identity;
* ``CyclotomicElt`` -- ``Z[z]/Phi_c(z)``, i.e. ``Z[zeta_c]``, where every
  relation between the primitive roots is in force.

All values are immutable.  Integers are accepted wherever a ring element is
expected and are promoted on the fly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


class NotDivisible(ArithmeticError):
    """An exact division was requested but no exact quotient exists."""


def _trim(coeffs):
    return {e: c for e, c in coeffs.items() if c}


class LaurentPoly:
    """Integer Laurent polynomial in ``z``, stored sparsely as ``{exponent: coeff}``.

    >>> z = LaurentPoly.z()
    >>> (1 - z) * (1 + z)
    LaurentPoly({0: 1, 2: -1})
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, dict):
            coeffs = dict(coeffs)
        self._c = _trim(coeffs)
        self._hash = None

    # constructors

    @classmethod
    def z(cls) -> LaurentPoly:
        return cls({1: 1})

    @classmethod
    def const(cls, value: int) -> LaurentPoly:
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def from_list(cls, coeffs, low: int = 0) -> LaurentPoly:
        """Dense coefficients starting at exponent ``low``."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return cls.const(other)
        return NotImplemented

    # inspection

    def items(self):
        return sorted(self._c.items())

    def coeff(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def exponents(self):
        return sorted(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    @property
    def low(self) -> int:
        """Smallest exponent present (0 for the zero polynomial)."""
        return min(self._c) if self._c else 0

    @property
    def high(self) -> int:
        return max(self._c) if self._c else 0

    def leading_coeff(self) -> int:
        return self._c[self.high] if self._c else 0

    def content(self) -> int:
        g = 0
        for c in self._c.values():
            g = gcd(g, c)
        return g

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    def constant(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self!r} is not a constant")
        return self._c.get(0, 0)

    def is_symmetric(self) -> bool:
        """Fixed under ``z -> 1/z``."""
        return all(self._c.get(-e) == c for e, c in self._c.items())

    # arithmetic

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._c.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if self.is_monomial() and abs(self.leading_coeff()) == 1:
                (e, c), = self._c.items()
                return LaurentPoly({e * k: 1 if k % 2 == 0 else c})
            raise NotDivisible(f"{self!r} is not a unit")
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``z**k``."""
        return LaurentPoly({e + k: c for e, c in self._c.items()})

    def divide_int(self, n: int) -> LaurentPoly:
        """Exact division of every coefficient by the integer ``n``."""
        out = {}
        for e, c in self._c.items():
            q, r = divmod(c, n)
            if r:
                raise NotDivisible(f"coefficient {c} of z^{e} is not divisible by {n}")
            out[e] = q
        return LaurentPoly(out)

    def exact_div(self, other) -> LaurentPoly:
        """Return ``q`` with ``q * other == self``; raise ``NotDivisible`` otherwise."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        # Strip the z-power from both; the polynomial parts have nonzero
        # constant terms, so any Laurent quotient is a true polynomial.
        a_low, b_low = self.low, other.low
        rem = [self._c.get(a_low + i, 0) for i in range(self.high - a_low + 1)]
        div = [other._c.get(b_low + i, 0) for i in range(other.high - b_low + 1)]
        db = len(div) - 1
        lead = div[-1]
        if len(rem) < len(div):
            raise NotDivisible(f"{other!r} does not divide {self!r}")
        quot = [0] * (len(rem) - db)
        for top in range(len(rem) - 1, db - 1, -1):
            c = rem[top]
            if not c:
                continue
            t, r = divmod(c, lead)
            if r:
                raise NotDivisible(f"{other!r} does not divide {self!r}")
            pos = top - db
            quot[pos] = t
            for i, d in enumerate(div):
                if d:
                    rem[pos + i] -= t * d
        if any(rem):
            raise NotDivisible(f"{other!r} does not divide {self!r}")
        return LaurentPoly.from_list(quot, a_low - b_low)

    def substitute_power(self, m: int) -> LaurentPoly:
        """Image under ``z -> z**m``."""
        out = {}
        for e, c in self._c.items():
            out[m * e] = out.get(m * e, 0) + c
        return LaurentPoly(out)

    def derivative(self) -> LaurentPoly:
        return LaurentPoly({e - 1: e * c for e, c in self._c.items() if e})

    def __call__(self, value):
        """Evaluate at ``value`` (an int, Fraction, or any ring element)."""
        if isinstance(value, int):
            value = Fraction(value)
        total = 0
        for e, c in self._c.items():
            total = total + c * value ** e
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def __repr__(self):
        return f"LaurentPoly({dict(self.items())!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, c in sorted(self._c.items(), reverse=True):
            mono = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
            if not mono:
                term = str(abs(c))
            elif abs(c) == 1:
                term = mono
            else:
                term = f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + term)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def lp_exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a.exact_div(b)


def lp_substitute_power(p: LaurentPoly, m: int) -> LaurentPoly:
    return p.substitute_power(m)


class RatFunc:
    """Quotient of two integer Laurent polynomials.

    Only the sign and the integer content are normalized; common polynomial
    factors are kept.  Equality is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = LaurentPoly._coerce(num)
        den = LaurentPoly._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = gcd(num.content(), den.content())
        if den.leading_coeff() < 0:
            g = -g
        if g not in (0, 1):
            num = num.divide_int(g)
            den = den.divide_int(g)
        self.num = num
        self.den = den

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, LaurentPoly)):
            return cls(other)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RatFunc(self.den ** -k, self.num ** -k)
        return RatFunc(self.num ** k, self.den ** k)

    def derivative(self) -> RatFunc:
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def substitute_power(self, m: int) -> RatFunc:
        return RatFunc(self.num.substitute_power(m), self.den.substitute_power(m))

    def to_laurent(self) -> LaurentPoly:
        """The quotient as a Laurent polynomial; ``NotDivisible`` if it is not one."""
        return self.num.exact_div(self.den)

    def evaluate_cyclotomic(self, c: int) -> CyclotomicElt:
        """Value at ``z = zeta_c``; the quotient must be integral in ``Z[zeta_c]``."""
        return cyc_eval(self.num, c) / cyc_eval(self.den, c)

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"


# Cyclotomic machinery


def _divisors(n: int):
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_poly(c: int) -> LaurentPoly:
    """``Phi_c(z)``: ``z^c - 1`` divided by ``Phi_d`` for every proper divisor ``d``."""
    if c < 1:
        raise ValueError("c must be positive")
    p = LaurentPoly({c: 1, 0: -1})
    for d in _divisors(c)[:-1]:
        p = p.exact_div(cyclotomic_poly(d))
    return p


@lru_cache(maxsize=None)
def _phi_dense(c: int):
    phi = cyclotomic_poly(c)
    return [phi.coeff(i) for i in range(phi.high + 1)]


def units_mod(c: int):
    return [m for m in range(1, c + 1) if gcd(m, c) == 1] if c > 1 else [1]


def _fold(p: LaurentPoly, c: int):
    dense = [0] * c
    for e, coef in p.items():
        dense[e % c] += coef
    return dense


def _reduce_phi(dense, c: int):
    """Remainder of a dense polynomial (exponents < c) modulo the monic ``Phi_c``."""
    phi = _phi_dense(c)
    deg = len(phi) - 1
    rem = list(dense)
    for top in range(len(rem) - 1, deg - 1, -1):
        t = rem[top]
        if t:
            base = top - deg
            for i, f in enumerate(phi):
                if f:
                    rem[base + i] -= t * f
    return tuple(rem[:deg]) + (0,) * max(0, deg - len(rem))


class CyclotomicElt:
    """Element of ``Z[zeta_c]`` as the residue mod ``Phi_c`` of degree below ``phi(c)``."""

    __slots__ = ("c", "coeffs")

    def __init__(self, c: int, poly=None):
        if c < 1:
            raise ValueError("modulus must be positive")
        self.c = c
        if poly is None:
            poly = LaurentPoly()
        elif isinstance(poly, int):
            poly = LaurentPoly.const(poly)
        self.coeffs = _reduce_phi(_fold(poly, c), c)

    @classmethod
    def _from_coeffs(cls, c, coeffs):
        obj = cls.__new__(cls)
        obj.c = c
        obj.coeffs = tuple(coeffs)
        return obj

    @property
    def residue(self) -> LaurentPoly:
        return LaurentPoly.from_list(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, CyclotomicElt):
            if other.c != self.c:
                raise ValueError(f"ring mismatch: Z[zeta_{self.c}] vs Z[zeta_{other.c}]")
            return other
        if isinstance(other, int):
            return CyclotomicElt(self.c, other)
        return NotImplemented

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def __int__(self):
        if not self.is_integer():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0] if self.coeffs else 0

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.c, self.coeffs))

    def __neg__(self):
        return self._from_coeffs(self.c, (-a for a in self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._from_coeffs(self.c, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._from_coeffs(self.c, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self._from_coeffs(self.c, (a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = len(self.coeffs)
        prod = [0] * max(1, 2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return self._from_coeffs(self.c, _reduce_phi(prod, self.c))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return CyclotomicElt(self.c, 1) / self ** (-k)
        result = CyclotomicElt(self.c, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, m: int) -> CyclotomicElt:
        """Image under the automorphism ``zeta -> zeta**m`` (``gcd(m, c) == 1``)."""
        if gcd(m, self.c) != 1:
            raise ValueError(f"{m} is not a unit mod {self.c}")
        return CyclotomicElt(self.c, self.residue.substitute_power(m))

    def norm(self) -> int:
        """Field norm to ``Q``: product of all Galois conjugates."""
        total = CyclotomicElt(self.c, 1)
        for m in units_mod(self.c):
            total = total * self.galois(m)
        return int(total)

    def divide_int(self, n: int) -> CyclotomicElt:
        out = []
        for a in self.coeffs:
            q, r = divmod(a, n)
            if r:
                raise NotDivisible(f"{self} is not divisible by {n} in Z[zeta_{self.c}]")
            out.append(q)
        return self._from_coeffs(self.c, out)

    def __truediv__(self, other):
        """Exact quotient in ``Z[zeta_c]``; ``NotDivisible`` if it is not integral."""
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self.divide_int(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero")
        adj = CyclotomicElt(self.c, 1)
        for m in units_mod(self.c):
            if m != 1:
                adj = adj * other.galois(m)
        norm = int(other * adj)
        return (self * adj).divide_int(norm)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __repr__(self):
        return f"CyclotomicElt({self.c}, {self.residue!r})"

    def __str__(self):
        return str(self.residue).replace("z", f"zeta{self.c}")


class CyclicResidue:
    """Element of ``Z[z]/(z^c - 1)``: exponents folded mod ``c``, nothing else."""

    __slots__ = ("c", "coeffs")

    def __init__(self, c: int, poly=None):
        if c < 1:
            raise ValueError("modulus must be positive")
        self.c = c
        if poly is None:
            poly = LaurentPoly()
        elif isinstance(poly, int):
            poly = LaurentPoly.const(poly)
        self.coeffs = tuple(_fold(poly, c))

    @property
    def residue(self) -> LaurentPoly:
        return LaurentPoly.from_list(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, CyclicResidue):
            if other.c != self.c:
                raise ValueError(f"ring mismatch: mod z^{self.c}-1 vs z^{other.c}-1")
            return other
        if isinstance(other, int):
            return CyclicResidue(self.c, other)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("cyclic", self.c, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __neg__(self):
        return CyclicResidue(self.c, -self.residue)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclicResidue(self.c, self.residue + other.residue)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclicResidue(self.c, self.residue - other.residue)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclicResidue(self.c, self.residue * other.residue)

    __rmul__ = __mul__

    def substitute_power(self, m: int) -> CyclicResidue:
        return CyclicResidue(self.c, self.residue.substitute_power(m))

    def __repr__(self):
        return f"CyclicResidue({self.c}, {self.residue!r})"


def cyclic_reduce(p: LaurentPoly, c: int) -> CyclicResidue:
    return CyclicResidue(c, p)


def cyc_eval(p: LaurentPoly, c: int) -> CyclotomicElt:
    """Image of ``p`` under ``z -> zeta_c``."""
    return CyclotomicElt(c, p)
