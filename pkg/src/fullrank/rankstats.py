"""Partitions, Dyson's rank, and the rank counts ``N(m, n)``.

Two independent routes produce the rank table: direct enumeration of
partitions, and coefficient extraction from the two-variable rank generating
function ``sum_n q^(n^2) / ((zq; q)_n (q/z; q)_n)``.  ``rank_table`` can run
both and refuses to return if they disagree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Dict, List, Tuple

from .qseries import QSeries, qs_invert, qs_mul, qs_pochhammer
from .rings import LaurentPoly


class BackendMismatch(AssertionError):
    """Two independent computations of the same table disagree."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


Partition = Tuple[int, ...]


def enumerate_partitions(n: int) -> List[Partition]:
    """All partitions of ``n`` in lexicographically descending order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out: List[Partition] = []

    def walk(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, cap), 0, -1):
            prefix.append(part)
            walk(remaining - part, part, prefix)
            prefix.pop()

    walk(n, n, [])
    return out


def dyson_rank(p: Partition) -> int:
    """Largest part minus number of parts; the empty partition has rank 0."""
    if not p:
        return 0
    return p[0] - len(p)


def binom(x: int, k: int) -> int:
    """``C(x, k) = x (x-1) ... (x-k+1) / k!`` for any integer ``x``."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= x - i
    return num // factorial(k)


@dataclass(frozen=True)
class RankTable:
    nmax: int
    counts: Dict[Tuple[int, int], int] = field(compare=True)

    def N(self, m: int, n: int) -> int:
        self._check(n)
        return self.counts.get((m, n), 0)

    def _check(self, n):
        if not 0 <= n <= self.nmax:
            raise ValueError(f"n={n} outside the table range 0..{self.nmax}")

    def row(self, n: int) -> Dict[int, int]:
        """``{m: N(m, n)}`` for the nonzero counts."""
        self._check(n)
        return {m: c for (m, k), c in self.counts.items() if k == n}

    def p(self, n: int) -> int:
        return sum(self.row(n).values())

    def polynomial(self, n: int) -> LaurentPoly:
        return LaurentPoly(self.row(n))


def _table_by_enumeration(nmax):
    counts = {}
    for n in range(nmax + 1):
        for p in enumerate_partitions(n):
            key = (dyson_rank(p), n)
            counts[key] = counts.get(key, 0) + 1
    return counts


@lru_cache(maxsize=None)
def r1_series(order: int) -> QSeries:
    """Rank generating function: coefficient of ``q^n`` is ``sum_m N(m, n) z^m``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    z = LaurentPoly.z()
    zinv = LaurentPoly.monomial(-1)
    ring = ("Laurent",)
    total = QSeries.constant(LaurentPoly.const(1), order)
    j = 1
    while j * j <= order:
        den = qs_mul(qs_pochhammer(z, 1, j, order), qs_pochhammer(zinv, 1, j, order))
        term = qs_invert(den).shift(j * j)
        total = total + term
        j += 1
    assert total.ring == ring
    return total


def _table_by_genfun(nmax):
    series = r1_series(nmax)
    counts = {}
    for n, poly in enumerate(series.coeffs):
        for m, c in poly.items():
            counts[(m, n)] = c
    return counts


@lru_cache(maxsize=None)
def rank_table(nmax: int, backend: str = "enumerate") -> RankTable:
    """Exact ``N(m, n)`` for ``0 <= n <= nmax``.

    ``backend`` is ``"enumerate"``, ``"genfun"`` or ``"both"``; with ``"both"``
    a disagreement raises ``BackendMismatch`` carrying the first ``(m, n)``.
    """
    if nmax < 0:
        raise ValueError("nmax must be non-negative")
    if backend == "enumerate":
        return RankTable(nmax, _table_by_enumeration(nmax))
    if backend == "genfun":
        return RankTable(nmax, _table_by_genfun(nmax))
    if backend == "both":
        a = _table_by_enumeration(nmax)
        b = _table_by_genfun(nmax)
        for key in sorted(set(a) | set(b), key=lambda mn: (mn[1], mn[0])):
            if a.get(key, 0) != b.get(key, 0):
                raise BackendMismatch(
                    f"N{key}: enumerate={a.get(key, 0)} genfun={b.get(key, 0)}", witness=key
                )
        return RankTable(nmax, a)
    raise ValueError(f"unknown backend {backend!r}")


def rank_class_count(b: int, c: int, n: int, table: RankTable) -> int:
    """``N(b, c, n)``: partitions of ``n`` with rank congruent to ``b`` mod ``c``."""
    b %= c
    return sum(cnt for m, cnt in table.row(n).items() if m % c == b)


def atkin_r(a: int, b: int, c: int, d: int, length: int, table: RankTable) -> List[int]:
    """Terms ``N(a, c, cn+d) - N(b, c, cn+d)`` for ``n = 0 .. length-1``."""
    last = c * (length - 1) + d
    if length > 0 and last > table.nmax:
        raise ValueError(f"table reaches n={table.nmax}, need n={last}")
    return [
        rank_class_count(a, c, c * n + d, table) - rank_class_count(b, c, c * n + d, table)
        for n in range(length)
    ]


def eta_moment(k: int, n: int, table: RankTable) -> int:
    """Symmetrized moment ``sum_m C(m + floor((k-1)/2), k) N(m, n)``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    shift = (k - 1) // 2
    return sum(binom(m + shift, k) * cnt for m, cnt in table.row(n).items())
