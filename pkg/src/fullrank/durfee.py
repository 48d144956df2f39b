"""Brute-force enumeration of k-marked Durfee symbols.

A symbol is a Durfee square of side ``c`` together with a top and a bottom
row of subscripted parts ``size_subscript``.  Rows are read left to right;
along a row both the sizes and the subscripts weakly decrease.  The rules a
symbol must satisfy are exposed as separate predicates so that the
enumerator can be audited against them.

This module deliberately never touches a generating function: it is the
independent oracle for :mod:`fullrank.genfun`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Dict, Iterator, List, Tuple

from .rankstats import BackendMismatch, eta_moment, rank_table

Entry = Tuple[int, int]  # (size, subscript)

ENUMERATION_CAP = 40


@dataclass(frozen=True)
class MarkedDurfeeSymbol:
    side: int
    top: Tuple[Entry, ...]
    bottom: Tuple[Entry, ...]
    marks: int

    @property
    def weight(self) -> int:
        return self.side ** 2 + sum(s for s, _ in self.top) + sum(s for s, _ in self.bottom)

    def largest_top_parts(self) -> Dict[int, int]:
        """``{e: M_e}`` with ``M_0 = 1`` and ``M_k = side``."""
        M = {0: 1, self.marks: self.side}
        for e in range(1, self.marks):
            sizes = [s for s, sub in self.top if sub == e]
            if sizes:
                M[e] = max(sizes)
        return M

    def __str__(self):
        fmt = lambda row: " ".join(f"{s}_{e}" for s, e in row) or "-"
        return f"({fmt(self.top)} / {fmt(self.bottom)})_{self.side}"


# Rule predicates


def rule_alphabet(s: MarkedDurfeeSymbol) -> bool:
    return all(1 <= size <= s.side and 1 <= sub <= s.marks for size, sub in s.top + s.bottom)


def rule_sizes_decreasing(s: MarkedDurfeeSymbol) -> bool:
    return all(
        row[i][0] >= row[i + 1][0] for row in (s.top, s.bottom) for i in range(len(row) - 1)
    )


def rule_subscripts_decreasing(s: MarkedDurfeeSymbol) -> bool:
    return all(
        row[i][1] >= row[i + 1][1] for row in (s.top, s.bottom) for i in range(len(row) - 1)
    )


def rule_top_coverage(s: MarkedDurfeeSymbol) -> bool:
    present = {sub for _, sub in s.top}
    return all(e in present for e in range(1, s.marks))


def rule_bottom_intervals(s: MarkedDurfeeSymbol) -> bool:
    M = s.largest_top_parts()
    for size, e in s.bottom:
        if e - 1 not in M or e not in M:
            return False
        if not M[e - 1] <= size <= M[e]:
            return False
    return True


RULES = (
    rule_alphabet,
    rule_sizes_decreasing,
    rule_subscripts_decreasing,
    rule_top_coverage,
    rule_bottom_intervals,
)


def is_valid(s: MarkedDurfeeSymbol) -> bool:
    return all(rule(s) for rule in RULES)


# Enumeration


def _multisets(lo: int, hi: int, budget: int, nonempty: bool) -> Iterator[Tuple[int, ...]]:
    """Weakly decreasing tuples of sizes in ``[lo, hi]`` with sum at most ``budget``."""
    if not nonempty:
        yield ()
    if hi < lo or lo < 1:
        return

    def walk(cap, remaining, prefix):
        for size in range(min(cap, remaining), lo - 1, -1):
            prefix.append(size)
            yield tuple(prefix)
            yield from walk(size, remaining - size, prefix)
            prefix.pop()

    yield from walk(hi, budget, [])


def _bottom_rows(M, k, budget):
    """Bottom-row groups (subscript 1 first), each within ``[M[e-1], M[e]]``, of exact weight."""

    def walk(e, remaining, groups):
        if e > k:
            if remaining == 0:
                yield groups
            return
        for sizes in _multisets(M[e - 1], M[e], remaining, False):
            yield from walk(e + 1, remaining - sum(sizes), groups + (sizes,))

    yield from walk(1, budget, ())


def _top_rows(side, k, budget):
    """Top-row groups (subscript 1 first) with their largest parts ``M``."""

    def walk(e, lo, remaining, groups, M):
        if e > k:
            yield groups, M
            return
        required = e < k
        for sizes in _multisets(lo, side, remaining, required):
            nextM = M
            if required:
                nextM = dict(M)
                nextM[e] = sizes[0]
            yield from walk(
                e + 1, sizes[0] if sizes else lo, remaining - sum(sizes), groups + (sizes,), nextM
            )

    yield from walk(1, 1, budget, (), {0: 1, k: side})


def _as_row(groups):
    row = []
    for e in range(len(groups), 0, -1):
        row.extend((size, e) for size in groups[e - 1])
    return tuple(row)


def enumerate_symbols(k: int, n: int, force: bool = False) -> Iterator[MarkedDurfeeSymbol]:
    """Every ``k``-marked Durfee symbol of ``n``, each exactly once, in a fixed order."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    if k >= 3 and n > ENUMERATION_CAP and not force:
        raise ValueError(f"enumeration of {k}-marked symbols refuses n > {ENUMERATION_CAP}")
    for side in range(isqrt(n) + 1):
        rest = n - side * side
        if side == 0:
            if rest == 0 and k == 1:
                yield MarkedDurfeeSymbol(0, (), (), k)
            continue
        for top_groups, M in _top_rows(side, k, rest):
            top = _as_row(top_groups)
            left = rest - sum(s for s, _ in top)
            for bottom_groups in _bottom_rows(M, k, left):
                yield MarkedDurfeeSymbol(side, top, _as_row(bottom_groups), k)


def ith_ranks(s: MarkedDurfeeSymbol) -> Tuple[int, ...]:
    tau = Counter(sub for _, sub in s.top)
    beta = Counter(sub for _, sub in s.bottom)
    k = s.marks
    return tuple(tau[i] - beta[i] - (1 if i < k else 0) for i in range(1, k + 1))


def full_rank(s: MarkedDurfeeSymbol) -> int:
    return sum(i * r for i, r in enumerate(ith_ranks(s), start=1))


@lru_cache(maxsize=None)
def _vector_counts(k, n, force):
    return dict(sorted(Counter(ith_ranks(s) for s in enumerate_symbols(k, n, force)).items()))


def vector_rank_counts(k: int, n: int, force: bool = False) -> Dict[Tuple[int, ...], int]:
    """``{(m_1, ..., m_k): number of symbols of n with those i-th ranks}``."""
    return dict(_vector_counts(k, n, force))


def nf_counts(l: int, n: int, force: bool = False) -> Dict[int, int]:
    """``{full rank m: NF_l(m, n)}`` by enumeration."""
    out: Dict[int, int] = {}
    for vec, cnt in _vector_counts(l, n, force).items():
        m = sum(i * r for i, r in enumerate(vec, start=1))
        out[m] = out.get(m, 0) + cnt
    return dict(sorted(out.items()))


def nf_class(l: int, b: int, c: int, n: int, force: bool = False) -> int:
    """Number of ``l``-marked symbols of ``n`` with full rank congruent to ``b`` mod ``c``."""
    b %= c
    return sum(cnt for m, cnt in nf_counts(l, n, force).items() if m % c == b)


def d_count(k: int, n: int, backend: str = "enumerate", force: bool = False) -> int:
    """``D_k(n)``.

    ``"moments"`` uses ``p(n)`` for ``k = 1`` and the symmetrized moment
    ``eta_{2k-2}(n)`` otherwise; ``"both"`` runs the two and compares.
    """
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    if backend == "enumerate":
        return sum(_vector_counts(k, n, force).values())
    if backend == "moments":
        table = rank_table(n)
        return table.p(n) if k == 1 else eta_moment(2 * k - 2, n, table)
    if backend == "both":
        a = d_count(k, n, "enumerate", force)
        b = d_count(k, n, "moments")
        if a != b:
            raise BackendMismatch(f"D_{k}({n}): enumerate={a} moments={b}", witness=(k, n))
        return a
    raise ValueError(f"unknown backend {backend!r}")


def symbols_list(k: int, n: int) -> List[MarkedDurfeeSymbol]:
    return list(enumerate_symbols(k, n))
