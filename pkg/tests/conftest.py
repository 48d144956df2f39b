import itertools

import pytest

from fullrank.durfee import MarkedDurfeeSymbol, is_valid


def pentagonal_p(nmax):
    """p(0..nmax) from Euler's pentagonal-number recurrence."""
    p = [1] + [0] * nmax
    for n in range(1, nmax + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def naive_symbols(k, n):
    """Every symbol of n found by filtering all pairs of entry multisets through the rules."""
    found = []
    for side in range(0, n + 1):
        rest = n - side * side
        if rest < 0:
            break
        entries = [(s, e) for s in range(1, side + 1) for e in range(1, k + 1)]
        rows = []
        for length in range(rest + 1):
            for combo in itertools.combinations_with_replacement(entries, length):
                w = sum(s for s, _ in combo)
                if w <= rest:
                    rows.append((w, tuple(sorted(combo, reverse=True))))
        for wt, top in rows:
            for wb, bottom in rows:
                if wt + wb == rest:
                    sym = MarkedDurfeeSymbol(side, top, bottom, k)
                    if is_valid(sym):
                        found.append(sym)
    return found


@pytest.fixture(scope="session")
def p_values():
    return pentagonal_p(40)
