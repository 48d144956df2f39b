"""Identity checks with witness collection.

Every ``check_*`` function returns a :class:`CheckReport`.  Checks never stop
at the first failure; they scan their whole range and record every
``(n, expected, actual)`` triple that disagrees.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Any, Callable, Dict, List, Optional

from . import durfee, genfun
from .rankstats import BackendMismatch, rank_class_count, rank_table
from .rings import CyclotomicElt, LaurentPoly, cyc_eval, cyclic_reduce

ORACLE_NMAX = 18


@dataclass
class CheckReport:
    check: str
    params: Dict[str, Any]
    witnesses: List[Dict[str, Any]] = field(default_factory=list)
    millis: int = 0
    cases: int = 0

    @property
    def status(self) -> str:
        return "pass" if not self.witnesses else "fail"

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def fail(self, n, expected, actual):
        self.witnesses.append({"n": n, "expected": _jsonable(expected), "actual": _jsonable(actual)})

    def expect(self, n, expected, actual):
        self.cases += 1
        if expected != actual:
            self.fail(n, expected, actual)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "params": self.params,
            "status": self.status,
            "witnesses": self.witnesses,
            "millis": self.millis,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> CheckReport:
        report = cls(data["check"], dict(data["params"]), list(data["witnesses"]), data["millis"])
        if report.status != data["status"]:
            raise ValueError("status field inconsistent with witnesses")
        return report


def _jsonable(x):
    if isinstance(x, (int, str)) or x is None:
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def _timed(name: str, params: Dict[str, Any]):
    """A fresh report plus a callable that stamps its runtime."""
    report = CheckReport(name, params)
    start = time.perf_counter()

    def finish():
        report.millis = int((time.perf_counter() - start) * 1000)
        return report

    return report, finish


def nf_residues(l: int, c: int, nmax: int, backend: str = "genfun") -> List[tuple]:
    """Per-``n`` tuples ``(NF_l(0, c, n), ..., NF_l(c-1, c, n))``."""
    if backend == "genfun":
        return [r.coeffs for r in genfun.reduce_mod(genfun.rk_coefficients(l, nmax), c)]
    if backend == "enumerate":
        return [cyclic_reduce(LaurentPoly(durfee.nf_counts(l, n)), c).coeffs for n in range(nmax + 1)]
    if backend == "both":
        a = nf_residues(l, c, nmax, "enumerate")
        b = nf_residues(l, c, nmax, "genfun")
        for n, (x, y) in enumerate(zip(a, b)):
            if x != y:
                raise BackendMismatch(f"NF_{l}(., {c}, {n}): enumerate={x} genfun={y}", witness=n)
        return b
    raise ValueError(f"unknown backend {backend!r}")


# Partition-rank checks


def check_rank_backends(nmax: int) -> CheckReport:
    report, finish = _timed("rank-backends", {"nmax": nmax})
    a = rank_table(nmax, "enumerate")
    b = rank_table(nmax, "genfun")
    for n in range(nmax + 1):
        ra, rb = a.row(n), b.row(n)
        for m in sorted(set(ra) | set(rb)):
            report.expect(n, ra.get(m, 0), rb.get(m, 0))
        report.expect(n, len(durfee.symbols_list(1, n)) if n <= ORACLE_NMAX else a.p(n), a.p(n))
        for m, cnt in ra.items():
            report.expect(n, cnt, ra.get(-m, 0))
            if n >= 2 and abs(m) >= n:
                report.fail(n, 0, cnt)
    return finish()


def check_dyson(nmax: int) -> CheckReport:
    """Rank classes mod 5 on ``5n+4`` and mod 7 on ``7n+5`` are equally populated."""
    report, finish = _timed("dyson", {"nmax": nmax})
    table = rank_table(nmax)
    for c, d in ((5, 4), (7, 5)):
        for n in range(d, nmax + 1, c):
            counts = [rank_class_count(i, c, n, table) for i in range(c)]
            for v in counts[1:]:
                report.expect(n, counts[0], v)
    return finish()


def check_evenness(nmax: int) -> CheckReport:
    """Three weighted residue-class sums forced by ``N(m, n) = N(-m, n)``."""
    report, finish = _timed("evenness", {"nmax": nmax})
    table = rank_table(nmax)
    for n in range(nmax + 1):
        row = table.row(n)
        N = lambda m: row.get(m, 0)
        ks = range(-(n // 3) - 2, n // 3 + 3)
        report.expect(n, 0, sum(k * N(3 * k) for k in ks))
        report.expect(n, 0, sum(k * N(3 * k + 1) + (k + 1) * N(3 * k + 2) for k in ks))
        report.expect(
            n,
            sum(k * k * N(3 * k + 1) for k in ks),
            sum((k + 1) ** 2 * N(3 * k + 2) for k in ks),
        )
    return finish()


# Durfee-symbol checks


def check_oracle(kmax: int, nmax: int) -> CheckReport:
    """Generating-function coefficients equal brute-force full-rank polynomials."""
    report, finish = _timed("oracle", {"kmax": kmax, "nmax": nmax})
    for k in range(1, kmax + 1):
        series = genfun.rk_coefficients(k, nmax)
        for n in range(nmax + 1):
            brute = LaurentPoly(durfee.nf_counts(k, n))
            report.expect(n, str(brute), str(series[n]))
            if not series[n].is_symmetric():
                report.fail(n, "symmetric", str(series[n]))
    return finish()


def check_durfee_moments(kmax: int, nmax: int) -> CheckReport:
    """``D_{k+1}(n) = eta_{2k}(n)`` by enumeration against the rank table."""
    report, finish = _timed("durfee-moments", {"kmax": kmax, "nmax": nmax})
    for k in range(1, kmax + 1):
        for n in range(nmax + 1):
            report.expect(n, durfee.d_count(k, n, "moments"), durfee.d_count(k, n, "enumerate"))
    return finish()


def check_equidistribution(l: int, c: int, nmax: int, backend: str = "genfun") -> CheckReport:
    """Classes ``a, b`` with ``gcd(a, c) = gcd(b, c)`` hold equally many symbols."""
    if c != 2 * l + 1:
        raise ValueError("c must equal 2l + 1")
    report, finish = _timed("equidistribution", {"l": l, "c": c, "nmax": nmax, "backend": backend})
    try:
        rows = nf_residues(l, c, nmax, backend)
    except BackendMismatch as exc:
        report.fail(exc.witness, "backends agree", str(exc))
        return finish()
    for n, row in enumerate(rows):
        reps = {}
        for b in range(c):
            g = gcd(b, c)
            if g in reps:
                report.expect(n, row[reps[g]], row[b])
            else:
                reps[g] = b
    return finish()


def check_integer_form(l: int, nmax: int, backend: str = "genfun") -> CheckReport:
    """``sum_b NF_l(b, c, n) zeta_c^b = N(l-1, c, n) - N(l, c, n)`` in ``Z[zeta_c]``."""
    c = 2 * l + 1
    report, finish = _timed("integer-form", {"l": l, "c": c, "nmax": nmax, "backend": backend})
    table = rank_table(nmax)
    prime = all(c % p for p in range(2, c))
    try:
        rows = nf_residues(l, c, nmax, backend)
    except BackendMismatch as exc:
        report.fail(exc.witness, "backends agree", str(exc))
        return finish()
    for n, row in enumerate(rows):
        rhs = rank_class_count(l - 1, c, n, table) - rank_class_count(l, c, n, table)
        lhs = cyc_eval(LaurentPoly.from_list(row), c)
        report.expect(n, str(CyclotomicElt(c, rhs)), str(lhs))
        if prime:
            report.expect(n, rhs, row[0] - row[1])
    return finish()


def check_congruences(nmax: int) -> CheckReport:
    """Mod-5 and mod-7 congruences for ``D_2``, ``D_3``; ``D_4(3n)`` mod 3."""
    report, finish = _timed("congruences", {"nmax": nmax})
    table = rank_table(nmax)
    D = {k: [sum(r.coeffs) for r in genfun.reduce_mod(genfun.rk_coefficients(k, nmax), 2)] for k in (2, 3, 4)}
    for n in range(nmax + 1):
        for k in (2, 3, 4):
            report.expect(n, durfee.d_count(k, n, "moments"), D[k][n])
        d2, d3 = D[2][n], D[3][n]
        report.expect(n, (rank_class_count(1, 5, n, table) - rank_class_count(2, 5, n, table)) % 5, d2 % 5)
        report.expect(n, (rank_class_count(2, 7, n, table) - rank_class_count(3, 7, n, table)) % 7, d3 % 7)
        if n % 5 in (1, 4):
            report.expect(n, 0, d2 % 5)
        if n % 7 in (0, 1, 5):
            report.expect(n, 0, d3 % 7)
        if n % 3 == 0:
            report.expect(n, 0, D[4][n] % 3)
    return finish()


def check_c9(nmax: int) -> CheckReport:
    """The modulus-9 identities for 4-marked symbols.

    Uses ``T = N(3,9,n) - N(4,9,n)`` and ``S`` the weighted rank sum of
    :func:`genfun.c9_rank_sum`.  Checked: ``NF(0) - NF(3) = T``;
    ``T = 0`` on multiples of 3; ``NF(0) - 3NF(1) + 2NF(3) = S``;
    ``NF(0) - NF(1) = (2T + S)/3`` exactly; ``D_4 = 9 NF(0) - 6T - 2S``, so
    ``D_4 = 3T - 2S (mod 9)``.
    """
    report, finish = _timed("c9", {"nmax": nmax})
    table = rank_table(nmax)
    rows = nf_residues(4, 9, nmax)
    for n, nf in enumerate(rows):
        T = rank_class_count(3, 9, n, table) - rank_class_count(4, 9, n, table)
        S = genfun.c9_rank_sum(n, table)
        report.expect(n, T, nf[0] - nf[3])
        if n % 3 == 0:
            report.expect(n, 0, T)
        report.expect(n, S, nf[0] - 3 * nf[1] + 2 * nf[3])
        diff = Fraction(2 * T + S, 3)
        report.expect(n, 1, diff.denominator)
        report.expect(n, diff, Fraction(nf[0] - nf[1]))
        total = sum(nf)
        report.expect(n, 9 * nf[0] - 6 * T - 2 * S, total)
        report.expect(n, (3 * T - 2 * S) % 9, total % 9)
    return finish()


def check_c9_pipeline(nmax: int) -> CheckReport:
    """Explicit derivative chain vs. exact specialization at ``zeta_9^3``."""
    report, finish = _timed("c9-pipeline", {"nmax": nmax})
    table = rank_table(nmax)
    chain = genfun.c9_pipeline(nmax)
    closed = genfun.c9_closed_form(nmax)
    exact = genfun.substitute_root(genfun.rk_coefficients(4, nmax), 9, 3)
    for n in range(nmax + 1):
        report.expect(n, str(exact[n]), str(genfun.embed_zeta3(chain[n])))
        report.expect(n, str(chain[n]), str(closed[n]))
        rational, zeta_part = genfun.zeta3_expansion(n, table)
        report.expect(n, 0, zeta_part)
        report.expect(n, str(chain[n]), str(rational))
    return finish()


def check_mobius(nmax: int) -> CheckReport:
    """Divisor-class weights: printed triples, brute root sums, and series agreement."""
    report, finish = _timed("mobius", {"nmax": nmax})
    printed = {(9, 1): {9: 1, 1: 0, 3: -1}, (9, 3): {9: 1, 1: -3, 3: 2}}
    for (c, d), triple in printed.items():
        for r, value in triple.items():
            report.expect(0, value, genfun.mobius_coeff(4, c, d, r))
    for c in (3, 5, 7, 9, 15, 21, 25, 27):
        for d in genfun.divisors(c):
            for r in genfun.divisors(c):
                report.expect(0, str(genfun.class_root_sum(c, d, r)), str(CyclotomicElt(c, genfun.mobius_coeff(1, c, d, r))))
    s = genfun.rk_coefficients(4, nmax)
    residues = genfun.reduce_mod(s, 9)
    for d in (1, 3, 9):
        values = genfun.substitute_root(s, 9, d)
        for n in range(nmax + 1):
            report.expect(n, str(CyclotomicElt(9, genfun.mobius_combination(4, 9, d, residues[n]))), str(values[n]))
    return finish()


def check_permutation(nmax: int) -> CheckReport:
    """``z -> z^m`` fixes the residues mod ``z^9 - 1`` for units ``m`` only."""
    report, finish = _timed("permutation", {"nmax": nmax})
    residues = genfun.reduce_mod(genfun.rk_coefficients(4, nmax), 9)
    for m in (2, 4, 5, 7, 8):
        for n, r in enumerate(residues):
            report.expect(n, r.coeffs, r.substitute_power(m).coeffs)
    moved = any(r.substitute_power(3) != r for r in residues)
    report.expect(nmax, True, moved)
    return finish()


def check_cyclotomic_lemmas(lmax: int) -> CheckReport:
    """Root-of-unity identities behind the integrality argument, for ``l = 2 .. lmax``.

    Witness ``n`` is the value of ``l`` (or ``c`` for the norm identity).
    """
    report, finish = _timed("cyclotomic-lemmas", {"lmax": lmax})
    for l in range(2, lmax + 1):
        c = 2 * l + 1
        zeta = lambda e: cyc_eval(LaurentPoly.monomial(e), c)
        total = CyclotomicElt(c, 0)
        four_power = CyclotomicElt(c, 0)
        scaled = {}
        for i in range(1, l + 1):
            prod = CyclotomicElt(c, 1)
            for j in range(1, l + 1):
                if j != i:
                    prod = prod * (zeta(i) - zeta(j)) * (1 - zeta(-i - j))
            # c / prod is integral: the product misses only two factors of prod(1 - zeta^e)
            scaled[i] = CyclotomicElt(c, c) / prod
            rewritten = zeta(-i * (l - 1)) * (1 - zeta(-2 * i)) * (1 - zeta(-i))
            report.expect(l, str(rewritten), str(scaled[i]))
            total = total + scaled[i]
            four_power = four_power + zeta(-i * (l - 1)) + zeta(-i * (l + 2)) - zeta(-i * (l + 1)) - zeta(-i * l)
            exps = sorted((e % c) for j in range(1, l + 1) if j != i for e in (-i + j, -i - j))
            expected = sorted(set(range(1, c)) - {(-i) % c, (-2 * i) % c})
            report.expect(l, expected, exps)
        report.expect(l, "0", str(total))
        report.expect(l, "0", str(four_power))
        for g in range(1, l):
            eps = sum(
                (zeta(i * (l - g + 2)) + zeta(i * (l - g - 1)) - zeta(i * (l - g + 1)) - zeta(i * (l - g)) for i in range(1, c)),
                CyclotomicElt(c, 0),
            )
            report.expect(l, str(CyclotomicElt(c, c if g == l - 1 else 0)), str(eps))
            direct = sum((scaled[i] * (zeta(i * g) + zeta(-i * g)) for i in range(1, l + 1)), CyclotomicElt(c, 0))
            report.expect(l, str(CyclotomicElt(c, c if g == l - 1 else 0)), str(direct))
    for c in range(3, 2 * lmax + 2, 2):
        prod = CyclotomicElt(c, 1)
        for i in range(1, c):
            prod = prod * (1 - cyc_eval(LaurentPoly.monomial(i), c))
        report.expect(c, str(CyclotomicElt(c, c)), str(prod))
    return finish()


def suite(nmax: int) -> Dict[str, Callable[[], CheckReport]]:
    """Named checks run by ``verify all``, parameterized by ``nmax``."""
    oracle_n = min(nmax, ORACLE_NMAX)
    return {
        "rank-backends": lambda: check_rank_backends(nmax),
        "dyson": lambda: check_dyson(nmax),
        "evenness": lambda: check_evenness(nmax),
        "oracle": lambda: check_oracle(4, oracle_n),
        "durfee-moments": lambda: check_durfee_moments(4, oracle_n),
        "equidistribution": lambda: _merge(
            "equidistribution",
            [check_equidistribution(l, 2 * l + 1, nmax) for l in (2, 3, 4)]
            + [check_equidistribution(4, 9, oracle_n, "enumerate")],
        ),
        "integer-form": lambda: _merge("integer-form", [check_integer_form(l, nmax) for l in (2, 3, 4, 5, 6)]),
        "congruences": lambda: check_congruences(nmax),
        "c9": lambda: check_c9(nmax),
        "c9-pipeline": lambda: check_c9_pipeline(nmax),
        "mobius": lambda: check_mobius(nmax),
        "permutation": lambda: check_permutation(nmax),
        "cyclotomic-lemmas": lambda: check_cyclotomic_lemmas(5),
    }


def _merge(name: str, reports: List[CheckReport]) -> CheckReport:
    merged = CheckReport(name, {"runs": [r.params for r in reports]})
    for r in reports:
        merged.witnesses.extend(r.witnesses)
        merged.millis += r.millis
        merged.cases += r.cases
    return merged


def run(name: str, nmax: int, names: Optional[List[str]] = None) -> List[CheckReport]:
    checks = suite(nmax)
    if name == "all":
        selected = names or list(checks)
    elif name in checks:
        selected = [name]
    else:
        raise KeyError(name)
    return [checks[key]() for key in selected]


CHECK_NAMES = tuple(suite(0))


__all__ = [
    "CHECK_NAMES",
    "CheckReport",
    "check_c9",
    "check_c9_pipeline",
    "check_congruences",
    "check_cyclotomic_lemmas",
    "check_dyson",
    "check_equidistribution",
    "check_evenness",
    "check_integer_form",
    "check_mobius",
    "check_oracle",
    "check_permutation",
    "check_rank_backends",
    "nf_residues",
    "run",
]
