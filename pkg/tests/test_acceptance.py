"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (visible with ``-s``) and
then asserts.  All comparisons are exact.
"""

import subprocess
import sys
import time
from math import gcd


from fullrank import durfee, genfun, rankstats, verify
from fullrank.rings import CyclotomicElt, LaurentPoly, cyc_eval

from conftest import pentagonal_p


def report(label, ok, detail=""):
    print(f"\n{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
    assert ok, detail


def _clear_caches():
    rankstats.rank_table.cache_clear()
    rankstats.r1_series.cache_clear()
    genfun.rk_coefficients.cache_clear()
    durfee._vector_counts.cache_clear()


def test_01_rank_table_backends():
    _clear_caches()
    start = time.perf_counter()
    a = rankstats.rank_table(30, "enumerate")
    b = rankstats.rank_table(30, "genfun")
    elapsed = time.perf_counter() - start
    p = pentagonal_p(30)
    ok = a.counts == b.counts
    ok &= all(a.p(n) == p[n] for n in range(31))
    ok &= all(a.N(-m, n) == c for n in range(31) for m, c in a.row(n).items())
    ok &= elapsed < 10
    report("1 rank table: backends agree, totals p(n), symmetric, n <= 30", ok, f"{elapsed:.2f} s")


def test_02_dyson_equidistribution():
    t = rankstats.rank_table(29)
    ok = all(
        len({rankstats.rank_class_count(i, 5, n, t) for i in range(5)}) == 1 for n in range(4, 30, 5)
    )
    ok &= all(
        len({rankstats.rank_class_count(i, 7, n, t) for i in range(7)}) == 1 for n in range(5, 27, 7)
    )
    report("2 Dyson: rank classes mod 5 and mod 7 equally populated", ok)


def test_03_oracle_equivalence():
    _clear_caches()
    start = time.perf_counter()
    r = verify.check_oracle(4, 18)
    elapsed = time.perf_counter() - start
    report("3 oracle: genfun coefficients equal enumerated full ranks, k <= 4, n <= 18",
           r.passed and elapsed < 180, f"{r.cases} cases, {elapsed:.1f} s, witnesses {r.witnesses[:3]}")


def test_04_equidistribution_mod_nine():
    brute = verify.check_equidistribution(4, 9, 18, "enumerate")
    series = verify.check_equidistribution(4, 9, 30, "genfun")
    rows = verify.nf_residues(4, 9, 18, "enumerate")
    classes_ok = all(len({row[b] for b in range(9) if gcd(b, 9) == g}) == 1 for row in rows for g in (1, 3))
    report("4 NF_4 classes mod 9 with equal gcd agree (brute n <= 18, genfun n <= 30)",
           brute.passed and series.passed and classes_ok, f"{brute.witnesses + series.witnesses}")


def test_05_integer_form():
    reports = [verify.check_integer_form(l, 24) for l in (2, 3, 4)]
    report("5 sum_b NF_l(b,c,n) zeta^b = N(l-1,c,n) - N(l,c,n) for (2,5), (3,7), (4,9), n <= 24",
           all(r.passed for r in reports), f"{[w for r in reports for w in r.witnesses]}")


def test_06_congruences():
    t = rankstats.rank_table(24)
    count = lambda b, c, n: rankstats.rank_class_count(b, c, n, t)
    ok = True
    for n in range(25):
        d2 = durfee.d_count(2, n, "moments")
        d3 = durfee.d_count(3, n, "moments")
        ok &= (d2 - count(1, 5, n) + count(2, 5, n)) % 5 == 0
        ok &= (d3 - count(2, 7, n) + count(3, 7, n)) % 7 == 0
        if n % 5 in (1, 4):
            ok &= d2 % 5 == 0
        if n % 7 in (0, 1, 5):
            ok &= d3 % 7 == 0
    r = verify.check_congruences(24)
    report("6 D_2 mod 5 and D_3 mod 7 congruences, n <= 24", ok and r.passed, f"{r.witnesses}")


def test_07_multiples_of_three():
    t = rankstats.rank_table(24)
    s = genfun.rk_coefficients(4, 24)
    ok = True
    for n in range(0, 25, 3):
        ok &= s[n](1) % 3 == 0
        ok &= durfee.d_count(4, n, "moments") % 3 == 0
        ok &= rankstats.rank_class_count(3, 9, n, t) == rankstats.rank_class_count(4, 9, n, t)
    report("7 D_4(3n) = 0 mod 3 and N(3,9,3n) = N(4,9,3n), 3n <= 24", ok)


def test_08_mobius_triples():
    got = {d: tuple(genfun.mobius_coeff(4, 9, d, r) for r in (9, 1, 3)) for d in (1, 3)}
    report("8 divisor-class coefficients (1,0,-1) at d=1 and (1,-3,2) at d=3", got == {1: (1, 0, -1), 3: (1, -3, 2)}, f"{got}")


def test_09_c9_pipeline():
    chain = genfun.c9_pipeline(20)
    exact = genfun.substitute_root(genfun.rk_coefficients(4, 20), 9, 3)
    t = rankstats.rank_table(20)
    ok = all(genfun.embed_zeta3(chain[n]) == exact[n] for n in range(21))
    ok &= all(genfun.zeta3_expansion(n, t)[1] == 0 for n in range(21))
    report("9 derivative chain equals exact specialization at zeta_9^3, zeta_3 part vanishes, n <= 20", ok)


def test_10_cyclotomic_lemmas():
    r = verify.check_cyclotomic_lemmas(5)
    norms = True
    for c in range(3, 16, 2):
        prod = CyclotomicElt(c, 1)
        for i in range(1, c):
            prod = prod * (1 - cyc_eval(LaurentPoly.monomial(i), c))
        norms &= prod == c
    report("10 cyclotomic lemmas for l = 2..5 and prod(1 - zeta^i) = c for odd c <= 15",
           r.passed and norms, f"{r.witnesses}")


def test_11_verify_all_cli():
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "fullrank", "verify", "all", "--nmax", "18"],
        capture_output=True,
        text=True,
        check=False,
    )
    elapsed = time.perf_counter() - start
    report("11 `verify all --nmax 18` exits 0 in under 5 minutes",
           proc.returncode == 0 and elapsed < 300, f"exit {proc.returncode}, {elapsed:.1f} s")
