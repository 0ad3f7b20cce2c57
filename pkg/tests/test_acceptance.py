"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import random
import time
from fractions import Fraction

import pytest

from moddecomp import arith
from moddecomp.cli import table_document
from moddecomp.curves import CongruenceGroup
from moddecomp.decomp import (
    Base,
    anderson_table,
    convolve,
    duality_scan,
    k2_sequence,
    k3_sequence,
    l_sequence,
)
from moddecomp.dims import m_dim, s_dim
from moddecomp.hasse import expected_l_valuation, verify_hasse_lift
from moddecomp.wproj import MODELS, TwistMultiset, sections, serre_dual_check, splitting_from_sections

from conftest import load_golden


def verdict(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}"
    print("\n" + line + (f"  ({detail})" if detail else ""))
    assert ok, line + (f": {detail}" if detail else "")


def _trim(seq):
    seq = list(seq)
    while seq and seq[-1] == 0:
        seq.pop()
    return seq


def test_criterion_1_table_b1():
    start = time.perf_counter()
    doc = table_document("B1")
    elapsed = time.perf_counter() - start
    golden = load_golden("B1")
    rows = {r[0]: r[1:] for r in doc.rows}
    ok = rows == golden and len(rows) == 41 and all(len(r) == 13 for r in rows.values())
    verdict(1, "B1 l-table, 41 rows exact, < 2 s", ok and elapsed < 2.0, f"{elapsed:.3f} s")


def test_criterion_2_tables_b2_b3():
    b2 = {r[0]: r[1:] for r in table_document("B2").rows}
    b3 = {r[0]: r[1:] for r in table_document("B3").rows}
    ok = b2 == load_golden("B2") and b3 == load_golden("B3")
    verdict(2, "B2 (n = 4..23) and B3 (n = 5..23) exact", ok, f"{len(b2)} + {len(b3)} rows")


def test_criterion_3_duality_scan():
    scan = duality_scan(144)
    ratios_ok = (
        scan.ratios[(2, 1)] == Fraction(2, 3)
        and scan.ratios[(3, 2)] == Fraction(2, 9)
        and scan.ratios[(5, 3)] == Fraction(3, 125)
    )
    ok = scan.solutions == [23, 32, 33, 35, 40, 42] and ratios_ok
    verdict(3, "duality scan to 144 and ratio table", ok, f"solutions {scan.solutions}")


def test_criterion_4_anderson():
    table = anderson_table(42)
    expected = [(1, 21), (2, 13), (3, 9), (4, 7), (5, 5), (6, 5), (7, 3), (8, 3),
                (11, 1), (14, 1), (15, 1), (23, -1)]
    verdict(4, "Anderson self-duality levels and shifts", table == expected, f"{table}")


def test_criterion_5_degree_identities():
    bad_degree = [n for n in range(1, 10_001)
                  if arith.gamma1_degree_divisor_sum(n) != arith.gamma1_degree_product(n)]
    bad_sums = []
    for n in range(2, 43):
        g = CongruenceGroup.gamma1(n)
        d = arith.gamma1_degree(n)
        if sum(l_sequence(g).coeffs) != d:
            bad_sums.append(("l", n))
        if n >= 4 and 3 * sum(k2_sequence(g).coeffs) != d:
            bad_sums.append(("k2", n))
        if n >= 5 and 8 * sum(k3_sequence(g).coeffs) != d:
            bad_sums.append(("k3", n))
    ok = not bad_degree and not bad_sums
    verdict(5, "degree formulas agree to 10^4; rank sums to 42", ok, f"{bad_degree[:5]} {bad_sums[:5]}")


def test_criterion_6_cross_formula():
    failures = []
    for n in range(2, 43):
        g = CongruenceGroup.gamma1(n)
        l = l_sequence(g).coeffs
        for i in range(1, 5):
            if l[12 - i] != s_dim(g, i):
                failures.append((n, f"l_{12 - i}"))
        if l[10] != s_dim(g, 2):
            failures.append((n, "l_10"))
        if n >= 4:
            k = k2_sequence(g).coeffs
            if len({k[0] + k[4], k[1] + k[5], k[2] + k[6], k[3] + k[7]}) != 1:
                failures.append((n, "k2 sums"))
            if _trim(convolve(k, Base.E2.l_pattern)) != _trim(l):
                failures.append((n, "l = k2 * [1,0,1,0,1]"))
        if n >= 5:
            k = k3_sequence(g).coeffs
            if len({k[0] + k[3], k[1] + k[4], k[2] + k[5]}) != 1:
                failures.append((n, "k3 sums"))
            if _trim(convolve(k, Base.E3.l_pattern)) != _trim(l):
                failures.append((n, "l = k3 * [1,1,1,2,1,1,1]"))
    verdict(6, "cusp-form, genus, sum and convolution identities", not failures, f"{failures[:5]}")


def test_criterion_7_wproj_properties():
    serre_ok = all(serre_dual_check(X, m) for X in MODELS for m in range(-500, 501))
    rng = random.Random(20240601)
    round_trips = 0
    for _ in range(200):
        X = rng.choice(MODELS)
        bundle = TwistMultiset({rng.randrange(16): rng.randrange(1, 7) for _ in range(rng.randrange(1, 8))})
        h = sections(X, bundle, 15 + X.a + X.b)
        round_trips += splitting_from_sections(X, h, bundle.rank) == bundle
    verdict(7, "Serre duality |m| <= 500; 200 splitting round trips", serre_ok and round_trips == 200,
            f"{round_trips}/200")


def test_criterion_8_hasse_lift():
    start = time.perf_counter()
    failures = []
    for p in [3, 5, 7, 11, 13, 17, 19, 23]:
        rep = verify_hasse_lift(p, 200)
        if not rep.passed or len(rep.F) != 201:
            failures.append((p, "mod 2"))
        if rep.v2_l != expected_l_valuation(rep.m):
            failures.append((p, f"v2 {rep.v2_l}"))
        if p in (5, 13, 17) and rep.v2_l != 1 - Fraction(1, 2 ** (rep.m - 1)):
            failures.append((p, "m >= 2 valuation"))
    elapsed = time.perf_counter() - start
    verdict(8, "Hasse lift F = 1 mod 2 for p <= 23, N = 200, < 10 s", not failures and elapsed < 10.0,
            f"{elapsed:.2f} s {failures}")


def _monomials(a, b, k):
    return sum(1 for i in range(k + 1) for j in range(k + 1) if a * i + b * j == k)


def test_criterion_9_dimension_oracles():
    failures = []
    for n, (a, b) in [(2, (2, 4)), (3, (1, 3)), (4, (1, 2))]:
        g = CongruenceGroup.gamma1(n)
        failures += [(n, k) for k in range(51) if m_dim(g, k) != _monomials(a, b, k)]
    genus = {n: row[0] for n, row in load_golden("B1").items()}
    for n in range(5, 13):
        g = CongruenceGroup.gamma1(n)
        d = arith.gamma1_degree(n)
        failures += [(n, k) for k in range(2, 51) if m_dim(g, k) != Fraction(d * k, 24) + 1 - genus[n]]
    verdict(9, "Hilbert route = monomial count; Riemann-Roch for n = 5..12", not failures, f"{failures[:5]}")
