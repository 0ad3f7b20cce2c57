from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from moddecomp import arith
from moddecomp.errors import DomainError


def phi_bruteforce(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def sl2_order_bruteforce(n):
    count = 0
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if (a * d - b * c) % n == 1 % n:
                        count += 1
    return count


@pytest.mark.parametrize("n", range(1, 60))
def test_phi_matches_count(n):
    assert arith.euler_phi(n) == phi_bruteforce(n)


@given(st.integers(min_value=1, max_value=5000))
def test_factorize_roundtrip(n):
    prod = 1
    for p, e in arith.factorize(n):
        assert arith.is_prime(p)
        prod *= p**e
    assert prod == n


@given(st.integers(min_value=1, max_value=3000))
def test_degree_formulas_agree(n):
    assert arith.gamma1_degree_divisor_sum(n) == arith.gamma1_degree_product(n)


@pytest.mark.parametrize("n", range(2, 8))
def test_full_level_degree_is_sl2_order(n):
    assert arith.full_level_degree(n) == sl2_order_bruteforce(n)


def test_known_degrees():
    # d_n = 1, 3, 8, 12, 24, 24, 48, 48 for n = 1..8
    assert [arith.gamma1_degree(n) for n in range(1, 9)] == [1, 3, 8, 12, 24, 24, 48, 48]
    assert arith.gamma0_index(6) == 12
    assert arith.gamma0_index(11) == 12


def test_degree_rejects_nonpositive():
    with pytest.raises(DomainError):
        arith.gamma1_degree(0)


def test_divisors_sorted():
    assert arith.divisors(12) == (1, 2, 3, 4, 6, 12)


def test_valuations():
    assert arith.v2_int(48) == 4
    assert arith.v2_rat(Fraction(3, 40)) == -3
    assert arith.v2_rat(Fraction(-12, 7)) == 2


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37])
def test_legendre_symbols(p):
    minus_one, minus_three = arith.legendre_symbols(p)
    sq = {x * x % p for x in range(1, p)}

    def legendre(a):
        a %= p
        return 0 if a == 0 else (1 if a in sq else -1)

    if p > 2:
        assert minus_one == legendre(-1)
    if p > 3:
        assert minus_three == legendre(-3)


def test_legendre_rejects_composite():
    with pytest.raises(DomainError):
        arith.legendre_symbols(9)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23])
def test_primitive_root_generates(p):
    g = arith.primitive_root(p)
    assert len({pow(g, k, p) for k in range(p - 1)}) == p - 1
