"""Exact integer/rational arithmetic and multiplicative functions.

All levels handled by the library are small (at most a few thousand), so
factorization is plain trial division.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import prod

from moddecomp.errors import DomainError

# Lowest terms, positive denominator, normalized after every operation.
Rat = Fraction

Factorization = tuple[tuple[int, int], ...]


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    """Return ``((p1, e1), (p2, e2), ...)`` with p1 < p2 < ... and n = prod p^e."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = factorize(n)
    return len(f) == 1 and f[0][1] == 1


def is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n))


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def euler_phi(n: int) -> int:
    """|(Z/n)^x|."""
    if n < 1:
        raise DomainError(f"euler_phi needs n >= 1, got {n}")
    return prod(p ** (e - 1) * (p - 1) for p, e in factorize(n))


def v2_int(n: int) -> int:
    """2-adic valuation of a nonzero integer."""
    if n == 0:
        raise DomainError("v2(0) is infinite")
    n = abs(n)
    return (n & -n).bit_length() - 1


def v2_rat(x: Fraction) -> int:
    x = Fraction(x)
    return v2_int(x.numerator) - v2_int(x.denominator)


def cusp_sum(n: int) -> int:
    """sum_{d|n} phi(d) phi(n/d); twice the cusp count of X_1(n) for n >= 5."""
    return sum(euler_phi(d) * euler_phi(n // d) for d in divisors(n))


def gamma1_degree_divisor_sum(n: int) -> int:
    return sum(d * euler_phi(d) * euler_phi(n // d) for d in divisors(n))


def gamma1_degree_product(n: int) -> int:
    value = Fraction(n * n)
    for p in prime_divisors(n):
        value *= 1 - Fraction(1, p * p)
    assert value.denominator == 1
    return int(value)


def gamma1_degree(n: int) -> int:
    """Degree d_n of the stack map X_1(n) -> X(1).

    Computed as a divisor sum and checked against the Euler-product form.
    """
    if n < 1:
        raise DomainError(f"level must be >= 1, got {n}")
    d = gamma1_degree_divisor_sum(n)
    if d != gamma1_degree_product(n):
        raise AssertionError(f"degree formulas disagree at n={n}")
    return d


def full_level_degree(n: int) -> int:
    """|SL_2(Z/n)| = n^3 prod_{p|n} (1 - 1/p^2)."""
    return n * gamma1_degree_product(n)


def gamma0_index(n: int) -> int:
    """Dedekind psi: n prod_{p|n} (1 + 1/p) = d_n / phi(n)."""
    value = Fraction(n)
    for p in prime_divisors(n):
        value *= 1 + Fraction(1, p)
    return int(value)


def legendre_symbols(p: int) -> tuple[int, int]:
    """Return ((-1|p), (-3|p)), using the ramified/inert conventions at 2 and 3."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if p == 2:
        minus_one = 0
    else:
        minus_one = 1 if p % 4 == 1 else -1
    if p == 3:
        minus_three = 0
    elif p == 2:
        minus_three = -1
    else:
        minus_three = 1 if p % 3 == 1 else -1
    return minus_one, minus_three


def primitive_root(p: int) -> int:
    """Smallest generator of (Z/p)^x for an odd prime p."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if p == 2:
        return 1
    qs = prime_divisors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")
