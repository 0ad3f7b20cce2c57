"""A characteristic-zero lift of the mod-2 Hasse invariant at level Gamma1(p).

Pipeline for an odd prime p with p - 1 = 2^m * (odd):

1. chi: the odd character of order 2^m mod p, chi(g^t) = zeta^t for the
   smallest primitive root g;
2. L(0, chi) = -(1/p) sum_{n<p} n chi(n);
3. E = (1 - zeta) E_1^chi, with constant term L(0, chi)/2 and n-th
   coefficient sum_{d|n} chi(d), all scaled by (1 - zeta);
4. F = sum of the power-basis coordinates of E, a rational q-expansion;
5. check F = 1 mod 2 coefficientwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from moddecomp import arith
from moddecomp.cyclo import CycNumber, v2
from moddecomp.errors import DomainError, IntegralityFailure, VerificationFailure


@dataclass(frozen=True)
class OddChar:
    p: int
    m: int
    odd_part: int
    generator: int
    log: dict[int, int]  # n -> t with chi(n) = zeta^t, for 1 <= n < p

    @property
    def order(self) -> int:
        return 1 << self.m

    @property
    def conductor(self) -> int:
        return self.p

    def exponent(self, n: int) -> int | None:
        """t with chi(n) = zeta^t, or None when p | n."""
        n %= self.p
        return None if n == 0 else self.log[n]

    def __call__(self, n: int) -> CycNumber:
        t = self.exponent(n)
        if t is None:
            return CycNumber(self.m)
        return CycNumber.zeta_power(self.m, t)


def build_character(p: int) -> OddChar:
    if p == 2 or not arith.is_prime(p):
        raise DomainError(f"need an odd prime, got {p}")
    m = arith.v2_int(p - 1)
    g = arith.primitive_root(p)
    order = 1 << m
    log = {}
    x = 1
    for t in range(p - 1):
        log[x] = t % order
        x = x * g % p
    chi = OddChar(p, m, (p - 1) >> m, g, log)
    # chi(-1) = zeta^(2^(m-1)) = -1
    if chi(p - 1) != CycNumber.from_rational(m, -1):
        raise AssertionError(f"character mod {p} is not odd")
    if len(set(log.values())) != order:
        raise AssertionError(f"character mod {p} is not onto the {order}-th roots of unity")
    return chi


def l_value(chi: OddChar) -> CycNumber:
    """L(0, chi) = -(1/p) sum_{n=1}^{p-1} n chi(n)."""
    h = 1 << (chi.m - 1)
    coords = [0] * h
    for n in range(1, chi.p):
        t = chi.log[n]
        if t < h:
            coords[t] += n
        else:
            coords[t - h] -= n
    return CycNumber(chi.m, [Fraction(-c, chi.p) for c in coords])


@dataclass
class QSeries:
    """Truncated q-expansion c_0 + c_1 q + ... + c_N q^N."""

    coeffs: list

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_two_integral(self) -> bool:
        return all(_two_integral(c) for c in self.coeffs)


def _two_integral(c) -> bool:
    if isinstance(c, CycNumber):
        return c.is_two_integral()
    return Fraction(c).denominator % 2 == 1


def eisenstein_E(chi: OddChar, N: int) -> QSeries:
    """(1 - zeta) E_1^chi to precision q^N, coefficients in Z_(2)[zeta]."""
    if N < 1:
        raise DomainError(f"precision must be >= 1, got {N}")
    m, h = chi.m, 1 << (chi.m - 1)
    # divisor sums sum_{d|n} chi(d) as integer coordinate vectors
    sums = [[0] * h for _ in range(N + 1)]
    for d in range(1, N + 1):
        t = chi.exponent(d)
        if t is None:
            continue
        idx, sign = (t, 1) if t < h else (t - h, -1)
        for n in range(d, N + 1, d):
            sums[n][idx] += sign
    scale = 1 - CycNumber.zeta_power(m, 1)
    coeffs = [scale * l_value(chi) / 2]
    coeffs += [scale * CycNumber(m, sums[n]) for n in range(1, N + 1)]
    for n, c in enumerate(coeffs):
        if not c.is_two_integral():
            raise IntegralityFailure(n, c)
    return QSeries(coeffs)


def lift_F(E: QSeries) -> QSeries:
    """Sum of the rational coordinate series f_i in E = sum_i zeta^i f_i."""
    return QSeries([c.coordinate_sum() if isinstance(c, CycNumber) else Fraction(c) for c in E.coeffs])


def mod2(x: Fraction) -> int:
    """Reduction of a 2-integral rational a/b (b odd) modulo 2."""
    x = Fraction(x)
    if x.denominator % 2 == 0:
        raise IntegralityFailure(-1, x)
    return x.numerator % 2


def expected_l_valuation(m: int) -> Fraction:
    """v2(L(0, chi)) for the order-2^m character: 1 - 1/2^(m-1), or 0 when m = 1."""
    return Fraction(0) if m == 1 else 1 - Fraction(1, 1 << (m - 1))


@dataclass
class HasseReport:
    p: int
    m: int
    precision: int
    passed: bool
    l_value: CycNumber
    v2_l: Fraction
    v2_l_expected: Fraction
    v2_one_minus_zeta: Fraction
    E: QSeries
    F: QSeries

    @property
    def valuation_matches(self) -> bool:
        return self.v2_l == self.v2_l_expected


def verify_hasse_lift(p: int, N: int) -> HasseReport:
    """Run the full pipeline and check F = 1 mod 2 through q^N.

    Raises VerificationFailure at the first offending coefficient.
    """
    chi = build_character(p)
    E = eisenstein_E(chi, N)
    F = lift_F(E)
    for n, c in enumerate(F.coeffs):
        if c.denominator % 2 == 0:
            raise VerificationFailure(n, f"{c} is not 2-integral")
        want = 1 if n == 0 else 0
        if mod2(c) != want:
            raise VerificationFailure(n, f"{c} is {mod2(c)} mod 2, expected {want}")
    L = l_value(chi)
    return HasseReport(
        p=p,
        m=chi.m,
        precision=N,
        passed=True,
        l_value=L,
        v2_l=v2(L),
        v2_l_expected=expected_l_valuation(chi.m),
        v2_one_minus_zeta=v2(1 - CycNumber.zeta_power(chi.m, 1)),
        E=E,
        F=F,
    )
