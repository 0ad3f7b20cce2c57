"""Numeric invariants of compactified modular curves.

Degrees are always degrees of the map of stacks to the moduli of elliptic
curves, never of the coarse spaces (which differ by a factor of two where
-1 lies in the group).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from moddecomp import arith
from moddecomp.errors import DomainError, NonIntegralGenus


class GroupKind(enum.Enum):
    GAMMA0 = "gamma0"
    GAMMA1 = "gamma1"
    GAMMA = "gamma"

    @classmethod
    def parse(cls, text: str) -> GroupKind:
        key = text.strip().lower().replace("_", "").replace("(", "").replace(")", "")
        aliases = {
            "gamma0": cls.GAMMA0,
            "g0": cls.GAMMA0,
            "gamma1": cls.GAMMA1,
            "g1": cls.GAMMA1,
            "gamma": cls.GAMMA,
            "gammafull": cls.GAMMA,
            "full": cls.GAMMA,
        }
        try:
            return aliases[key]
        except KeyError:
            raise DomainError(f"unknown group kind {text!r}") from None


# Weighted projective models (a, b) of the non-representable small levels;
# omega pulls back to O(1) in each case.
STACKY_MODELS: dict[tuple[GroupKind, int], tuple[int, int]] = {
    (GroupKind.GAMMA1, 1): (4, 6),
    (GroupKind.GAMMA1, 2): (2, 4),
    (GroupKind.GAMMA1, 3): (1, 3),
    (GroupKind.GAMMA1, 4): (1, 2),
    (GroupKind.GAMMA, 2): (2, 2),
}


@dataclass(frozen=True)
class CongruenceGroup:
    kind: GroupKind
    level: int

    def __post_init__(self):
        if not isinstance(self.level, int) or self.level < 1:
            raise DomainError(f"level must be a positive integer, got {self.level!r}")
        if self.kind is GroupKind.GAMMA and self.level < 2:
            raise DomainError("Gamma(1) is the full modular group; use Gamma1(1)")

    @classmethod
    def gamma0(cls, n: int) -> CongruenceGroup:
        return cls(GroupKind.GAMMA0, n)

    @classmethod
    def gamma1(cls, n: int) -> CongruenceGroup:
        return cls(GroupKind.GAMMA1, n)

    @classmethod
    def gamma(cls, n: int) -> CongruenceGroup:
        return cls(GroupKind.GAMMA, n)

    @property
    def model(self) -> tuple[int, int] | None:
        """Weights (a, b) if the compactified curve is a weighted projective line."""
        return STACKY_MODELS.get((self.kind, self.level))

    @property
    def stacky(self) -> bool:
        return self.model is not None

    def __str__(self) -> str:
        name = {GroupKind.GAMMA0: "Gamma0", GroupKind.GAMMA1: "Gamma1", GroupKind.GAMMA: "Gamma"}
        return f"{name[self.kind]}({self.level})"


def group_degree(group: CongruenceGroup) -> int:
    """Degree of X(G) -> X(1) as a map of stacks.

    Gamma0 is only accepted at squarefree level and Gamma(n) only for n >= 3.
    """
    n = group.level
    if group.kind is GroupKind.GAMMA1:
        return arith.gamma1_degree(n)
    if group.kind is GroupKind.GAMMA0:
        if not arith.is_squarefree(n):
            raise DomainError(f"Gamma0 degree needs squarefree level, got {n}")
        d, phi = arith.gamma1_degree(n), arith.euler_phi(n)
        if d % phi:
            raise AssertionError(f"phi({n}) does not divide d_{n}")
        return d // phi
    if n < 3:
        raise DomainError(f"Gamma({n}) is not representable; need n >= 3")
    return arith.full_level_degree(n)


def components(group: CongruenceGroup) -> int:
    """Number of geometric components of the curve over Q[1/n].

    Only Gamma(n) is disconnected (one component per primitive n-th root of unity);
    every invariant in :class:`CurveProfile` is per component.
    """
    if group.kind is GroupKind.GAMMA:
        return arith.euler_phi(group.level)
    return 1


@dataclass(frozen=True)
class CurveProfile:
    group: CongruenceGroup
    degree: int
    cusps: int
    regular_cusps: int
    elliptic2: int
    elliptic3: int
    genus: int
    omega_degree: Fraction
    stacky: bool


# Classical invariants of the small-level curves: (cusps, regular cusps, e2, e3).
# Only degree and omega_degree are used in computations for these.
_STACKY_CLASSICAL = {
    (GroupKind.GAMMA1, 1): (1, 1, 1, 1),
    (GroupKind.GAMMA1, 2): (2, 2, 1, 0),
    (GroupKind.GAMMA1, 3): (2, 2, 0, 1),
    (GroupKind.GAMMA1, 4): (3, 2, 0, 0),
    (GroupKind.GAMMA, 2): (3, 3, 0, 0),
}


def _integral_genus(value: Fraction, group: CongruenceGroup) -> int:
    if value.denominator != 1 or value < 0:
        raise NonIntegralGenus(f"genus formula for {group} gave {value}")
    return int(value)


def _gamma0_profile(group: CongruenceGroup) -> CurveProfile:
    n = group.level
    mu = arith.gamma0_index(n)
    e2 = e3 = 1
    for p in arith.prime_divisors(n):
        minus_one, minus_three = arith.legendre_symbols(p)
        e2 *= 1 + minus_one
        e3 *= 1 + minus_three
    if n % 4 == 0:
        e2 = 0
    if n % 9 == 0:
        e3 = 0
    cusps = sum(arith.euler_phi(gcd(d, n // d)) for d in arith.divisors(n))
    genus = 1 + Fraction(mu, 12) - Fraction(e2, 4) - Fraction(e3, 3) - Fraction(cusps, 2)
    return CurveProfile(
        group=group,
        degree=mu,
        cusps=cusps,
        regular_cusps=cusps,
        elliptic2=e2,
        elliptic3=e3,
        genus=_integral_genus(genus, group),
        omega_degree=Fraction(mu, 24),
        stacky=False,
    )


def profile(group: CongruenceGroup) -> CurveProfile:
    """Degree, cusps, elliptic points, genus and deg(omega) of X(G)."""
    n = group.level
    key = (group.kind, n)
    if key in _STACKY_CLASSICAL:
        degree = arith.gamma1_degree(n) if group.kind is GroupKind.GAMMA1 else 6
        cusps, regular, e2, e3 = _STACKY_CLASSICAL[key]
        return CurveProfile(group, degree, cusps, regular, e2, e3, 0, Fraction(degree, 24), True)

    if group.kind is GroupKind.GAMMA0:
        return _gamma0_profile(group)

    degree = group_degree(group)
    if group.kind is GroupKind.GAMMA1:
        twice_cusps = arith.cusp_sum(n)
        if twice_cusps % 2:
            raise AssertionError(f"odd cusp sum at n={n}")
        cusps = twice_cusps // 2
        genus = 1 + Fraction(degree, 24) - Fraction(cusps, 2)
    else:
        if degree % (2 * n):
            raise AssertionError(f"2n does not divide |SL2(Z/{n})|")
        cusps = degree // (2 * n)
        genus = 1 + Fraction(degree, 2) * Fraction(n - 6, 12 * n)
    return CurveProfile(
        group=group,
        degree=degree,
        cusps=cusps,
        regular_cusps=cusps,
        elliptic2=0,
        elliptic3=0,
        genus=_integral_genus(genus, group),
        omega_degree=Fraction(degree, 24),
        stacky=False,
    )


def genus_via_table_crosscheck(n: int) -> int:
    """Genus of X_1(n) read off as l_10 of the decomposition sequence."""
    from moddecomp.decomp import l_sequence

    if not 2 <= n <= 42:
        raise DomainError(f"cross-check is defined for 2 <= n <= 42, got {n}")
    group = CongruenceGroup.gamma1(n)
    l10 = l_sequence(group).coeffs[10]
    genus = profile(group).genus
    if l10 != genus:
        raise AssertionError(f"l_10 = {l10} but genus = {genus} for {group}")
    return l10
