"""Cohomology of line bundles on weighted projective lines P(a, b).

H^0(O(m)) has a basis of monomials x^i y^j with a*i + b*j = m, and H^1(O(m))
has a basis of pairs of *negative* integers with the same weighted sum.  The
dualizing sheaf is O(-a-b).

A vector bundle sum_j O(-j)^{l_j} is recovered from its section dimensions
by peeling twists off from the left; the recursion is unique because
h0(O(0)) = 1.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache

from moddecomp.errors import DomainError, NegativeResidual, RankMismatch


@dataclass(frozen=True)
class WeightedProjLine:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise DomainError(f"weights must be positive, got ({self.a}, {self.b})")
        if self.a > self.b:
            lo, hi = self.b, self.a
            object.__setattr__(self, "a", lo)
            object.__setattr__(self, "b", hi)

    @property
    def dualizing_twist(self) -> int:
        return -self.a - self.b

    def __str__(self) -> str:
        return f"P({self.a},{self.b})"


# The five weighted projective models of small-level modular curves.
P46 = WeightedProjLine(4, 6)
P24 = WeightedProjLine(2, 4)
P13 = WeightedProjLine(1, 3)
P22 = WeightedProjLine(2, 2)
P12 = WeightedProjLine(1, 2)
MODELS = (P46, P24, P13, P22, P12)


@lru_cache(maxsize=None)
def _count_nonneg(a: int, b: int, m: int) -> int:
    if m < 0:
        return 0
    return sum(1 for j in range(m // b + 1) if (m - b * j) % a == 0)


def h0(X: WeightedProjLine, m: int) -> int:
    """dim H^0(P(a,b), O(m)): monomials of weighted degree m."""
    return _count_nonneg(X.a, X.b, m)


def h1(X: WeightedProjLine, m: int) -> int:
    """dim H^1(P(a,b), O(m)): pairs (lam, mu) of negative integers with a*lam + b*mu = m."""
    return _count_negative(X.a, X.b, m)


@lru_cache(maxsize=None)
def _count_negative(a: int, b: int, m: int) -> int:
    # mu <= -1 forces a*lam = m - b*mu >= m + b
    lo = -((-(m + b)) // a)
    return sum(1 for lam in range(lo, 0) if (m - a * lam) % b == 0)


def serre_dual_check(X: WeightedProjLine, m: int) -> bool:
    return h0(X, m) == h1(X, X.dualizing_twist - m)


def hilbert_sequence(X: WeightedProjLine, K: int) -> list[int]:
    """[h0(X, 0), ..., h0(X, K)] from the series 1 / ((1 - t^a)(1 - t^b))."""
    if K < 0:
        raise DomainError(f"K must be >= 0, got {K}")
    a, b = X.a, X.b
    c = [0] * (K + 1)
    for k in range(K + 1):
        c[k] = (k == 0) + (c[k - a] if k >= a else 0) + (c[k - b] if k >= b else 0)
        c[k] -= c[k - a - b] if k >= a + b else 0
    return c


class TwistMultiset(dict):
    """Multiplicities {j: l_j} describing the bundle  sum_j O(-j)^{l_j}.

    Zero multiplicities are dropped on construction.
    """

    def __init__(self, items: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        super().__init__()
        pairs = items.items() if isinstance(items, Mapping) else items
        for j, mult in pairs:
            if mult < 0:
                raise DomainError(f"negative multiplicity {mult} at twist {j}")
            if mult:
                self[int(j)] = self.get(int(j), 0) + int(mult)

    @property
    def rank(self) -> int:
        return sum(self.values())

    def as_list(self, length: int) -> list[int]:
        return [self.get(j, 0) for j in range(length)]


def sections(X: WeightedProjLine, bundle: Mapping[int, int], K: int) -> list[int]:
    """Section dimensions h[m] = sum_j l_j h0(X, m - j) for m = 0..K."""
    base = hilbert_sequence(X, K)
    h = [0] * (K + 1)
    for j, mult in bundle.items():
        for m in range(max(j, 0), K + 1):
            h[m] += mult * base[m - j]
    return h


def splitting_from_sections(
    X: WeightedProjLine, h: Sequence[int], rank: int
) -> TwistMultiset:
    """Recover the splitting type of a bundle sum_j O(-j)^{l_j}, j >= 0, from h^0 dimensions.

    ``h[m]`` must be dim H^0 of the bundle twisted by O(m) for m = 0..K, with
    K at least the largest twist plus a + b so every summand is seen.

    Raises NegativeResidual if ``h`` is not realizable by such a sum and
    RankMismatch if the peeled multiplicities do not add up to ``rank``.
    """
    K = len(h) - 1
    base = hilbert_sequence(X, max(K, 0))
    residual = list(h)
    found: dict[int, int] = {}
    for m in range(K + 1):
        r = residual[m]
        if r < 0:
            raise NegativeResidual(m, r)
        if r == 0:
            continue
        found[m] = r
        for i in range(m, K + 1):
            residual[i] -= r * base[i - m]
    result = TwistMultiset(found)
    if result.rank != rank:
        raise RankMismatch(rank, result.rank)
    return result
