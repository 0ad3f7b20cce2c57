"""Exact arithmetic in Q(zeta) for zeta a primitive 2^m-th root of unity.

Elements are coordinate vectors in the power basis 1, zeta, ..., zeta^(h-1),
h = 2^(m-1), reduced modulo the minimal polynomial x^h + 1.  For m = 1 the
field is Q and zeta = -1.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from functools import reduce

from moddecomp.arith import v2_rat
from moddecomp.errors import DomainError, ZeroArgument


class CycNumber:
    __slots__ = ("m", "coords")

    def __init__(self, m: int, coords: Sequence = ()):
        if m < 1:
            raise DomainError(f"m must be >= 1, got {m}")
        h = 1 << (m - 1)
        if len(coords) > h:
            raise DomainError(f"{len(coords)} coordinates for a degree-{h} field")
        self.m = m
        self.coords = tuple(Fraction(c) for c in coords) + (Fraction(0),) * (h - len(coords))

    @property
    def degree(self) -> int:
        return len(self.coords)

    @classmethod
    def zeta_power(cls, m: int, t: int) -> CycNumber:
        h = 1 << (m - 1)
        t %= 2 * h
        coords = [0] * h
        if t < h:
            coords[t] = 1
        else:
            coords[t - h] = -1
        return cls(m, coords)

    @classmethod
    def from_rational(cls, m: int, x) -> CycNumber:
        return cls(m, [x])

    def _coerce(self, other) -> CycNumber:
        if isinstance(other, CycNumber):
            if other.m != self.m:
                raise DomainError(f"mixing Q(zeta_{2**self.m}) and Q(zeta_{2**other.m})")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNumber.from_rational(self.m, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNumber(self.m, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.m, [-a for a in self.coords])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.m, [a * other for a in self.coords])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        h = self.degree
        out = [Fraction(0)] * h
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(other.coords):
                if not b:
                    continue
                k = i + j
                if k < h:
                    out[k] += a * b
                else:
                    out[k - h] -= a * b
        return CycNumber(self.m, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.m, [a / other for a in self.coords])
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNumber.from_rational(self.m, other)
        if not isinstance(other, CycNumber):
            return NotImplemented
        return self.m == other.m and self.coords == other.coords

    def __hash__(self):
        return hash((self.m, self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def is_two_integral(self) -> bool:
        """All coordinates have odd denominator, i.e. lies in Z_(2)[zeta]."""
        return all(c.denominator % 2 for c in self.coords)

    def coordinate_sum(self) -> Fraction:
        return sum(self.coords, Fraction(0))

    def conjugate(self, j: int) -> CycNumber:
        """Image under the Galois automorphism zeta -> zeta^j (j odd)."""
        if j % 2 == 0:
            raise DomainError(f"zeta -> zeta^{j} is not an automorphism")
        out = CycNumber(self.m)
        for i, c in enumerate(self.coords):
            if c:
                out = out + CycNumber.zeta_power(self.m, i * j) * c
        return out

    def __repr__(self):
        return f"CycNumber({self.m}, [{', '.join(str(c) for c in self.coords)}])"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c:
                terms.append(str(c) if i == 0 else f"({c})*z^{i}" if i > 1 else f"({c})*z")
        return " + ".join(terms) or "0"


def _trim(poly: list[Fraction]) -> list[Fraction]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_mod(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    f = list(f)
    lead = g[-1]
    while len(f) >= len(g):
        coef = f[-1] / lead
        shift = len(f) - len(g)
        for i, gi in enumerate(g):
            f[shift + i] -= coef * gi
        f.pop()
        _trim(f)
    return f


def resultant(f: Sequence, g: Sequence) -> Fraction:
    """Res(f, g) of polynomials given as coefficient lists, lowest degree first."""
    f = _trim([Fraction(c) for c in f])
    g = _trim([Fraction(c) for c in g])
    if not f or not g:
        return Fraction(0)
    result = Fraction(1)
    while True:
        df, dg = len(f) - 1, len(g) - 1
        if dg == 0:
            return result * g[0] ** df
        if df == 0:
            return result * f[0] ** dg
        r = _poly_mod(f, g)
        if not r:
            return Fraction(0)
        # Res(f, g) = (-1)^(df dg) lc(g)^(df - deg r) Res(g, r)
        if (df * dg) % 2:
            result = -result
        result *= g[-1] ** (df - (len(r) - 1))
        f, g = g, r


def norm(x: CycNumber) -> Fraction:
    """N_{K/Q}(x) = Res(x^h + 1, x(t)) for the monic minimal polynomial."""
    minimal = [1] + [0] * (x.degree - 1) + [1]
    return resultant(minimal, list(x.coords))


def norm_by_conjugates(x: CycNumber) -> Fraction:
    """N_{K/Q}(x) as the product of all Galois conjugates."""
    conj = [x.conjugate(j) for j in range(1, 1 << x.m, 2)]
    prod = reduce(lambda a, b: a * b, conj)
    if not prod.is_rational():
        raise AssertionError(f"conjugate product is not rational: {prod}")
    return prod.coords[0]


def v2(x: CycNumber) -> Fraction:
    """Normalized 2-adic valuation v2(N(x)) / [K:Q], with v2(2) = 1."""
    if x.is_zero():
        raise ZeroArgument("v2 of zero")
    return Fraction(v2_rat(norm(x)), x.degree)
