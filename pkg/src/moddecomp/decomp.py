"""Decomposition sequences of the pushforward f_* O of a modular curve to X(1).

Over a field of characteristic zero X(1) is P(4, 6) with omega = O(1), so

    f_* O  =  sum_i  (omega^-i)^{l_i}                              (base OMEGA)

and, grouping summands, also

    f_* O  =  sum_i  (f_2* O (x) omega^-i)^{k_i}                   (base E2)
    f_* O  =  sum_i  (f_3* O (x) omega^-i)^{k_i}                   (base E3)
    f_* O  =  sum_i  (f_q* O (x) omega^-i)^{kappa_i},  q = 4, 5, 6 (bases M4..M6)

Every sequence carries a list of named consistency checks; a failed check
raises :class:`InvalidSequence` rather than clamping anything.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from moddecomp import arith
from moddecomp.curves import CongruenceGroup, GroupKind, group_degree, profile
from moddecomp.dims import Unknown, WeightOneTable, m_sequence, s_dim
from moddecomp.errors import (
    DomainError,
    InvalidSequence,
    ModDecompError,
    ReconstructionFailure,
    WeightOneUnknown,
)
from moddecomp.wproj import P46, splitting_from_sections


class Base(enum.Enum):
    # value: (tag, rank of the basic summand, number of coefficients, its own l-sequence);
    # the tag keeps M5 and M6 from collapsing into one member
    OMEGA = ("omega", 1, 12, (1,))
    E2 = ("e2", 3, 8, (1, 0, 1, 0, 1))
    E3 = ("e3", 8, 6, (1, 1, 1, 2, 1, 1, 1))
    M4 = ("m4", 12, 5, (1, 1, 2, 2, 2, 2, 1, 1))
    M5 = ("m5", 24, 4, (1, 2, 3, 4, 4, 4, 3, 2, 1))
    M6 = ("m6", 24, 4, (1, 2, 3, 4, 4, 4, 3, 2, 1))

    @property
    def rank(self) -> int:
        return self.value[1]

    @property
    def length(self) -> int:
        return self.value[2]

    @property
    def l_pattern(self) -> tuple[int, ...]:
        return self.value[3]

    @classmethod
    def parse(cls, text: str) -> Base:
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise DomainError(f"unknown base {text!r}") from None


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class DecompSequence:
    base: Base
    coeffs: list[int]
    group: CongruenceGroup
    diagnostics: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.diagnostics)

    @property
    def total(self) -> int:
        return sum(self.coeffs)

    def failed(self) -> list[Check]:
        return [c for c in self.diagnostics if not c.passed]

    def __getitem__(self, i: int) -> int:
        """Coefficient i, zero outside the stored support (including i < 0)."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0


def convolve(a, b) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _trim(seq) -> list[int]:
    seq = list(seq)
    while seq and seq[-1] == 0:
        seq.pop()
    return seq


def _rank(group: CongruenceGroup) -> int:
    if group.stacky:
        return profile(group).degree
    return group_degree(group)


def _known_m(group: CongruenceGroup, K: int, table: WeightOneTable | None) -> list[int]:
    m = m_sequence(group, K, table)
    for k, value in enumerate(m):
        if value is Unknown:
            raise WeightOneUnknown(f"m_{k} of {group} needs s_1, which is not tabulated")
    return m


def _s1(group: CongruenceGroup, table: WeightOneTable | None) -> int:
    s1 = s_dim(group, 1, table)
    if s1 is Unknown:
        raise WeightOneUnknown(f"s_1 of {group} is not tabulated")
    return s1


def _finish(seq: DecompSequence) -> DecompSequence:
    bad = seq.failed()
    if bad:
        names = ", ".join(f"{c.name} ({c.detail})" if c.detail else c.name for c in bad)
        raise InvalidSequence(f"{seq.base.name} sequence of {seq.group} failed: {names}", seq)
    return seq


def _nonneg(coeffs) -> Check:
    neg = [i for i, c in enumerate(coeffs) if c < 0]
    return Check("nonnegative", not neg, f"negative at {neg}" if neg else "")


def _rank_check(coeffs, base: Base, degree: int) -> Check:
    got = base.rank * sum(coeffs)
    return Check(f"{base.rank}*sum = degree", got == degree, f"{got} vs {degree}")


def l_sequence(group: CongruenceGroup, table: WeightOneTable | None = None) -> DecompSequence:
    """Multiplicities l_0..l_11 of omega^-i in f_* O.

    Computed by the closed form l_i = m_i - m_{i-4} - m_{i-6} + m_{i-10} and,
    independently, by peeling the m-sequence on P(4, 6); the two must agree.
    """
    degree = _rank(group)
    # twists reach 11, so the peel needs weights up to 11 + 4 + 6
    m = _known_m(group, 23, table)

    def mm(i):
        return m[i] if i >= 0 else 0

    coeffs = [mm(i) - mm(i - 4) - mm(i - 6) + mm(i - 10) for i in range(12)]
    checks = [_nonneg(coeffs), _rank_check(coeffs, Base.OMEGA, degree)]
    try:
        peeled = splitting_from_sections(P46, m, degree).as_list(24)
        agree = peeled[:12] == coeffs and not any(peeled[12:])
        checks.append(Check("closed form = deconvolution", agree, "" if agree else f"{peeled}"))
    except ModDecompError as exc:
        checks.append(Check("closed form = deconvolution", False, str(exc)))
    for i in range(1, 5):
        s = s_dim(group, i, table)
        if s is Unknown:
            raise WeightOneUnknown(f"s_1 of {group} is not tabulated")
        checks.append(Check(f"l_{12 - i} = s_{i}", coeffs[12 - i] == s, f"{coeffs[12 - i]} vs {s}"))
    genus = profile(group).genus
    checks.append(Check("l_10 = genus", coeffs[10] == genus, f"{coeffs[10]} vs {genus}"))
    return _finish(DecompSequence(Base.OMEGA, coeffs, group, checks))


def _require_k_hypothesis(group: CongruenceGroup, min_gamma1: int) -> None:
    ok = (group.kind is GroupKind.GAMMA1 and group.level >= min_gamma1) or (
        group.kind is GroupKind.GAMMA and group.level >= 3
    )
    if not ok:
        raise DomainError(
            f"{group}: needs Gamma1(n) with n >= {min_gamma1} or Gamma(n) with n >= 3"
        )


def _convolution_check(group, coeffs, base: Base, table) -> Check:
    l = l_sequence(group, table).coeffs
    conv = _trim(convolve(coeffs, base.l_pattern))
    ok = conv == _trim(l)
    return Check(f"l = k * l({base.name})", ok, "" if ok else f"{conv} vs {l}")


def k2_sequence(group: CongruenceGroup, table: WeightOneTable | None = None) -> DecompSequence:
    """Multiplicities of f_2* O (x) omega^-i, i = 0..7."""
    _require_k_hypothesis(group, 4)
    degree = _rank(group)
    m = _known_m(group, 7, table)

    def mm(i):
        return m[i] if i >= 0 else 0

    k = [mm(i) - mm(i - 2) - mm(i - 4) + mm(i - 6) for i in range(8)]

    def kk(i):
        return k[i] if i >= 0 else 0

    s1 = _s1(group, table)
    genus = profile(group).genus
    sums = [k[0] + k[4], k[1] + k[5], k[2] + k[6], k[3] + k[7]]
    recursion = all(k[i] == m[i] - kk(i - 2) - 2 * kk(i - 4) - 2 * kk(i - 6) for i in range(8))
    checks = [
        _nonneg(k),
        Check("k_7 = s_1", k[7] == s1, f"{k[7]} vs {s1}"),
        Check("k_6 = genus", k[6] == genus, f"{k[6]} vs {genus}"),
        Check("k0+k4 = k1+k5 = k2+k6 = k3+k7", len(set(sums)) == 1, f"{sums}"),
        _rank_check(k, Base.E2, degree),
        Check("recursion via Gamma1(2) dimensions", recursion),
        _convolution_check(group, k, Base.E2, table),
    ]
    return _finish(DecompSequence(Base.E2, k, group, checks))


def k3_sequence(group: CongruenceGroup, table: WeightOneTable | None = None) -> DecompSequence:
    """Multiplicities of f_3* O (x) omega^-i, i = 0..5."""
    _require_k_hypothesis(group, 5)
    degree = _rank(group)
    m = _known_m(group, 5, table)

    def mm(i):
        return m[i] if i >= 0 else 0

    k = [mm(i) - mm(i - 1) - mm(i - 3) + mm(i - 4) for i in range(6)]

    def kk(i):
        return k[i] if i >= 0 else 0

    s1 = _s1(group, table)
    s2 = s_dim(group, 2, table)
    sums = [k[0] + k[3], k[1] + k[4], k[2] + k[5]]
    recursion = all(
        k[i] == m[i] - kk(i - 1) - kk(i - 2) - 2 * kk(i - 3) - 2 * kk(i - 4) - 2 * kk(i - 5)
        for i in range(6)
    )
    checks = [
        _nonneg(k),
        Check("k_5 = s_1", k[5] == s1, f"{k[5]} vs {s1}"),
        Check("k_4 = s_2 - s_1", k[4] == s2 - s1, f"{k[4]} vs {s2 - s1}"),
        Check("k0+k3 = k1+k4 = k2+k5", len(set(sums)) == 1, f"{sums}"),
        _rank_check(k, Base.E3, degree),
        Check("recursion via Gamma1(3) dimensions", recursion),
        _convolution_check(group, k, Base.E3, table),
    ]
    return _finish(DecompSequence(Base.E3, k, group, checks))


def kappa_sequence(
    group: CongruenceGroup, q: int, table: WeightOneTable | None = None
) -> DecompSequence:
    """Multiplicities of f_q* O (x) omega^-i for q in {4, 5, 6}.

    q = 4 regroups the E2 sequence in windows of four, q = 5, 6 regroup the
    E3 sequence in windows of three.
    """
    if q == 4:
        k = k2_sequence(group, table).coeffs
        kappa = [k[0], k[1] - k[0], k[2] - k[1], k[3] - k[2], k[7]]
        window, base, inner = 4, Base.M4, Base.E2
    elif q in (5, 6):
        k = k3_sequence(group, table).coeffs
        kappa = [k[0], k[1] - k[0], k[2] - k[1], k[5]]
        window, base, inner = 3, Base.M5 if q == 5 else Base.M6, Base.E3
    else:
        raise DomainError(f"q must be 4, 5 or 6, got {q}")

    rebuilt = convolve(kappa, [1] * window)
    ok = rebuilt == k
    seq = DecompSequence(
        base,
        kappa,
        group,
        [
            _nonneg(kappa),
            Check(f"{inner.name} = kappa * window {window}", ok, "" if ok else f"{rebuilt} vs {k}"),
            _rank_check(kappa, base, _rank(group)),
        ],
    )
    if not ok:
        raise ReconstructionFailure(f"kappa does not rebuild the {inner.name} sequence", seq)
    return _finish(seq)


@dataclass(frozen=True)
class DivisibilityVerdict:
    n: int
    q: int
    degree_n: int
    degree_q: int
    divisible: bool
    status: str
    note: str = (
        "d_q | d_n is necessary for a decomposition into twists of f_q* O, not "
        "sufficient: d_7 divides d_31 although f_31* O has no such decomposition"
    )


def base_divisibility(n: int, q: int) -> DivisibilityVerdict:
    """Necessary divisibility test for decomposing f_n* O into twists of f_q* O."""
    if n < 1 or q < 1:
        raise DomainError(f"n and q must be positive, got {n}, {q}")
    dn, dq = arith.gamma1_degree(n), arith.gamma1_degree(q)
    divisible = dn % dq == 0
    if not divisible:
        status = "not-divisible"
    elif q == 1:
        status = "divisible"
    else:
        status = "divisible-but-inconclusive"
    return DivisibilityVerdict(n, q, dn, dq, divisible, status)


@dataclass(frozen=True)
class DualityVerdict:
    group: CongruenceGroup
    symmetric: bool
    top_index: int
    dualizing_power: int
    anderson_shift: int | None

    def note(self) -> str:
        if self.symmetric:
            return f"symmetric; dualizing power {self.dualizing_power}"
        return "not symmetric"


def duality_verdict(group: CongruenceGroup, table: WeightOneTable | None = None) -> DualityVerdict:
    """Is l_{k-i} = l_i for k the top index?  If so, omega^(k-10) is dualizing."""
    l = l_sequence(group, table).coeffs
    k = max(i for i, c in enumerate(l) if c > 0)
    symmetric = all(l[k - i] == l[i] for i in range(k + 1))
    return DualityVerdict(group, symmetric, k, k - 10, 21 - 2 * k if symmetric else None)


def anderson_table(max_level: int = 42, table: WeightOneTable | None = None) -> list[tuple[int, int]]:
    """(n, shift) for every n <= max_level whose l-sequence is symmetric."""
    out = []
    for n in range(1, max_level + 1):
        verdict = duality_verdict(CongruenceGroup.gamma1(n), table)
        if verdict.symmetric:
            out.append((n, verdict.anderson_shift))
    return out


def degree_sum(n: int) -> int:
    """f(n) = sum_{d|n} d phi(d) phi(n/d)."""
    return arith.gamma1_degree_divisor_sum(n)


def ratio_table(bound: int = 144) -> dict[tuple[int, int], Fraction]:
    """g(p^k) / f(p^k) with g = sum phi(d) phi(n/d), for p^k <= bound and p < 23.

    For p >= 23 the ratio 2/(p+1) is already at most 1/12.
    """
    out = {}
    for p in range(2, 23):
        if not arith.is_prime(p):
            continue
        k = 1
        while p**k <= bound:
            out[(p, k)] = Fraction(arith.cusp_sum(p**k), degree_sum(p**k))
            k += 1
    return out


@dataclass(frozen=True)
class DualityScan:
    bound: int
    solutions: list[int]
    ratios: dict[tuple[int, int], Fraction]


def duality_scan(bound: int = 144) -> DualityScan:
    """Levels n <= bound with f(n) = 12 g(n), i.e. 2g - 2 = deg omega on X_1(n).

    No solution exceeds 144: there f(n)/12 >= sqrt(n)/12 g(n) > g(n).
    """
    if bound < 1:
        raise DomainError(f"bound must be >= 1, got {bound}")
    solutions = [n for n in range(1, bound + 1) if degree_sum(n) == 12 * arith.cusp_sum(n)]
    return DualityScan(bound, solutions, ratio_table(bound))


TMF_CAVEAT = (
    "the compactified splitting additionally requires H^1(X_1(n); omega) to have "
    "no l-torsion"
)


@dataclass(frozen=True)
class TmfSummand:
    suspension: int
    summand: str
    multiplicity: int


@dataclass(frozen=True)
class TmfReport:
    n: int
    prime_class: str
    summand: str
    copies: int
    entries: list[TmfSummand]
    caveat: str = TMF_CAVEAT


def tmf_splitting_report(
    n: int, prime_class: str | int, table: WeightOneTable | None = None
) -> TmfReport:
    """Suspensions and multiplicities in the splitting of Tmf_1(n) localized at a prime l.

    ``prime_class`` is 2, 3 or "large" (any l > 3).
    """
    cls = str(prime_class).lower()
    group = CongruenceGroup.gamma1(n)
    if cls == "2":
        if n < 5:
            raise DomainError(f"l = 2 splitting needs n >= 5, got {n}")
        coeffs, summand = k3_sequence(group, table).coeffs, "Tmf_1(3)"
    elif cls == "3":
        if n < 4:
            raise DomainError(f"l = 3 splitting needs n >= 4, got {n}")
        coeffs, summand = k2_sequence(group, table).coeffs, "Tmf_1(2)"
    elif cls == "large":
        if n < 2:
            raise DomainError(f"splitting needs n >= 2, got {n}")
        coeffs, summand = l_sequence(group, table).coeffs, "Tmf"
    else:
        raise DomainError(f"prime class must be 2, 3 or large, got {prime_class!r}")
    entries = [TmfSummand(2 * i, summand, c) for i, c in enumerate(coeffs) if c]
    return TmfReport(n, cls, summand, sum(coeffs), entries)
