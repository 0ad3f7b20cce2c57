"""Dimensions m_k of modular forms and s_k of cusp forms (characteristic zero).

Routes by group:

* weighted projective small levels (Gamma1(n), n <= 4, and Gamma(2)): m_k is
  a monomial count on the model P(a, b), s_k = h^1(O(2 - k)) by Serre duality;
* Gamma1(n), n >= 5, and Gamma(n), n >= 3: Riemann-Roch, m_k = deg(omega) k + 1 - g
  for k >= 2, and m_1 = (regular cusps)/2 + s_1;
* Gamma0(n): the classical formula in terms of genus, elliptic points and cusps.

There is no closed formula for s_1.  It comes from a data table and any
query outside the table yields :data:`Unknown`.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Union

from moddecomp.curves import CongruenceGroup, GroupKind, profile
from moddecomp.errors import DomainError
from moddecomp.wproj import WeightedProjLine, h0, h1

S1_ENV_VAR = "MODDECOMP_S1_PATH"


class _UnknownType:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Unknown"

    def __str__(self) -> str:
        return "?"

    def __bool__(self) -> bool:
        raise TypeError("Unknown has no truth value")


Unknown = _UnknownType()
Dim = Union[int, _UnknownType]


@dataclass
class WeightOneTable:
    """s_1 values keyed by (group kind, level), each with a provenance note."""

    entries: dict[tuple[GroupKind, int], int] = field(default_factory=dict)
    provenance: dict[tuple[GroupKind, int], str] = field(default_factory=dict)

    def get(self, group: CongruenceGroup) -> int | None:
        return self.entries.get((group.kind, group.level))

    def set(self, group: CongruenceGroup, value: int, note: str = "user override") -> None:
        if value < 0:
            raise DomainError(f"s_1 must be nonnegative, got {value}")
        self.entries[(group.kind, group.level)] = value
        self.provenance[(group.kind, group.level)] = note

    @classmethod
    def from_json(cls, doc: dict, source: str = "data file") -> WeightOneTable:
        table = cls()
        note = doc.get("provenance", source)
        for kind in GroupKind:
            for level, value in doc.get(kind.value, {}).items():
                table.set(CongruenceGroup(kind, int(level)), int(value), note)
        return table

    @classmethod
    def load(cls, path: str | os.PathLike) -> WeightOneTable:
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh), source=str(path))

    def merged(self, other: WeightOneTable) -> WeightOneTable:
        out = WeightOneTable(dict(self.entries), dict(self.provenance))
        out.entries.update(other.entries)
        out.provenance.update(other.provenance)
        return out


def embedded_table() -> WeightOneTable:
    text = resources.files("moddecomp.data").joinpath("s1.json").read_text(encoding="utf-8")
    return WeightOneTable.from_json(json.loads(text), source="embedded")


_default: WeightOneTable | None = None


def default_table() -> WeightOneTable:
    """The embedded table, overlaid with the file named by $MODDECOMP_S1_PATH if set."""
    global _default
    if _default is None:
        table = embedded_table()
        override = os.environ.get(S1_ENV_VAR)
        if override:
            table = table.merged(WeightOneTable.load(Path(override)))
        _default = table
    return _default


def reset_default_table() -> None:
    global _default
    _default = None


def weight_one_cusp_dim(group: CongruenceGroup, table: WeightOneTable | None = None) -> Dim:
    """s_1 for a representable group, or Unknown."""
    table = table if table is not None else default_table()
    value = table.get(group)
    if value is not None:
        return value
    # s_2 >= 2 s_1 on representable curves, so genus <= 1 forces s_1 = 0
    if profile(group).genus <= 1:
        return 0
    return Unknown


def _model(group: CongruenceGroup) -> WeightedProjLine | None:
    weights = group.model
    return WeightedProjLine(*weights) if weights else None


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise AssertionError(f"{what} evaluated to non-integer {value}")
    return int(value)


def m_dim(group: CongruenceGroup, k: int, table: WeightOneTable | None = None) -> Dim:
    """Dimension of weight-k modular forms for ``group``."""
    if k < 0:
        return 0
    if k == 0:
        return 1
    model = _model(group)
    if model is not None:
        return h0(model, k)
    prof = profile(group)
    if group.kind is GroupKind.GAMMA0:
        if k % 2:
            return 0
        return (
            (k - 1) * (prof.genus - 1)
            + (k // 4) * prof.elliptic2
            + (k // 3) * prof.elliptic3
            + (k // 2) * prof.cusps
        )
    if k == 1:
        s1 = weight_one_cusp_dim(group, table)
        if s1 is Unknown:
            return Unknown
        return _integral(Fraction(prof.regular_cusps, 2), "regular cusps / 2") + s1
    return _integral(prof.omega_degree * k + 1 - prof.genus, f"m_{k}({group})")


def s_dim(group: CongruenceGroup, k: int, table: WeightOneTable | None = None) -> Dim:
    """Dimension of weight-k cusp forms for ``group``."""
    if k <= 0:
        return 0
    model = _model(group)
    if model is not None:
        return h1(model, 2 - k)
    prof = profile(group)
    if group.kind is GroupKind.GAMMA0 and k % 2:
        return 0
    if k == 1:
        return weight_one_cusp_dim(group, table)
    if k == 2:
        return prof.genus
    return m_dim(group, k, table) - prof.cusps


def m_sequence(group: CongruenceGroup, K: int, table: WeightOneTable | None = None) -> list[Dim]:
    """[m_0, ..., m_K]; Unknown entries are kept in place."""
    if K < 0:
        raise DomainError(f"K must be >= 0, got {K}")
    return [m_dim(group, k, table) for k in range(K + 1)]


def s_sequence(group: CongruenceGroup, K: int, table: WeightOneTable | None = None) -> list[Dim]:
    if K < 0:
        raise DomainError(f"K must be >= 0, got {K}")
    return [s_dim(group, k, table) for k in range(K + 1)]
