"""Exact invariants of modular curves and decompositions of their pushforward bundles."""

from moddecomp.arith import Rat, euler_phi, gamma1_degree
from moddecomp.curves import CongruenceGroup, CurveProfile, GroupKind, profile
from moddecomp.dims import Unknown, m_dim, m_sequence, s_dim
from moddecomp.decomp import (
    duality_scan,
    duality_verdict,
    k2_sequence,
    k3_sequence,
    kappa_sequence,
    l_sequence,
)
from moddecomp.errors import DomainError

__all__ = [
    "CongruenceGroup",
    "CurveProfile",
    "DomainError",
    "GroupKind",
    "Rat",
    "Unknown",
    "duality_scan",
    "duality_verdict",
    "euler_phi",
    "gamma1_degree",
    "k2_sequence",
    "k3_sequence",
    "kappa_sequence",
    "l_sequence",
    "m_dim",
    "m_sequence",
    "profile",
    "s_dim",
]

__version__ = "0.1.0"
