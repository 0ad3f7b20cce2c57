from fractions import Fraction

import pytest

from moddecomp.curves import (
    CongruenceGroup,
    GroupKind,
    components,
    genus_via_table_crosscheck,
    group_degree,
    profile,
)
from moddecomp.errors import DomainError

from conftest import load_golden

# genus of X_0(N), classical values
GAMMA0_GENUS = {1: 0, 2: 0, 6: 0, 11: 1, 14: 1, 22: 2, 23: 2, 37: 2, 30: 3, 35: 3, 42: 5, 60: 7}
# genus of X(N)
FULL_GENUS = {3: 0, 4: 0, 5: 0, 6: 1, 7: 3, 8: 5}


@pytest.mark.parametrize("n,g", sorted(GAMMA0_GENUS.items()))
def test_gamma0_genus(n, g):
    assert profile(CongruenceGroup.gamma0(n)).genus == g


@pytest.mark.parametrize("n,g", sorted(FULL_GENUS.items()))
def test_full_level_genus(n, g):
    assert profile(CongruenceGroup.gamma(n)).genus == g


def test_gamma1_genus_matches_golden():
    table = load_golden("B1")
    for n in range(5, 43):
        assert profile(CongruenceGroup.gamma1(n)).genus == table[n][0], n


@pytest.mark.parametrize("n", range(2, 43))
def test_genus_crosscheck(n):
    assert genus_via_table_crosscheck(n) == load_golden("B1")[n][0]


def test_stacky_models():
    for n, model in [(1, (4, 6)), (2, (2, 4)), (3, (1, 3)), (4, (1, 2))]:
        g = CongruenceGroup.gamma1(n)
        assert g.stacky and g.model == model
        assert profile(g).genus == 0
    assert CongruenceGroup.gamma(2).model == (2, 2)
    assert profile(CongruenceGroup.gamma(2)).degree == 6
    assert not CongruenceGroup.gamma1(5).stacky


def test_gamma0_cusps_and_elliptic_points():
    p = profile(CongruenceGroup.gamma0(13))
    assert (p.cusps, p.elliptic2, p.elliptic3) == (2, 2, 2)
    p = profile(CongruenceGroup.gamma0(36))
    assert (p.elliptic2, p.elliptic3) == (0, 0)


def test_omega_degree():
    assert profile(CongruenceGroup.gamma1(23)).omega_degree == Fraction(23 * 23 - 1, 24)


def test_group_degree_domain():
    with pytest.raises(DomainError):
        group_degree(CongruenceGroup.gamma0(4))
    assert group_degree(CongruenceGroup.gamma0(6)) == 12
    with pytest.raises(DomainError):
        CongruenceGroup.gamma(1)
    with pytest.raises(DomainError):
        CongruenceGroup.gamma1(0)


def test_components_and_names():
    assert components(CongruenceGroup.gamma(5)) == 4
    assert components(CongruenceGroup.gamma1(5)) == 1
    assert str(CongruenceGroup.gamma1(5)) == "Gamma1(5)"
    assert GroupKind.parse("Gamma0") is GroupKind.GAMMA0
