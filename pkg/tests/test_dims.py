import json

import pytest

from moddecomp import dims
from moddecomp.curves import CongruenceGroup
from moddecomp.dims import Unknown, WeightOneTable, m_dim, m_sequence, s_dim


def test_gamma1_5_low_weights():
    # l_i = m_i for i <= 3 and m_4 = l_4 + l_0 = 5 on row 5
    assert m_sequence(CongruenceGroup.gamma1(5), 4) == [1, 2, 3, 4, 5]


def test_gamma1_3():
    assert m_sequence(CongruenceGroup.gamma1(3), 5) == [1, 1, 1, 2, 2, 2]


def test_level_one():
    g = CongruenceGroup.gamma1(1)
    assert [m_dim(g, k) for k in range(0, 14, 2)] == [1, 0, 1, 1, 1, 1, 2]
    assert s_dim(g, 12) == 1
    assert all(s_dim(g, k) == 0 for k in range(1, 12))


def test_gamma0_dimensions():
    g = CongruenceGroup.gamma0(11)
    assert m_dim(g, 2) == 2 and s_dim(g, 2) == 1
    assert m_dim(g, 3) == 0
    g = CongruenceGroup.gamma0(23)
    assert s_dim(g, 2) == 2


def test_riemann_roch_gamma1():
    g = CongruenceGroup.gamma1(13)
    # deg omega = 7, genus 2
    assert [m_dim(g, k) for k in (2, 3, 4)] == [13, 20, 27]
    assert s_dim(g, 2) == 2


def test_weight_one_table():
    assert s_dim(CongruenceGroup.gamma1(23), 1) == 1
    assert s_dim(CongruenceGroup.gamma1(22), 1) == 0
    assert m_dim(CongruenceGroup.gamma1(50), 1) is Unknown


def test_low_genus_forces_zero():
    assert s_dim(CongruenceGroup.gamma(5), 1) == 0
    assert s_dim(CongruenceGroup.gamma(7), 1) is Unknown


def test_unknown_singleton():
    assert repr(Unknown) == "Unknown" and str(Unknown) == "?"
    assert dims._UnknownType() is Unknown
    with pytest.raises(TypeError):
        bool(Unknown)


def test_env_override(tmp_path, monkeypatch):
    path = tmp_path / "s1.json"
    path.write_text(json.dumps({"gamma1": {"50": 7}, "provenance": "test"}))
    monkeypatch.setenv(dims.S1_ENV_VAR, str(path))
    dims.reset_default_table()
    assert s_dim(CongruenceGroup.gamma1(50), 1) == 7
    assert s_dim(CongruenceGroup.gamma1(23), 1) == 1


def test_table_rejects_negative():
    with pytest.raises(ValueError):
        WeightOneTable.from_json({"gamma1": {"5": -1}})
