import numpy as np
import pytest

from qdissect import schur
from qdissect.eta import parse, expand_expression
from qdissect.series import ZZ


# first values, frozen from the enumeration oracles
FIRST_21 = [1, 1, 1, 1, 1, 2, 3, 4, 4, 4, 5, 7, 10, 12, 13, 14, 16, 21, 27, 32, 35]


def test_s_series_prefix():
    t = schur.s_series(21)
    assert [t[n] for n in range(21)] == FIRST_21


def test_s_series_one_term():
    assert schur.s_series(1)[0] == 1


def test_s_series_monotone_prefix():
    t = schur.s_series(500)
    for n in range(499):
        assert t[n] <= t[n + 1]


def test_s_series_matches_eta_expansion():
    n = 400
    t = schur.s_series(n)
    series = expand_expression(parse("f2*f3/(f1*f6^2)"), n, ZZ)
    assert tuple(t[k] for k in range(n)) == series.coeffs


def test_part_count_oracle_values():
    assert schur.oracle_part_count(0) == 1
    assert schur.oracle_part_count(6) == 3  # 6; 5+1; 1^6
    assert [schur.oracle_part_count(n) for n in range(21)] == FIRST_21


def test_part_count_oracle_range():
    schur.oracle_part_count(80)
    with pytest.raises(ValueError):
        schur.oracle_part_count(81)
    with pytest.raises(ValueError):
        schur.oracle_part_count(-1)


def test_overpartition_oracle_values():
    assert [schur.oracle_schur_overpartitions(n) for n in range(21)] == FIRST_21


def test_overpartition_oracle_range():
    with pytest.raises(ValueError):
        schur.oracle_schur_overpartitions(41)
    with pytest.raises(ValueError):
        schur.oracle_schur_overpartitions(-1)


def test_oracle_mismatches_empty():
    assert schur.oracle_mismatches(40) == []


def test_schur_series_residues():
    t = schur.s_series(50)
    r = t.residues(16)
    assert r.dtype == np.uint64
    assert list(r[:8]) == [v % 16 for v in FIRST_21[:8]]


def test_residue_table_byte_path_vs_uint64_path():
    # 16 divides 256 so it takes the byte route; 48 forces the general one
    byte16 = schur.residue_table(600, 16)
    wide48 = schur.residue_table(600, 48)
    assert list(byte16.residues(16)) == list(wide48.residues(16) % 16)


def test_residue_table_exactness():
    t = schur.s_series(300)
    r = schur.residue_table(300, 8)
    assert list(r.residues(8)) == [t[n] % 8 for n in range(300)]


def test_residue_table_rejects_incompatible_submodulus():
    r = schur.residue_table(100, 16)
    with pytest.raises(ValueError):
        r.residues(3)


def test_residue_table_validation():
    with pytest.raises(ValueError):
        schur.residue_table(100, 1)
    with pytest.raises(ValueError):
        schur.residue_table(0, 8)


def test_cache_round_trip(tmp_path):
    path = str(tmp_path / "table.bin")
    t = schur.s_series(120)
    schur.save_table(path, t)
    back = schur.load_table(path)
    assert back.precision == 120
    assert [back[n] for n in range(120)] == [t[n] for n in range(120)]


def test_s_series_uses_cache_prefix(tmp_path):
    path = str(tmp_path / "table.bin")
    schur.save_table(path, schur.s_series(100))
    t = schur.s_series(60, cache_path=path)
    assert [t[n] for n in range(21)] == FIRST_21


def test_s_series_env_override(tmp_path, monkeypatch):
    path = str(tmp_path / "env_table.bin")
    schur.save_table(path, schur.s_series(64))
    monkeypatch.setenv(schur.CACHE_ENV, path)
    t = schur.s_series(50)
    assert [t[n] for n in range(21)] == FIRST_21


def test_s_series_writes_cache_when_missing(tmp_path):
    path = str(tmp_path / "fresh.bin")
    schur.s_series(40, cache_path=path)
    assert schur.load_table(path).precision >= 40
