import itertools
import json

import pytest

from utdos import _backend, _kernels_py, modtables
from utdos.errors import ResourceError
from utdos.matrix import UTMat
from utdos.modtables import (ModTable, emit_table, is_representable_mod, nonrep_diag4_mod16,
                             parse_table, representable_mod, square_set)


def naive_table(m):
    """Every A^2 - B^2 over all pairs, without deduplicating squares."""
    mats = [UTMat(*t) for t in itertools.product(range(m), repeat=3)]
    sq = [A @ A for A in mats]
    return {(A - B).reduce(m).as_tuple() for A in sq for B in sq}


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_matches_naive_enumeration(m):
    assert set(representable_mod(m).representable) == naive_table(m)


def test_small_moduli():
    assert representable_mod(1).representable == ((0, 0, 0),)
    assert len(representable_mod(2)) == 8


def test_mod4_against_appendix(appendix):
    t = representable_mod(4)
    assert set(t.representable) == appendix["mod4_representable"]
    assert set(t.complement()) == appendix["mod4_not_representable"]


def test_mod16_against_appendix(appendix):
    t = representable_mod(16).filtered(4)
    assert set(t.representable) == appendix["mod16_diag4_representable"]
    assert set(nonrep_diag4_mod16()) == appendix["mod16_diag4_not_representable"]
    assert len(nonrep_diag4_mod16()) == 48
    assert (4, 1, 4) in nonrep_diag4_mod16()
    assert (8, 1, 8) in nonrep_diag4_mod16()


def test_is_representable_mod():
    N = UTMat(4, 2, 4)
    assert is_representable_mod(N, 4)
    assert not is_representable_mod(N, 16)
    assert not is_representable_mod(UTMat(1, 1, 1), 4)
    assert is_representable_mod(UTMat(-3, -1, 5), 4) == ((1, 3, 1) in representable_mod(4))


def test_square_set_dedup():
    for m in (2, 4, 8, 16):
        sq = square_set(m)
        assert len(sq) == len(set(sq)) <= m ** 3
        naive = {(UTMat(*t) @ UTMat(*t)).reduce(m).as_tuple()
                 for t in itertools.product(range(m), repeat=3)}
        assert set(sq) == naive


def test_cap(monkeypatch):
    with pytest.raises(ResourceError):
        representable_mod(128)
    with pytest.raises(ResourceError):
        representable_mod(8, cap=4)
    monkeypatch.setenv(modtables.CAP_ENV, "4")
    with pytest.raises(ResourceError):
        representable_mod(5)
    with pytest.raises(ValueError):
        representable_mod(0)


def test_workers_do_not_change_result():
    serial = modtables._representable_mod(16, 1)
    parallel = modtables._representable_mod(16, 3)
    assert serial == parallel


@pytest.mark.parametrize("m", [1, 2, 4, 7, 12, 16])
def test_backends_agree(m):
    codes = _kernels_py.square_codes(m)
    assert list(_backend.square_codes(m)) == list(codes)
    assert bytes(_backend.difference_mask(codes, m)) == bytes(_kernels_py.difference_mask(codes, m))
    n = len(codes)
    part = _backend.difference_mask(codes, m, 0, n // 2)
    assert bytes(part) == bytes(_kernels_py.difference_mask(codes, m, 0, n // 2))


def test_emit_text_ordering():
    out = emit_table(representable_mod(4), "text").decode()
    assert out.startswith("(0,0,0) (0,0,1) (0,0,3)")
    assert len(out.split()) == 32


def test_emit_csv_trivial():
    assert emit_table(representable_mod(1), "csv") == b"0,0,0\n"


@pytest.mark.parametrize("fmt", ["text", "csv", "json"])
@pytest.mark.parametrize("m", [1, 4, 16])
def test_emit_round_trip(fmt, m):
    t = representable_mod(m)
    assert parse_table(emit_table(t, fmt), fmt, m) == t


def test_emit_json_shape():
    d = json.loads(emit_table(representable_mod(4), "json"))
    assert d["modulus"] == 4
    assert len(d["representable"]) == 32


def test_emit_filtered():
    out = emit_table(representable_mod(16), "csv", diag_multiple=4).decode().splitlines()
    assert len(out) == 208


def test_unreduced_table_rejected():
    with pytest.raises(ValueError):
        ModTable(4, ((4, 0, 0),))


def test_fallback_selected_by_env():
    import os
    import subprocess
    import sys

    code = "import utdos; print(utdos.BACKEND); print(len(utdos.representable_mod(4)))"
    env = dict(os.environ, UTDOS_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.split() == ["python", "32"]
