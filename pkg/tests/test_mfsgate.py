import csv
import io

import pytest
from hypothesis import given, strategies as st

from mfspectra import mfsgate
from mfspectra.errors import BadIndex, InconsistentData, InvalidRank
from mfspectra.mfsgate import (audit_csv, audit_tables, complexity_rank, dimension_gate, entry_at,
                               get_entry, group, maximal_parabolic_dims, parabolic_dim,
                               parabolic_dim_complement)
from mfspectra.rootdata import build_datum

B3 = build_datum((("B", 3),))
G2 = build_datum((("G", 2),))


def test_spin7_parabolic():
    assert parabolic_dim(B3, {1, 2}) == 16
    assert parabolic_dim_complement(B3, {0}) == 16
    assert maximal_parabolic_dims(B3) == {0: 16, 1: 14, 2: 15}


def test_g2_maximal():
    assert set(maximal_parabolic_dims(G2).values()) == {9}


def test_full_and_empty_J():
    for d in (B3, G2, build_datum((("A", 2), ("C", 3)), 1)):
        assert parabolic_dim(d, range(d.rank)) == d.group_dim
        assert parabolic_dim(d, ()) == d.group_dim - d.num_pos_roots


def test_bad_index():
    with pytest.raises(BadIndex):
        parabolic_dim(B3, {3})
    with pytest.raises(BadIndex):
        get_entry(1, "99")
    with pytest.raises(BadIndex):
        entry_at(1, "11", n=3)


def test_group_labels():
    assert group("C1").components == (("A", 1),)
    assert group("A0", "T2").components == () and group("A0", "T2").torus == 2
    assert group("E6").dim == 78 and group("E6").num_pos_roots == 36
    assert group("D5").num_pos_roots == 20 and group("D4").num_pos_roots == 12
    with pytest.raises(InvalidRank):
        group("A-1")
    with pytest.raises(InvalidRank):
        group("E6").datum()


def test_gate_examples():
    d5 = group("D5")
    b3t1 = build_datum((("B", 3),), 1)
    maxi = maximal_parabolic_dims(b3t1)
    assert sorted(maxi.values()) == [15, 16, 17]
    assert not any(dimension_gate(d5, b3t1, set(range(3)) - {i}) for i in range(3))
    assert dimension_gate(group("B4"), B3, {1, 2})
    assert group("B4").num_pos_roots == 16
    assert not any(dimension_gate(group("D4"), G2, {i}) for i in range(2))


def test_complexity_examples():
    assert complexity_rank(36, 21, 8, 4, 2) == (0, 2)
    assert complexity_rank(78, 78, 78, 6, 6) == (0, 0)
    e = get_entry(2, "7")
    assert complexity_rank(e.g_spec.dim, e.h_spec.dim, e.hstar_spec.dim,
                           e.g_spec.rank, e.hstar_spec.rank)[0] == 0
    with pytest.raises(InconsistentData):
        complexity_rank(36, 21, 9, 4, 2)
    with pytest.raises(InconsistentData):
        complexity_rank(10, 21, 0, 4, 2)
    with pytest.raises(InconsistentData):
        complexity_rank(8, 3, 3, 1, 2)


def test_audit_all_rows():
    rows = audit_tables()
    assert len(rows) == 22
    assert all(r.ok for r in rows)
    assert all(r.c == 0 for r in rows)
    by = {r.entry.key: r for r in rows}
    for key in ("T1.3", "T1.5", "T2.1", "T2.4"):
        assert by[key].dimH == by[key].pos_roots_G
        assert by[key].verdict == "NO PROPER PARABOLIC PASSES"
    assert by["T1.8"].listed == [("{a1}^c", 16, True)]
    assert by["T1.9"].verdict == "NO PROPER PARABOLIC PASSES"
    assert by["T1.7"].verdict == "NO PROPER PARABOLIC PASSES"
    for r in rows:
        if r.entry.jc:
            assert r.verdict == "PASS (NECESSARY-ONLY)"


def test_audit_csv():
    text = audit_csv()
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == mfsgate.CSV_HEADER
    assert len(rows) == 23
    assert audit_csv() == text


def test_entry_at_families():
    for n in range(2, 6):
        e = entry_at(1, "3", n=n)
        a = mfsgate.audit_entry(e)
        assert a.ok and a.dimH == a.pos_roots_G
    for n in range(2, 6):
        assert mfsgate.audit_entry(entry_at(2, "1", n=n)).ok
    for m in range(2, 5):
        for n in range(2, 5):
            assert mfsgate.audit_entry(entry_at(2, "7", m=m, n=n)).c == 0


@given(st.sampled_from([B3, G2, build_datum((("D", 5),)), build_datum((("A", 4), ("C", 2)), 1)]),
       st.data())
def test_parabolic_dim_monotone(d, data):
    J = data.draw(st.frozensets(st.integers(0, d.rank - 1)))
    J2 = J | data.draw(st.frozensets(st.integers(0, d.rank - 1)))
    assert parabolic_dim(d, J) <= parabolic_dim(d, J2)
