import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mfspectra import charcalc, wells
from mfspectra.errors import BadIndex, NotInWell, SliceTooSmall
from mfspectra.polystruct import (WellIndex, leading_structure, recurrence_support, schur_constant,
                                  support_degree_bound, support_report, tensor_support, well_index,
                                  well_point)
from mfspectra.wells import bottom, closed_form_member, closed_form_slice, degree, order_leq

SO9 = wells.so9_spin7_pair()
SL3 = wells.sln_diag_pair(2)
SPSP = wells.spsp_pair(2, 2)


def test_schur_trivial():
    assert schur_constant(SO9, (0, 0, 0), (0, 0, 0, 0)) == 1


def test_schur_not_in_well():
    # varpi_1 does not contain the 7-dimensional Spin7 module
    assert not closed_form_member(SO9, SO9.mu(1), (1, 0, 0, 0))
    with pytest.raises(NotInWell):
        schur_constant(SO9, SO9.mu(1), (1, 0, 0, 0))


def test_schur_sln():
    # (0, -omega_2) has dimension 3, mu = omega_1 has dimension 3
    assert schur_constant(SL3, (1, 0), (0, 0, 1, 0)) == Fraction(3)
    assert schur_constant(SO9, SO9.mu(1), (0, 0, 0, 1)) == Fraction(49, 16)


def test_schur_zero_well():
    for lam in closed_form_slice(SPSP, (0, 0, 0), 4):
        assert schur_constant(SPSP, (0, 0, 0), lam) == Fraction(1, charcalc.dim(SPSP.g, lam))


@pytest.mark.parametrize("pair", [SO9, SL3, SPSP], ids=["so9", "sl3", "spsp"])
def test_recurrence_support_range(pair):
    for k in range(3):
        mu = pair.mu(k)
        for lam in closed_form_slice(pair, mu, 4):
            for i, s in enumerate(pair.spherical_gens):
                supp = recurrence_support(pair, mu, lam, i)
                plus = tuple(a + b for a, b in zip(lam, s))
                assert plus in supp
                assert all(closed_form_member(pair, mu, x) for x in supp)
                assert all(order_leq(pair, mu, x, plus) for x in supp)
                assert support_degree_bound(pair, mu, lam, i)
                assert set(tensor_support(pair, mu, lam, i)) <= set(supp)
                assert plus in tensor_support(pair, mu, lam, i)


def test_recurrence_support_bottom_so9():
    mu = SO9.mu(1)
    for b in bottom(SO9, mu):
        supp = recurrence_support(SO9, mu, b, 0)
        assert tuple(x + y for x, y in zip(b, (1, 0, 0, 0))) in supp
        assert all(degree(SO9, mu, x) >= 0 for x in supp)
        assert supp == sorted(supp, key=lambda x: (wells.order_key(SO9, mu, x), x))


def test_recurrence_support_spsp_example():
    # bottom tags are 0 and 1, so the range admits all of degree 0 and all of degree 1
    supp = recurrence_support(SPSP, SPSP.mu(1), (1, 0, 0, 0), 0)
    assert supp == [(0, 0, 1, 0), (1, 0, 0, 0), (0, 0, 1, 1), (0, 1, 1, 0),
                    (1, 0, 0, 1), (1, 1, 0, 0), (1, 0, 2, 0), (2, 0, 1, 0)]


def test_zonal_support():
    mu = (0, 0, 0)
    lam = (0, 0, 0, 1)
    for x in recurrence_support(SO9, mu, lam, 1):
        assert degree(SO9, mu, x) in (0, 1, 2)


def test_leading_structure_examples():
    for pair, i in ((SO9, 0), (SL3, 1)):
        reps = leading_structure(pair, pair.mu(1), (0, 0), i)
        lead = [r for r in reps if r.d_prime == tuple(int(j == i) for j in range(2))]
        assert len(lead) == 1
        assert lead[0].diagonal_full and lead[0].upper
    reps = leading_structure(SO9, (0, 0, 0), (0, 0), 0)
    assert all(len(r.pattern) == 1 for r in reps)
    lead = [r for r in reps if r.d_prime == (1, 0)][0]
    assert lead.pattern == [[1]]


def test_leading_structure_json():
    rep = leading_structure(SPSP, SPSP.mu(1), (0, 0, 0), 2)[0]
    data = json.loads(rep.to_json())
    assert set(data) >= {"d", "i", "d_prime", "pattern", "diagonal_full"}


def test_leading_structure_errors():
    with pytest.raises(SliceTooSmall):
        leading_structure(SO9, SO9.mu(1), (2, 2), 0, cutoff=3)
    with pytest.raises(BadIndex):
        leading_structure(SO9, SO9.mu(1), (0, 0), 5)
    with pytest.raises(BadIndex):
        leading_structure(SO9, SO9.mu(1), (0, 0, 0), 0)
    with pytest.raises(BadIndex):
        recurrence_support(SO9, SO9.mu(1), (0, 0, 0, 1), 2)


def test_support_report():
    rep = support_report(SO9, SO9.mu(1), (0, 0, 0, 1), 1)
    assert rep.guaranteed == (0, 0, 0, 2)
    assert json.loads(rep.to_json())["guaranteed_nonzero"] == [0, 0, 0, 2]


def test_index_of_closed_formula():
    k = 1
    mu = SO9.mu(k)
    for lam in closed_form_slice(SO9, mu, 6):
        a = SO9.g.fw_to_eps(lam)
        idx = well_index(SO9, mu, lam)
        assert idx.d == (a[0] - a[1], a[1] + a[3] - k)
        assert well_point(SO9, mu, idx) == lam
    for b in bottom(SO9, mu):
        assert well_index(SO9, mu, b) == WellIndex((0, 0), b)


@given(st.sampled_from([SO9, SL3, SPSP]), st.integers(0, 3), st.data())
def test_round_trip_slice(pair, k, data):
    mu = pair.mu(k)
    lam = data.draw(st.sampled_from(sorted(closed_form_slice(pair, mu, 7))))
    assert well_point(pair, mu, well_index(pair, mu, lam)) == lam


def _blocks(pair, kmax=3, dmax=2):
    r = len(pair.spherical_gens)
    for k in range(kmax + 1):
        for d in itertools.product(range(dmax + 1), repeat=r):
            if sum(d) > dmax:
                continue
            for i in range(r):
                lead = tuple(x + (j == i) for j, x in enumerate(d))
                for rep in leading_structure(pair, pair.mu(k), d, i):
                    yield rep.d_prime == lead, rep


@pytest.mark.parametrize("pair", [SO9, SL3], ids=["so9", "sl3"])
def test_non_leading_blocks_strictly_upper(pair):
    for is_lead, rep in _blocks(pair):
        if not is_lead:
            assert rep.strictly_upper


def test_spsp_non_leading_blocks_only_block_upper():
    # with tag n_1 and lex tie-breaking some off-lead blocks have entries on the diagonal
    counts = [0, 0]
    for is_lead, rep in _blocks(SPSP):
        if is_lead:
            assert rep.diagonal_full and rep.block_upper
        else:
            assert rep.block_upper
            counts[rep.strictly_upper] += 1
    assert counts == [46, 806]
