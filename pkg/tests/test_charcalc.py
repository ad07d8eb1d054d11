import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mfspectra import charcalc, config, embeddings
from mfspectra.charcalc import EmbeddingMap
from mfspectra.errors import LatticeMismatch, NotDominant, SizeLimit
from mfspectra.rootdata import build_datum, dominant_slice
from oracles import sl_tensor, weyl_dim_eps

A1 = build_datum((("A", 1),))
A2 = build_datum((("A", 2),))
B2 = build_datum((("B", 2),))
B3 = build_datum((("B", 3),))
B4 = build_datum((("B", 4),))
D4 = build_datum((("D", 4),))
H = Fraction(1, 2)


def test_adjoint_zero_weight():
    assert charcalc.weight_multiplicities(A2, (1, 1))[(0, 0)] == 2


def test_dims_against_independent_weyl_formula():
    # frozen from oracles.weyl_dim_eps
    assert charcalc.dim(B4, (0, 0, 0, 1)) == weyl_dim_eps("B", 4, [H] * 4) == 16
    assert charcalc.dim(B3, (0, 0, 1)) == weyl_dim_eps("B", 3, [H] * 3) == 8
    assert charcalc.dim(B4, (1, 0, 0, 0)) == 9
    assert charcalc.dim(B3, (1, 0, 0)) == 7
    for k in range(8):
        assert charcalc.dim(A1, (k,)) == k + 1


@pytest.mark.parametrize("fam,n,bound", [("B", 3, 5), ("C", 3, 4), ("D", 4, 4), ("A", 3, 5)])
def test_weyl_dim_agrees_with_freudenthal_and_oracle(fam, n, bound):
    d = build_datum(((fam, n),))
    for lam in dominant_slice(d, bound):
        char = charcalc.weight_multiplicities(d, lam)
        assert sum(char.full().values()) == charcalc.dim(d, lam)
        assert charcalc.dim(d, lam) == weyl_dim_eps(fam, n, d.fw_to_eps(lam))


def test_not_dominant():
    with pytest.raises(NotDominant):
        charcalc.weight_multiplicities(A2, (-1, 0))
    with pytest.raises(NotDominant):
        charcalc.dim(A2, (0, -2))


def test_size_limit():
    config.set_size_limit(10_000)
    try:
        with pytest.raises(SizeLimit):
            charcalc.clear_caches()
            charcalc.weight_multiplicities(B4, (20, 20, 20, 20))
        with pytest.raises(SizeLimit):
            charcalc.branch(embeddings.so9_spin7(), (4, 4, 4, 4))
        with pytest.raises(SizeLimit):
            charcalc.tensor_decompose(B4, (3, 3, 3, 3), (3, 3, 3, 3))
    finally:
        config.set_size_limit(None)
        charcalc.clear_caches()


def test_tensor_examples():
    assert charcalc.tensor_decompose(A1, (1,), (1,)) == {(2,): 1, (0,): 1}
    assert charcalc.tensor_decompose(A2, (1, 0), (0, 1)) == {(1, 1): 1, (0, 0): 1}
    adj = charcalc.tensor_decompose(A2, (1, 1), (1, 1))
    # frozen from oracles.sl_tensor (tableaux convolution)
    assert adj == sl_tensor((1, 1), (1, 1)) == {(2, 2): 1, (3, 0): 1, (0, 3): 1, (1, 1): 2, (0, 0): 1}


@pytest.mark.parametrize("lam,mu", [((1, 0), (1, 1)), ((2, 1), (1, 2)), ((0, 3), (2, 0))])
def test_tensor_matches_tableau_oracle(lam, mu):
    assert charcalc.tensor_decompose(A2, lam, mu) == sl_tensor(lam, mu)


def test_b4_to_d4_vector():
    e = embeddings.b_to_d(4)
    assert charcalc.branch(e, (1, 0, 0, 0)) == {(1, 0, 0, 0): 1, (0, 0, 0, 0): 1}


def test_twisted_branch_example():
    e = embeddings.d4_to_b3_twisted("tau")
    nu = D4.eps_to_fw((1, 1, 1, -1))
    res = charcalc.branch(e, nu)
    ks = {k for k in range(6) if res.get((k, 0, 0), 0)}
    assert ks == {0, 1, 2}


def test_diagonal_branch_is_tensor_product():
    e = embeddings.sl_diagonal(2)
    # (w1, -w0 w1) = (w1, w2) in the standard chamber of each factor
    assert charcalc.branch(e, (1, 0, 1, 0)) == charcalc.tensor_decompose(A2, (1, 0), (1, 0))


def test_restriction_multiplicity_examples():
    e = embeddings.so9_spin7()
    assert charcalc.restriction_multiplicity(e, (0, 0, 0, 1), (1, 0, 0)) == 1
    assert charcalc.restriction_multiplicity(e, (0, 0, 0, 1), (2, 0, 0)) == 0
    for emb in (e, embeddings.b_to_d(4), embeddings.spsp(2, 2)):
        assert charcalc.restriction_multiplicity(emb, (0,) * emb.target.nfw, (0,) * emb.source.nfw) == 1


def test_restriction_multiplicities_batch():
    e = embeddings.so9_spin7()
    many = charcalc.restriction_multiplicities(e, (1, 1, 0, 1), [(k, 0, 0) for k in range(4)])
    for mu, m in many.items():
        assert m == charcalc.restriction_multiplicity(e, (1, 1, 0, 1), mu)


def test_identity_branch():
    for d in (A2, B3, D4):
        e = EmbeddingMap.identity(d)
        for lam in dominant_slice(d, 2):
            assert charcalc.branch(e, lam) == {lam: 1}


def test_twist_must_permute_roots():
    from mfspectra.embeddings import TAU
    with pytest.raises(LatticeMismatch):
        EmbeddingMap(B3, B4, embeddings.so9_spin7().matrix, twist=TAU)
    with pytest.raises(LatticeMismatch):
        EmbeddingMap(A1, A1, ((Fraction(1, 3), 0), (0, Fraction(1, 3))))


def test_branch_dimension_conservation():
    for e in (embeddings.b_to_d(4), embeddings.so9_spin7(), embeddings.spsp(2, 2), embeddings.sp_rank_one(3)):
        for lam in dominant_slice(e.target, 3):
            res = charcalc.branch(e, lam)
            assert sum(m * charcalc.dim(e.source, mu) for mu, m in res.items()) == charcalc.dim(e.target, lam)


def test_caching_toggle_gives_identical_results():
    e = embeddings.so9_spin7()
    a = charcalc.branch(e, (1, 0, 1, 1))
    charcalc.set_caching(False)
    try:
        b = charcalc.branch(e, (1, 0, 1, 1))
    finally:
        charcalc.set_caching(True)
    assert a == b


def test_serialization():
    res = {(1, 0): 2, (0, 0): 1}
    assert charcalc.decomposition_json(res) == '[{"weight": [0, 0], "mult": 1}, {"weight": [1, 0], "mult": 2}]'
    assert charcalc.decomposition_csv(res).splitlines() == ['weight,mult', '"0,0",1', '"1,0",2']


def _weyl_character_check(d, lam, rng):
    z = [Fraction(rng.randint(2, 9), rng.randint(2, 9)) for _ in range(d.rank)]

    def mono(w):
        v = Fraction(1)
        for zi, c in zip(z, w):
            v *= zi ** c
        return v

    def alt(x):
        total = Fraction(0)
        for y in d.orbit(x):
            _, sign = d.dominant_fw(y)
            total += sign * mono(y)
        return total

    rho = d.rho_fw
    num = alt(tuple(a + r for a, r in zip(lam, rho)))
    den = alt(rho)
    char = sum((m * mono(w) for w, m in charcalc.weight_multiplicities(d, lam).full().items()), Fraction(0))
    return char * den == num


@pytest.mark.parametrize("d", [A2, B2], ids=["A2", "B2"])
def test_freudenthal_against_weyl_character_formula(d):
    rng = random.Random(7)
    checked = 0
    for lam in dominant_slice(d, 30):
        if charcalc.dim(d, lam) > 500:
            continue
        assert _weyl_character_check(d, lam, rng), lam
        checked += 1
    assert checked > 20


@given(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.tuples(st.integers(0, 3), st.integers(0, 3)))
def test_tensor_symmetric_and_dual_pairing(lam, mu):
    ab = charcalc.tensor_decompose(A2, lam, mu)
    assert ab == charcalc.tensor_decompose(A2, mu, lam)
    assert ab.get((0, 0), 0) == (1 if mu == (lam[1], lam[0]) else 0)
    assert sum(m * charcalc.dim(A2, nu) for nu, m in ab.items()) == charcalc.dim(A2, lam) * charcalc.dim(A2, mu)


@given(st.tuples(*[st.integers(0, 2)] * 3), st.tuples(*[st.integers(0, 1)] * 3))
def test_tensor_b3_dimension_conservation(lam, mu):
    res = charcalc.tensor_decompose(B3, lam, mu)
    assert all(m > 0 for m in res.values())
    assert sum(m * charcalc.dim(B3, nu) for nu, m in res.items()) == charcalc.dim(B3, lam) * charcalc.dim(B3, mu)
