"""mu-wells of the three example pairs.

A well is the set of G-highest weights lambda whose restriction to H
contains V_mu exactly once.  For each pair the well is a bottom B(mu) plus
the free monoid on the fundamental spherical weights sigma_i, so every
member has a unique index (d, b) with lambda = b + sum d_i sigma_i.  The
degree is |d| and the order compares (degree, tag).

Pairs
  SO9_SPIN7     G = B4, H = B3 via drop o tau, mu = k eps_1, sigma = (varpi_1, varpi_4)
  SLN_DIAG(n)   G = A_n x A_n, H diagonal, mu = k omega_1, sigma_i = (omega_i, -omega_i)
  SPSP(m, n)    G = C_m x C_n, H = Sp(2m-2) x Sp2 x Sp(2n-2), mu = (0, l omega, 0)

SLN_DIAG weights are stored in the standard B x B chamber; the pair's own
(a, -b) with a, b dominant is (a, reversed b) there.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import charcalc, embeddings
from .branchrules import gt_chains
from .errors import (InvalidBottom, MultiplicityViolation, NotInWell, UnsupportedPair)
from .rootdata import RootDatum, _solve, dominant_slice

SO9_SPIN7 = "SO9_SPIN7"
SLN_DIAG = "SLN_DIAG"
SPSP = "SPSP"


@dataclass(frozen=True, eq=False)
class MFPair:
    id: str
    params: tuple
    g: RootDatum
    h: RootDatum
    embedding: charcalc.EmbeddingMap
    spherical_gens: tuple[tuple[int, ...], ...]

    @property
    def label(self) -> str:
        return f"{self.id}({','.join(map(str, self.params))})" if self.params else self.id

    def __hash__(self):
        return hash((self.id, self.params))

    def __eq__(self, other):
        return isinstance(other, MFPair) and (self.id, self.params) == (other.id, other.params)

    def mu(self, k: int) -> tuple[int, ...]:
        """The subgroup weight of the parabolic character with parameter k."""
        if k < 0:
            raise ValueError("parameter must be >= 0")
        if self.id in (SO9_SPIN7, SLN_DIAG):
            return (k,) + (0,) * (self.h.nfw - 1)
        m, n = self.params
        return (0,) * (m - 1) + (k,) + (0,) * (n - 1)

    def parameter(self, mu: Sequence[int]) -> int:
        """Inverse of :meth:`mu`; rejects weights outside the parabolic family."""
        mu = self.h.as_fw(mu)
        if self.id in (SO9_SPIN7, SLN_DIAG):
            k, rest = mu[0], mu[1:]
        else:
            m, _ = self.params
            k, rest = mu[m - 1], mu[:m - 1] + mu[m:]
        if k < 0 or any(rest):
            raise UnsupportedPair(f"{mu} is not a parabolic character for {self.label}")
        return k


@lru_cache(maxsize=None)
def so9_spin7_pair() -> MFPair:
    e = embeddings.so9_spin7()
    return MFPair(SO9_SPIN7, (), e.target, e.source, e, ((1, 0, 0, 0), (0, 0, 0, 1)))


@lru_cache(maxsize=None)
def sln_diag_pair(n: int) -> MFPair:
    if n < 1:
        raise UnsupportedPair("need n >= 1")
    e = embeddings.sl_diagonal(n)
    gens = []
    for i in range(n):
        v = [0] * (2 * n)
        v[i] = 1
        v[n + (n - 1 - i)] = 1
        gens.append(tuple(v))
    return MFPair(SLN_DIAG, (n,), e.target, e.source, e, tuple(gens))


@lru_cache(maxsize=None)
def spsp_pair(m: int, n: int) -> MFPair:
    if m < 2 or n < 2:
        raise UnsupportedPair("need m, n >= 2")
    e = embeddings.spsp(m, n)

    def gen(first, second):
        a = [0] * m
        b = [0] * n
        for i in first:
            a[i] = 1
        for i in second:
            b[i] = 1
        return tuple(a + b)

    gens = (gen([0], [0]), gen([1], []), gen([], [1]))
    return MFPair(SPSP, (m, n), e.target, e.source, e, gens)


def get_pair(pair_id: str, *params: int) -> MFPair:
    key = pair_id.upper().replace("-", "_")
    if key in (SO9_SPIN7, "SO9_SPIN7"):
        return so9_spin7_pair()
    if key in (SLN_DIAG, "SLN_DIAG"):
        return sln_diag_pair(*(params or (2,)))
    if key == SPSP:
        return spsp_pair(*(params or (2, 2)))
    raise UnsupportedPair(f"unknown pair {pair_id!r}")


# ------------------------------------------------------------ closed forms
def _sln_split(pair: MFPair, lam: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Standard fw-coordinates -> the pair's (a, b) with lambda = (a, -b)."""
    n = pair.params[0]
    return tuple(lam[:n]), tuple(reversed(lam[n:]))


def _sln_join(pair: MFPair, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(a) + tuple(reversed(b))


def _sln_bottom_point(pair: MFPair, k: int, ks: Sequence[int]) -> tuple[int, ...]:
    """sum k_i alpha~_i + (0, -k omega_n) for the chain (k_1, ..., k_n)."""
    n = pair.params[0]
    ext = [0] + list(ks) + [k]
    a = [ext[i + 1] - ext[i] for i in range(n)]
    b = [ext[i + 2] - ext[i + 1] for i in range(n)]
    return _sln_join(pair, a, b)


def _sln_index(pair: MFPair, k: int, lam: tuple[int, ...]):
    """(d, chain) with lam = bottom(chain) + sum d_i sigma_i, or None."""
    n = pair.params[0]
    a, b = _sln_split(pair, lam)
    rhs = [Fraction(x - y) for x, y in zip(a, b)]
    rhs[-1] += k
    cart = [[Fraction(v) for v in row] for row in pair.h.cartan]
    ks = _solve(cart, rhs)
    if any(v.denominator != 1 for v in ks):
        return None
    ks = [int(v) for v in ks]
    seq = [0] + ks + [k]
    if any(x > y for x, y in zip(seq, seq[1:])):
        return None
    base = _sln_bottom_point(pair, k, ks)
    d = tuple(x - y for x, y in zip(lam[:n], base[:n]))
    if min(d) < 0:
        return None
    return d, tuple(ks)


def _eps(pair: MFPair, lam) -> tuple[Fraction, ...]:
    return pair.g.fw_to_eps(lam)


def index_of(pair: MFPair, mu, lam) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(d, b) with lam = b + sum d_i sigma_i and b in the bottom."""
    k = pair.parameter(mu)
    lam = pair.g.as_fw(lam)
    if not pair.g.is_dominant_fw(lam):
        raise NotInWell(f"{lam} is not dominant")
    if pair.id == SO9_SPIN7:
        a1, a2, a3, a4 = _eps(pair, lam)
        d1, d2 = a1 - a2, a2 + a4 - k
        if d2 < 0 or a2 - a4 > k:
            raise NotInWell(f"{lam} is not in the {k}-well of {pair.label}")
        d = (int(d1), int(d2))
    elif pair.id == SLN_DIAG:
        got = _sln_index(pair, k, lam)
        if got is None:
            raise NotInWell(f"{lam} is not in the {k}-well of {pair.label}")
        d = got[0]
    else:
        m, n = pair.params
        a, b = lam[:m], lam[m:]
        twice = a[0] + b[0] - k
        if any(a[2:]) or any(b[2:]) or twice < 0 or twice % 2 or abs(a[0] - b[0]) > k:
            raise NotInWell(f"{lam} is not in the {k}-well of {pair.label}")
        d = (twice // 2, a[1], b[1])
    b = tuple(x - sum(di * s[j] for di, s in zip(d, pair.spherical_gens)) for j, x in enumerate(lam))
    return d, b


def lambda_of(pair: MFPair, mu, d: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if len(d) != len(pair.spherical_gens) or min(d) < 0:
        raise InvalidBottom(f"bad multi-index {tuple(d)}")
    b = tuple(b)
    if b not in set(bottom(pair, mu)):
        raise InvalidBottom(f"{b} is not a bottom element of the {pair.parameter(mu)}-well")
    return tuple(x + sum(di * s[j] for di, s in zip(d, pair.spherical_gens)) for j, x in enumerate(b))


def closed_form_member(pair: MFPair, mu, lam) -> bool:
    lam = pair.g.as_fw(lam)
    if not pair.g.is_dominant_fw(lam):
        return False
    try:
        index_of(pair, mu, lam)
    except NotInWell:
        return False
    return True


def bottom(pair: MFPair, mu) -> list[tuple[int, ...]]:
    k = pair.parameter(mu)
    if pair.id == SO9_SPIN7:
        out = [(0, s, t, k - s - t) for s in range(k + 1) for t in range(k + 1 - s)]
    elif pair.id == SLN_DIAG:
        out = [_sln_bottom_point(pair, k, c.ks) for c in gt_chains(pair.params[0], k)]
    else:
        m, n = pair.params
        out = [(l1,) + (0,) * (m - 1) + (k - l1,) + (0,) * (n - 1) for l1 in range(k + 1)]
    return sorted(out, key=lambda x: (sum(x), x))


def degree(pair: MFPair, mu, lam) -> int:
    return sum(index_of(pair, mu, lam)[0])


def _tag_from_index(pair: MFPair, k: int, d: Sequence[int], b: Sequence[int]) -> int:
    if pair.id == SO9_SPIN7:
        return b[1] + b[2]                      # s + t
    if pair.id == SPSP:
        return d[0]                             # n_1
    if pair.params[0] == 2:
        got = _sln_index(pair, k, tuple(b))
        k1, k2 = got[1]
        return k2 - k1                          # s + t for SL3, see notes in order_key
    return 0


def tag(pair: MFPair, mu, lam) -> int:
    d, b = index_of(pair, mu, lam)
    return _tag_from_index(pair, pair.parameter(mu), d, b)


def order_key(pair: MFPair, mu, lam) -> tuple[int, int]:
    """(degree, tag); lam' <= lam iff degree smaller, or equal with tag <=.

    For SLN_DIAG(2) the tag of the bottom point with chain (k_1, k_2) is
    k_2 - k_1; for n > 2 the order is by degree alone.
    """
    d, b = index_of(pair, mu, lam)
    return sum(d), _tag_from_index(pair, pair.parameter(mu), d, b)


def formal_key(pair: MFPair, mu, d: Sequence[int], b: Sequence[int]) -> tuple[int, int]:
    """Key of the formal point b + sum d_i sigma_i, d allowed to go negative."""
    return sum(d), _tag_from_index(pair, pair.parameter(mu), d, b)


def key_leq(k1: tuple[int, int], k2: tuple[int, int]) -> bool:
    return k1[0] < k2[0] or (k1[0] == k2[0] and k1[1] <= k2[1])


def order_leq(pair: MFPair, mu, lam1, lam2) -> bool:
    return key_leq(order_key(pair, mu, lam1), order_key(pair, mu, lam2))


# ------------------------------------------------------------------ oracle
def _mults_for(args):
    pair_id, params, mus, lam = args
    pair = get_pair(pair_id, *params)
    return lam, charcalc.restriction_multiplicities(pair.embedding, lam, mus)


def oracle_multiplicities(pair: MFPair, mus: Sequence, cutoff: int, workers: int = 1
                          ) -> dict[tuple[int, ...], dict[tuple[int, ...], int]]:
    """m(lambda -> mu) for every dominant lambda of height <= cutoff."""
    mus = [pair.h.as_fw(mu) for mu in mus]
    lams = dominant_slice(pair.g, cutoff)
    jobs = [(pair.id, pair.params, mus, lam) for lam in lams]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_mults_for, jobs, chunksize=8))
    else:
        results = [_mults_for(j) for j in jobs]
    return dict(results)


def enumerate_well(pair: MFPair, mu, cutoff: int, workers: int = 1) -> list[tuple[int, ...]]:
    """Oracle slice of the well, ordered by height then lex."""
    mu = pair.h.as_fw(mu)
    table = oracle_multiplicities(pair, [mu], cutoff, workers)
    out = []
    for lam, row in table.items():
        m = row[mu]
        if m > 1:
            raise MultiplicityViolation(f"{pair.label}: m({lam} -> {mu}) = {m}")
        if m == 1:
            out.append(lam)
    return sorted(out, key=lambda x: (sum(x), x))


@dataclass
class Well:
    pair: MFPair
    mu: tuple[int, ...]
    cutoff: int
    elements: list[tuple[int, ...]]
    bottom: list[tuple[int, ...]]
    degree: dict[tuple[int, ...], int] = field(default_factory=dict)
    order_tag: dict[tuple[int, ...], int] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps({
            "pair": self.pair.label,
            "mu": list(self.mu),
            "cutoff": self.cutoff,
            "elements": [{"lambda": list(l), "degree": self.degree[l], "tag": self.order_tag[l]}
                         for l in self.elements],
        })

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["lambda", "degree", "tag"])
        for l in self.elements:
            w.writerow([",".join(map(str, l)), self.degree[l], self.order_tag[l]])
        return buf.getvalue()


def closed_form_slice(pair: MFPair, mu, cutoff: int) -> list[tuple[int, ...]]:
    return [lam for lam in dominant_slice(pair.g, cutoff) if closed_form_member(pair, mu, lam)]


def build_well(pair: MFPair, mu, cutoff: int, oracle: bool = True, workers: int = 1) -> Well:
    mu = pair.h.as_fw(mu)
    elems = enumerate_well(pair, mu, cutoff, workers) if oracle else closed_form_slice(pair, mu, cutoff)
    well = Well(pair, mu, cutoff, elems, bottom(pair, mu))
    for lam in elems:
        deg, t = order_key(pair, mu, lam)
        well.degree[lam] = deg
        well.order_tag[lam] = t
    return well


# ----------------------------------------------------------- verification
@dataclass
class MonotonicityReport:
    lam: tuple[int, ...]
    sigma: tuple[int, ...]
    mu: tuple[int, ...]
    mults: list[int]

    @property
    def monotone(self) -> bool:
        return all(a <= b for a, b in zip(self.mults, self.mults[1:]))


def verify_shift_monotonicity(pair: MFPair, mu, lam, sigma, kmax: int) -> MonotonicityReport:
    mu = pair.h.as_fw(mu)
    lam = pair.g.as_fw(lam)
    sigma = pair.g.as_fw(sigma)
    if charcalc.restriction_multiplicity(pair.embedding, sigma, (0,) * pair.h.nfw) < 1:
        raise ValueError(f"{sigma} is not in the 0-well")
    seq = []
    for k in range(kmax + 1):
        w = tuple(a + k * s for a, s in zip(lam, sigma))
        seq.append(charcalc.restriction_multiplicity(pair.embedding, w, mu))
    return MonotonicityReport(lam, sigma, mu, seq)


def sample_monotonicity(pair: MFPair, samples: int, kmax: int, rng, cutoff: int = 4,
                        kgrid: Sequence[int] = (0, 1, 2)) -> list[MonotonicityReport]:
    """Random (lambda, sigma, mu) triples.

    mu runs over the pair's grid, half of the lambdas are drawn from the well
    of mu (so the sequence starts at 1) and the rest from all dominant weights
    of height <= cutoff; sigma is a sum of one or two spherical generators.
    """
    anywhere = dominant_slice(pair.g, cutoff)
    in_well = {k: sorted(closed_form_slice(pair, pair.mu(k), cutoff)) for k in kgrid}
    out = []
    for _ in range(samples):
        k = rng.choice(list(kgrid))
        mu = pair.mu(k)
        pool = in_well[k] if in_well[k] and rng.random() < 0.5 else anywhere
        lam = rng.choice(pool)
        gens = [rng.choice(pair.spherical_gens) for _ in range(rng.randint(1, 2))]
        sigma = tuple(sum(col) for col in zip(*gens))
        out.append(verify_shift_monotonicity(pair, mu, lam, sigma, kmax))
    return out


@dataclass
class SpLemmaResult:
    m: int
    i: int
    ell: int
    cutoff: int
    witness: tuple[int, ...] | None
    searched: int


def verify_sp_lemma(m: int, i: int, ell: int, cutoff: int) -> SpLemmaResult:
    """Search for lambda in both P+(omega_i + l omega_n) and P+(omega_i + (l+2) omega_n)
    for (Sp(2m), Sp(2m-2) x Sp2).  ``i = 0`` means omega_i = 0.

    A missing witness only reports the cutoff searched.
    """
    e = embeddings.sp_rank_one(m)
    if not 0 <= i <= m - 1:
        raise ValueError(f"i must lie in 0..{m - 1}")
    base = [0] * (m - 1)
    if i:
        base[i - 1] = 1
    mu1 = tuple(base) + (ell,)
    mu2 = tuple(base) + (ell + 2,)
    lams = dominant_slice(e.target, cutoff)
    for lam in lams:
        got = charcalc.restriction_multiplicities(e, lam, [mu1, mu2])
        if got[mu1] == 1 and got[mu2] == 1:
            return SpLemmaResult(m, i, ell, cutoff, lam, len(lams))
    return SpLemmaResult(m, i, ell, cutoff, None, len(lams))


def fundamental_spherical_weights(pair: MFPair, cutoff: int) -> list[tuple[int, ...]]:
    """Indecomposable elements of the oracle 0-well slice."""
    zero = set(enumerate_well(pair, (0,) * pair.h.nfw, cutoff))
    nonzero = sorted((z for z in zero if any(z)), key=lambda x: (sum(x), x))
    gens = []
    for z in nonzero:
        split = any(tuple(a - b for a, b in zip(z, y)) in zero and any(y) and y != z
                    for y in nonzero if all(b <= a for a, b in zip(z, y)))
        if not split:
            gens.append(z)
    return gens


def xi_order_violations(pair: MFPair, mu, cutoff: int) -> list[tuple]:
    """Triples (lambda, i, xi) with lambda, lambda + xi in the well slice but
    lambda + xi not below lambda + sigma_i; xi runs over the weights of V_sigma_i.

    An empty list means every such weight stays below the leading term.
    """
    mu = pair.h.as_fw(mu)
    bad = []
    for i, sig in enumerate(pair.spherical_gens):
        xis = sorted(set(charcalc.weight_multiplicities(pair.g, sig).full()))
        for lam in closed_form_slice(pair, mu, cutoff):
            top = tuple(a + s for a, s in zip(lam, sig))
            for xi in xis:
                w = tuple(a + x for a, x in zip(lam, xi))
                if min(w[:pair.g.rank]) < 0 or not closed_form_member(pair, mu, w):
                    continue
                if not order_leq(pair, mu, w, top):
                    bad.append((lam, i, xi))
    return bad
