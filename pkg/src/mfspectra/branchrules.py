"""Closed-form branching rules: B/D interlacing, the tau-twisted D4 -> B3
rule for kε1, Gelfand-Tsetlin weights of Sym^k for SL(n+1), and the
rank-one Sp well.

Rational rows are handled by doubling every coordinate, so all loops run
over integers.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import charcalc
from .embeddings import TAU, apply_matrix, sp_rank_one
from .errors import InvalidChain, NotDominant, ParityMismatch
from .rootdata import RootDatum, build_datum, dominant_slice

B_TO_D = "B>D"
D_TO_B = "D>B"
_FAMILY_ALIASES = {"B>D": B_TO_D, "B↓D": B_TO_D, "BD": B_TO_D,
                   "D>B": D_TO_B, "D↓B": D_TO_B, "DB": D_TO_B}


@dataclass(frozen=True)
class InterlacePattern:
    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    family: str


@dataclass(frozen=True)
class GTChain:
    """A chain k >= k_n >= ... >= k_1 >= 0; ``ks`` is (k_1, ..., k_n)."""

    k: int
    ks: tuple[int, ...]

    def __post_init__(self):
        seq = (0,) + tuple(self.ks) + (self.k,)
        if any(a > b for a, b in zip(seq, seq[1:])):
            raise InvalidChain(f"not a chain: k={self.k}, ks={self.ks}")


def _doubled(row: Sequence) -> tuple[list[int], int]:
    """Twice the entries, and their common parity (0 integral, 1 half-integral)."""
    twice = []
    for v in row:
        f = Fraction(v) * 2
        if f.denominator != 1:
            raise ParityMismatch(f"{v} is not a half-integer")
        twice.append(int(f))
    parities = {t % 2 for t in twice}
    if len(parities) > 1:
        raise ParityMismatch(f"row {tuple(map(str, row))} mixes integers and half-integers")
    return twice, parities.pop() if parities else 0


def _steps(lo: int, hi: int, parity: int):
    start = lo if (lo - parity) % 2 == 0 else lo + 1
    return range(start, hi + 1, 2)


def interlace_branch(family: str, lam: Sequence) -> list[tuple[Fraction, ...]]:
    """Highest weights in the restriction B_n -> D_n or D_n -> B_{n-1}.

    >>> [tuple(map(int, w)) for w in interlace_branch("B>D", (1, 0, 0, 0))]
    [(0, 0, 0, 0), (1, 0, 0, 0)]
    """
    fam = _FAMILY_ALIASES.get(family)
    if fam is None:
        raise ValueError(f"unknown family {family!r}")
    a, par = _doubled(lam)
    n = len(a)
    if fam == B_TO_D:
        if any(x < y for x, y in zip(a, a[1:])) or a[-1] < 0:
            raise NotDominant(f"{lam} is not B{n}-dominant")
        ranges = [_steps(a[i + 1], a[i], par) for i in range(n - 1)]
        ranges.append(_steps(-a[-1], a[-1], par))
    else:
        if any(x < y for x, y in zip(a[:-1], a[1:-1])) or a[-2] < abs(a[-1]):
            raise NotDominant(f"{lam} is not D{n}-dominant")
        ranges = [_steps(a[i + 1], a[i], par) for i in range(n - 2)]
        ranges.append(_steps(abs(a[-1]), a[-2], par))
    out = [tuple(Fraction(v, 2) for v in combo) for combo in itertools.product(*ranges)]
    return sorted(out)


def interlace_patterns(family: str, lam: Sequence) -> list[InterlacePattern]:
    fam = _FAMILY_ALIASES[family]
    upper = tuple(Fraction(v) for v in lam)
    return [InterlacePattern(upper, low, fam) for low in interlace_branch(fam, lam)]


def apply_tau(nu: Sequence) -> tuple[Fraction, ...]:
    if len(nu) != 4:
        raise ValueError("tau acts on 4 epsilon-coordinates")
    return apply_matrix(TAU, nu)


def twisted_d4_to_b3_contains(nu: Sequence, k: int) -> bool:
    """Does the Spin7 restriction of the SO8 module nu contain k epsilon_1?"""
    twice, _ = _doubled(nu)
    if len(twice) != 4 or not (twice[0] >= twice[1] >= twice[2] >= abs(twice[3])):
        raise NotDominant(f"{nu} is not D4-dominant")
    b1, b2, b3, b4 = (Fraction(v) for v in nu)
    return (b1 + b3 >= k >= b1 + b4 >= 0
            and b2 == b1 + b3 + b4
            and b2 + b3 + b4 <= b1)


def gt_chains(n: int, k: int) -> list[GTChain]:
    out = []

    def rec(prefix, top):
        if len(prefix) == n:
            out.append(GTChain(k, tuple(reversed(prefix))))
            return
        for v in range(top, -1, -1):
            rec(prefix + [v], v)

    rec([], k)
    return sorted(out, key=lambda c: c.ks)


def gt_weights_sl(n: int, k: int) -> list[tuple[GTChain, tuple[int, ...]]]:
    """Torus weights sum k_i alpha_i - k omega_n of Sym^k C^{n+1}, in fw-coordinates."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    d = build_datum((("A", n),))
    out = []
    for chain in gt_chains(n, k):
        fw = [0] * n
        fw[-1] -= k
        for i, ki in enumerate(chain.ks):
            for j in range(n):
                fw[j] += ki * d.cartan[i][j]
        out.append((chain, tuple(fw)))
    return out


@dataclass(frozen=True)
class SpRankOneWell:
    """P+(l omega_n) = l varpi_1 + N varpi_2 for (Sp(2n), Sp(2n-2) x Sp2)."""

    n: int
    ell: int

    @property
    def bottom(self) -> tuple[tuple[int, ...], ...]:
        return ((self.ell,) + (0,) * (self.n - 1),)

    @property
    def generator(self) -> tuple[int, ...]:
        return (0, 1) + (0,) * (self.n - 2)

    @property
    def mu(self) -> tuple[int, ...]:
        """The Sp2 weight l omega in subgroup fw-coordinates (Sp2 listed last)."""
        return (0,) * (self.n - 1) + (self.ell,)

    def contains(self, lam: Sequence[int]) -> bool:
        lam = tuple(lam)
        return (len(lam) == self.n and lam[0] == self.ell and lam[1] >= 0
                and all(c == 0 for c in lam[2:]))

    def slice(self, cutoff: int) -> list[tuple[int, ...]]:
        return [x for x in dominant_slice(sp_rank_one(self.n).target, cutoff) if self.contains(x)]


def sp_rank_one_well(n: int, ell: int) -> SpRankOneWell:
    if n < 2 or ell < 0:
        raise ValueError("need n >= 2 and ell >= 0")
    return SpRankOneWell(n, ell)


def inverted_branch(e: charcalc.EmbeddingMap, mu: Sequence[int], cutoff: int) -> list[tuple[int, ...]]:
    """Dominant lambda of height <= cutoff whose restriction contains mu (oracle search)."""
    mu = tuple(mu)
    return [lam for lam in dominant_slice(e.target, cutoff)
            if charcalc.restriction_multiplicity(e, lam, mu) > 0]


def oracle_interlace(family: str, d: RootDatum, lam_fw: Sequence[int]) -> list[tuple[Fraction, ...]]:
    """The same list as interlace_branch, computed by brute-force branching."""
    from .embeddings import b_to_d, d_to_b

    fam = _FAMILY_ALIASES[family]
    e = b_to_d(d.rank) if fam == B_TO_D else d_to_b(d.rank)
    res = charcalc.branch(e, lam_fw)
    if any(m != 1 for m in res.values()):
        raise AssertionError(f"{e.name}: multiplicities {res}")
    return sorted(e.source.fw_to_eps(w) for w in res)
