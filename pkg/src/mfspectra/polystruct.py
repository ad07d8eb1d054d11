"""Support structure of the recurrence phi_i Phi_lambda = sum c Phi_lambda'.

Nothing numeric about the coefficients is computed.  The admissible
support of phi_i Phi_lambda is the order interval
lambda - sigma_i <= lambda' <= lambda + sigma_i inside the well; a
coefficient can only be nonzero when in addition lambda' - lambda is a
weight of V_{sigma_i} (lambda' must occur in V_{sigma_i} (x) V_lambda).
Only c(lambda, lambda + sigma_i) is guaranteed nonzero.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import charcalc
from .errors import BadIndex, NotInWell, SliceTooSmall
from .rootdata import slice_height
from .wells import (MFPair, bottom, closed_form_member, formal_key, index_of, key_leq,
                    lambda_of, order_key)


@dataclass(frozen=True)
class WellIndex:
    d: tuple[int, ...]
    b: tuple[int, ...]


def well_index(pair: MFPair, mu, lam) -> WellIndex:
    d, b = index_of(pair, mu, lam)
    return WellIndex(d, b)


def well_point(pair: MFPair, mu, idx: WellIndex) -> tuple[int, ...]:
    return lambda_of(pair, mu, idx.d, idx.b)


def schur_constant(pair: MFPair, mu, lam) -> Fraction:
    """dim(mu)^2 / dim(lambda)."""
    if not closed_form_member(pair, mu, lam):
        raise NotInWell(f"{tuple(lam)} is not in the well")
    return Fraction(charcalc.dim(pair.h, mu) ** 2, charcalc.dim(pair.g, lam))


def _check_generator(pair: MFPair, i: int) -> None:
    if not 0 <= i < len(pair.spherical_gens):
        raise BadIndex(f"generator index {i} out of range 0..{len(pair.spherical_gens) - 1}")


def _degree_layer(pair: MFPair, mu, deg: int):
    """All (d, b, lambda) of the given degree."""
    if deg < 0:
        return
    r = len(pair.spherical_gens)
    bots = bottom(pair, mu)
    for d in _compositions(deg, r):
        for b in bots:
            yield d, b, lambda_of(pair, mu, d, b)


@lru_cache(maxsize=None)
def _compositions(total: int, parts: int) -> tuple[tuple[int, ...], ...]:
    out = [c for c in itertools.product(range(total + 1), repeat=parts) if sum(c) == total]
    return tuple(sorted(out))


def recurrence_support(pair: MFPair, mu, lam, i: int) -> list[tuple[int, ...]]:
    """Well elements lambda' with lambda - sigma_i <= lambda' <= lambda + sigma_i.

    lambda - sigma_i need not lie in the well; its key is taken from the
    formal index (d - delta_i, b).  Ordered by (degree, tag, lex).
    """
    _check_generator(pair, i)
    mu = pair.h.as_fw(mu)
    d, b = index_of(pair, mu, lam)
    lo_d = list(d)
    lo_d[i] -= 1
    hi_d = list(d)
    hi_d[i] += 1
    lo = formal_key(pair, mu, lo_d, b)
    hi = formal_key(pair, mu, hi_d, b)
    out = []
    deg = sum(d)
    for layer in (deg - 1, deg, deg + 1):
        for dd, bb, lp in _degree_layer(pair, mu, layer):
            key = formal_key(pair, mu, dd, bb)
            if key_leq(lo, key) and key_leq(key, hi):
                out.append((key, lp))
    out.sort()
    return [lp for _, lp in out]


@lru_cache(maxsize=None)
def _generator_weights(pair: MFPair, i: int) -> frozenset:
    return frozenset(charcalc.weight_multiplicities(pair.g, pair.spherical_gens[i]).full())


def tensor_support(pair: MFPair, mu, lam, i: int) -> list[tuple[int, ...]]:
    """Members of recurrence_support that also differ from lambda by a weight of V_sigma_i."""
    lam = pair.g.as_fw(lam)
    wts = _generator_weights(pair, i)
    return [lp for lp in recurrence_support(pair, mu, lam, i)
            if tuple(a - b for a, b in zip(lp, lam)) in wts]


@dataclass
class SupportReport:
    lam: tuple[int, ...]
    i: int
    admissible: list[tuple[int, ...]]
    weight_compatible: list[tuple[int, ...]]
    guaranteed: tuple[int, ...]

    def to_json(self) -> str:
        return json.dumps({"lambda": list(self.lam), "i": self.i,
                           "admissible": [list(x) for x in self.admissible],
                           "weight_compatible": [list(x) for x in self.weight_compatible],
                           "guaranteed_nonzero": list(self.guaranteed)})


def support_report(pair: MFPair, mu, lam, i: int) -> SupportReport:
    lam = pair.g.as_fw(lam)
    adm = recurrence_support(pair, mu, lam, i)
    wc = tensor_support(pair, mu, lam, i)
    plus = tuple(a + s for a, s in zip(lam, pair.spherical_gens[i]))
    return SupportReport(lam, i, adm, wc, plus)


@dataclass
class TriangularityReport:
    d: tuple[int, ...]
    i: int
    d_prime: tuple[int, ...]
    order: list[tuple[int, ...]]          # bottom elements, rows and columns
    pattern: list[list[int]]
    diagonal_full: bool
    block_upper: bool                      # nonzero only where row key <= column key
    upper: bool                            # nonzero only on or above the diagonal
    strictly_upper: bool                   # nonzero only strictly above the diagonal

    def to_json(self) -> str:
        return json.dumps({"d": list(self.d), "i": self.i, "d_prime": list(self.d_prime),
                           "pattern": self.pattern, "diagonal_full": self.diagonal_full,
                           "block_upper_triangular": self.block_upper,
                           "upper_triangular": self.upper,
                           "strictly_upper_triangular": self.strictly_upper})


def leading_structure(pair: MFPair, mu, d: Sequence[int], i: int, cutoff: int | None = None,
                      weight_filter: bool = True) -> list[TriangularityReport]:
    """Support patterns of the blocks A_{i,d'} for every |d'| = |d| + 1.

    Entry (nu, nu') is 1 when lambda(d', nu) may occur in phi_i Phi_{lambda(d, nu')}.
    Bottom elements are ordered by the tag of lambda(d + delta_i, nu), ties by lex.
    With ``cutoff`` every weight involved must lie in that height slice.
    """
    _check_generator(pair, i)
    mu = pair.h.as_fw(mu)
    d = tuple(d)
    if len(d) != len(pair.spherical_gens) or min(d) < 0:
        raise BadIndex(f"bad multi-index {d}")
    bots = bottom(pair, mu)
    lead = tuple(x + (j == i) for j, x in enumerate(d))
    order = sorted(bots, key=lambda b: (formal_key(pair, mu, lead, b), b))
    rank = {b: r for r, b in enumerate(order)}
    reports = []
    for dp in _compositions(sum(d) + 1, len(d)):
        pattern = [[0] * len(order) for _ in order]
        for col in order:
            lam = lambda_of(pair, mu, d, col)
            if cutoff is not None and slice_height(pair.g, lam) + sum(pair.spherical_gens[i]) > cutoff:
                raise SliceTooSmall(f"cutoff {cutoff} does not cover degree {sum(d) + 1}")
            supp = set(tensor_support(pair, mu, lam, i) if weight_filter
                       else recurrence_support(pair, mu, lam, i))
            for row in order:
                if lambda_of(pair, mu, dp, row) in supp:
                    pattern[rank[row]][rank[col]] = 1
        keys = [formal_key(pair, mu, dp, b) for b in order]
        n = len(order)
        block = all(not pattern[r][c] or key_leq(keys[r], keys[c]) for r in range(n) for c in range(n))
        upper = all(not pattern[r][c] or r <= c for r in range(n) for c in range(n))
        strict = all(not pattern[r][c] or r < c for r in range(n) for c in range(n))
        diag = all(pattern[r][r] for r in range(n))
        reports.append(TriangularityReport(d, i, dp, order, pattern, diag, block, upper, strict))
    return reports


def support_degree_bound(pair: MFPair, mu, lam, i: int) -> bool:
    deg = order_key(pair, mu, lam)[0]
    return all(abs(order_key(pair, mu, lp)[0] - deg) <= 1
               for lp in recurrence_support(pair, mu, lam, i))
