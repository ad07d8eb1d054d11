"""Exact characters: Freudenthal multiplicities, Weyl dimensions, tensor
products (Brauer-Klimyk) and branching along a weight-lattice map.

Characters are stored dominant-only, as ``{fw-tuple: multiplicity}``; Weyl
orbits are expanded on demand.  Everything here is the brute-force side of
the package: closed-form rules elsewhere are tested against it.
"""
from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import config
from .errors import LatticeMismatch, NegativeMultiplicity, NotDominant, SizeLimit
from .rootdata import RootDatum, Weight

_CACHE_ENABLED = True
_freud_cache: dict = {}
_orbit_proj_cache: dict = {}


def set_caching(enabled: bool) -> None:
    """Switch the memo caches on or off (results are identical either way)."""
    global _CACHE_ENABLED
    _CACHE_ENABLED = enabled
    clear_caches()


def clear_caches() -> None:
    _freud_cache.clear()
    _orbit_proj_cache.clear()


def _check_dominant(d: RootDatum, lam) -> tuple[int, ...]:
    x = d.as_fw(lam)
    if not d.is_dominant_fw(x):
        raise NotDominant(f"{x} is not dominant for {d.label}")
    return x


@dataclass
class Character:
    """Character of a finite-dimensional module, dominant weights only."""

    datum: RootDatum
    mults: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __getitem__(self, w) -> int:
        x = self.datum.as_fw(w)
        return self.mults.get(self.datum.dominant_fw(x)[0], 0)

    def dim(self) -> int:
        return sum(m * len(self.datum.orbit(w)) for w, m in self.mults.items())

    def full(self) -> dict[tuple[int, ...], int]:
        """Expand to every weight (all Weyl-orbit elements)."""
        out = {}
        for w, m in self.mults.items():
            for y in self.datum.orbit(w):
                out[y] = m
        return out

    def weights(self) -> list[Weight]:
        return [self.datum.weight(w) for w in sorted(self.mults)]


# ---------------------------------------------------------------- Freudenthal
def _dominant_weights_below(d: RootDatum, lam: tuple[int, ...], limit: int) -> list[tuple[int, ...]]:
    pos = d._pos_roots_fw
    found = {lam}
    stack = [lam]
    rank = d.rank
    while stack:
        y = stack.pop()
        for a in pos:
            z = tuple(p - q for p, q in zip(y, a))
            if z not in found and all(c >= 0 for c in z[:rank]):
                found.add(z)
                stack.append(z)
                if len(found) > limit:
                    raise SizeLimit(f"more than {limit} dominant weights below {lam}")
    hv = d._height_int
    return sorted(found, key=lambda z: (-sum(h * c for h, c in zip(hv, z)), z))


def _freudenthal(d: RootDatum, lam: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    key = (d, lam)
    if _CACHE_ENABLED and key in _freud_cache:
        return _freud_cache[key]
    order = _dominant_weights_below(d, lam, config.size_limit())
    gram = d._gram_int
    pos = d._pos_roots_fw
    # G.a for every positive root, and |a|^2
    ga = [tuple(sum(g * c for g, c in zip(row, a)) for row in gram) for a in pos]
    aa = [sum(x * y for x, y in zip(a, g)) for a, g in zip(pos, ga)]
    rho = d.rho_fw

    def norm(x):
        return d._inner_int(x, x)

    lr = tuple(a + b for a, b in zip(lam, rho))
    top = norm(lr)
    mult = {lam: 1}
    dom = d.dominant_fw
    for mu in order[1:]:
        acc = 0
        for a, g, a2 in zip(pos, ga, aa):
            w = tuple(p + q for p, q in zip(mu, a))
            pair = sum(x * y for x, y in zip(w, g))
            while True:
                m = mult.get(dom(w)[0])
                if m is None:
                    break
                acc += m * pair
                w = tuple(p + q for p, q in zip(w, a))
                pair += a2
        mr = tuple(a + b for a, b in zip(mu, rho))
        den = top - norm(mr)
        q, r = divmod(2 * acc, den)
        if r:
            raise ArithmeticError(f"Freudenthal recursion not integral at {mu}")
        if q:
            mult[mu] = q
    if _CACHE_ENABLED:
        _freud_cache[key] = mult
    return mult


def weight_multiplicities(d: RootDatum, lam) -> Character:
    """Character of the irreducible module of highest weight ``lam``.

    >>> from mfspectra.rootdata import build_datum
    >>> weight_multiplicities(build_datum((("A", 2),)), (1, 1))[(0, 0)]
    2
    """
    x = _check_dominant(d, lam)
    return Character(d, dict(_freudenthal(d, x)))


def dim(d: RootDatum, lam) -> int:
    """Weyl dimension formula."""
    return d.weyl_dim(_check_dominant(d, lam))


# ------------------------------------------------------------ tensor products
def tensor_decompose(d: RootDatum, lam, mu) -> dict[tuple[int, ...], int]:
    """Irreducible constituents of V_lam (x) V_mu, by Brauer-Klimyk."""
    x = _check_dominant(d, lam)
    y = _check_dominant(d, mu)
    if d.weyl_dim(x) > d.weyl_dim(y):
        x, y = y, x
    char = _freudenthal(d, x)
    rho = d.rho_fw
    rank = d.rank
    shift = tuple(a + b for a, b in zip(y, rho))
    out: Counter = Counter()
    points = 0
    limit = config.size_limit()
    for w, m in char.items():
        orb = d.orbit(w)
        points += len(orb)
        if points > limit:
            raise SizeLimit(f"tensor product needs more than {limit} weight points")
        for v in orb:
            z, s = d.dominant_fw(tuple(a + b for a, b in zip(v, shift)))
            if any(c == 0 for c in z[:rank]):
                continue
            out[tuple(a - b for a, b in zip(z, rho))] += s * m
    res = {}
    for w, m in out.items():
        if m < 0:
            raise NegativeMultiplicity(f"negative coefficient {m} at {w}")
        if m:
            res[w] = m
    return dict(sorted(res.items()))


# ------------------------------------------------------------------ branching
def _matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]


@dataclass(frozen=True, eq=False)
class EmbeddingMap:
    """Restriction of weights from ``target`` (the group) to ``source`` (the subgroup).

    ``matrix`` maps target epsilon-coordinates to source epsilon-coordinates;
    ``twist``, if given, is an automorphism of the target root datum applied first.
    """

    source: RootDatum
    target: RootDatum
    matrix: tuple
    twist: tuple | None = None
    name: str = ""

    def __post_init__(self):
        mat = [[Fraction(v) for v in row] for row in self.matrix]
        if len(mat) != self.source.neps or any(len(r) != self.target.neps for r in mat):
            raise LatticeMismatch("embedding matrix has the wrong shape")
        object.__setattr__(self, "matrix", tuple(tuple(r) for r in mat))
        if self.twist is not None:
            tw = [[Fraction(v) for v in row] for row in self.twist]
            object.__setattr__(self, "twist", tuple(tuple(r) for r in tw))
            self._check_twist()
        object.__setattr__(self, "_fw_map", self._build_fw_map())

    def _check_twist(self):
        t = self.target
        roots = {tuple(r.eps) for r in t.pos_roots}
        roots |= {tuple(-c for c in r) for r in roots}
        for r in roots:
            img = tuple(sum((a * b for a, b in zip(row, r)), Fraction(0)) for row in self.twist)
            if img not in roots:
                raise LatticeMismatch(f"twist does not permute the roots of {t.label}")

    def eps_image(self, eps: Sequence) -> tuple[Fraction, ...]:
        v = [Fraction(e) for e in eps]
        if self.twist is not None:
            v = [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.twist]
        return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.matrix)

    def _build_fw_map(self) -> tuple[tuple[int, ...], ...]:
        cols = []
        for base in self.target._fund_eps:
            img = self.eps_image(base)
            try:
                cols.append(self.source.eps_to_fw(img))
            except LatticeMismatch as exc:
                raise LatticeMismatch(f"{self.name or 'embedding'} does not map the weight "
                                      f"lattice into the weight lattice") from exc
        return tuple(tuple(col[j] for col in cols) for j in range(self.source.nfw))

    def project(self, x: Sequence[int]) -> tuple[int, ...]:
        """Image of a target weight (fw-coordinates) in source fw-coordinates."""
        return tuple(sum(m * c for m, c in zip(row, x)) for row in self._fw_map)

    def __hash__(self):
        return hash((self.source, self.target, self.matrix, self.twist))

    def __eq__(self, other):
        return (isinstance(other, EmbeddingMap) and self.source == other.source
                and self.target == other.target and self.matrix == other.matrix
                and self.twist == other.twist)

    @classmethod
    def identity(cls, d: RootDatum) -> "EmbeddingMap":
        n = d.neps
        return cls(d, d, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), name="id")

    def compose_twist(self, twist) -> "EmbeddingMap":
        """Same projection with a (further) twist applied first."""
        tw = [[Fraction(v) for v in row] for row in twist]
        if self.twist is not None:
            tw = _matmul(self.twist, tw)
        return EmbeddingMap(self.source, self.target, self.matrix, tuple(map(tuple, tw)),
                            self.name + "+twist")


def _orbit_projection(e: EmbeddingMap, x: tuple[int, ...]) -> Counter:
    """Source-dominant images of the target Weyl orbit of ``x``."""
    key = (e, x)
    if _CACHE_ENABLED:
        hit = _orbit_proj_cache.get(key)
        if hit is not None:
            return hit
    src = e.source
    rank = src.rank
    rows = e._fw_map
    out: Counter = Counter()
    for y in e.target.orbit(x):
        z = tuple(sum(m * c for m, c in zip(row, y)) for row in rows)
        if all(c >= 0 for c in z[:rank]):
            out[z] += 1
    if _CACHE_ENABLED:
        _orbit_proj_cache[key] = out
    return out


def restricted_character(e: EmbeddingMap, lam) -> dict[tuple[int, ...], int]:
    """Dominant part (for the source) of the pushed-forward character of V_lam."""
    x = _check_dominant(e.target, lam)
    char = _freudenthal(e.target, x)
    limit = config.size_limit()
    points = 0
    total: Counter = Counter()
    for w, m in char.items():
        proj = _orbit_projection(e, w)
        points += sum(proj.values())
        if points > limit:
            raise SizeLimit(f"pushforward needs more than {limit} weight points")
        for z, c in proj.items():
            total[z] += m * c
    return dict(total)


def branch(e: EmbeddingMap, lam) -> dict[tuple[int, ...], int]:
    """Decompose the restriction of V_lam by greedy peeling of highest weights.

    Candidates are peeled in order of decreasing height <rho^vee, .>, ties
    broken lexicographically on fw-coordinates.
    """
    src = e.source
    remaining = Counter(restricted_character(e, lam))
    hv = src._height_int
    out = {}
    while True:
        live = [w for w, m in remaining.items() if m]
        if not live:
            break
        top = max(live, key=lambda z: (sum(h * c for h, c in zip(hv, z)), z))
        c = remaining[top]
        if c < 0:
            raise NegativeMultiplicity(f"{e.name or 'map'}: coefficient {c} at {top}")
        out[top] = c
        for w, m in _freudenthal(src, top).items():
            remaining[w] -= c * m
    return dict(sorted(out.items()))


def restriction_multiplicity(e: EmbeddingMap, lam, mu) -> int:
    """m(lam -> mu), by the alternating sum over the Weyl orbit of rho.

    The coefficient of mu in the restriction equals
    ``sum_w det(w) * P(mu + rho - w rho)`` where P is the pushed-forward
    weight multiplicity; P is Weyl-invariant, so only its dominant part is
    needed.
    """
    src = e.source
    y = _check_dominant(src, mu)
    pushed = restricted_character(e, lam)
    return _alternating(src, pushed, y)


def _alternating(src: RootDatum, pushed: dict, y: tuple[int, ...]) -> int:
    rho = src.rho_fw
    total = 0
    for s, wr in src.signed_rho_orbit():
        z = tuple(a + b - c for a, b, c in zip(y, rho, wr))
        total += s * pushed.get(src.dominant_fw(z)[0], 0)
    return total


def restriction_multiplicities(e: EmbeddingMap, lam, mus: Iterable) -> dict[tuple[int, ...], int]:
    """Several multiplicities from a single pushforward."""
    src = e.source
    pushed = restricted_character(e, lam)
    return {src.as_fw(mu): _alternating(src, pushed, _check_dominant(src, mu)) for mu in mus}


# ----------------------------------------------------------- serialization
def decomposition_json(result: dict[tuple[int, ...], int]) -> str:
    return json.dumps([{"weight": list(w), "mult": m} for w, m in sorted(result.items())])


def decomposition_csv(result: dict[tuple[int, ...], int]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["weight", "mult"])
    for w, m in sorted(result.items()):
        writer.writerow([",".join(map(str, w)), m])
    return buf.getvalue()
