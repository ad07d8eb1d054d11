"""Root systems and weight lattices for classical types and their products.

Weights carry two coordinate systems: exact rational epsilon-coordinates
(one block per simple factor, plus one coordinate per central torus factor)
and integer fundamental-weight coordinates.  All Weyl-group work happens in
fundamental-weight coordinates, where a simple reflection is an integer
row operation with the Cartan matrix.

Simple roots are numbered as in Knapp, *Lie Groups Beyond an Introduction*,
Appendix C.  In type D the last two nodes are ``e_{n-1} - e_n`` and
``e_{n-1} + e_n``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidRank, LatticeMismatch, NotDominant

MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "G": 2}

FW = tuple  # fundamental-weight coordinates, a tuple of ints


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _unit(n: int, i: int, scale=1) -> list[Fraction]:
    v = [Fraction(0)] * n
    v[i] = Fraction(scale)
    return v


def _simple_roots(family: str, n: int) -> tuple[int, list[list[Fraction]]]:
    """Return (epsilon dimension, simple roots) of one simple factor."""
    if family == "A":
        dim = n + 1
        roots = []
        for i in range(n):
            r = _unit(dim, i)
            r[i + 1] = Fraction(-1)
            roots.append(r)
        return dim, roots
    if family in "BCD":
        dim = n
        roots = []
        for i in range(n - 1):
            r = _unit(dim, i)
            r[i + 1] = Fraction(-1)
            roots.append(r)
        if family == "B":
            roots.append(_unit(dim, n - 1))
        elif family == "C":
            roots.append(_unit(dim, n - 1, 2))
        else:
            last = _unit(dim, n - 2)
            last[n - 1] = Fraction(1)
            roots.append(last)
        return dim, roots
    if family == "G":
        one, two = Fraction(1), Fraction(2)
        return 3, [[one, -one, Fraction(0)], [-two, one, one]]
    raise InvalidRank(f"unknown family {family!r}")


def _dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def _solve(mat: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gauss-Jordan solve of a square nonsingular rational system."""
    n = len(mat)
    a = [list(row) + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def _positive_roots(cartan: list[list[int]]) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates, by the root-string rule."""
    n = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # <beta, alpha_i^vee> = sum_j beta_j * cartan[j][i]
                pairing = sum(beta[j] * cartan[j][i] for j in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(found, key=lambda r: (sum(r), r))


@dataclass(frozen=True)
class Weight:
    """A lattice point with matching epsilon and fundamental-weight coordinates."""

    eps: tuple[Fraction, ...]
    fw: tuple[int, ...]

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.eps, other.eps)),
                      tuple(a + b for a, b in zip(self.fw, other.fw)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.eps, other.eps)),
                      tuple(a - b for a, b in zip(self.fw, other.fw)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.eps), tuple(-a for a in self.fw))

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.eps), tuple(k * a for a in self.fw))

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"eps": [str(a) for a in self.eps], "fw": list(self.fw)}

    @classmethod
    def from_json(cls, data: dict) -> "Weight":
        return cls(tuple(Fraction(a) for a in data["eps"]), tuple(int(a) for a in data["fw"]))


class RootDatum:
    """A reductive root datum: product of simple factors and a central torus.

    Instances are immutable after construction and hashable by their
    specification, so they can be used as cache keys.
    """

    def __init__(self, components: Iterable[tuple[str, int]], torus: int = 0):
        comps = tuple((str(f).upper(), int(r)) for f, r in components)
        for fam, r in comps:
            if fam not in MIN_RANK:
                raise InvalidRank(f"unknown family {fam!r}")
            if fam == "G" and r != 2:
                raise InvalidRank("G only exists in rank 2")
            if r < MIN_RANK[fam]:
                raise InvalidRank(f"{fam}{r}: rank must be >= {MIN_RANK[fam]}")
        if torus < 0:
            raise InvalidRank("torus rank must be nonnegative")
        self.components = comps
        self.torus_rank_extra = int(torus)

        simple_eps: list[list[Fraction]] = []
        eps_blocks = []
        neps = 0
        for fam, r in comps:
            dim, roots = _simple_roots(fam, r)
            eps_blocks.append((neps, dim))
            for root in roots:
                simple_eps.append((neps, root))
            neps += dim
        self.eps_blocks = tuple(eps_blocks)
        self.neps = neps + self.torus_rank_extra
        self.rank = len(simple_eps)
        self.nfw = self.rank + self.torus_rank_extra

        def embed(off, vec):
            full = [Fraction(0)] * self.neps
            full[off:off + len(vec)] = vec
            return full

        self._simple_eps = [embed(off, r) for off, r in simple_eps]
        # which component each simple root belongs to
        self._root_comp = []
        for ci, (fam, r) in enumerate(comps):
            self._root_comp.extend([ci] * r)

        sr = self._simple_eps
        self._root_len2 = [_dot(a, a) for a in sr]
        self.cartan = tuple(
            tuple(int(2 * _dot(sr[i], sr[j]) / self._root_len2[j]) for j in range(self.rank))
            for i in range(self.rank)
        )

        # fundamental weights: r = (C^T)^{-1} e_i in simple-root coordinates
        ct = [[Fraction(self.cartan[j][i]) for j in range(self.rank)] for i in range(self.rank)]
        self._fw_root_coords = []
        fund_eps = []
        for i in range(self.rank):
            coords = _solve(ct, [Fraction(int(i == j)) for j in range(self.rank)])
            self._fw_root_coords.append(coords)
            vec = [Fraction(0)] * self.neps
            for j, c in enumerate(coords):
                if c:
                    vec = [v + c * s for v, s in zip(vec, sr[j])]
            fund_eps.append(vec)
        for t in range(self.torus_rank_extra):
            fund_eps.append(_unit(self.neps, neps + t))
        self._fund_eps = [tuple(v) for v in fund_eps]

        # positive roots (in simple-root coordinates, then fw and eps)
        self._pos_root_coords = _positive_roots([list(r) for r in self.cartan]) if self.rank else []
        self._pos_roots_fw = [self._root_coords_to_fw(rc) for rc in self._pos_root_coords]
        self._simple_fw = [tuple(row) + (0,) * self.torus_rank_extra for row in self.cartan]
        # coroot pairing coefficients: <x, beta^vee> = sum_j c_j x_j
        self._coroot_coeffs = []
        for rc in self._pos_root_coords:
            beta = self._root_coords_to_eps(rc)
            b2 = _dot(beta, beta)
            coeffs = tuple(int(rc[j] * self._root_len2[j] / b2) for j in range(self.rank))
            self._coroot_coeffs.append(coeffs)

        # Gram matrix of fundamental weights, scaled to integers
        gram = [[_dot(a, b) for b in self._fund_eps] for a in self._fund_eps]
        den = 1
        for row in gram:
            for g in row:
                den = den * g.denominator // _gcd(den, g.denominator)
        self._gram_den = den
        self._gram_int = tuple(tuple(int(g * den) for g in row) for row in gram)
        # height <rho^vee, x>: sum of simple-root coordinates
        hv = [sum((self._fw_root_coords[i][j] for j in range(self.rank)), Fraction(0))
              for i in range(self.rank)] + [Fraction(0)] * self.torus_rank_extra
        hden = 1
        for h in hv:
            hden = hden * h.denominator // _gcd(hden, h.denominator)
        self._height_den = hden
        self._height_int = tuple(int(h * hden) for h in hv)
        self._dom_cache: dict = {}

    # ------------------------------------------------------------------ basics
    def __repr__(self) -> str:
        return f"RootDatum({list(self.components)!r}, torus={self.torus_rank_extra})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, RootDatum) and self.components == other.components
                and self.torus_rank_extra == other.torus_rank_extra)

    def __hash__(self) -> int:
        return hash((self.components, self.torus_rank_extra))

    @property
    def label(self) -> str:
        parts = [f"{f}{r}" for f, r in self.components]
        if self.torus_rank_extra:
            parts.append(f"T{self.torus_rank_extra}")
        return "x".join(parts) or "T0"

    def to_json(self) -> dict:
        return {"components": [[f, r] for f, r in self.components], "torus": self.torus_rank_extra}

    @classmethod
    def from_json(cls, data: dict) -> "RootDatum":
        return build_datum(tuple(tuple(c) for c in data["components"]), data.get("torus", 0))

    @property
    def component_fw_slices(self) -> list[slice]:
        out, off = [], 0
        for _, r in self.components:
            out.append(slice(off, off + r))
            off += r
        return out

    # ------------------------------------------------------------ coordinates
    def _root_coords_to_fw(self, rc) -> tuple[int, ...]:
        fw = [0] * self.nfw
        for j, c in enumerate(rc):
            if c:
                for k in range(self.rank):
                    fw[k] += c * self.cartan[j][k]
        return tuple(fw)

    def _root_coords_to_eps(self, rc) -> list[Fraction]:
        vec = [Fraction(0)] * self.neps
        for j, c in enumerate(rc):
            if c:
                vec = [v + c * s for v, s in zip(vec, self._simple_eps[j])]
        return vec

    def fw_to_eps(self, fw: Sequence[int]) -> tuple[Fraction, ...]:
        if len(fw) != self.nfw:
            raise LatticeMismatch(f"expected {self.nfw} fw-coordinates, got {len(fw)}")
        vec = [Fraction(0)] * self.neps
        for c, base in zip(fw, self._fund_eps):
            if c:
                vec = [v + c * b for v, b in zip(vec, base)]
        return tuple(vec)

    def eps_to_fw(self, eps: Sequence) -> tuple[int, ...]:
        if len(eps) != self.neps:
            raise LatticeMismatch(f"expected {self.neps} eps-coordinates, got {len(eps)}")
        eps = [_frac(e) for e in eps]
        fw = []
        for i, a in enumerate(self._simple_eps):
            val = 2 * _dot(eps, a) / self._root_len2[i]
            if val.denominator != 1:
                raise LatticeMismatch(f"eps {eps} is not in the weight lattice")
            fw.append(int(val))
        base = self.neps - self.torus_rank_extra
        for t in range(self.torus_rank_extra):
            val = eps[base + t]
            if val.denominator != 1:
                raise LatticeMismatch("torus coordinates must be integers")
            fw.append(int(val))
        # reject components outside the root span (e.g. non-trace-zero in type A
        # is projected away, but anything else must round-trip)
        back = self.fw_to_eps(fw)
        if any(self._normalize_eps(eps)[k] != back[k] for k in range(self.neps)):
            raise LatticeMismatch(f"eps {eps} is not in the weight lattice")
        return tuple(fw)

    def _normalize_eps(self, eps: list[Fraction]) -> list[Fraction]:
        out = list(eps)
        for (fam, _), (off, dim) in zip(self.components, self.eps_blocks):
            if fam in "AG":
                mean = sum(out[off:off + dim], Fraction(0)) / dim
                for k in range(off, off + dim):
                    out[k] -= mean
        return out

    def weight(self, fw: Sequence[int] | Weight) -> Weight:
        if isinstance(fw, Weight):
            if len(fw.fw) != self.nfw:
                raise LatticeMismatch(f"weight has {len(fw.fw)} fw-coordinates, datum needs {self.nfw}")
            return fw
        fw = tuple(int(c) for c in fw)
        return Weight(self.fw_to_eps(fw), fw)

    def from_eps(self, eps: Sequence) -> Weight:
        fw = self.eps_to_fw(eps)
        return Weight(self.fw_to_eps(fw), fw)

    def as_fw(self, w) -> tuple[int, ...]:
        """Fundamental-weight coordinates of a Weight or an int sequence."""
        fw = w.fw if isinstance(w, Weight) else tuple(int(c) for c in w)
        if len(fw) != self.nfw:
            raise LatticeMismatch(f"expected {self.nfw} fw-coordinates, got {len(fw)}")
        return fw

    # -------------------------------------------------------- user-facing data
    @property
    def simple_roots(self) -> list[Weight]:
        return [Weight(tuple(e), f) for e, f in zip(self._simple_eps, self._simple_fw)]

    @property
    def pos_roots(self) -> list[Weight]:
        return [Weight(tuple(self._root_coords_to_eps(rc)), fw)
                for rc, fw in zip(self._pos_root_coords, self._pos_roots_fw)]

    @property
    def fund_weights(self) -> list[Weight]:
        return [self.weight(tuple(int(i == j) for j in range(self.nfw))) for i in range(self.rank)]

    @property
    def rho_fw(self) -> tuple[int, ...]:
        return (1,) * self.rank + (0,) * self.torus_rank_extra

    @property
    def rho(self) -> Weight:
        return self.weight(self.rho_fw)

    @property
    def num_pos_roots(self) -> int:
        return len(self._pos_root_coords)

    @property
    def group_dim(self) -> int:
        return 2 * self.num_pos_roots + self.rank + self.torus_rank_extra

    # ----------------------------------------------------------- arithmetic
    def inner(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        """Invariant inner product of two fw-coordinate vectors."""
        return Fraction(self._inner_int(x, y), self._gram_den)

    def _inner_int(self, x, y) -> int:
        g = self._gram_int
        return sum(xi * sum(gij * yj for gij, yj in zip(g[i], y)) for i, xi in enumerate(x) if xi)

    def height(self, x: Sequence[int]) -> Fraction:
        """<rho^vee, x>: the sum of the simple-root coordinates of x."""
        return Fraction(sum(h * c for h, c in zip(self._height_int, x)), self._height_den)

    def is_dominant_fw(self, x: Sequence[int]) -> bool:
        return all(c >= 0 for c in x[: self.rank])

    def reflect(self, x: tuple[int, ...], i: int) -> tuple[int, ...]:
        c = x[i]
        if not c:
            return x
        row = self._simple_fw[i]
        return tuple(a - c * b for a, b in zip(x, row))

    def dominant_fw(self, x: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
        """Dominant Weyl conjugate of ``x`` and the parity (+1/-1) of the walk."""
        hit = self._dom_cache.get(x)
        if hit is not None:
            return hit
        y = x
        sign = 1
        rank = self.rank
        simple = self._simple_fw
        while True:
            for i in range(rank):
                c = y[i]
                if c < 0:
                    row = simple[i]
                    y = tuple(a - c * b for a, b in zip(y, row))
                    sign = -sign
                    break
            else:
                break
        res = (y, sign)
        if len(self._dom_cache) < 4_000_000:
            self._dom_cache[x] = res
        return res

    def orbit(self, x: tuple[int, ...]) -> list[tuple[int, ...]]:
        """Weyl orbit of a weight, by a reflection walk from its dominant conjugate."""
        start, _ = self.dominant_fw(tuple(x))
        seen = {start}
        stack = [start]
        while stack:
            y = stack.pop()
            for i in range(self.rank):
                if y[i] > 0:
                    z = self.reflect(y, i)
                    if z not in seen:
                        seen.add(z)
                        stack.append(z)
        return list(seen)

    def signed_rho_orbit(self) -> list[tuple[int, tuple[int, ...]]]:
        """Pairs (det w, w(rho)) over the Weyl orbit of rho."""
        return _signed_rho_orbit(self)

    def weyl_dim(self, x: Sequence[int]) -> int:
        num = 1
        den = 1
        for coeffs in self._coroot_coeffs:
            num *= sum(c * (xi + 1) for c, xi in zip(coeffs, x))
            den *= sum(coeffs)
        q, r = divmod(num, den)
        assert r == 0
        return q

    def dual_fw(self, x: tuple[int, ...]) -> tuple[int, ...]:
        """-w0(x): the dominant conjugate of -x (torus part negated)."""
        neg = tuple(-c for c in x)
        return self.dominant_fw(neg)[0]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def _signed_rho_orbit(d: RootDatum) -> list[tuple[int, tuple[int, ...]]]:
    rho = d.rho_fw
    out = {rho: 1}
    stack = [rho]
    while stack:
        y = stack.pop()
        s = out[y]
        for i in range(d.rank):
            if y[i] > 0:
                z = d.reflect(y, i)
                if z not in out:
                    out[z] = -s
                    stack.append(z)
    return sorted(((s, y) for y, s in out.items()), key=lambda p: p[1], reverse=True)


@lru_cache(maxsize=None)
def build_datum(spec: Sequence[tuple[str, int]] | tuple = (), torus_rank: int = 0) -> RootDatum:
    """Build (and memoize) the root datum of a product of simple factors and a torus.

    >>> build_datum((("B", 4),)).num_pos_roots
    16
    """
    return RootDatum(tuple(tuple(c) for c in spec), torus_rank)


def parse_datum(text: str) -> RootDatum:
    """Parse labels such as ``B4``, ``A2xA2`` or ``C3xT1``."""
    comps = []
    torus = 0
    for part in text.replace("*", "x").split("x"):
        part = part.strip().upper()
        if not part:
            continue
        fam, digits = part[0], part[1:]
        if not digits.isdigit():
            raise InvalidRank(f"cannot parse {part!r}")
        if fam == "T":
            torus += int(digits)
        else:
            comps.append((fam, int(digits)))
    return build_datum(tuple(comps), torus)


def is_dominant(d: RootDatum, w) -> bool:
    return d.is_dominant_fw(d.as_fw(w))


def dominant_representative(d: RootDatum, w, rho_shifted: bool = False) -> tuple[Weight, int]:
    """Dominant Weyl conjugate and the determinant of the walk.

    With ``rho_shifted`` the dot action is used: the walk is applied to
    ``w + rho`` and rho subtracted afterwards; sign 0 means ``w + rho`` lies
    on a wall.
    """
    x = d.as_fw(w)
    if not rho_shifted:
        y, s = d.dominant_fw(x)
        return d.weight(y), s
    shifted = tuple(a + b for a, b in zip(x, d.rho_fw))
    y, s = d.dominant_fw(shifted)
    if any(c == 0 for c in y[: d.rank]):
        s = 0
    return d.weight(tuple(a - b for a, b in zip(y, d.rho_fw))), s


def dual_weight(d: RootDatum, w) -> Weight:
    """The highest weight of the contragredient module, -w0(w)."""
    x = d.as_fw(w)
    if not d.is_dominant_fw(x):
        raise NotDominant(f"{x} is not dominant for {d.label}")
    return d.weight(d.dual_fw(x))


def datum_json(d: RootDatum) -> str:
    return json.dumps(d.to_json())


def slice_height(d: RootDatum, w) -> int:
    """Cutoff height of a weight: the sum of its fw-coordinates on the semisimple part."""
    return sum(d.as_fw(w)[:d.rank])


def dominant_slice(d: RootDatum, cutoff: int) -> list[tuple[int, ...]]:
    """Dominant weights of height at most ``cutoff``, ordered by height then lex.

    Torus coordinates are not enumerated; the slice only makes sense for
    semisimple data.
    """
    if d.torus_rank_extra:
        raise LatticeMismatch("slices are only defined for semisimple data")
    out = []

    def rec(prefix, left):
        if len(prefix) == d.rank:
            out.append(tuple(prefix))
            return
        for c in range(left + 1):
            rec(prefix + [c], left - c)

    rec([], cutoff)
    return sorted(out, key=lambda x: (sum(x), x))
