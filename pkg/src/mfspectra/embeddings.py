"""Concrete weight maps for the subgroups used in the examples.

Sp2 is always represented as A1: an Sp2 epsilon-coordinate e becomes the
sum-zero pair (e/2, -e/2), so the Sp2 fundamental weight is the A1 one.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .charcalc import EmbeddingMap
from .errors import InvalidRank
from .rootdata import RootDatum, _solve, build_datum

HALF = Fraction(1, 2)

# the twist of SO8 exchanging alpha_1 and alpha_3, in epsilon-coordinates
TAU = tuple(tuple(HALF * v for v in row) for row in
            ((1, 1, 1, -1), (1, 1, -1, 1), (1, -1, 1, 1), (-1, 1, 1, 1)))


def _eye(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]


def apply_matrix(mat, v) -> tuple[Fraction, ...]:
    return tuple(sum((Fraction(a) * Fraction(b) for a, b in zip(row, v)), Fraction(0)) for row in mat)


def diagram_automorphism(d: RootDatum, perm: dict[int, int]) -> tuple[tuple[Fraction, ...], ...]:
    """Epsilon-matrix of the lattice map sending alpha_i to alpha_perm(i).

    Only for data whose simple roots span the epsilon space (B, C, D).
    Indices are 0-based; unlisted nodes are fixed.
    """
    simple = [list(r.eps) for r in d.simple_roots]
    n = len(simple)
    if n != d.neps:
        raise ValueError("simple roots must span the epsilon space")
    images = [simple[perm.get(i, i)] for i in range(n)]
    # row r of A satisfies <A_r, alpha_i> = (image of alpha_i)_r for every i
    rows = [tuple(_solve(simple, [images[i][r] for i in range(n)])) for r in range(n)]
    return tuple(rows)


def weyl_reflection_matrix(d: RootDatum, i: int) -> tuple[tuple[Fraction, ...], ...]:
    """Epsilon-matrix of the simple reflection s_i."""
    a = d.simple_roots[i].eps
    aa = sum(x * x for x in a)
    n = d.neps
    return tuple(tuple(Fraction(int(r == c)) - 2 * a[r] * a[c] / aa for c in range(n))
                 for r in range(n))


@lru_cache(maxsize=None)
def b_to_d(n: int) -> EmbeddingMap:
    """SO(2n) inside SO(2n+1), epsilon_i -> epsilon_i."""
    return EmbeddingMap(build_datum((("D", n),)), build_datum((("B", n),)), _eye(n),
                        name=f"B{n}:D{n}")


@lru_cache(maxsize=None)
def d_to_b(n: int) -> EmbeddingMap:
    """SO(2n-1) inside SO(2n), dropping the last epsilon coordinate."""
    mat = _eye(n)[:-1]
    return EmbeddingMap(build_datum((("B", n - 1),)), build_datum((("D", n),)), mat,
                        name=f"D{n}:B{n - 1}")


def twist_variants() -> dict[str, tuple]:
    """The three D4 twists giving the Spin7 branching."""
    d4 = build_datum((("D", 4),))
    return {
        "tau": TAU,
        "a1<->a4": diagram_automorphism(d4, {0: 3, 3: 0}),
        "tau*s2": tuple(map(tuple, _matmul(TAU, weyl_reflection_matrix(d4, 1)))),
    }


@lru_cache(maxsize=None)
def d4_to_b3_twisted(variant: str = "tau") -> EmbeddingMap:
    base = d_to_b(4)
    return EmbeddingMap(base.source, base.target, base.matrix, twist=twist_variants()[variant],
                        name=f"D4:B3[{variant}]")


@lru_cache(maxsize=None)
def so9_spin7() -> EmbeddingMap:
    """Spin7 in SO8 in SO9: drop the last coordinate after the tau twist."""
    drop = [list(r) for r in _eye(4)[:3]]
    mat = _matmul(drop, [list(r) for r in TAU])
    return EmbeddingMap(build_datum((("B", 3),)), build_datum((("B", 4),)), mat, name="so9-spin7")


def sp_component(r: int) -> tuple[str, int] | None:
    """Root-datum component for Sp(2r); Sp2 is stored as A1."""
    if r < 0:
        raise InvalidRank(f"Sp({2 * r}) is not defined")
    if r == 0:
        return None
    return ("C", r) if r >= 2 else ("A", 1)


def _sp_rows(coeffs: list[list[Fraction]], r: int) -> list[list[Fraction]]:
    """Rows for an Sp(2r) block whose epsilon-coordinates are the given linear forms."""
    if r == 1:
        (form,) = coeffs
        return [[c * HALF for c in form], [-c * HALF for c in form]]
    return coeffs


def _group_eps_count(r: int) -> int:
    return 2 if r == 1 else r


def sp_group(r: int) -> RootDatum:
    comp = sp_component(r)
    return build_datum((comp,))


def _sp_eps_forms(r: int, offset: int, total: int) -> list[list[Fraction]]:
    """Linear forms reading the r Sp-epsilon coordinates of a factor stored at ``offset``."""
    if r == 1:
        # A1 storage (e/2, -e/2): e = x0 - x1
        f = [Fraction(0)] * total
        f[offset] = Fraction(1)
        f[offset + 1] = Fraction(-1)
        return [f]
    forms = []
    for i in range(r):
        f = [Fraction(0)] * total
        f[offset + i] = Fraction(1)
        forms.append(f)
    return forms


@lru_cache(maxsize=None)
def sp_rank_one(n: int) -> EmbeddingMap:
    """Sp(2n-2) x Sp2 inside Sp(2n); the Sp2 factor sits on epsilon_1 (listed last)."""
    if n < 2:
        raise InvalidRank("need n >= 2")
    g = sp_group(n)
    total = g.neps
    forms = _sp_eps_forms(n, 0, total)
    rows = _sp_rows(forms[1:], n - 1) + _sp_rows(forms[:1], 1)
    h = build_datum(tuple(c for c in (sp_component(n - 1), ("A", 1)) if c))
    return EmbeddingMap(h, g, rows, name=f"Sp{2 * n}:Sp{2 * n - 2}xSp2")


@lru_cache(maxsize=None)
def spsp(m: int, n: int) -> EmbeddingMap:
    """Sp(2m-2) x Sp2 x Sp(2n-2) inside Sp(2m) x Sp(2n), Sp2 diagonal on the epsilon_1's."""
    g = build_datum((sp_component(m), sp_component(n)))
    total = g.neps
    xs = _sp_eps_forms(m, 0, total)
    ys = _sp_eps_forms(n, _group_eps_count(m), total)
    diag = [a + b for a, b in zip(xs[0], ys[0])]
    rows = _sp_rows(xs[1:], m - 1) + _sp_rows([diag], 1) + _sp_rows(ys[1:], n - 1)
    h = build_datum(tuple(c for c in (sp_component(m - 1), ("A", 1), sp_component(n - 1)) if c))
    return EmbeddingMap(h, g, rows, name=f"spsp({m},{n})")


@lru_cache(maxsize=None)
def sl_diagonal(n: int) -> EmbeddingMap:
    """SL(n+1) inside SL(n+1) x SL(n+1) diagonally (standard B x B chamber)."""
    g = build_datum((("A", n), ("A", n)))
    h = build_datum((("A", n),))
    m = n + 1
    rows = [[Fraction(int(j == i or j == i + m)) for j in range(2 * m)] for i in range(m)]
    return EmbeddingMap(h, g, rows, name=f"sl{m}-diag")
