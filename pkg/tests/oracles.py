"""Independent reference computations for the tests.

Nothing here imports the engine: positive roots are written down from the
classical lists, characters of SL(n+1) come from semistandard tableaux, and
tensor products from convolving those weight multisets.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations


def classical_pos_roots(family: str, n: int) -> list[tuple[Fraction, ...]]:
    """Positive roots in epsilon-coordinates (n+1 coordinates for type A)."""
    dim = n + 1 if family == "A" else n

    def vec(pairs):
        v = [Fraction(0)] * dim
        for i, c in pairs:
            v[i] += c
        return tuple(v)

    roots = []
    if family == "A":
        return [vec([(i, 1), (j, -1)]) for i, j in combinations(range(dim), 2)]
    for i, j in combinations(range(n), 2):
        roots.append(vec([(i, 1), (j, -1)]))
        roots.append(vec([(i, 1), (j, 1)]))
    if family == "B":
        roots += [vec([(i, 1)]) for i in range(n)]
    elif family == "C":
        roots += [vec([(i, 2)]) for i in range(n)]
    return roots


def classical_rho(family: str, n: int) -> tuple[Fraction, ...]:
    roots = classical_pos_roots(family, n)
    return tuple(sum((r[i] for r in roots), Fraction(0)) / 2 for i in range(len(roots[0])))


def weyl_dim_eps(family: str, n: int, lam) -> int:
    """Weyl dimension formula from the explicit root list."""
    roots = classical_pos_roots(family, n)
    rho = classical_rho(family, n)
    lam = [Fraction(x) for x in lam] + [Fraction(0)] * (len(rho) - len(lam))
    num = den = Fraction(1)
    for a in roots:
        num *= sum((x + y) * z for x, y, z in zip(lam, rho, a))
        den *= sum(y * z for y, z in zip(rho, a))
    q = num / den
    assert q.denominator == 1
    return int(q)


# ----------------------------------------------------------- type A oracle
def ssyt_contents(shape, size: int) -> Counter:
    """Contents of semistandard tableaux of the given shape, entries 1..size."""
    shape = [p for p in shape if p]
    cells = [(r, c) for r, L in enumerate(shape) for c in range(L)]
    grid = {}
    out: Counter = Counter()

    def rec(idx):
        if idx == len(cells):
            cnt = [0] * size
            for v in grid.values():
                cnt[v - 1] += 1
            out[tuple(cnt)] += 1
            return
        r, c = cells[idx]
        lo = 1
        if c:
            lo = max(lo, grid[(r, c - 1)])
        if r:
            lo = max(lo, grid[(r - 1, c)] + 1)
        for v in range(lo, size + 1):
            grid[(r, c)] = v
            rec(idx + 1)
        grid.pop((r, c), None)

    rec(0)
    return out


def fw_to_shape(fw) -> list[int]:
    parts, acc = [], 0
    for c in reversed(fw):
        acc += c
        parts.append(acc)
    return list(reversed(parts))


def content_to_fw(cnt) -> tuple[int, ...]:
    return tuple(cnt[i] - cnt[i + 1] for i in range(len(cnt) - 1))


def sl_character(fw) -> Counter:
    """fw-weight -> multiplicity for the SL(n+1) irreducible of highest weight fw."""
    n = len(fw)
    out: Counter = Counter()
    for cnt, m in ssyt_contents(fw_to_shape(fw), n + 1).items():
        out[content_to_fw(cnt)] += m
    return out


def sl_tensor(lam, mu) -> dict[tuple[int, ...], int]:
    """Peel irreducibles off the convolved weight multiset."""
    a, b = sl_character(lam), sl_character(mu)
    prod: Counter = Counter()
    for x, m in a.items():
        for y, k in b.items():
            prod[tuple(p + q for p, q in zip(x, y))] += m * k
    result = {}
    n = len(lam)

    def height(w):
        # 2 <w, rho^vee>: positive on every simple root
        return sum((i + 1) * (n - i) * c for i, c in enumerate(w))

    while True:
        live = [w for w, m in prod.items() if m]
        if not live:
            break
        dom = [w for w in live if all(c >= 0 for c in w)]
        top = max(dom, key=lambda w: (height(w), w))
        m = prod[top]
        assert m > 0
        result[top] = m
        for w, k in sl_character(top).items():
            prod[w] -= m * k
        prod = Counter({w: v for w, v in prod.items() if v})
        assert all(v > 0 for v in prod.values())
    assert len(lam) == n
    return result
