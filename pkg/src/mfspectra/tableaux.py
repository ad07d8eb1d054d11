"""Littlewood-Richardson fillings for SL(n+1) tensor products.

Reading words run right to left along each row, rows taken top to bottom.
SL(n+1) partitions are normalized by deleting full columns of height n+1.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .branchrules import GTChain, gt_chains
from .errors import InvalidChain, TooManyRows


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        p = [int(x) for x in parts]
        if any(x < 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
            raise ValueError(f"{p} is not a partition")
        while p and p[-1] == 0:
            p.pop()
        object.__setattr__(self, "parts", tuple(p))

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i] if i < len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def contains(self, other: "Partition") -> bool:
        return all(self[i] >= other[i] for i in range(len(other)))

    def padded(self, rows: int) -> tuple[int, ...]:
        return tuple(self[i] for i in range(rows))


def as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


@dataclass(frozen=True)
class SkewFilling:
    """Entries of outer/inner, row by row, left to right (skew cells only)."""

    outer: Partition
    inner: Partition
    entries: tuple[tuple[int, ...], ...]

    def cell(self, r: int, c: int) -> int | None:
        start = self.inner[r]
        if r < len(self.entries) and start <= c < start + len(self.entries[r]):
            return self.entries[r][c - start]
        return None

    def reading_word(self) -> list[int]:
        return [v for row in self.entries for v in reversed(row)]

    def content(self) -> Partition | None:
        cnt = Counter(self.reading_word())
        if not cnt:
            return Partition()
        top = max(cnt)
        parts = [cnt.get(i, 0) for i in range(1, top + 1)]
        try:
            return Partition(parts)
        except ValueError:
            return None

    def is_semistandard(self) -> bool:
        if not self.inner.contains(Partition()) or not self.outer.contains(self.inner):
            return False
        for r in range(len(self.outer)):
            row = self.entries[r] if r < len(self.entries) else ()
            if len(row) != self.outer[r] - self.inner[r]:
                return False
            if any(v < 1 for v in row) or any(a > b for a, b in zip(row, row[1:])):
                return False
            for c in range(self.inner[r], self.outer[r]):
                above = self.cell(r - 1, c) if r else None
                if above is not None and above >= self.cell(r, c):
                    return False
        return True

    def is_lattice(self) -> bool:
        cnt = Counter()
        for v in self.reading_word():
            cnt[v] += 1
            if v > 1 and cnt[v] > cnt[v - 1]:
                return False
        return True

    def is_lr(self) -> bool:
        return self.is_semistandard() and self.is_lattice()

    def ascii(self) -> str:
        lines = []
        for r in range(len(self.outer)):
            cells = []
            for c in range(self.outer[r]):
                v = self.cell(r, c)
                cells.append("." if v is None else str(v))
            lines.append(" ".join(cells))
        return "\n".join(lines)


def _lr_fillings(lam: Partition, mu: Partition, nu: Partition, limit: int | None = None):
    """Generate LR fillings of lam/mu with content nu."""
    rows = len(lam)
    target = [nu[i] for i in range(len(nu))]
    if lam.size != mu.size + nu.size or not lam.contains(mu):
        return
    grid: list[list[int]] = [[0] * lam[r] for r in range(rows)]
    cells = [(r, c) for r in range(rows) for c in range(lam[r] - 1, mu[r] - 1, -1)]
    cnt = [0] * (len(target) + 2)
    found = 0

    def rec(idx):
        nonlocal found
        if limit is not None and found >= limit:
            return
        if idx == len(cells):
            found += 1
            entries = tuple(tuple(grid[r][mu[r]:lam[r]]) for r in range(rows))
            yield SkewFilling(lam, mu, entries)
            return
        r, c = cells[idx]
        hi = len(target)
        if c + 1 < lam[r]:
            hi = min(hi, grid[r][c + 1])
        lo = 1
        if r > 0 and c >= mu[r - 1]:
            lo = grid[r - 1][c] + 1
        # lattice: an entry v > r + 1 can never sit in row r
        hi = min(hi, r + 1)
        for v in range(lo, hi + 1):
            if cnt[v] >= target[v - 1]:
                continue
            if v > 1 and cnt[v] + 1 > cnt[v - 1]:
                continue
            cnt[v] += 1
            grid[r][c] = v
            yield from rec(idx + 1)
            cnt[v] -= 1
        grid[r][c] = 0

    yield from rec(0)


def lr_coefficient(lam, mu, nu) -> int:
    """c^lam_{mu,nu}: LR fillings of lam/mu with content nu.

    >>> lr_coefficient((2, 1), (1,), (1, 1))
    1
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    return sum(1 for _ in _lr_fillings(lam, mu, nu))


def lr_fillings(lam, mu, nu) -> list[SkewFilling]:
    return list(_lr_fillings(as_partition(lam), as_partition(mu), as_partition(nu)))


def _partitions_containing(inner: Partition, size: int, rows: int):
    """Partitions of ``size`` with at most ``rows`` rows containing ``inner``."""
    def rec(i, left, cap, prefix):
        if i == rows:
            if left == 0:
                yield Partition(prefix)
            return
        lo = inner[i]
        for v in range(min(cap, left), lo - 1, -1):
            yield from rec(i + 1, left - v, v, prefix + [v])

    yield from rec(0, size, size, [])


def sl_normalize(p: Partition, n: int) -> Partition:
    """Delete full columns of height n+1."""
    if len(p) > n + 1:
        raise TooManyRows(f"{p.parts} has more than {n + 1} rows")
    drop = p[n]
    return Partition(x - drop for x in p.padded(n + 1))


def tensor_via_lr(n: int, lam, mu) -> dict[Partition, int]:
    """V_lam (x) V_mu for SL(n+1), partitions normalized mod full columns."""
    lam, mu = as_partition(lam), as_partition(mu)
    for p in (lam, mu):
        if len(p) > n + 1:
            raise TooManyRows(f"{p.parts} has more than {n + 1} rows")
    out: Counter = Counter()
    for nu in _partitions_containing(lam, lam.size + mu.size, n + 1):
        c = lr_coefficient(nu, lam, mu)
        if c:
            out[sl_normalize(nu, n)] += c
    return dict(sorted(out.items(), key=lambda kv: kv[0].parts))


def partition_to_fw(p, n: int) -> tuple[int, ...]:
    p = as_partition(p)
    if len(p) > n + 1:
        raise TooManyRows(f"{p.parts} has more than {n + 1} rows")
    q = p.padded(n + 1)
    return tuple(q[i] - q[i + 1] for i in range(n))


def fw_to_partition(fw: Sequence[int]) -> Partition:
    parts = []
    acc = 0
    for c in reversed(fw):
        acc += c
        parts.append(acc)
    return Partition(reversed(parts))


# ---------------------------------------------------- the bottom of SL x SL
def proof_shapes(k: int, ks: Sequence[int]) -> tuple[Partition, Partition, Partition]:
    """(lam, mu, nu) attached to a chain: mu (x) nu should contain lam = k omega_1."""
    chain = GTChain(k, tuple(ks))
    n = len(chain.ks)
    if n < 1:
        raise InvalidChain("empty chain")
    k1, kn = chain.ks[0], chain.ks[-1]
    mu = [kn] + [kn - chain.ks[i] for i in range(n - 1)] + [0]
    nu = [k - k1] + [chain.ks[i] - k1 for i in range(n - 1, 0, -1)] + [0]
    lam = [kn - k1 + k] + [kn - k1] * n
    return Partition(lam), Partition(mu), Partition(nu)


def proof_filling(k: int, ks: Sequence[int]) -> SkewFilling:
    """The explicit filling of lam/mu: 1s along the first row, and in the
    lower rows each column numbered 2, 3, ... from its top box down."""
    lam, mu, _ = proof_shapes(k, ks)
    rows = len(ks) + 1
    lp, mp = lam.padded(rows), mu.padded(rows)
    grid = [[0] * lp[r] for r in range(rows)]
    for c in range(mp[0], lp[0]):
        grid[0][c] = 1
    width = lp[rows - 1]
    for c in range(width):
        top = next(r for r in range(1, rows) if mp[r] <= c < lp[r])
        for r in range(top, rows):
            grid[r][c] = 2 + r - top
    entries = tuple(tuple(grid[r][mp[r]:lp[r]]) for r in range(rows))
    return SkewFilling(lam, mu, entries)


def proof_count_discrepancies(k: int, ks: Sequence[int]) -> list[str]:
    """Compare the number of 3s with the count k_n - k_2 given in the narrative.

    The construction itself places k_{n-1} - k_1 threes (the third part of nu);
    the two agree for n = 2, 3 only on special chains.
    """
    fill = proof_filling(k, ks)
    threes = fill.reading_word().count(3)
    n = len(ks)
    if n < 3:
        return []
    stated = ks[-1] - ks[1]
    if threes != stated:
        return [f"chain {tuple(ks)}, k={k}: filling has {threes} threes, narrative count k_n-k_2={stated}"]
    return []


def column_removal_coefficient(k: int, ks: Sequence[int], r: Sequence[int]) -> int | None:
    """LR coefficient after removing r_i columns of height i from mu and of
    height n+1-i from nu (subtracting sum r_i sigma_i), with lam shortened by
    sum r_i full columns.  None if mu' or nu' is not a partition."""
    lam, mu, nu = proof_shapes(k, ks)
    n = len(ks)
    fmu = list(partition_to_fw(mu, n))
    fnu = list(partition_to_fw(nu, n))
    for i, ri in enumerate(r):
        fmu[i] -= ri
        fnu[n - 1 - i] -= ri
    if min(fmu) < 0 or min(fnu) < 0:
        return None
    mu2, nu2 = fw_to_partition(fmu), fw_to_partition(fnu)
    total = mu2.size + nu2.size
    c, rem = divmod(total - k, n + 1)
    if rem or c < 0:
        return 0
    lam2 = Partition([k + c] + [c] * n)
    return lr_coefficient(lam2, mu2, nu2)


def bottom_chains(n: int, k: int) -> list[GTChain]:
    return gt_chains(n, k)
