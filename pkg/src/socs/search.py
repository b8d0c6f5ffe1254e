"""Enumerate every solution with a fixed length ``N = c - a``.

Fixing ``N`` and the split ``ell = b - a`` turns ``P(a) + P(c) = 2 P(b)`` into
a quadratic in ``b``; each split contributes at most two roots.
"""
from __future__ import annotations

import os
from math import isqrt
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import SolutionTriple, below_balance_cap, is_perfect_square, is_socs_solution

# above this N the vectorised discriminant overflows int64
_NUMPY_MAX_N = 40_000
_CAP = 1 + 2 ** (1 / 3) + 2 ** (2 / 3)


@dataclass(frozen=True)
class FixedLengthQuery:
    N: int
    ell: int

    def __post_init__(self) -> None:
        if not 0 < self.ell < self.N:
            raise ValueError(f"split ell={self.ell} outside (0, {self.N})")


def discriminant(N: int, ell: int) -> int:
    """Reduced discriminant of the quadratic in ``b`` for split ``ell``."""
    return 3 * (
        -N ** 4 + 8 * N ** 3 * ell - 12 * N ** 2 * ell ** 2 + 8 * N * ell ** 3
        - 4 * ell ** 4 + N ** 2 - 4 * N * ell + 4 * ell ** 2
    )


def solve_split(q: FixedLengthQuery) -> list[SolutionTriple]:
    """All solutions with ``c - a = q.N`` and ``b - a = q.ell``."""
    N, ell = q.N, q.ell
    lead = 6 * (N - 2 * ell)
    if lead == 0:
        # linear residue 12 ell^2 b + 6 ell^2 = 0 has no positive root
        return []
    disc = discriminant(N, ell)
    if disc < 0 or not is_perfect_square(disc):
        return []
    root = isqrt(disc)
    base = -3 * N * N - 6 * ell * ell + 6 * N * ell - 3 * N + 6 * ell
    found = []
    for num in {base + root, base - root}:
        if num % lead:
            continue
        b = num // lead
        a, c = b - ell, b + N - ell
        if 0 < a + 1 < b < c:
            assert is_socs_solution(a, b, c), (a, b, c)
            found.append(SolutionTriple(a, b, c))
    return sorted(found)


def _square_disc(N: int, ell: int) -> bool:
    disc = discriminant(N, ell)
    return disc >= 0 and is_perfect_square(disc)


def _balanced_splits(N: int) -> range:
    """Splits with ``1 < ell/m < 1 + 2^(1/3) + 2^(2/3)``, where ``m = N - ell``."""
    lo = N // 2 + 1
    # the cap condition is monotone in ell: start from the float estimate and
    # settle the boundary exactly
    hi = max(lo, min(N, int(N * _CAP / (1 + _CAP))))
    while hi > lo and not below_balance_cap(hi - 1, N - hi + 1):
        hi -= 1
    while hi < N and below_balance_cap(hi, N - hi):
        hi += 1
    return range(lo, hi)


def _square_candidates(N: int, splits: range) -> list[int]:
    """Splits whose discriminant is a perfect square (vectorised prefilter)."""
    if len(splits) == 0:
        return []
    if N > _NUMPY_MAX_N:
        return [ell for ell in splits if _square_disc(N, ell)]
    ell = np.arange(splits.start, splits.stop, dtype=np.int64)
    m = N - ell
    d = ell - m
    # same polynomial as discriminant(), rewritten in (ell, m) to stay in range
    disc = 3 * (12 * ell * ell * m * m - d ** 4 + d * d)
    ok = disc >= 0
    r = np.rint(np.sqrt(np.where(ok, disc, 0).astype(np.float64))).astype(np.int64)
    hit = np.zeros_like(ok)
    for shift in (-1, 0, 1):
        rr = r + shift
        hit |= rr * rr == disc
    return [int(x) for x in ell[ok & hit]]


def solve_fixed_length(N: int, exhaustive: bool = False) -> list[SolutionTriple]:
    """Every solution with ``c - a == N``, sorted by ``a``.

    By default only balanced splits ``m < ell < 3.8473 m`` are examined; no
    solution exists outside them.  ``exhaustive=True`` scans every split
    ``1 <= ell < N`` with exact arithmetic, which is how that claim is checked.
    """
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    if exhaustive:
        splits = range(1, N)
    else:
        splits = _square_candidates(N, _balanced_splits(N))
    found = set()
    for ell in splits:
        found.update(solve_split(FixedLengthQuery(N, ell)))
    out = sorted(found, key=lambda t: t.a)
    assert len(out) <= 2 * (N - 1)
    return out


def _solve_range(bounds: tuple[int, int]) -> list[SolutionTriple]:
    lo, hi = bounds
    out = []
    for N in range(lo, hi):
        out.extend(solve_fixed_length(N))
    return out


def default_workers() -> int:
    env = os.environ.get("PYRAMIDAL_THREADS")
    if env:
        return max(1, int(env))
    return 1


def enumerate_up_to(X: int, workers: int | None = None) -> list[SolutionTriple]:
    """All solutions with ``c - a <= X``, ordered by ``(c - a, a)``."""
    if X < 2:
        raise ValueError(f"bound must be >= 2, got {X}")
    workers = default_workers() if workers is None else workers
    if workers <= 1 or X < 500:
        out = _solve_range((2, X + 1))
    else:
        # cost per N grows linearly, so equal-work edges go like sqrt
        pieces = 4 * workers
        edges = sorted({2, X + 1} | {max(2, int(X * (i / pieces) ** 0.5)) for i in range(1, pieces)})
        chunks = list(zip(edges[:-1], edges[1:]))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            out = [t for part in pool.map(_solve_range, chunks) for t in part]
    return sorted(out, key=SolutionTriple.sort_key)
