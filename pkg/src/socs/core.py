"""Exact integer arithmetic for sums of consecutive squares.

A triple ``(a, b, c)`` with ``0 < a + 1 < b < c`` solves the problem when

    (a+1)^2 + ... + b^2 == (b+1)^2 + ... + c^2,

or equivalently ``P(a) + P(c) == 2 * P(b)`` for the square pyramidal numbers
``P(n) = 1^2 + ... + n^2``.  Everything here works on Python ints and never
rounds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional


class InvariantError(AssertionError):
    """An identity that must hold for every valid solution did not."""


def pyramidal(n: int) -> int:
    """Return ``1^2 + 2^2 + ... + n^2``."""
    if n < 0:
        raise ValueError(f"pyramidal number undefined for n={n}")
    # n(n+1)(2n+1) is always divisible by 6
    return n * (n + 1) * (2 * n + 1) // 6


def integer_sqrt(n: int) -> int:
    if n < 0:
        raise ValueError(f"integer_sqrt of negative number {n}")
    return math.isqrt(n)


# squares modulo 64 and 63 give a cheap rejection before the full isqrt
_SQ64 = frozenset(i * i % 64 for i in range(64))
_SQ63 = frozenset(i * i % 63 for i in range(63))


def is_perfect_square(n: int) -> bool:
    if n < 0:
        raise ValueError(f"is_perfect_square of negative number {n}")
    if n & 63 not in _SQ64 or n % 63 not in _SQ63:
        return False
    r = math.isqrt(n)
    return r * r == n


def is_socs_solution(a: int, b: int, c: int) -> bool:
    """True iff ``0 < a+1 < b < c`` and ``P(a) + P(c) == 2 P(b)``."""
    if not 0 < a + 1 < b < c:
        return False
    return pyramidal(a) + pyramidal(c) == 2 * pyramidal(b)


@dataclass(frozen=True, order=True)
class SolutionTriple:
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if not 0 < self.a + 1 < self.b < self.c:
            raise ValueError(f"{self.as_tuple()} violates 0 < a+1 < b < c")
        if pyramidal(self.a) + pyramidal(self.c) != 2 * pyramidal(self.b):
            raise ValueError(f"{self.as_tuple()} violates P_a + P_c = 2 P_b")

    @property
    def N(self) -> int:
        """Number of sides of any polygon built from this triple."""
        return self.c - self.a

    @property
    def gaps(self) -> "GapPair":
        return GapPair(self.b - self.a, self.c - self.b)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def sort_key(self) -> tuple[int, int]:
        return (self.c - self.a, self.a)

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


@dataclass(frozen=True)
class GapPair:
    """``ell = b - a`` and ``m = c - b``."""

    ell: int
    m: int

    def __post_init__(self) -> None:
        if self.ell <= 0 or self.m <= 0:
            raise ValueError(f"gaps must be positive, got ell={self.ell}, m={self.m}")


def parameterized_solution(k: int) -> SolutionTriple:
    """The one-parameter family ``(2k^2 + k - 1, 2k^2 + 2k, 2k^2 + 3k)``."""
    if k < 1:
        raise ValueError(f"parameter k must be >= 1, got {k}")
    return SolutionTriple(2 * k * k + k - 1, 2 * k * k + 2 * k, 2 * k * k + 3 * k)


def classify_parameterized(t: SolutionTriple) -> Optional[int]:
    """Return ``k`` if ``t`` belongs to the parameterized family, else None."""
    k = t.c - t.b
    if (t.a, t.b, t.c) == (2 * k * k + k - 1, 2 * k * k + 2 * k, 2 * k * k + 3 * k):
        return k
    return None


def compute_A(g: GapPair) -> int:
    """``3 m^2 (12 ell^2 m^2 - (m - ell)^4)``, the Pell coefficient."""
    ell, m = g.ell, g.m
    if ell == m:
        raise InvariantError("ell == m cannot come from a valid solution")
    return 3 * m * m * (12 * ell * ell * m * m - (m - ell) ** 4)


def compute_B(g: GapPair) -> int:
    """``4 m^2 (m - ell)(m^3 - ell^3)``, the Pell right-hand side."""
    ell, m = g.ell, g.m
    if ell == m:
        raise InvariantError("ell == m cannot come from a valid solution")
    return 4 * m * m * (m - ell) * (m ** 3 - ell ** 3)


def balance_ratio(t: SolutionTriple) -> Fraction:
    g = t.gaps
    return Fraction(g.ell, g.m)


def below_balance_cap(ell: int, m: int) -> bool:
    """Exact test of ``ell/m < 1 + 2^(1/3) + 2^(2/3)``.

    The cap is the unique real root of ``s^3 - 3s^2 - 3s - 1``, which is
    negative on ``(1, cap)``; clearing denominators keeps it in integers.
    """
    return ell ** 3 - 3 * ell * ell * m - 3 * ell * m * m - m ** 3 < 0


def check_invariants(t: SolutionTriple) -> None:
    """Raise InvariantError unless the balance and Pell-coefficient claims hold.

    Checks ``1 < ell/m < 1 + 2^(1/3) + 2^(2/3)``, ``12 ell^2 m^2 > (ell - m)^4``,
    ``A > 0`` and that ``A`` is not a perfect square.
    """
    ell, m = t.gaps.ell, t.gaps.m
    if not ell > m:
        raise InvariantError(f"{t}: ell/m = {ell}/{m} is not > 1")
    if not below_balance_cap(ell, m):
        raise InvariantError(f"{t}: ell/m = {ell}/{m} exceeds 1 + 2^(1/3) + 2^(2/3)")
    if not 12 * ell * ell * m * m > (ell - m) ** 4:
        raise InvariantError(f"{t}: 12 ell^2 m^2 <= (ell - m)^4")
    A = compute_A(t.gaps)
    if A <= 0:
        raise InvariantError(f"{t}: A = {A} is not positive")
    if is_perfect_square(A):
        raise InvariantError(f"{t}: A = {A} is a perfect square")
