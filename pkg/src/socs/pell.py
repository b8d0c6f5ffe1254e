"""Continued fractions of sqrt(D) and the Pell generator.

A base solution ``(a, b, c)`` determines a generalized Pell equation
``u^2 - A v^2 = B``.  Multiplying its known solution ``(u0, v0)`` by powers of
the fundamental unit ``p + q sqrt(A)`` yields an infinite family of triples
on the plane through ``(a, b, c)`` and the diagonal ``x = y = z``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Sequence

from .core import (
    InvariantError,
    SolutionTriple,
    compute_A,
    compute_B,
    is_perfect_square,
    pyramidal,
)


@dataclass(frozen=True)
class ContinuedFractionExpansion:
    a0: int
    period: tuple[int, ...]

    def __str__(self) -> str:
        return f"[{self.a0}; {', '.join(map(str, self.period))}]"


@dataclass(frozen=True)
class PellUnit:
    p: int
    q: int
    D: int


@dataclass(frozen=True)
class PellContext:
    base: SolutionTriple
    A: int
    B: int
    u0: int
    v0: int
    unit: PellUnit
    period_length: int


@dataclass(frozen=True)
class GeneratedSolution:
    n: int
    a: int
    b: int
    c: int
    valid: bool

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def _check_nonsquare(D: int) -> None:
    if D <= 0 or is_perfect_square(D):
        raise ValueError(f"D={D} must be a positive non-square")


def pqa_states(D: int):
    """Yield ``(m, d, a)`` from the PQa recurrence for sqrt(D), without end."""
    _check_nonsquare(D)
    a0 = isqrt(D)
    m, d, a = 0, 1, a0
    while True:
        yield m, d, a
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d


def cf_sqrt(D: int) -> ContinuedFractionExpansion:
    """Periodic continued fraction of sqrt(D) for a positive non-square D."""
    states = pqa_states(D)
    _, _, a0 = next(states)
    period = []
    first = None
    for m, d, a in states:
        if first is None:
            first = (m, d)
        elif (m, d) == first:
            break
        period.append(a)
    assert period[-1] == 2 * a0
    return ContinuedFractionExpansion(a0, tuple(period))


def convergents(a0: int, quotients):
    """Yield ``(h, k)`` for the convergents of ``[a0; quotients...]``."""
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    yield h, k
    for a in quotients:
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        yield h, k


def _quotient_product(qs: Sequence[int], lo: int, hi: int) -> tuple[int, int, int, int]:
    """Product of ``[[a, 1], [1, 0]]`` over ``qs[lo:hi]``, split in halves."""
    if hi - lo == 1:
        return (qs[lo], 1, 1, 0)
    mid = (lo + hi) // 2
    a, b, c, d = _quotient_product(qs, lo, mid)
    e, f, g, h = _quotient_product(qs, mid, hi)
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def last_convergent(a0: int, quotients: Sequence[int]) -> tuple[int, int]:
    """Final convergent of ``[a0; quotients...]``.

    Same value as the last item of ``convergents``, but balanced products keep
    periods of several hundred thousand quotients tractable.
    """
    if not quotients:
        return a0, 1
    a, _, c, _ = _quotient_product(quotients, 0, len(quotients))
    return a0 * a + c, a


def fundamental_unit(D: int) -> PellUnit:
    """Minimal ``(p, q)`` with ``p^2 - D q^2 = 1`` and ``q >= 1``."""
    cf = cf_sqrt(D)
    r = len(cf.period)
    # the convergent just before the end of the period solves p^2 - D q^2 = (-1)^r
    quotients = cf.period[:-1] if r % 2 == 0 else cf.period + cf.period[:-1]
    p, q = last_convergent(cf.a0, quotients)
    if p * p - D * q * q != 1:
        raise InvariantError(f"convergent ({p}, {q}) does not solve p^2 - {D} q^2 = 1")
    return PellUnit(p, q, D)


def unit_power(u: PellUnit, n: int) -> tuple[int, int]:
    """``(p_n, q_n)`` with ``p_n + q_n sqrt(D) = (p + q sqrt(D))^n``."""
    p, q = (u.p, u.q) if n >= 0 else (u.p, -u.q)
    n = abs(n)
    rp, rq = 1, 0
    while n:
        if n & 1:
            rp, rq = rp * p + u.D * rq * q, rp * q + rq * p
        p, q = p * p + u.D * q * q, 2 * p * q
        n >>= 1
    return rp, rq


def pell_u(base: SolutionTriple, y: int, z: int) -> int:
    """The ``u`` coordinate of a point ``(., y, z)`` on the base plane."""
    ell, m = base.gaps.ell, base.gaps.m
    return (
        4 * (m ** 3 - ell ** 3) * z
        + (4 * ell ** 3 + 6 * ell ** 2 * m + 2 * m ** 3) * y
        + 3 * ell ** 2 * m + 3 * m ** 3
    )


def pell_context(base: SolutionTriple) -> PellContext:
    a, b, c = base.as_tuple()
    A = compute_A(base.gaps)
    B = compute_B(base.gaps)
    u0 = (c - b) * (
        4 * a ** 3 + 3 * a ** 2 - 6 * a ** 2 * b - 6 * a * b + 4 * b ** 3 + 6 * b ** 2
        - 6 * b * c ** 2 - 6 * b * c + 4 * c ** 3 + 3 * c ** 2
    )
    v0 = 2 * b + 1
    if u0 != pell_u(base, b, c):
        raise InvariantError(f"u0 for {base} disagrees with the change of variables")
    if u0 * u0 - A * v0 * v0 != B:
        raise InvariantError(f"u0^2 - A v0^2 != B for {base}")
    unit = fundamental_unit(A)
    period = len(cf_sqrt(A).period)
    return PellContext(base, A, B, u0, v0, unit, period)


def _coefficients(base: SolutionTriple) -> tuple[tuple[int, int], ...]:
    """Twice the ``p_n`` and ``q_n`` coefficients of ``a_n``, ``b_n``, ``c_n``."""
    a, b, c = base.as_tuple()
    qa = (b - c) * (
        2 * a ** 3 + 3 * a ** 2 - 12 * a * b ** 2 - 12 * a * b + 6 * a * c ** 2 + 6 * a * c
        + 8 * b ** 3 + 6 * b ** 2 - 4 * c ** 3 - 3 * c ** 2
    )
    qb = (b - c) * (
        -4 * a ** 3 + 6 * a ** 2 * b - 3 * a ** 2 + 6 * a * b - 4 * b ** 3 - 6 * b ** 2
        + 6 * b * c ** 2 + 6 * b * c - 4 * c ** 3 - 3 * c ** 2
    )
    qc = (b - c) * (
        -4 * a ** 3 + 6 * a ** 2 * c - 3 * a ** 2 + 6 * a * c + 8 * b ** 3 - 12 * b ** 2 * c
        + 6 * b ** 2 - 12 * b * c + 2 * c ** 3 + 3 * c ** 2
    )
    return ((1 + 2 * a, qa), (1 + 2 * b, qb), (1 + 2 * c, qc))


def solution_plane(t: SolutionTriple) -> tuple[int, int, int]:
    """Coefficients of ``(b-c)x + (c-a)y + (a-b)z = 0``, reduced.

    Divided by their gcd and signed so the ``y`` coefficient is negative.
    """
    a, b, c = t.as_tuple()
    coeffs = (b - c, c - a, a - b)
    g = gcd(*coeffs)
    coeffs = tuple(x // g for x in coeffs)
    if coeffs[1] > 0:
        coeffs = tuple(-x for x in coeffs)
    return coeffs


def _half(x: int, what: str) -> int:
    if x % 2:
        raise InvariantError(f"{what} is not integral")
    return x // 2


def generate(base: SolutionTriple, n_from: int, n_to: int,
             context: PellContext | None = None) -> list[GeneratedSolution]:
    """Orbit of ``base`` under the fundamental unit for ``n_from <= n <= n_to``.

    Entries that fail ``0 < a_n + 1 < b_n < c_n`` are kept with
    ``valid=False``.  Every entry is checked against the pyramidal identity,
    the base plane and the parity of ``c - a``.
    """
    if n_from > n_to:
        raise ValueError("n_from must not exceed n_to")
    ctx = context or pell_context(base)
    A = ctx.A
    (Pa, Qa), (Pb, Qb), (Pc, Qc) = _coefficients(base)
    plane = solution_plane(base)
    parity = (base.c - base.a) % 2
    out = []
    for n in range(n_from, n_to + 1):
        pn, qn = unit_power(ctx.unit, n)
        an = _half(-1 + Pa * pn + Qa * qn, f"a_{n}")
        bn = _half(-1 + Pb * pn + Qb * qn, f"b_{n}")
        cn = _half(-1 + Pc * pn + Qc * qn, f"c_{n}")
        if pyramidal_signed(an) + pyramidal_signed(cn) != 2 * pyramidal_signed(bn):
            raise InvariantError(f"n={n}: ({an}, {bn}, {cn}) misses P_a + P_c = 2 P_b")
        if plane[0] * an + plane[1] * bn + plane[2] * cn != 0:
            raise InvariantError(f"n={n}: ({an}, {bn}, {cn}) is off the base plane")
        if (cn - an) % 2 != parity:
            raise InvariantError(f"n={n}: parity of c - a changed")
        # cross-check against the Pell pair (u_n, v_n) = (u0 + v0 sqrt A)(p_n + q_n sqrt A)
        un = ctx.u0 * pn + A * ctx.v0 * qn
        vn = ctx.u0 * qn + ctx.v0 * pn
        if vn != 2 * bn + 1 or un != pell_u(base, bn, cn):
            raise InvariantError(f"n={n}: closed form disagrees with the Pell pair")
        out.append(GeneratedSolution(n, an, bn, cn, 0 < an + 1 < bn < cn))
    return out


def pyramidal_signed(n: int) -> int:
    """``n(n+1)(2n+1)/6`` for any integer, as used on the full surface."""
    if n >= 0:
        return pyramidal(n)
    return n * (n + 1) * (2 * n + 1) // 6
