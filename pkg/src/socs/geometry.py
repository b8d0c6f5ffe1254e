"""Arithmetic polygons built from solution triples, and their validation.

Vertices are floating point; every vertex also has an exact squared distance
from ``O`` (a difference of pyramidal numbers), which the validator uses as an
integer anchor for the float coordinates.

Sides are numbered by their length.  Traversal runs ``O -> (side a+1) -> ...
-> (side c) -> O``; vertex ``k`` sits between sides ``a+k`` and ``a+k+1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .core import SolutionTriple, pyramidal

Point2 = tuple[float, float]

LENGTH_RTOL = 1e-9
ANGLE_TOL = 1e-6


@dataclass
class PolygonPath:
    vertices: list[Point2]
    side_targets: list[int]
    origin_index: int = 0
    closure_gap: float = 0.0
    turns: Optional[tuple[bool, ...]] = None

    def __len__(self) -> int:
        return len(self.vertices)

    def sides(self):
        n = len(self.vertices)
        for i in range(n):
            yield self.vertices[i], self.vertices[(i + 1) % n]


@dataclass
class PolygonReport:
    max_side_residual: float
    max_perp_residual: float
    max_radius_residual: float
    closure_residual: float
    degenerate_vertices: list[int]
    self_intersecting: bool
    mu: int
    convex: bool
    interior_angles: list[float] = field(repr=False, default_factory=list)

    @property
    def is_arithmetic(self) -> bool:
        """Sides, perpendicular diagonals and non-degeneracy all hold."""
        return (
            self.max_side_residual < LENGTH_RTOL
            and self.max_perp_residual < LENGTH_RTOL
            and self.closure_residual < LENGTH_RTOL
            and not self.degenerate_vertices
        )

    def as_dict(self) -> dict:
        return {
            "max_side_residual": self.max_side_residual,
            "max_perp_residual": self.max_perp_residual,
            "max_radius_residual": self.max_radius_residual,
            "closure_residual": self.closure_residual,
            "degenerate_vertices": list(self.degenerate_vertices),
            "self_intersecting": self.self_intersecting,
            "mu": self.mu,
            "convex": self.convex,
        }


def exact_radius_sq(t: SolutionTriple, k: int) -> int:
    """Exact ``|V_k - O|^2`` for vertex ``k`` of any polygon built from ``t``."""
    if k <= t.b - t.a:
        return pyramidal(t.a + k) - pyramidal(t.a)
    return pyramidal(t.c) - pyramidal(t.a + k)


def _rotate(p: Point2, theta: float) -> Point2:
    c, s = math.cos(theta), math.sin(theta)
    return (c * p[0] - s * p[1], s * p[0] + c * p[1])


def _angle_between(u: Point2, v: Point2) -> float:
    """Unsigned angle in ``[0, pi]`` between two vectors."""
    return abs(math.atan2(u[0] * v[1] - u[1] * v[0], u[0] * v[0] + u[1] * v[1]))


def _is_straight(theta: float) -> bool:
    return theta < ANGLE_TOL or math.pi - theta < ANGLE_TOL


def tangent_step(q: Point2, r_in: float, ccw: bool, step: Optional[float] = None) -> Point2:
    """Touch point on the circle of radius ``r_in`` seen from ``q``.

    The result ``X`` has ``|X| = r_in`` and ``(X - q) . X = 0``; it lies at
    angle ``arccos(r_in / |q|)`` from ``q``, counter-clockwise if ``ccw``.
    ``step`` may supply the exact tangent length ``sqrt(|q|^2 - r_in^2)``.
    """
    rq = math.hypot(*q)
    if not rq > r_in > 0:
        raise ValueError(f"need |q| > r_in > 0, got |q|={rq}, r_in={r_in}")
    if step is None:
        step = math.sqrt((rq - r_in) * (rq + r_in))
    R = math.hypot(r_in, step)
    ux, uy = q[0] / rq, q[1] / rq
    vx, vy = (-uy, ux) if ccw else (uy, -ux)
    # cos(alpha) = r_in / R, sin(alpha) = step / R
    f_u, f_v = r_in * r_in / R, r_in * step / R
    return (f_u * ux + f_v * vx, f_u * uy + f_v * vy)


def _grow_arm(first: int, lengths: Sequence[int], bits: Sequence[bool], west: bool) -> list[Point2]:
    """Vertices of one arm from ``O``, each side perpendicular to the last diagonal."""
    pts = [(-float(first), 0.0) if west else (float(first), 0.0)]
    for L, ccw in zip(lengths, bits):
        x, y = pts[-1]
        r = math.hypot(x, y)
        ux, uy = (-y / r, x / r) if ccw else (y / r, -x / r)
        pts.append((x + L * ux, y + L * uy))
    return pts


def _close_arms(t: SolutionTriple, bits: Sequence[bool]) -> PolygonPath:
    a, b, c = t.as_tuple()
    k = b - a - 1
    arm1 = _grow_arm(a + 1, range(a + 2, b + 1), bits[:k], west=False)
    arm2 = _grow_arm(c, range(c - 1, b, -1), bits[k:], west=True)
    P, Q = arm1[-1], arm2[-1]
    theta = math.atan2(P[1], P[0]) - math.atan2(Q[1], Q[0])
    arm2 = [_rotate(p, theta) for p in arm2]
    D = math.sqrt(pyramidal(b) - pyramidal(a))
    gap = math.hypot(arm2[-1][0] - P[0], arm2[-1][1] - P[1]) / D
    verts = [(0.0, 0.0)] + arm1 + arm2[-2::-1]
    return PolygonPath(verts, list(range(a + 1, c + 1)), 0, gap, tuple(bits))


def construct_generic(t: SolutionTriple, turns: Sequence[bool], fix_degenerate: bool = True) -> PolygonPath:
    """Two-arm construction driven by one turn bit per free side.

    Bits cover sides ``a+2 .. b`` of the first arm, then ``c-1 .. b+1`` of the
    second; ``True`` turns counter-clockwise about ``O``.  If the closed
    polygon is degenerate at ``O``, the bit for side ``b`` is flipped.
    """
    if not isinstance(t, SolutionTriple):
        t = SolutionTriple(*t)
    turns = tuple(bool(x) for x in turns)
    if len(turns) != t.N - 2:
        raise ValueError(f"need {t.N - 2} turn bits, got {len(turns)}")
    path = _close_arms(t, turns)
    if fix_degenerate and _is_straight(_angle_between(path.vertices[1], path.vertices[-1])):
        i = t.b - t.a - 2
        flipped = turns[:i] + (not turns[i],) + turns[i + 1:]
        path = _close_arms(t, flipped)
    return path


def _radii(t: SolutionTriple) -> tuple[list[int], list[int]]:
    """Squared radii of the lower circles ``C_j`` and upper circles ``C'_j``."""
    a, b, c = t.as_tuple()
    lower = [pyramidal(a + j) - pyramidal(a) for j in range(b - a + 1)]
    upper = [pyramidal(c) - pyramidal(c - j - 1) for j in range(c - b)]
    return lower, upper


def _in_sector(p: Point2) -> bool:
    return abs(p[0]) < p[1]


def _toward_vertical(p: Point2) -> float:
    """Angular distance from the positive ``y`` axis."""
    return abs(math.atan2(p[1], p[0]) - math.pi / 2)


def construct_chainsaw(t: SolutionTriple) -> PolygonPath:
    """Non-self-intersecting polygon from concentric tangent steps.

    ``O`` is the origin and the far vertex sits at ``(D, 0)``.  The arm with
    sides ``a+1 .. b`` lives strictly below the x-axis, the arm with sides
    ``b+1 .. c`` strictly above; when both tangent choices are allowed the
    one nearer the axis is taken, except for the last three upper vertices,
    which steer into the sector ``|x| < y`` to keep ``O`` non-degenerate.
    """
    if not isinstance(t, SolutionTriple):
        t = SolutionTriple(*t)
    a, b, c = t.as_tuple()
    lower, upper = _radii(t)
    D = math.sqrt(lower[-1])
    P = (D, 0.0)

    # lower arm, walked from P towards O
    low = [P]
    for j in range(b - a, 1, -1):
        cands = [tangent_step(low[-1], math.sqrt(lower[j - 1]), ccw, a + j) for ccw in (True, False)]
        cands = [q for q in cands if q[1] < 0]
        assert cands, f"no tangent below the axis at C_{j}"
        low.append(max(cands, key=lambda q: q[1]))
    first = low[-1]

    def step(cur: Point2, j: int) -> list[Point2]:
        """Allowed successors on C'_{j-1}, preferred first."""
        cands = [tangent_step(cur, math.sqrt(upper[j - 1]), ccw, c - j) for ccw in (True, False)]
        return sorted((q for q in cands if q[1] > 0), key=lambda q: q[1])

    def o_ok(last: Point2) -> bool:
        return not _is_straight(_angle_between(first, last))

    top = c - b - 1
    if c - a >= 15:
        high = [P]
        for j in range(top, 0, -1):
            cands = step(high[-1], j)
            assert cands, f"no tangent above the axis at C'_{j}"
            choice = cands[0]
            if j in (3, 2):
                if _in_sector(high[-1]):
                    inside = [q for q in cands if _in_sector(q)]
                    choice = inside[0] if inside else choice
                else:
                    choice = min(cands, key=_toward_vertical)
            elif j == 1:
                ok = [q for q in cands if o_ok(q)]
                choice = ok[0] if ok else choice
            high.append(choice)
    else:
        high = _search_upper(P, top, step, o_ok)

    verts = [(0.0, 0.0)] + low[::-1] + high[1:]
    return PolygonPath(verts, list(range(a + 1, c + 1)), 0, 0.0)


def _search_upper(P: Point2, top: int, step, o_ok) -> list[Point2]:
    """Depth-first over the upper arm choices; first one not degenerate at O."""
    fallback = None

    def dfs(path: list[Point2], j: int):
        nonlocal fallback
        if j == 0:
            if fallback is None:
                fallback = path
            return path if o_ok(path[-1]) else None
        for q in step(path[-1], j):
            found = dfs(path + [q], j - 1)
            if found:
                return found
        return None

    return dfs([P], top) or fallback or [P]


def upper_angular_steps(path: PolygonPath, t: SolutionTriple) -> dict[int, float]:
    """Angle at ``O`` for each upper-arm step ``C'_j -> C'_{j-1}``, keyed by ``j``."""
    a, b, c = t.as_tuple()
    start = b - a
    out = {}
    for j in range(c - b - 1, 0, -1):
        i = start + (c - b - 1 - j)
        out[j] = _angle_between(path.vertices[i], path.vertices[i + 1])
    return out


def _orient_float(p: Point2, q: Point2, r: Point2) -> int:
    det = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    scale = (abs(q[0] - p[0]) + abs(q[1] - p[1])) * (abs(r[0] - p[0]) + abs(r[1] - p[1]))
    if abs(det) > 1e-14 * scale:
        return 1 if det > 0 else -1
    # too close to call in floating point: decide exactly on the float inputs
    P = [Fraction(v) for v in (*p, *q, *r)]
    det = (P[2] - P[0]) * (P[5] - P[1]) - (P[3] - P[1]) * (P[4] - P[0])
    return (det > 0) - (det < 0)


def _on_segment(p: Point2, q: Point2, r: Point2) -> bool:
    """``r`` collinear with ``pq`` lies within its bounding box."""
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def segments_intersect(p1: Point2, p2: Point2, p3: Point2, p4: Point2) -> bool:
    """Closed-segment intersection test, touching counts."""
    if (max(p1[0], p2[0]) < min(p3[0], p4[0]) or max(p3[0], p4[0]) < min(p1[0], p2[0])
            or max(p1[1], p2[1]) < min(p3[1], p4[1]) or max(p3[1], p4[1]) < min(p1[1], p2[1])):
        return False
    d1 = _orient_float(p3, p4, p1)
    d2 = _orient_float(p3, p4, p2)
    d3 = _orient_float(p1, p2, p3)
    d4 = _orient_float(p1, p2, p4)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return ((d1 == 0 and _on_segment(p3, p4, p1)) or (d2 == 0 and _on_segment(p3, p4, p2))
            or (d3 == 0 and _on_segment(p1, p2, p3)) or (d4 == 0 and _on_segment(p1, p2, p4)))


def is_self_intersecting(vertices: Sequence[Point2]) -> bool:
    n = len(vertices)
    segs = [(vertices[i], vertices[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            p1, p2 = segs[i]
            p3, p4 = segs[j]
            if j == i + 1 or (i == 0 and j == n - 1):
                # adjacent sides may only share their common vertex: fold-back overlap
                shared, u, v = (p2, p1, p4) if j == i + 1 else (p1, p2, p3)
                if _orient_float(shared, u, v) == 0 and (
                        (u[0] - shared[0]) * (v[0] - shared[0]) + (u[1] - shared[1]) * (v[1] - shared[1]) > 0):
                    return True
                continue
            if segments_intersect(p1, p2, p3, p4):
                return True
    return False


def signed_area(vertices: Sequence[Point2]) -> float:
    n = len(vertices)
    s = 0.0
    for i in range(n):
        x0, y0 = vertices[i]
        x1, y1 = vertices[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return s / 2


def interior_angles(vertices: Sequence[Point2]) -> list[float]:
    """Interior angle at each vertex, measured against the signed-area orientation."""
    n = len(vertices)
    orient = 1.0 if signed_area(vertices) >= 0 else -1.0
    out = []
    for i in range(n):
        p, v, q = vertices[i - 1], vertices[i], vertices[(i + 1) % n]
        e1 = (v[0] - p[0], v[1] - p[1])
        e2 = (q[0] - v[0], q[1] - v[1])
        turn = math.atan2(e1[0] * e2[1] - e1[1] * e2[0], e1[0] * e2[0] + e1[1] * e2[1])
        out.append(math.pi - orient * turn)
    return out


def validate(path: PolygonPath, t: SolutionTriple) -> PolygonReport:
    verts = path.vertices
    n = len(verts)
    o = verts[path.origin_index]
    if n != t.N or len(path.side_targets) != n:
        raise ValueError(f"path has {n} vertices, expected {t.N}")

    side_res = perp_res = 0.0
    for i, (p, q) in enumerate(path.sides()):
        dx, dy = q[0] - p[0], q[1] - p[1]
        L = math.hypot(dx, dy)
        side_res = max(side_res, abs(L - path.side_targets[i]) / path.side_targets[i])
        if i == path.origin_index or (i + 1) % n == path.origin_index:
            continue
        best = math.inf
        for v in (p, q):
            rx, ry = v[0] - o[0], v[1] - o[1]
            best = min(best, abs(rx * dx + ry * dy) / (math.hypot(rx, ry) * L))
        perp_res = max(perp_res, best)

    radius_res = 0.0
    for k in range(1, n):
        rx, ry = verts[k][0] - o[0], verts[k][1] - o[1]
        exact = exact_radius_sq(t, k)
        radius_res = max(radius_res, abs(rx * rx + ry * ry - exact) / exact)

    last = verts[-1]
    closure = abs(math.hypot(last[0] - o[0], last[1] - o[1]) - t.c) / t.c
    closure = max(closure, path.closure_gap)

    angles = interior_angles(verts)
    degenerate = [i for i, th in enumerate(angles)
                  if th < ANGLE_TOL or abs(th - math.pi) < ANGLE_TOL or th > 2 * math.pi - ANGLE_TOL]
    mu = sum(1 for i, th in enumerate(angles) if th > math.pi and i not in degenerate)
    crossing = is_self_intersecting(verts)
    return PolygonReport(
        max_side_residual=side_res,
        max_perp_residual=perp_res,
        max_radius_residual=radius_res,
        closure_residual=closure,
        degenerate_vertices=degenerate,
        self_intersecting=crossing,
        mu=mu,
        convex=(mu == 0 and not crossing),
        interior_angles=angles,
    )


def mu_lower_bound(N: int) -> float:
    """Least possible number of reflex angles in an arithmetic N-gon."""
    if N < 3:
        raise ValueError(f"polygon needs N >= 3 sides, got {N}")
    return math.sqrt(N) / (math.pi * math.sqrt(3)) - 4 / (math.pi * math.sqrt(3 * N)) - 2


def convexity_side_cap(nu: int) -> int:
    """Largest N for which an arithmetic N-gon can have at most ``nu`` reflex angles."""
    if nu < 0:
        raise ValueError("nu must be non-negative")
    return math.floor(8 + 3 * math.pi ** 2 * (nu + 2) ** 2)
