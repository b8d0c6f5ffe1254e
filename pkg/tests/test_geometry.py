import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from socs import enumerate_up_to
from socs.census import inward_bits
from socs.core import SolutionTriple, pyramidal
from socs.geometry import (
    PolygonPath,
    construct_chainsaw,
    construct_generic,
    convexity_side_cap,
    exact_radius_sq,
    interior_angles,
    is_self_intersecting,
    mu_lower_bound,
    segments_intersect,
    signed_area,
    tangent_step,
    upper_angular_steps,
    validate,
)

CHAINSAW_SET = enumerate_up_to(135)


def test_tangent_step_3_4_5():
    x, y = tangent_step((5.0, 0.0), 3.0, ccw=True)
    assert x == pytest.approx(9 / 5) and y == pytest.approx(12 / 5)
    x, y = tangent_step((5.0, 0.0), 3.0, ccw=False)
    assert x == pytest.approx(9 / 5) and y == pytest.approx(-12 / 5)


def test_tangent_step_length_and_angle():
    q = (math.sqrt(365), 0.0)
    X = tangent_step(q, math.sqrt(221), ccw=True)
    assert math.dist(q, X) == pytest.approx(12.0)
    # radius ratio sqrt 2 gives a quarter-turn half angle
    X = tangent_step((math.sqrt(2), 0.0), 1.0, ccw=True)
    assert math.atan2(X[1], X[0]) == pytest.approx(math.pi / 4)


@settings(max_examples=200, deadline=None)
@given(
    st.floats(0.1, 1e4), st.floats(-math.pi, math.pi), st.floats(0.01, 0.99), st.booleans(),
)
def test_tangent_step_properties(rq, phi, frac, ccw):
    q = (rq * math.cos(phi), rq * math.sin(phi))
    r = frac * rq
    X = tangent_step(q, r, ccw)
    assert math.hypot(*X) == pytest.approx(r, rel=1e-9)
    # tangent: the step is perpendicular to the radius at the touch point
    dot = (X[0] - q[0]) * X[0] + (X[1] - q[1]) * X[1]
    assert abs(dot) <= 1e-9 * rq * rq
    cross = q[0] * X[1] - q[1] * X[0]
    assert (cross > 0) == ccw


def test_tangent_step_rejects_inner_point():
    with pytest.raises(ValueError):
        tangent_step((1.0, 0.0), 2.0, True)


@pytest.mark.parametrize("bit", [False, True])
def test_generic_smallest_is_3_4_5_triangle(bit):
    t = SolutionTriple(2, 4, 5)
    path = construct_generic(t, (bit,))
    rep = validate(path, t)
    assert rep.is_arithmetic and rep.convex
    sides = sorted(round(math.dist(p, q), 9) for p, q in path.sides())
    assert sides == [3.0, 4.0, 5.0]


def test_generic_9_12_14_diagonal():
    t = SolutionTriple(9, 12, 14)
    path = construct_generic(t, inward_bits(t), fix_degenerate=False)
    far = path.vertices[t.b - t.a]
    assert far[0] ** 2 + far[1] ** 2 == pytest.approx(365)
    assert exact_radius_sq(t, t.b - t.a) == 365


def test_exact_radius_both_arms_meet():
    for t in enumerate_up_to(40):
        k = t.b - t.a
        assert exact_radius_sq(t, k) == pyramidal(t.c) - pyramidal(t.b)


def test_generic_random_bits_are_arithmetic():
    for t in enumerate_up_to(60):
        bits = [(i * 7 + t.a) % 3 == 0 for i in range(t.N - 2)]
        rep = validate(construct_generic(t, bits), t)
        assert rep.max_side_residual < 1e-9
        assert rep.max_perp_residual < 1e-9
        assert rep.closure_residual < 1e-9


def test_generic_bit_count_checked():
    with pytest.raises(ValueError):
        construct_generic(SolutionTriple(9, 12, 14), (True,))


@pytest.mark.parametrize("t", CHAINSAW_SET, ids=lambda t: f"{t.a}-{t.b}-{t.c}")
def test_chainsaw(t):
    path = construct_chainsaw(t)
    rep = validate(path, t)
    assert not rep.self_intersecting
    assert not rep.degenerate_vertices
    assert rep.max_side_residual < 1e-9
    assert rep.max_perp_residual < 1e-9
    assert rep.max_radius_residual < 1e-9
    steps = upper_angular_steps(path, t)
    assert all(v < math.pi / 4 for v in steps.values())
    if t.c >= 9:
        for j in (2, 3):
            if j in steps:
                assert steps[j] > math.pi / 8
    assert rep.mu >= mu_lower_bound(t.N) - 1e-9


def test_chainsaw_includes_long_case():
    assert SolutionTriple(59, 110, 135) in CHAINSAW_SET
    assert len(construct_chainsaw(SolutionTriple(59, 110, 135))) == 76


def test_perturbed_vertex_fails_validation():
    t = SolutionTriple(59, 110, 135)
    path = construct_chainsaw(t)
    verts = list(path.vertices)
    x, y = verts[20]
    verts[20] = (x + 0.1, y)
    rep = validate(PolygonPath(verts, path.side_targets), t)
    assert not rep.is_arithmetic
    assert rep.max_side_residual > 1e-9


def test_segments():
    assert segments_intersect((0, 0), (2, 2), (0, 2), (2, 0))
    assert not segments_intersect((0, 0), (1, 0), (0, 1), (1, 1))
    assert segments_intersect((0, 0), (2, 0), (1, 0), (3, 0))
    assert segments_intersect((0, 0), (2, 0), (2, 0), (2, 5))


def test_self_intersection_bowtie_and_square():
    assert is_self_intersecting([(0, 0), (1, 1), (1, 0), (0, 1)])
    assert not is_self_intersecting([(0, 0), (1, 0), (1, 1), (0, 1)])
    # adjacent sides folding back onto each other
    assert is_self_intersecting([(0, 0), (2, 0), (1, 0), (1, 1)])


def test_orientation_independent_angles():
    sq = [(0, 0), (1, 0), (1, 1), (0, 1)]
    assert signed_area(sq) == 1.0
    assert signed_area(sq[::-1]) == -1.0
    for verts in (sq, sq[::-1]):
        assert all(a == pytest.approx(math.pi / 2) for a in interior_angles(verts))
    dart = [(0, 0), (2, 1), (0, 2), (1, 1)]
    assert sum(a > math.pi for a in interior_angles(dart)) == 1
    assert sum(a > math.pi for a in interior_angles(dart[::-1])) == 1


def test_mu_lower_bound_values():
    assert mu_lower_bound(3) == pytest.approx(-2.106, abs=1e-3)
    assert mu_lower_bound(126) < 0 < mu_lower_bound(127)
    with pytest.raises(ValueError):
        mu_lower_bound(2)


def test_convexity_side_cap_values():
    assert [convexity_side_cap(nu) for nu in (0, 1, 2)] == [126, 274, 481]
    with pytest.raises(ValueError):
        convexity_side_cap(-1)


def test_brute_force_turns_only_inward_is_convex():
    # every turn sequence for small N: the inward one (or its mirror) is the only candidate
    for t in enumerate_up_to(13):
        ib = inward_bits(t)
        allowed = {ib, tuple(not x for x in ib)}
        found = set()
        for bits in itertools.product((False, True), repeat=t.N - 2):
            rep = validate(construct_generic(t, bits, fix_degenerate=False), t)
            if rep.convex and rep.is_arithmetic:
                found.add(bits)
        assert found <= allowed
        assert bool(found) == (t.as_tuple() in {(2, 4, 5), (9, 12, 14)})
