"""Search for convex arithmetic polygons.

A convex arithmetic polygon has at most ``convexity_side_cap(0) = 126`` sides,
and each solution admits only one candidate up to reflection: the polygon
whose every side turns inward.  Building and checking all of them settles
which convex polygons exist.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import SolutionTriple, classify_parameterized
from .geometry import (
    PolygonPath,
    PolygonReport,
    construct_generic,
    convexity_side_cap,
    validate,
)
from .search import enumerate_up_to

EXPECTED_CANDIDATES = 67
EXPECTED_CONVEX = ((2, 4, 5), (9, 12, 14))


@dataclass(frozen=True)
class CensusRow:
    triple: SolutionTriple
    parameterized_k: Optional[int]
    candidate_built: bool
    convex: bool
    mu: int
    self_intersecting: bool
    degenerate: bool


def convex_candidates(nu: int = 0) -> list[SolutionTriple]:
    """Solutions long enough to possibly give a polygon with at most ``nu`` reflex angles."""
    return enumerate_up_to(convexity_side_cap(nu))


def inward_bits(t: SolutionTriple) -> tuple[bool, ...]:
    """Turn bits keeping every new interior angle below pi.

    The first arm turns counter-clockwise about ``O``; the second arm is grown
    outwards from ``O`` in the opposite traversal direction, so it turns
    clockwise.  The mirror image (all bits negated) is the same polygon
    reflected and is not built.
    """
    return (True,) * (t.b - t.a - 1) + (False,) * (t.c - t.b - 1)


def inward_turning_polygon(t: SolutionTriple) -> PolygonPath:
    return construct_generic(t, inward_bits(t), fix_degenerate=False)


def census_row(t: SolutionTriple) -> tuple[CensusRow, PolygonReport]:
    path = inward_turning_polygon(t)
    report = validate(path, t)
    row = CensusRow(
        triple=t,
        parameterized_k=classify_parameterized(t),
        candidate_built=True,
        # a degenerate vertex disqualifies it as an arithmetic polygon at all
        convex=report.convex and report.is_arithmetic,
        mu=report.mu,
        self_intersecting=report.self_intersecting,
        degenerate=bool(report.degenerate_vertices),
    )
    return row, report


def run_census(nu: int = 0) -> list[CensusRow]:
    rows = [census_row(t)[0] for t in convex_candidates(nu)]
    if nu == 0:
        return rows
    # for nu >= 1 "convex" is relaxed to "at most nu reflex angles"
    return [
        CensusRow(r.triple, r.parameterized_k, r.candidate_built,
                  r.mu <= nu and not r.self_intersecting and not r.degenerate,
                  r.mu, r.self_intersecting, r.degenerate)
        for r in rows
    ]


def census_matches_expected(rows: list[CensusRow]) -> bool:
    convex = tuple(r.triple.as_tuple() for r in rows if r.convex)
    return len(rows) == EXPECTED_CANDIDATES and convex == EXPECTED_CONVEX
