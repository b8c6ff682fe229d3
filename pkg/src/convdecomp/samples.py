"""Small hand-checked decompositions used in tests, docs and the CLI."""
from __future__ import annotations

from .decomposition import PointSet, SkeletonGraph, build


def _make(points, edges) -> SkeletonGraph:
    return build(PointSet.from_points(points), edges)


def unit_square() -> SkeletonGraph:
    """S1: A(0,0) B(1,0) C(1,1) D(0,1), hull plus diagonal AC."""
    return _make([(0, 0), (1, 0), (1, 1), (0, 1)], [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])


def square_fan() -> SkeletonGraph:
    """S2: 8x8 square A B C D with interior u=(5,4) joined to every corner."""
    return _make(
        [(0, 0), (8, 0), (8, 8), (0, 8), (5, 4)],
        [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)],
    )


# S3 vertex names in index order
S3_NAMES = ("E", "Y", "B2", "D2", "x", "u", "v")
E, Y, B2, D2, X, U, V = range(7)


def blocked_quad() -> SkeletonGraph:
    """S3: quadrilateral hull E Y B2 D2 with interior points x, u, v and five faces."""
    return _make(
        [(-4, -2), (5, -3), (6, 6), (-4, 6), (2, -1), (0, 0), (0, 5)],
        [(E, Y), (Y, B2), (B2, D2), (D2, E), (Y, X), (X, U), (U, E), (U, V), (V, D2), (X, B2), (V, B2)],
    )


SAMPLES = {"S1": unit_square, "S2": square_fan, "S3": blocked_quad}
