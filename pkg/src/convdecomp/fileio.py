"""Decomposition text format.

::

    # comment
    n m
    x y        (n lines; integer, decimal or p/q coordinates)
    i j        (m lines; zero-based endpoints, hull edges included)
"""
from __future__ import annotations

import hashlib

from .decomposition import PointSet, SkeletonGraph, build
from .geom import Point, format_scalar


class FormatError(ValueError):
    pass


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line.split()


def parse_points_and_edges(text: str):
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty input")
    lineno, head = lines[0]
    try:
        n, m = (int(t) for t in head)
    except ValueError:
        raise FormatError(f"line {lineno}: expected 'n m'") from None
    if len(lines) != 1 + n + m:
        raise FormatError(f"expected {n} point lines and {m} edge lines, found {len(lines) - 1} lines")
    points = []
    for lineno, toks in lines[1:1 + n]:
        if len(toks) != 2:
            raise FormatError(f"line {lineno}: expected 'x y'")
        try:
            points.append(Point.of(*toks))
        except (ValueError, ArithmeticError):
            raise FormatError(f"line {lineno}: bad coordinate in {' '.join(toks)!r}") from None
    edges = []
    for lineno, toks in lines[1 + n:]:
        try:
            i, j = (int(t) for t in toks)
        except ValueError:
            raise FormatError(f"line {lineno}: expected 'i j'") from None
        edges.append((i, j))
    return points, edges


def loads(text: str, check: bool = True) -> SkeletonGraph:
    """Parse a decomposition. With ``check`` the point set must be in general
    position and the graph must be plane (see :func:`build`); face convexity is
    left to :func:`validate`.
    """
    points, edges = parse_points_and_edges(text)
    base = PointSet.from_points(points, check=check)
    if check:
        return build(base, edges)
    return SkeletonGraph.of(base, edges)


def load(path, check: bool = True) -> SkeletonGraph:
    with open(path) as fh:
        return loads(fh.read(), check=check)


def dumps(g: SkeletonGraph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{g.base.n} {len(g.edges)}")
    out.extend(f"{format_scalar(p.x)} {format_scalar(p.y)}" for p in g.points)
    out.extend(f"{a} {b}" for a, b in g.sorted_edges)
    return "\n".join(out) + "\n"


def dump(g: SkeletonGraph, path, comment: str | None = None) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(g, comment))


def snapshot_hash(g: SkeletonGraph) -> str:
    """sha256 of the canonical serialization (exact coordinates, sorted edges)."""
    return hashlib.sha256(dumps(g).encode()).hexdigest()


def points_text(base: PointSet) -> str:
    lines = [f"{base.n} 0"]
    lines.extend(f"{format_scalar(p.x)} {format_scalar(p.y)}" for p in base.points)
    return "\n".join(lines) + "\n"
