"""Convex decompositions represented by their skeleton graph.

A :class:`SkeletonGraph` is just a point set plus an undirected edge set; the
rotation system and the faces are derived from it on demand, so every edit
(delete, contract) simply builds a new graph.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, NamedTuple, Sequence

from .errors import BuildError, GeneralPositionError
from .geom import (
    Point,
    angular_sort,
    convex_hull,
    orientation,
    point_on_open_segment,
    polygon_signed_area2,
    segments_cross,
)

Edge = tuple[int, int]
# cyclic vertex sequence, counter-clockwise for internal faces
Face = tuple[int, ...]


def edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def find_collinear_triple(points: Sequence[Point]):
    """Return some collinear index triple (i, j, k), or None."""
    n = len(points)
    for i in range(n):
        xi, yi = points[i]
        seen: dict = {}
        for j in range(i + 1, n):
            dx = points[j][0] - xi
            dy = points[j][1] - yi
            if dx == 0 and dy == 0:
                return (i, j, j)
            if type(dx) is int and type(dy) is int:
                d = gcd(dx, dy)
                dx, dy = dx // d, dy // d
                key = (dx, dy) if dx > 0 or (dx == 0 and dy > 0) else (-dx, -dy)
            else:
                key = "inf" if dx == 0 else Fraction(dy) / dx
            if key in seen:
                return (i, seen[key], j)
            seen[key] = j
    return None


@dataclass(frozen=True)
class PointSet:
    points: tuple[Point, ...]
    hull: tuple[int, ...]

    @classmethod
    def from_points(cls, points: Iterable, check: bool = True) -> "PointSet":
        pts = tuple(p if isinstance(p, Point) else Point.of(*p) for p in points)
        if check:
            triple = find_collinear_triple(pts)
            if triple is not None:
                raise GeneralPositionError(triple)
        return cls(pts, tuple(convex_hull(pts)))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def k(self) -> int:
        return len(self.hull)

    @cached_property
    def hull_set(self) -> frozenset[int]:
        return frozenset(self.hull)

    @cached_property
    def hull_edges(self) -> frozenset[Edge]:
        h = self.hull
        return frozenset(edge(h[i], h[(i + 1) % len(h)]) for i in range(len(h)))

    @cached_property
    def collinear_triple(self):
        return find_collinear_triple(self.points)

    @cached_property
    def hull_area2(self):
        return polygon_signed_area2([self.points[i] for i in self.hull])

    def is_hull_vertex(self, i: int) -> bool:
        return i in self.hull_set


@dataclass(frozen=True)
class SkeletonGraph:
    """Plane straight-line graph on ``base``.

    Constructing one directly performs no geometric checks; use :func:`build`
    for checked construction and :func:`validate` to test whether the graph is
    the skeleton of a convex decomposition.
    """

    base: PointSet
    edges: frozenset[Edge]

    @classmethod
    def of(cls, base: PointSet, edges: Iterable) -> "SkeletonGraph":
        return cls(base, frozenset(edge(a, b) for a, b in edges))

    @property
    def points(self) -> tuple[Point, ...]:
        return self.base.points

    @cached_property
    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {i: [] for i in range(self.base.n)}
        for a, b in self.sorted_edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def rotation(self) -> dict[int, list[int]]:
        """Neighbors of every vertex in counter-clockwise angular order."""
        pts = self.points
        rot = {}
        for v, nbrs in self.adjacency.items():
            order = angular_sort(pts[v], [pts[w] for w in nbrs])
            rot[v] = [nbrs[i] for i in order]
        return rot

    @cached_property
    def _rotation_index(self) -> dict[int, dict[int, int]]:
        return {v: {w: i for i, w in enumerate(r)} for v, r in self.rotation.items()}

    def next_halfedge(self, a: int, b: int) -> Edge:
        """Successor of half-edge a->b along the face on its left."""
        rot = self.rotation[b]
        i = self._rotation_index[b][a]
        return (b, rot[(i - 1) % len(rot)])

    @cached_property
    def all_faces(self) -> list[Face]:
        """Every face cycle of the embedding, internal and external."""
        seen = set()
        faces = []
        for a, b in self.sorted_edges:
            for start in ((a, b), (b, a)):
                if start in seen:
                    continue
                cycle = []
                he = start
                while he not in seen:
                    seen.add(he)
                    cycle.append(he[0])
                    he = self.next_halfedge(*he)
                faces.append(_canonical_cycle(cycle))
        return sorted(faces)

    def face_area2(self, face: Face):
        return polygon_signed_area2([self.points[i] for i in face])

    @cached_property
    def internal_faces(self) -> list[Face]:
        return [f for f in self.all_faces if len(f) >= 3 and self.face_area2(f) > 0]

    @cached_property
    def face_of_halfedge(self) -> dict[Edge, Face]:
        """Maps half-edge (a, b) to the internal face on its left, if any."""
        out = {}
        for f in self.internal_faces:
            for i, a in enumerate(f):
                out[(a, f[(i + 1) % len(f)])] = f
        return out

    @cached_property
    def interior_edges(self) -> list[Edge]:
        hull_edges = self.base.hull_edges
        return [e for e in self.sorted_edges if e not in hull_edges]

    @cached_property
    def interior_points(self) -> list[int]:
        return [i for i in range(self.base.n) if not self.base.is_hull_vertex(i)]

    def is_interior_edge(self, a: int, b: int) -> bool:
        e = edge(a, b)
        return e in self.edges and e not in self.base.hull_edges

    def with_edges(self, edges: Iterable[Edge]) -> "SkeletonGraph":
        return SkeletonGraph(self.base, frozenset(edges))


def _canonical_cycle(cycle: Sequence[int]) -> Face:
    i = min(range(len(cycle)), key=cycle.__getitem__)
    return tuple(cycle[i:]) + tuple(cycle[:i])


def internal_faces(g: SkeletonGraph) -> list[Face]:
    return list(g.internal_faces)


def interior_edges(g: SkeletonGraph) -> list[Edge]:
    return list(g.interior_edges)


def interior_points(g: SkeletonGraph) -> list[int]:
    return list(g.interior_points)


def _structural_problems(g: SkeletonGraph):
    """Crossing pairs and edges through points, as (kind, detail) tuples."""
    pts = g.points
    edges = g.sorted_edges
    problems = []
    for i, (a, b) in enumerate(edges):
        pa, pb = pts[a], pts[b]
        for c, d in edges[i + 1:]:
            if segments_cross(pa, pb, pts[c], pts[d]):
                problems.append(("crossing", ((a, b), (c, d))))
    for a, b in edges:
        for p in range(g.base.n):
            if p != a and p != b and point_on_open_segment(pts[p], pts[a], pts[b]):
                problems.append(("edge_through_point", ((a, b), p)))
    return problems


def build(base: PointSet, edges: Iterable) -> SkeletonGraph:
    """Checked construction of a plane skeleton graph.

    Raises :class:`BuildError` on bad indices, self-loops, duplicate edges,
    crossing edges, an edge through a third point, or a missing hull edge.
    Convexity of the faces is *not* checked here; see :func:`validate`.
    """
    seen = set()
    for pair in edges:
        a, b = pair
        if not (0 <= a < base.n and 0 <= b < base.n):
            raise BuildError(f"edge {pair} has an invalid endpoint", [pair])
        if a == b:
            raise BuildError(f"self-loop at {a}", [pair])
        e = edge(a, b)
        if e in seen:
            raise BuildError(f"duplicate edge {e}", [e])
        seen.add(e)
    g = SkeletonGraph(base, frozenset(seen))
    missing = sorted(base.hull_edges - g.edges)
    if missing:
        raise BuildError(f"missing hull edges {missing}", missing)
    problems = _structural_problems(g)
    if problems:
        kind, detail = problems[0]
        raise BuildError(f"{kind}: {detail}", [d for _, d in problems])
    return g


class Violation(NamedTuple):
    kind: str
    detail: object


@dataclass(frozen=True)
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid

    def kinds(self) -> list[str]:
        return [v.kind for v in self.violations]

    def summary(self) -> str:
        if self.valid:
            return "valid"
        return "; ".join(f"{v.kind} {v.detail}" for v in self.violations[:5])


def validate(g: SkeletonGraph) -> ValidationReport:
    """Check that ``g`` is the skeleton graph of a convex decomposition of its points.

    Checks run in order: general position, hull edges present, no crossings
    or edges through points, every internal face strictly convex, face areas
    summing to the hull area, and every point covered (degree >= 2, strictly
    inside no face). Face checks are skipped once the drawing is not plane.
    """
    base = g.base
    out: list[Violation] = []
    if base.collinear_triple is not None:
        out.append(Violation("collinear_triple", base.collinear_triple))
    for e in g.sorted_edges:
        a, b = e
        if a == b or not (0 <= a < base.n and 0 <= b < base.n):
            out.append(Violation("invalid_edge", e))
    if out:
        return ValidationReport(out)
    for e in sorted(base.hull_edges - g.edges):
        out.append(Violation("missing_hull_edge", e))
    out.extend(Violation(k, d) for k, d in _structural_problems(g))
    if out:
        return ValidationReport(out)

    pts = g.points
    faces = g.internal_faces
    for f in faces:
        m = len(f)
        for i in range(m):
            if orientation(pts[f[i - 1]], pts[f[i]], pts[f[(i + 1) % m]]) != 1:
                out.append(Violation("nonconvex_face", (f, f[i])))
                break
    # degenerate walks (dangling edges) show up as zero-area or reflex cycles
    for f in g.all_faces:
        if len(f) < 3 or g.face_area2(f) == 0:
            out.append(Violation("degenerate_face", f))
    area = sum(g.face_area2(f) for f in faces)
    if area != base.hull_area2:
        out.append(Violation("area_mismatch", (area, base.hull_area2)))
    for p in range(base.n):
        if g.degree(p) < 2:
            out.append(Violation("uncovered_point", p))
    for f in faces:
        fs = set(f)
        for p in range(base.n):
            if p in fs:
                continue
            q = pts[p]
            m = len(f)
            if all(orientation(pts[f[i]], pts[f[(i + 1) % m]], q) == 1 for i in range(m)):
                out.append(Violation("point_in_face", (p, f)))
    return ValidationReport(out)
