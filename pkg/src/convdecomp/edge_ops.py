"""Deletion and contraction of edges of a convex decomposition."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .decomposition import Edge, Face, PointSet, SkeletonGraph, ValidationReport, edge, validate
from .errors import ContractionPreconditionError, NotContractibleError, NotDeletableError
from .geom import Point, Ray, Scalar, orientation, point_in_triangle_interior, ray_segment_intersection


@dataclass(frozen=True)
class MergedFace:
    """The face left behind when interior edge ``e`` is removed."""

    edge: Edge
    boundary: Face
    reflex_at: frozenset[int]
    # every boundary vertex whose turn is not a left turn; should be a subset of the edge ends
    reflex_vertices: frozenset[int]


def merged_face(g: SkeletonGraph, a: int, b: int | None = None) -> MergedFace:
    """Union of the two faces flanking the interior edge ab, with ab removed."""
    if b is None:
        a, b = a
    if not g.is_interior_edge(a, b):
        raise ValueError(f"{edge(a, b)} is not an interior edge")
    left = g.face_of_halfedge.get((a, b))
    right = g.face_of_halfedge.get((b, a))
    if left is None or right is None:
        raise ValueError(f"{edge(a, b)} is not flanked by two internal faces")
    # left runs ... a, b ...; rotate to start at b and end at a
    i = left.index(b)
    part1 = left[i:] + left[:i]
    j = right.index(a)
    part2 = right[j:] + right[:j]
    boundary = part1 + part2[1:-1]
    pts = g.points
    m = len(boundary)
    reflex = frozenset(
        boundary[k]
        for k in range(m)
        if orientation(pts[boundary[k - 1]], pts[boundary[k]], pts[boundary[(k + 1) % m]]) != 1
    )
    return MergedFace(edge(a, b), boundary, reflex & {a, b}, reflex)


def is_deletable(g: SkeletonGraph, a: int, b: int | None = None) -> bool:
    """Deletability via the merged-face reflex test."""
    return not merged_face(g, a, b).reflex_at


def is_deletable_by_validation(g: SkeletonGraph, a: int, b: int | None = None) -> bool:
    """Independent check: delete the edge and validate the result."""
    if b is None:
        a, b = a
    if not g.is_interior_edge(a, b):
        raise ValueError(f"{edge(a, b)} is not an interior edge")
    return validate(g.with_edges(g.edges - {edge(a, b)})).valid


def delete_edge(g: SkeletonGraph, a: int, b: int | None = None) -> SkeletonGraph:
    if b is None:
        a, b = a
    mf = merged_face(g, a, b)
    if mf.reflex_at:
        raise NotDeletableError(f"edge {mf.edge} is not deletable: reflex at {sorted(mf.reflex_at)}")
    return g.with_edges(g.edges - {mf.edge})


class Contraction(NamedTuple):
    graph: SkeletonGraph
    # old index -> new index; the contracted vertex is absent
    remap: dict[int, int]

    @property
    def base(self) -> PointSet:
        return self.graph.base


def _check_contraction_pre(g: SkeletonGraph, u: int, v: int):
    if not g.is_interior_edge(u, v):
        raise ContractionPreconditionError(f"{edge(u, v)} is not an interior edge")
    if g.base.is_hull_vertex(u):
        raise ContractionPreconditionError(f"vertex {u} lies on the hull boundary and cannot be contracted")


def contracted_graph(g: SkeletonGraph, u: int, v: int) -> Contraction:
    """The graph G/uv on P minus u, without validating it."""
    _check_contraction_pre(g, u, v)
    remap = {i: (i if i < u else i - 1) for i in range(g.base.n) if i != u}
    new_edges = set()
    for a, b in g.edges:
        if a == u:
            a = v
        elif b == u:
            b = v
        if a != b:
            # parallel copies merge here: the skeleton graph is simple
            new_edges.add(edge(remap[a], remap[b]))
    pts = [p for i, p in enumerate(g.points) if i != u]
    base = PointSet.from_points(pts, check=False)
    return Contraction(SkeletonGraph(base, frozenset(new_edges)), remap)


def contract_edge(g: SkeletonGraph, u: int, v: int) -> Contraction:
    """Contract the interior edge uv from u to v.

    Raises :class:`NotContractibleError` carrying the validation report when
    the result is not a convex decomposition of P minus u.
    """
    result = contracted_graph(g, u, v)
    report = validate(result.graph)
    if not report.valid:
        raise NotContractibleError(u, v, report)
    return result


def contraction_report(g: SkeletonGraph, u: int, v: int) -> ValidationReport:
    return validate(contracted_graph(g, u, v).graph)


@dataclass(frozen=True)
class BlockWitness:
    """Edges y-x and x-u on a common face whose ray from y through x blocks uv."""

    y: int
    x: int
    u_t: Point
    t: Scalar
    face: Face

    def to_dict(self):
        from .geom import format_scalar

        return {
            "y": self.y,
            "x": self.x,
            "u_t": [format_scalar(self.u_t.x), format_scalar(self.u_t.y)],
            "t": format_scalar(self.t),
        }


def _param_on(u: Point, v: Point, p: Point) -> Fraction:
    if v.x != u.x:
        return Fraction(p.x - u.x) / (v.x - u.x)
    return Fraction(p.y - u.y) / (v.y - u.y)


def blocking_witnesses(g: SkeletonGraph, u: int, v: int) -> list[BlockWitness]:
    """All blocking pairs for the contraction of uv from u to v, in canonical order."""
    _check_contraction_pre(g, u, v)
    pts = g.points
    pu, pv = pts[u], pts[v]
    found = {}
    for face in g.internal_faces:
        if u not in face:
            continue
        m = len(face)
        i = face.index(u)
        for step in (1, -1):
            x = face[(i + step) % m]
            y = face[(i + 2 * step) % m]
            if y == u:
                continue
            hit = ray_segment_intersection(Ray(pts[y], pts[x]), pu, pv)
            if hit is None or hit == pu or hit == pv:
                continue
            px = pts[x]
            if any(
                point_in_triangle_interior(pts[p], px, hit, pu)
                for p in range(g.base.n)
                if p not in (x, u)
            ):
                continue
            w = BlockWitness(y, x, hit, _param_on(pu, pv, hit), face)
            found.setdefault((w.t, x, y), w)
    return [found[k] for k in sorted(found)]


def lemma1_witness(g: SkeletonGraph, u: int, v: int) -> BlockWitness | None:
    """Canonical blocking witness: minimal t, then smallest (x, y)."""
    ws = blocking_witnesses(g, u, v)
    return ws[0] if ws else None


def is_contractible(g: SkeletonGraph, u: int, v: int) -> bool:
    return lemma1_witness(g, u, v) is None


def is_contractible_by_validation(g: SkeletonGraph, u: int, v: int) -> bool:
    return contraction_report(g, u, v).valid


def contraction_candidates(g: SkeletonGraph) -> list[tuple[int, int]]:
    """Directed interior edges (u, v) whose tail u is an interior point."""
    out = []
    for a, b in g.interior_edges:
        if not g.base.is_hull_vertex(a):
            out.append((a, b))
        if not g.base.is_hull_vertex(b):
            out.append((b, a))
    return sorted(out)
