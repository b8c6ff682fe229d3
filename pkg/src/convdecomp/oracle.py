"""Random instances and brute-force oracles."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .decomposition import Edge, PointSet, SkeletonGraph, edge, validate
from .edge_ops import is_deletable
from .errors import InfeasibleError
from .geom import Point, orientation, point_in_triangle_interior, point_on_open_segment, segments_cross

MAX_ENUMERATION_N = 7


@dataclass(frozen=True)
class GenConfig:
    n: int
    range: int = 1000
    seed: int = 0
    delete_prob: float = 0.0

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("n must be at least 3")
        if self.range < self.n:
            raise InfeasibleError(f"infeasible: range {self.range} < n = {self.n} leaves no room for general position")
        if not 0.0 <= self.delete_prob <= 1.0:
            raise ValueError("delete_prob must lie in [0, 1]")


def gen_points(cfg: GenConfig, attempts: int = 200, restarts: int = 20) -> PointSet:
    """n distinct integer points of [0, R]^2 with no three collinear.

    Points are drawn one at a time and rejected when they would complete a
    collinear triple; after ``attempts`` consecutive rejections the whole set
    is redrawn, at most ``restarts`` times.
    """
    rng = random.Random(cfg.seed)
    R = cfg.range
    for _ in range(restarts):
        pts: list[Point] = []
        fails = 0
        while len(pts) < cfg.n and fails < attempts:
            p = Point(rng.randint(0, R), rng.randint(0, R))
            if p in pts or any(orientation(a, b, p) == 0 for a, b in combinations(pts, 2)):
                fails += 1
                continue
            pts.append(p)
            fails = 0
        if len(pts) == cfg.n:
            return PointSet.from_points(pts)
    raise InfeasibleError(f"could not place {cfg.n} points in general position in [0, {R}]^2")


def triangulate(ps: PointSet) -> SkeletonGraph:
    """Incremental triangulation: fan the hull from its first vertex, then split
    the triangle containing each interior point (in index order) into three.
    """
    pts = ps.points
    h = ps.hull
    edges = set(ps.hull_edges)
    triangles = []
    for i in range(1, len(h) - 1):
        triangles.append((h[0], h[i], h[i + 1]))
        edges.add(edge(h[0], h[i]))
        edges.add(edge(h[0], h[i + 1]))
    for p in range(ps.n):
        if ps.is_hull_vertex(p):
            continue
        for ti, (a, b, c) in enumerate(triangles):
            if point_in_triangle_interior(pts[p], pts[a], pts[b], pts[c]):
                triangles[ti:ti + 1] = [(a, b, p), (b, c, p), (c, a, p)]
                edges.update((edge(a, p), edge(b, p), edge(c, p)))
                break
        else:
            raise AssertionError(f"point {p} lies in no triangle")
    return SkeletonGraph(ps, frozenset(edges))


def gen_decomposition(cfg: GenConfig) -> SkeletonGraph:
    """Triangulate random points, then visit the interior edges in random order
    and delete each one that is deletable at visit time with probability p."""
    g = triangulate(gen_points(cfg))
    if cfg.delete_prob <= 0:
        return g
    rng = random.Random(f"deletions-{cfg.seed}")
    order = list(g.interior_edges)
    rng.shuffle(order)
    for e in order:
        if rng.random() < cfg.delete_prob and is_deletable(g, e):
            g = g.with_edges(g.edges - {e})
    return g


def corpus_config(seed: int, max_n: int = 25) -> GenConfig:
    """Seeded configuration used for the random test corpus: n in [5, max_n],
    deletion probability cycling through 0, 0.5, 1."""
    rng = random.Random(f"corpus-{seed}")
    n = rng.randint(5, max_n)
    return GenConfig(n=n, range=1000, seed=seed, delete_prob=(0.0, 0.5, 1.0)[seed % 3])


def candidate_edges(ps: PointSet) -> list[Edge]:
    """Interior candidate segments: every pair that is not a hull edge and does
    not pass through a third point."""
    pts = ps.points
    out = []
    for a, b in combinations(range(ps.n), 2):
        e = (a, b)
        if e in ps.hull_edges:
            continue
        if any(point_on_open_segment(pts[c], pts[a], pts[b]) for c in range(ps.n) if c not in e):
            continue
        if any(segments_cross(pts[a], pts[b], pts[c], pts[d]) for c, d in ps.hull_edges):
            continue
        out.append(e)
    return out


def enumerate_all_decompositions(ps: PointSet) -> list[SkeletonGraph]:
    """Every convex decomposition of a small point set, by exhaustive search over
    pairwise non-crossing subsets of the candidate edges."""
    if ps.n > MAX_ENUMERATION_N:
        raise ValueError(f"enumeration is limited to n <= {MAX_ENUMERATION_N}")
    pts = ps.points
    cand = candidate_edges(ps)
    m = len(cand)
    conflict = [
        {j for j in range(m) if j != i and segments_cross(pts[cand[i][0]], pts[cand[i][1]], pts[cand[j][0]], pts[cand[j][1]])}
        for i in range(m)
    ]
    out = []
    chosen: list[int] = []

    def search(i, blocked):
        if i == m:
            g = SkeletonGraph(ps, frozenset(ps.hull_edges) | {cand[j] for j in chosen})
            if validate(g).valid:
                out.append(g)
            return
        search(i + 1, blocked)
        if i not in blocked:
            chosen.append(i)
            search(i + 1, blocked | conflict[i])
            chosen.pop()

    search(0, frozenset())
    return out


def check_nru_bound(g: SkeletonGraph) -> bool:
    """If there are more than (3n - 2k)/2 polygons, some interior edge is deletable."""
    faces = len(g.internal_faces)
    if 2 * faces <= 3 * g.base.n - 2 * g.base.k:
        return True
    return any(is_deletable(g, e) for e in g.interior_edges)
