"""The reflex-arc digraph of a decomposition and the counting certificate built on it.

An arc u->v exists when removing the interior edge uv leaves a face that is
reflex at u. On a decomposition without deletable edges every interior edge
carries at least one arc, and the non-contractible arcs N are charged to other
arcs through the blocking witnesses (map ``f``), with collisions repaired by
``g`` and arcs into the hull (``B``) left over. The counting can never close,
which is why some arc must be contractible.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Union

from .decomposition import Edge, SkeletonGraph
from .edge_ops import BlockWitness, MergedFace, is_deletable, lemma1_witness, merged_face
from .errors import ProofCheckError

Arc = tuple[int, int]


@dataclass(frozen=True)
class ArcGraph:
    arcs: frozenset[Arc]
    provenance: dict[Arc, MergedFace] = field(compare=False)

    def out_arcs(self, u: int) -> list[Arc]:
        return sorted(a for a in self.arcs if a[0] == u)

    def outdegree(self, u: int) -> int:
        return sum(1 for a in self.arcs if a[0] == u)

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)


def build_arc_graph(g: SkeletonGraph) -> ArcGraph:
    arcs = set()
    prov = {}
    for a, b in g.interior_edges:
        mf = merged_face(g, a, b)
        for tail, head in ((a, b), (b, a)):
            if tail in mf.reflex_at:
                arcs.add((tail, head))
                prov[(tail, head)] = mf
    return ArcGraph(frozenset(arcs), prov)


def check_remarks(g: SkeletonGraph, a: ArcGraph) -> list[str]:
    """Structural facts about the arc graph; an empty list means all hold.

    (1) outdegree <= 3; (2) hull vertices have outdegree 0; (3) an interior
    vertex has outdegree 3 iff it has degree 3; (4) two out-arcs of the same
    vertex lie on a common face.
    """
    found = []
    faces_at: dict[int, list[set]] = {}
    for f in g.internal_faces:
        fs = set(f)
        for v in f:
            faces_at.setdefault(v, []).append(fs)
    for u in range(g.base.n):
        outs = a.out_arcs(u)
        if len(outs) > 3:
            found.append(f"remark1: vertex {u} has outdegree {len(outs)}")
        if g.base.is_hull_vertex(u):
            if outs:
                found.append(f"remark2: hull vertex {u} has out-arcs {outs}")
        elif (len(outs) == 3) != (g.degree(u) == 3):
            found.append(f"remark3: interior vertex {u} has degree {g.degree(u)} and outdegree {len(outs)}")
        for i, (_, v) in enumerate(outs):
            for _, w in outs[i + 1:]:
                if not any(v in fs and w in fs and u in fs for fs in faces_at.get(u, [])):
                    found.append(f"remark4: arcs {u}->{v} and {u}->{w} share no face")
    return found


def has_deletable_edge(g: SkeletonGraph) -> bool:
    return any(is_deletable(g, e) for e in g.interior_edges)


def compute_N(g: SkeletonGraph, a: ArcGraph) -> dict[Arc, BlockWitness]:
    """Non-contractible arcs, each with its canonical blocking witness."""
    out = {}
    for u, v in a.sorted_arcs():
        if g.base.is_hull_vertex(u):
            continue
        w = lemma1_witness(g, u, v)
        if w is not None:
            out[(u, v)] = w
    return out


def compute_f(g: SkeletonGraph, a: ArcGraph, N: dict[Arc, BlockWitness]) -> dict[Arc, Arc]:
    """f(u->v) = x->u where x is the blocking vertex of the witness for u->v."""
    if has_deletable_edge(g):
        raise ValueError("f is only defined on decompositions without deletable edges")
    f = {}
    for (u, v), w in N.items():
        image = (w.x, u)
        if image not in a.arcs:
            raise ProofCheckError(
                f"f({u}->{v}) = {w.x}->{u} is not an arc",
                {"arc": [u, v], "witness": w.to_dict()},
            )
        f[(u, v)] = image
    return f


def compute_U(f: dict[Arc, Arc]) -> set[int]:
    """Tails u with two arcs u->v, u->w in N sharing an f-image."""
    by_image: dict[Arc, list[Arc]] = {}
    for arc, image in f.items():
        by_image.setdefault(image, []).append(arc)
    return {arcs[0][0] for arcs in by_image.values() if len(arcs) >= 2}


def collisions(f: dict[Arc, Arc]) -> dict[Arc, list[Arc]]:
    by_image: dict[Arc, list[Arc]] = {}
    for arc, image in sorted(f.items()):
        by_image.setdefault(image, []).append(arc)
    return {img: arcs for img, arcs in by_image.items() if len(arcs) >= 2}


def compute_B(g: SkeletonGraph, a: ArcGraph) -> set[Arc]:
    return {arc for arc in a.arcs if g.base.is_hull_vertex(arc[1])}


def compute_g(g: SkeletonGraph, a: ArcGraph, U: set[int], f: dict[Arc, Arc]) -> dict[int, Arc]:
    """Escape arcs for the collision tails, chosen so that they avoid Im(f) and B.

    degree(u) > 3: g(u) = z->u for the smallest neighbor z outside {v, w, x};
    degree(u) == 3: g(u) = u->x.
    """
    if not U:
        return {}
    image = set(f.values())
    B = compute_B(g, a)
    out = {}
    coll = collisions(f)
    for u in sorted(U):
        (x, _), arcs = next((img, arcs) for img, arcs in sorted(coll.items()) if img[1] == u)
        v, w = arcs[0][1], arcs[1][1]
        if g.degree(u) > 3:
            z = min(n for n in g.adjacency[u] if n not in (v, w, x))
            choice = (z, u)
        else:
            choice = (u, x)
        details = {"u": u, "v": v, "w": w, "x": x, "g": list(choice)}
        if choice not in a.arcs:
            raise ProofCheckError(f"g({u}) = {choice} is not an arc", details)
        if choice in image:
            raise ProofCheckError(f"g({u}) = {choice} lies in Im(f)", details)
        if choice in B:
            raise ProofCheckError(f"g({u}) = {choice} lies in B", details)
        out[u] = choice
    return out


@dataclass
class CertificateReport:
    arcs: frozenset[Arc]
    N: dict[Arc, BlockWitness]
    f: dict[Arc, Arc]
    U: set[int]
    g: dict[int, Arc]
    B: set[Arc]

    @property
    def accounting(self) -> dict:
        im_f = set(self.f.values())
        im_g = set(self.g.values())
        bound = len(self.arcs) - len(im_g) - len(self.B)
        return {
            "A": len(self.arcs),
            "N": len(self.N),
            "Im_f": len(im_f),
            "U": len(self.U),
            "Im_g": len(im_g),
            "B": len(self.B),
            "N_minus_U": len(self.N) - len(self.U),
            "bound": bound,
            "Im_f_within_bound": len(im_f) <= bound,
            # the proof needs N == A and |Im f| = |N| - |U| <= bound, which is impossible
            "contradiction_reached": len(self.N) == len(self.arcs) and len(im_f) <= bound,
        }

    def to_dict(self) -> dict:
        return {
            "N": [list(a) for a in sorted(self.N)],
            "witnesses": {f"{u}->{v}": w.to_dict() for (u, v), w in sorted(self.N.items())},
            "f": {f"{u}->{v}": list(img) for (u, v), img in sorted(self.f.items())},
            "U": sorted(self.U),
            "g": {str(u): list(arc) for u, arc in sorted(self.g.items())},
            "B": [list(a) for a in sorted(self.B)],
            "accounting": self.accounting,
        }


def certificate_report(g: SkeletonGraph, a: ArcGraph | None = None) -> CertificateReport:
    """Compute N, f, U, g and B and check every step of the counting argument.

    Requires a decomposition without deletable edges. Raises
    :class:`ProofCheckError` on the first failed step.
    """
    if a is None:
        a = build_arc_graph(g)
    N = compute_N(g, a)
    f = compute_f(g, a, N)
    for (u, v), (x, t) in f.items():
        if t != u or x in (u, v):
            raise ProofCheckError(f"f({u}->{v}) = {x}->{t} is not a path of length 2 through {u}")
    counts: dict[Arc, int] = {}
    for img in f.values():
        counts[img] = counts.get(img, 0) + 1
    if counts and max(counts.values()) > 2:
        raise ProofCheckError("three arcs of N share an f-image", {"counts": {str(k): c for k, c in counts.items()}})
    U = compute_U(f)
    if len(set(f.values())) != len(N) - len(U):
        raise ProofCheckError("|Im f| != |N| - |U|")
    gmap = compute_g(g, a, U, f)
    B = compute_B(g, a)
    if B & set(f.values()):
        raise ProofCheckError(f"B meets Im(f): {sorted(B & set(f.values()))}")
    if len(g.internal_faces) >= 2 and len(B) < 3:
        raise ProofCheckError(f"|B| = {len(B)} < 3")
    return CertificateReport(a.arcs, N, f, U, gmap, B)


class DeletableEdge(NamedTuple):
    edge: Edge


class ContractibleArc(NamedTuple):
    u: int
    v: int


class ContradictionReport(NamedTuple):
    report: CertificateReport


Certificate = Union[DeletableEdge, ContractibleArc, ContradictionReport]


def theorem_certificate(g: SkeletonGraph) -> Certificate:
    """A deletable edge, else a contractible arc, else the failed accounting.

    A ContradictionReport can only come out of a bug.
    """
    if len(g.internal_faces) < 2:
        raise ValueError("certificate needs a decomposition with at least two polygons")
    for e in g.interior_edges:
        if is_deletable(g, e):
            return DeletableEdge(e)
    a = build_arc_graph(g)
    for u, v in a.sorted_arcs():
        if not g.base.is_hull_vertex(u) and lemma1_witness(g, u, v) is None:
            return ContractibleArc(u, v)
    try:
        report = certificate_report(g, a)
    except ProofCheckError as exc:
        raise ProofCheckError(f"no certificate and the accounting broke: {exc}", exc.details) from exc
    return ContradictionReport(report)
