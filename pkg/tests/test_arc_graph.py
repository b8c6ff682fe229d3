from pathlib import Path

import pytest
from hypothesis import given

from convdecomp.arc_graph import (
    ContractibleArc,
    ContradictionReport,
    DeletableEdge,
    build_arc_graph,
    certificate_report,
    check_remarks,
    collisions,
    compute_B,
    compute_f,
    compute_g,
    compute_N,
    compute_U,
    has_deletable_edge,
    theorem_certificate,
)
from convdecomp.edge_ops import is_deletable
from convdecomp.fileio import load
from convdecomp.reduce import simplify_deletions
from convdecomp.samples import E, U, V, X

from conftest import decompositions

DATA = Path(__file__).parent / "data"


def test_square_has_no_arcs(s1):
    a = build_arc_graph(s1)
    assert a.arcs == frozenset()
    assert check_remarks(s1, a) == []
    assert compute_N(s1, a) == {}
    assert compute_B(s1, a) == set()


def test_s3_arcs(s3):
    a = build_arc_graph(s3)
    assert {(U, V), (U, X), (U, E), (X, U)} <= a.arcs
    assert a.outdegree(U) == 3 and s3.degree(U) == 3
    assert check_remarks(s3, a) == []
    assert a.provenance[(U, V)].reflex_at == {U, V}


def test_s2_arcs_leave_only_the_centre(s2):
    a = build_arc_graph(s2)
    assert all(t == 4 for t, _ in a.arcs)
    assert all(a.outdegree(c) == 0 for c in range(4))


def test_s3_counting(s3):
    assert not has_deletable_edge(s3)
    a = build_arc_graph(s3)
    N = compute_N(s3, a)
    assert (U, V) in N
    f = compute_f(s3, a, N)
    assert f[(U, V)] == (X, U)
    assert compute_U(f) == set()
    assert compute_g(s3, a, set(), f) == {}
    B = compute_B(s3, a)
    assert len(B) >= 3 and not B & set(f.values())


def test_compute_f_guards_deletable_edges(s2):
    a = build_arc_graph(s2)
    with pytest.raises(ValueError):
        compute_f(s2, a, compute_N(s2, a))


def test_arcs_without_N():
    g = load(DATA / "arcs_no_N.txt")
    a = build_arc_graph(g)
    assert a.arcs and compute_N(g, a) == {}


def test_collision_degree3():
    g = load(DATA / "collision_degree3.txt")
    rep = certificate_report(g)
    (u,) = rep.U
    assert g.degree(u) == 3
    ((x, head), pair), = collisions(rep.f).items()
    assert head == u and all(arc[0] == u for arc in pair)
    assert rep.g[u] == (u, x)


def test_collision_degree4():
    g = load(DATA / "collision_degree4.txt")
    rep = certificate_report(g)
    (u,) = rep.U
    assert g.degree(u) > 3
    z, head = rep.g[u]
    assert head == u and (z, u) in rep.arcs and (z, u) not in set(rep.f.values())


def test_certificates(s1, s2, s3):
    assert theorem_certificate(s1) == DeletableEdge((0, 2))
    assert theorem_certificate(s2) == DeletableEdge((0, 4))
    cert = theorem_certificate(s3)
    assert isinstance(cert, ContractibleArc)


def test_certificate_needs_two_polygons(s1):
    with pytest.raises(ValueError):
        theorem_certificate(simplify_deletions(s1))


@given(decompositions())
def test_arc_graph_properties(g):
    a = build_arc_graph(g)
    assert check_remarks(g, a) == []
    for u, v in g.interior_edges:
        assert is_deletable(g, u, v) == ((u, v) not in a.arcs and (v, u) not in a.arcs)


@given(decompositions())
def test_counting_on_simplified(g):
    s = simplify_deletions(g)
    if len(s.internal_faces) < 2:
        return
    rep = certificate_report(s)
    images = list(rep.f.values())
    assert all(img[1] == arc[0] for arc, img in rep.f.items())
    assert max((images.count(i) for i in images), default=0) <= 2
    assert len(set(images)) == len(rep.N) - len(rep.U)
    assert not set(rep.g.values()) & (set(images) | rep.B)
    assert len(rep.B) >= 3 and not rep.B & set(images)
    assert not isinstance(theorem_certificate(s), ContradictionReport)
