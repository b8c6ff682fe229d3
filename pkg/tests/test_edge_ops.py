from fractions import Fraction

import pytest
from hypothesis import given

from convdecomp.decomposition import validate
from convdecomp.edge_ops import (
    blocking_witnesses,
    contract_edge,
    contraction_candidates,
    delete_edge,
    is_contractible,
    is_contractible_by_validation,
    is_deletable,
    is_deletable_by_validation,
    lemma1_witness,
    merged_face,
)
from convdecomp.errors import ContractionPreconditionError, NotContractibleError, NotDeletableError
from convdecomp.geom import Point, point_in_triangle_interior
from convdecomp.samples import B2, D2, E, U, V, X, Y

from conftest import decompositions


def cyclic_eq(a, b):
    return len(a) == len(b) and any(tuple(a[i:]) + tuple(a[:i]) == tuple(b) for i in range(len(a)))


def test_merged_face_square(s1):
    mf = merged_face(s1, 0, 2)
    assert cyclic_eq(mf.boundary, (0, 1, 2, 3))
    assert mf.reflex_at == frozenset()


def test_merged_face_s3_uv(s3):
    mf = merged_face(s3, U, V)
    assert cyclic_eq(mf.boundary, (E, U, X, B2, V, D2))
    # at u: (u-E) x (x-u) = (4,2) x (2,-1) = -8; at v: (v-B2) x (D2-v) = (-6,-1) x (-4,1) = -10
    assert mf.reflex_at == {U, V}


def test_merged_face_s3_xu(s3):
    mf = merged_face(s3, X, U)
    assert cyclic_eq(mf.boundary, (E, Y, X, B2, V, U))
    # at x: (x-Y) x (B2-x) = (-3,2) x (4,7) = -29; at u: (u-v) x (E-u) = (0,-5) x (-4,-2) = -20
    assert mf.reflex_at == {X, U}


def test_merged_face_rejects_hull_edge(s1):
    with pytest.raises(ValueError):
        merged_face(s1, 0, 1)


def test_deletability_examples(s1, s2, s3):
    assert is_deletable(s1, 0, 2)
    assert not is_deletable(s3, U, V)
    assert is_deletable(s2, 4, 0)
    # S2 merged quad D, A, B, u: at u, (u-B) x (D-u) = (-3,4) x (-5,4) = 8
    assert cyclic_eq(merged_face(s2, 0, 4).boundary, (3, 0, 1, 4))


def test_delete_edge_examples(s1, s2, s3):
    g = delete_edge(s1, 0, 2)
    assert g.internal_faces == [(0, 1, 2, 3)]
    g = delete_edge(s2, 0, 4)
    assert g.edges == s2.edges - {(0, 4)} and len(g.internal_faces) == 3 and validate(g).valid
    with pytest.raises(NotDeletableError):
        delete_edge(s3, U, V)


def test_contract_s2_onto_corner(s2, s1):
    res = contract_edge(s2, 4, 0)
    assert res.graph.edges == s1.edges
    assert res.remap == {0: 0, 1: 1, 2: 2, 3: 3}
    res = contract_edge(s2, 4, 2)
    assert res.graph.edges == s1.edges  # uA -> CA new, uB and uD merge into hull edges


def test_contract_s3_uv_fails(s3):
    with pytest.raises(NotContractibleError) as exc:
        contract_edge(s3, U, V)
    assert not exc.value.report.valid


def test_contract_preconditions(s1, s3):
    with pytest.raises(ContractionPreconditionError):
        contract_edge(s1, 0, 2)
    with pytest.raises(ContractionPreconditionError):
        contract_edge(s3, U, B2)  # not an edge
    with pytest.raises(ContractionPreconditionError):
        lemma1_witness(s1, 0, 2)


def test_contract_remaps_indices(s3):
    res = contract_edge(s3, X, Y)
    assert res.remap == {0: 0, 1: 1, 2: 2, 3: 3, 5: 4, 6: 5}
    assert res.graph.base.n == 6 and validate(res.graph).valid


def test_s3_witness(s3):
    w = lemma1_witness(s3, U, V)
    assert (w.y, w.x) == (Y, X)
    assert w.u_t == Point(0, Fraction(1, 3))
    assert w.t == Fraction(1, 15)
    # brute-force emptiness of triangle (x, u_t, u) over all seven points
    pts = s3.points
    assert not any(point_in_triangle_interior(p, pts[X], w.u_t, pts[U]) for p in pts)
    assert not is_contractible(s3, U, V)


def test_s2_contractions(s2):
    assert lemma1_witness(s2, 4, 0) is None
    assert is_contractible(s2, 4, 0) and is_contractible(s2, 4, 2)


def test_witness_order_is_canonical(s3):
    ws = blocking_witnesses(s3, U, V)
    keys = [(w.t, w.x, w.y) for w in ws]
    assert keys == sorted(keys)


@given(decompositions())
def test_deletability_equivalence(g):
    for e in g.interior_edges:
        mf = merged_face(g, e)
        assert mf.reflex_vertices <= set(e)
        assert is_deletable(g, e) == is_deletable_by_validation(g, e)
        if is_deletable(g, e):
            h = delete_edge(g, e)
            assert len(h.edges) == len(g.edges) - 1
            assert len(h.internal_faces) == len(g.internal_faces) - 1


@given(decompositions(max_n=12))
def test_lemma1_equivalence(g):
    for u, v in contraction_candidates(g):
        w = lemma1_witness(g, u, v)
        assert (w is None) == is_contractible_by_validation(g, u, v)
        if w is None:
            assert contract_edge(g, u, v).graph.base.n == g.base.n - 1
        else:
            pts = g.points
            assert 0 < w.t < 1
            assert not point_in_triangle_interior(pts[v], pts[w.x], w.u_t, pts[u])
