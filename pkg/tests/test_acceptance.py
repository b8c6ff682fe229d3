"""Acceptance criteria, each checked at zero tolerance.

One summary line per criterion is printed at the end of the pytest run
(see ``pytest_terminal_summary`` in conftest.py).
"""
import subprocess
import sys
from fractions import Fraction

import pytest

from convdecomp import checks
from convdecomp.arc_graph import ContradictionReport, build_arc_graph, theorem_certificate
from convdecomp.decomposition import validate
from convdecomp.edge_ops import lemma1_witness, merged_face
from convdecomp.geom import Point
from convdecomp.oracle import GenConfig, check_nru_bound, corpus_config, enumerate_all_decompositions, gen_decomposition, gen_points
from convdecomp.samples import E, U, V, X, Y, blocked_quad

CORPUS_SIZE = 1000
MAX_N = 25
ENUM_SETS = 60

RESULTS: list[str] = []


def record(number, ok, detail):
    RESULTS.append(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture(scope="module")
def corpus():
    """1000 seeded decompositions with n <= 25 and at least one interior point,
    each run through the full property suite once."""
    out = []
    seed = 0
    while len(out) < CORPUS_SIZE:
        cfg = corpus_config(seed, max_n=MAX_N)
        g = gen_decomposition(cfg)
        seed += 1
        if not g.interior_points:
            continue
        out.append((g, checks.run_all(g, label=f"seed={cfg.seed} n={cfg.n}")))
    return out


@pytest.fixture(scope="module")
def enumerated():
    """Every convex decomposition of 60 general-position point sets with n in 4..6."""
    out = []
    for seed in range(ENUM_SETS):
        n = (4, 5, 6)[seed % 3]
        ps = gen_points(GenConfig(n=n, range=50, seed=seed))
        out.append(enumerate_all_decompositions(ps))
    return out


def _failures(corpus, key):
    return [f"{r.label}: {m}" for _, r in corpus for m in r.findings.get(key, [])]


@pytest.mark.slow
def test_01_theorem_exhaustive(enumerated):
    kinds = {"DeletableEdge": 0, "ContractibleArc": 0, "ContradictionReport": 0}
    for decs in enumerated:
        for g in decs:
            if len(g.internal_faces) >= 2:
                kinds[type(theorem_certificate(g)).__name__] += 1
    ok = len(enumerated) >= 50 and kinds["ContradictionReport"] == 0
    record(1, ok, f"{len(enumerated)} point sets, {sum(map(len, enumerated))} decompositions, {kinds}")
    assert ok


@pytest.mark.slow
def test_02_corollary1(corpus):
    bad = _failures(corpus, "corollary1")
    with_deletable = sum(r.had_deletable for _, r in corpus)
    record(2, not bad, f"{len(corpus)} instances with interior points ({with_deletable} still had deletable edges), {len(bad)} without a contractible edge")
    assert len(corpus) == CORPUS_SIZE and all(g.base.n <= MAX_N for g, _ in corpus)
    assert not bad, bad[:5]


@pytest.mark.slow
def test_03_lemma1_equivalence(corpus):
    bad = _failures(corpus, "lemma1")
    total = sum(r.counts["lemma1"] for _, r in corpus)
    record(3, not bad, f"{total} directed interior edges, {len(bad)} disagreements")
    assert not bad, bad[:5]


@pytest.mark.slow
def test_04_deletability_equivalence(corpus):
    bad = _failures(corpus, "deletability")
    total = sum(r.counts["deletability"] for _, r in corpus)
    record(4, not bad, f"{total} interior edges, {len(bad)} disagreements")
    assert not bad, bad[:5]


@pytest.mark.slow
def test_05_remarks(corpus):
    bad = _failures(corpus, "remarks")
    record(5, not bad, f"{len(bad)} violations")
    assert not bad, bad[:5]


@pytest.mark.slow
def test_06_counting(corpus):
    bad = _failures(corpus, "counting")
    status = {}
    for _, r in corpus:
        status[r.counting_status] = status.get(r.counting_status, 0) + 1
    record(6, not bad, f"status counts {dict(sorted(status.items()))} (vacuous = U empty)")
    assert not bad, bad[:5]


@pytest.mark.slow
def test_07_reduction(corpus):
    bad = _failures(corpus, "reduction")
    record(7, not bad, f"{len(corpus)} reductions, {len(bad)} failures")
    assert not bad, bad[:5]


@pytest.mark.slow
def test_08_nru_bound(corpus, enumerated):
    bad = _failures(corpus, "nru")
    enum_bad = sum(not check_nru_bound(g) for decs in enumerated for g in decs)
    record(8, not bad and not enum_bad, f"corpus failures {len(bad)}, enumerated failures {enum_bad}")
    assert not bad and not enum_bad


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "convdecomp", *args], check=True, capture_output=True)


def test_09_determinism(tmp_path):
    outputs = []
    for run in ("a", "b"):
        d = tmp_path / run
        d.mkdir()
        _cli("gen", "--n", "20", "--seed", "11", "--delete-prob", "0.5", "-o", str(d / "g.txt"))
        _cli("reduce", str(d / "g.txt"), "--strategy", "first-found", "-o", str(d / "t.json"))
        _cli("viz", str(d / "g.txt"), "--arcs", "--witness", "-o", str(d / "g.svg"))
        outputs.append([(d / f).read_bytes() for f in ("g.txt", "t.json", "g.svg")])
    ok = outputs[0] == outputs[1]
    record(9, ok, "decomposition file, trace JSON and SVG byte-identical across two runs")
    assert ok


def test_10_s3():
    g = blocked_quad()
    arcs = build_arc_graph(g).arcs
    w = lemma1_witness(g, U, V)
    checks_ = {
        "validates": validate(g).valid,
        "reflex uv": merged_face(g, U, V).reflex_at == {U, V},
        "reflex xu": merged_face(g, X, U).reflex_at == {X, U},
        "arcs": {(U, V), (U, X), (U, E), (X, U)} <= arcs,
        "witness": w is not None and (w.y, w.x, w.u_t) == (Y, X, Point(0, Fraction(1, 3))),
        "certificate": not isinstance(theorem_certificate(g), ContradictionReport),
    }
    ok = all(checks_.values())
    record(10, ok, ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in checks_.items()))
    assert ok, checks_
