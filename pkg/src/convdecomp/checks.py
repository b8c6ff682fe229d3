"""Per-instance property suite shared by the ``check`` command and the tests.

Each check returns a list of findings; an empty list means the property held.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .arc_graph import build_arc_graph, certificate_report, check_remarks, theorem_certificate, ContradictionReport
from .decomposition import SkeletonGraph, validate
from .edge_ops import (
    contraction_candidates,
    is_contractible,
    is_contractible_by_validation,
    is_deletable,
    is_deletable_by_validation,
)
from .errors import ProofCheckError
from .oracle import check_nru_bound
from .reduce import reduce_to_hull, replay, simplify_deletions


def corollary1(g: SkeletonGraph) -> list[str]:
    """With an interior point present, some directed interior edge contracts."""
    if not g.interior_points:
        return []
    if any(is_contractible(g, u, v) for u, v in contraction_candidates(g)):
        return []
    return ["no contractible edge despite interior points"]


def lemma1_equivalence(g: SkeletonGraph) -> tuple[int, list[str]]:
    """Witness absence against contract-and-validate, over every candidate."""
    cands = contraction_candidates(g)
    bad = [
        f"{u}->{v}: witness says {w}, validation says {c}"
        for u, v in cands
        if (w := is_contractible(g, u, v)) != (c := is_contractible_by_validation(g, u, v))
    ]
    return len(cands), bad


def deletability_equivalence(g: SkeletonGraph) -> tuple[int, list[str]]:
    bad = [
        f"{e}: reflex test says {r}, validation says {d}"
        for e in g.interior_edges
        if (r := is_deletable(g, e)) != (d := is_deletable_by_validation(g, e))
    ]
    return len(g.interior_edges), bad


def remarks(g: SkeletonGraph) -> list[str]:
    return check_remarks(g, build_arc_graph(g))


def counting(g: SkeletonGraph) -> tuple[str, list[str]]:
    """Run the certificate accounting on ``simplify_deletions(g)``.

    Returns a status ("skipped" for a single polygon, "vacuous" when U is
    empty, "checked" otherwise) and the findings.
    """
    s = simplify_deletions(g)
    if len(s.internal_faces) < 2:
        return "skipped", []
    try:
        report = certificate_report(s)
    except ProofCheckError as exc:
        return "failed", [str(exc)]
    return ("checked" if report.U else "vacuous"), []


def certificate(g: SkeletonGraph) -> list[str]:
    if len(g.internal_faces) < 2:
        return []
    try:
        cert = theorem_certificate(g)
    except ProofCheckError as exc:
        return [str(exc)]
    if isinstance(cert, ContradictionReport):
        return [f"contradiction report: {cert.report.accounting}"]
    return []


def reduction(g: SkeletonGraph, strategy: str = "lexicographic-min") -> list[str]:
    try:
        trace = reduce_to_hull(g, strategy)
    except ProofCheckError as exc:
        return [str(exc)]
    found = []
    if trace.contractions != len(g.interior_points):
        found.append(f"{trace.contractions} contractions for {len(g.interior_points)} interior points")
    final = trace.final
    if final.interior_edges or final.interior_points or len(final.internal_faces) != 1:
        found.append("final state is not the hull boundary")
    if sorted(final.points) != sorted(g.points[i] for i in g.base.hull):
        found.append("final point set differs from the hull vertices")
    result = replay(trace)
    if not result:
        found.append(f"replay failed at step {result.failed_step}: {result.reason}")
    return found


def nru_bound(g: SkeletonGraph) -> list[str]:
    return [] if check_nru_bound(g) else ["more than (3n-2k)/2 polygons but no deletable edge"]


@dataclass
class InstanceResult:
    label: str
    interior_points: int
    had_deletable: bool
    findings: dict[str, list[str]] = field(default_factory=dict)
    counts: dict[str, int] = field(default_factory=dict)
    counting_status: str = ""

    @property
    def ok(self) -> bool:
        return not any(self.findings.values())


def run_all(g: SkeletonGraph, label: str = "") -> InstanceResult:
    res = InstanceResult(label, len(g.interior_points), any(is_deletable(g, e) for e in g.interior_edges))
    report = validate(g)
    res.findings["valid"] = [] if report.valid else [report.summary()]
    if not report.valid:
        return res
    res.findings["corollary1"] = corollary1(g)
    res.counts["lemma1"], res.findings["lemma1"] = lemma1_equivalence(g)
    res.counts["deletability"], res.findings["deletability"] = deletability_equivalence(g)
    res.findings["remarks"] = remarks(g)
    res.counting_status, res.findings["counting"] = counting(g)
    res.findings["certificate"] = certificate(g)
    res.findings["reduction"] = reduction(g)
    res.findings["nru"] = nru_bound(g)
    return res
