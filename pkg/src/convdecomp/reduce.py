"""Reduce a decomposition to the bare hull: contractions first, then deletions."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Literal

from .decomposition import Edge, SkeletonGraph, edge, validate
from .arc_graph import build_arc_graph
from .edge_ops import (
    contract_edge,
    contraction_candidates,
    is_contractible,
    is_deletable,
)
from .errors import NotContractibleError, ProofCheckError
from .fileio import dumps, loads, snapshot_hash

Strategy = Literal["lexicographic-min", "first-found"]
STRATEGIES = ("lexicographic-min", "first-found")


@dataclass(frozen=True)
class ReductionStep:
    kind: Literal["contract", "delete"]
    # contract: (u, v) meaning u is merged into v; delete: the edge
    pair: tuple[int, int]
    before: str  # snapshot hash of the decomposition the step applies to

    def to_dict(self):
        if self.kind == "contract":
            return {"kind": "contract", "u": self.pair[0], "v": self.pair[1], "before": self.before}
        return {"kind": "delete", "edge": list(self.pair), "before": self.before}

    @classmethod
    def from_dict(cls, d):
        if d["kind"] == "contract":
            return cls("contract", (int(d["u"]), int(d["v"])), d["before"])
        if d["kind"] == "delete":
            a, b = d["edge"]
            return cls("delete", (int(a), int(b)), d["before"])
        raise ValueError(f"unknown step kind {d['kind']!r}")

    def __str__(self):
        if self.kind == "contract":
            return f"Contract({self.pair[0]}->{self.pair[1]})"
        return f"Delete({self.pair[0]}-{self.pair[1]})"


@dataclass(frozen=True)
class ReductionTrace:
    initial: SkeletonGraph
    steps: tuple[ReductionStep, ...]
    final: SkeletonGraph

    @property
    def contractions(self) -> int:
        return sum(s.kind == "contract" for s in self.steps)

    @property
    def deletions(self) -> int:
        return sum(s.kind == "delete" for s in self.steps)

    def to_json(self) -> str:
        doc = {
            "initial": dumps(self.initial),
            "steps": [s.to_dict() for s in self.steps],
            "final": dumps(self.final),
            "final_hull": list(self.final.base.hull),
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReductionTrace":
        doc = json.loads(text)
        return cls(
            loads(doc["initial"], check=False),
            tuple(ReductionStep.from_dict(s) for s in doc["steps"]),
            loads(doc["final"], check=False),
        )


def simplify_deletions(g: SkeletonGraph) -> SkeletonGraph:
    """Delete the smallest deletable interior edge until none is left."""
    while True:
        e = next((e for e in g.interior_edges if is_deletable(g, e)), None)
        if e is None:
            return g
        g = g.with_edges(g.edges - {e})


def find_contractible(g: SkeletonGraph, strategy: Strategy = "lexicographic-min") -> tuple[int, int] | None:
    """A directed interior edge (u, v) with u interior that contracts cleanly.

    ``lexicographic-min`` returns the smallest such (u, v). ``first-found``
    tries the arcs of the reflex digraph first, then the remaining directed
    edges, and returns the first hit.
    """
    candidates = contraction_candidates(g)
    if strategy == "first-found":
        arcs = build_arc_graph(g).arcs
        candidates = [c for c in candidates if c in arcs] + [c for c in candidates if c not in arcs]
    elif strategy != "lexicographic-min":
        raise ValueError(f"unknown strategy {strategy!r}")
    for u, v in candidates:
        if is_contractible(g, u, v):
            return (u, v)
    return None


def reduce_to_hull(g: SkeletonGraph, strategy: Strategy = "lexicographic-min") -> ReductionTrace:
    report = validate(g)
    if not report.valid:
        raise ValueError(f"not a convex decomposition: {report.summary()}")
    initial = g
    steps = []
    while g.interior_points:
        pick = find_contractible(g, strategy)
        if pick is None:
            raise ProofCheckError(
                f"no contractible edge although {len(g.interior_points)} interior points remain",
                {"decomposition": dumps(g)},
            )
        u, v = pick
        steps.append(ReductionStep("contract", (u, v), snapshot_hash(g)))
        try:
            g = contract_edge(g, u, v).graph
        except NotContractibleError as exc:
            raise ProofCheckError(f"witness search and validation disagree on {u}->{v}: {exc}") from exc
    for e in list(g.interior_edges):
        if not is_deletable(g, e):
            raise ProofCheckError(f"interior edge {e} of a decomposition without interior points is not deletable")
        steps.append(ReductionStep("delete", e, snapshot_hash(g)))
        g = g.with_edges(g.edges - {e})
        if not validate(g).valid:
            raise ProofCheckError(f"deleting {e} produced an invalid decomposition")
    return ReductionTrace(initial, tuple(steps), g)


@dataclass(frozen=True)
class ReplayResult:
    ok: bool
    failed_step: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def replay(trace: ReductionTrace) -> ReplayResult:
    """Re-run every step from the initial decomposition, validating as we go.

    Each step is checked independently of the witness machinery: contractions
    and deletions are applied and the result is validated from scratch.
    """
    g = trace.initial
    report = validate(g)
    if not report.valid:
        return ReplayResult(False, None, f"initial decomposition invalid: {report.summary()}")
    interior = len(g.interior_points)
    seen_delete = False
    for i, step in enumerate(trace.steps):
        if step.kind == "delete":
            seen_delete = True
        elif seen_delete:
            return ReplayResult(False, i, "contraction after a deletion")
    for i, step in enumerate(trace.steps):
        if snapshot_hash(g) != step.before:
            return ReplayResult(False, i, "snapshot hash mismatch")
        a, b = step.pair
        if step.kind == "contract":
            try:
                g = contract_edge(g, a, b).graph
            except (ValueError, KeyError) as exc:
                return ReplayResult(False, i, f"illegal contraction: {exc}")
        else:
            if not g.is_interior_edge(a, b):
                return ReplayResult(False, i, f"{edge(a, b)} is not an interior edge")
            g = g.with_edges(g.edges - {edge(a, b)})
            report = validate(g)
            if not report.valid:
                return ReplayResult(False, i, f"deletion leaves an invalid decomposition: {report.summary()}")
    if trace.contractions != interior:
        return ReplayResult(False, None, f"{trace.contractions} contractions for {interior} interior points")
    if g.interior_edges or g.interior_points:
        return ReplayResult(False, None, "final state is not the bare hull")
    if dumps(g) != dumps(trace.final):
        return ReplayResult(False, None, "final state differs from the recorded one")
    return ReplayResult(True)


def deleted_edges(trace: ReductionTrace) -> list[Edge]:
    return [s.pair for s in trace.steps if s.kind == "delete"]
