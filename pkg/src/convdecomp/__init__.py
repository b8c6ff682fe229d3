"""Convex decompositions of planar point sets: exact predicates, edge deletion
and contraction, the reflex-arc certificate, and reduction to the hull."""

from .arc_graph import (
    ArcGraph,
    CertificateReport,
    ContractibleArc,
    ContradictionReport,
    DeletableEdge,
    build_arc_graph,
    certificate_report,
    check_remarks,
    theorem_certificate,
)
from .decomposition import PointSet, SkeletonGraph, ValidationReport, build, validate
from .edge_ops import (
    BlockWitness,
    MergedFace,
    contract_edge,
    delete_edge,
    is_contractible,
    is_deletable,
    lemma1_witness,
    merged_face,
)
from .geom import Point, Ray, orientation
from .oracle import GenConfig, enumerate_all_decompositions, gen_decomposition, gen_points, triangulate
from .reduce import ReductionTrace, reduce_to_hull, replay, simplify_deletions

__version__ = "0.1.0"
