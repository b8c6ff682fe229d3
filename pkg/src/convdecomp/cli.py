"""Command line interface.

Exit codes: 0 success, 1 invalid input (an ``error:`` JSON line on stderr),
2 internal proof-check failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import checks
from .arc_graph import (
    ContractibleArc,
    DeletableEdge,
    build_arc_graph,
    certificate_report,
    check_remarks,
    has_deletable_edge,
    theorem_certificate,
)
from .decomposition import PointSet, validate
from .edge_ops import is_deletable, lemma1_witness
from .errors import ProofCheckError
from .fileio import dumps, load, parse_points_and_edges
from .oracle import GenConfig, corpus_config, enumerate_all_decompositions, gen_decomposition
from .reduce import STRATEGIES, ReductionTrace, reduce_to_hull, replay, simplify_deletions
from .svg import SvgOptions, render_svg


class InputError(Exception):
    pass


def _write(text: str, path: str | None):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load_valid(path):
    g = load(path)
    report = validate(g)
    if not report.valid:
        raise InputError(f"not a convex decomposition: {report.summary()}")
    return g


def cmd_gen(args):
    cfg = GenConfig(n=args.n, range=args.range, seed=args.seed, delete_prob=args.delete_prob)
    g = gen_decomposition(cfg)
    comment = f"gen n={cfg.n} range={cfg.range} seed={cfg.seed} delete-prob={cfg.delete_prob}"
    _write(dumps(g, comment), args.output)
    return 0


def cmd_validate(args):
    g = load(args.file, check=False)
    report = validate(g)
    if report.valid:
        print(f"valid: n={g.base.n} k={g.base.k} edges={len(g.edges)} faces={len(g.internal_faces)}")
        return 0
    print("invalid")
    for v in report.violations:
        print(f"  {v.kind}: {v.detail}")
    return 1


def _arc_text(w):
    return f"y={w.y} x={w.x} u_t=({w.to_dict()['u_t'][0]}, {w.to_dict()['u_t'][1]}) t={w.to_dict()['t']}"


def cmd_edges(args):
    g = _load_valid(args.file)
    arcs = build_arc_graph(g).arcs
    print(f"{'edge':>9}  {'deletable':>9}  {'arcs':<12}  contractible / witness")
    for a, b in g.interior_edges:
        ea = [f"{t}->{h}" for t, h in ((a, b), (b, a)) if (t, h) in arcs]
        parts = []
        for u, v in ((a, b), (b, a)):
            if g.base.is_hull_vertex(u):
                parts.append(f"{u}->{v}: n/a (hull)")
                continue
            w = lemma1_witness(g, u, v)
            parts.append(f"{u}->{v}: yes" if w is None else f"{u}->{v}: no [{_arc_text(w)}]")
        dele = "yes" if is_deletable(g, a, b) else "no"
        print(f"{a:>4}-{b:<4}  {dele:>9}  {(','.join(ea) or 'none'):<12}  {'; '.join(parts)}")
    return 0


def cmd_arcs(args):
    g = _load_valid(args.file)
    a = build_arc_graph(g)
    for u, v in a.sorted_arcs():
        print(f"{u} -> {v}")
    problems = check_remarks(g, a)
    print(f"# remarks: {'ok' if not problems else '; '.join(problems)}")
    target, note = g, "decomposition has no deletable edges"
    if has_deletable_edge(g):
        target, note = simplify_deletions(g), "report computed after simplify_deletions"
    doc = {"note": note}
    if len(target.internal_faces) >= 2:
        doc.update(certificate_report(target).to_dict())
    else:
        doc["skipped"] = "single polygon"
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.json:
        _write(text, args.json)
    else:
        sys.stdout.write(text)
    return 2 if problems else 0


def cmd_certify(args):
    g = _load_valid(args.file)
    if len(g.internal_faces) < 2:
        raise InputError("certificate needs at least two polygons")
    cert = theorem_certificate(g)
    if isinstance(cert, DeletableEdge):
        doc = {"certificate": "DeletableEdge", "edge": list(cert.edge)}
    elif isinstance(cert, ContractibleArc):
        doc = {"certificate": "ContractibleArc", "u": cert.u, "v": cert.v}
        blocked = {}
        for u, v in build_arc_graph(g).sorted_arcs():
            w = lemma1_witness(g, u, v)
            if w is not None:
                blocked[f"{u}->{v}"] = w.to_dict()
        doc["blocked_arcs"] = blocked
    else:
        print(json.dumps({"certificate": "ContradictionReport", **cert.report.to_dict()}, indent=2, sort_keys=True))
        return 2
    print(json.dumps(doc, indent=2, sort_keys=True))
    return 0


def cmd_reduce(args):
    g = _load_valid(args.file)
    trace = reduce_to_hull(g, args.strategy)
    _write(trace.to_json(), args.output)
    return 0


def cmd_replay(args):
    with open(args.trace) as fh:
        try:
            trace = ReductionTrace.from_json(fh.read())
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise InputError(f"malformed trace: {exc}") from None
    result = replay(trace)
    if result:
        print(f"ok: {len(trace.steps)} steps ({trace.contractions} contractions, {trace.deletions} deletions)")
        return 0
    where = "end" if result.failed_step is None else f"step {result.failed_step}"
    print(f"failed at {where}: {result.reason}")
    return 1


def cmd_enumerate(args):
    with open(args.file) as fh:
        points, _ = parse_points_and_edges(fh.read())
    base = PointSet.from_points(points)
    if base.n > 7:
        raise InputError("enumeration is limited to n <= 7")
    decs = enumerate_all_decompositions(base)
    chunks = [dumps(g, f"decomposition {i + 1} of {len(decs)}") for i, g in enumerate(decs)]
    _write("\n".join(chunks), args.output)
    print(f"{len(decs)} convex decompositions", file=sys.stderr)
    return 0


def cmd_check(args):
    totals = Counter()
    failures = []
    for i in range(args.count):
        seed = args.seed + i
        cfg = corpus_config(seed, max_n=args.max_n)
        res = checks.run_all(gen_decomposition(cfg), label=f"seed={seed} n={cfg.n}")
        totals[res.counting_status] += 1
        for name, found in res.findings.items():
            totals[f"{name}:{'fail' if found else 'ok'}"] += 1
            failures.extend(f"{res.label} {name}: {msg}" for msg in found)
    for key in sorted(totals):
        print(f"{key} {totals[key]}")
    for line in failures:
        print(f"FAIL {line}")
    return 2 if failures else 0


def cmd_viz(args):
    g = _load_valid(args.file)
    opts = SvgOptions(size=args.size, arcs=args.arcs, witnesses=args.witness)
    _write(render_svg(g, opts), args.output)
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="convdecomp", description="Convex decompositions of planar point sets.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="generate a random decomposition")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--range", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--delete-prob", type=float, default=0.0)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("validate", help="check the convex decomposition properties")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("edges", help="classify every interior edge")
    s.add_argument("file")
    s.set_defaults(func=cmd_edges)

    s = sub.add_parser("arcs", help="reflex arc digraph and the N/f/U/g/B report")
    s.add_argument("file")
    s.add_argument("--json", help="write the JSON report here instead of stdout")
    s.set_defaults(func=cmd_arcs)

    s = sub.add_parser("certify", help="deletable edge or contractible arc certificate")
    s.add_argument("file")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("reduce", help="reduce to the hull and emit the trace JSON")
    s.add_argument("file")
    s.add_argument("--strategy", choices=STRATEGIES, default="lexicographic-min")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("replay", help="verify a trace file")
    s.add_argument("trace")
    s.set_defaults(func=cmd_replay)

    s = sub.add_parser("enumerate", help="all convex decompositions of a point set (n <= 7)")
    s.add_argument("file", help="decomposition-format file; its edges are ignored")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("check", help="run the property suite on seeded random instances")
    s.add_argument("--count", type=int, default=20)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-n", type=int, default=25)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("viz", help="render an SVG drawing")
    s.add_argument("file")
    s.add_argument("--arcs", action="store_true")
    s.add_argument("--witness", action="store_true")
    s.add_argument("--size", type=int, default=600)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_viz)
    return p


def run(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except ProofCheckError as exc:
        print("error: " + json.dumps({"kind": "proof-check", "message": str(exc), "details": exc.details}), file=sys.stderr)
        return 2
    except (InputError, ValueError, OSError) as exc:
        print("error: " + json.dumps({"kind": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1


def main():
    sys.exit(run())
