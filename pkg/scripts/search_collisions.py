"""Search seeded random decompositions for f-collisions (nonempty U).

Prints the smallest instances found for each collision kind (tail degree 3
versus degree > 3) in the decomposition text format.

    python scripts/search_collisions.py --count 2000 --max-n 12
"""
import argparse

from convdecomp.arc_graph import build_arc_graph, certificate_report, collisions
from convdecomp.fileio import dumps
from convdecomp.oracle import GenConfig, gen_decomposition
from convdecomp.reduce import simplify_deletions


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--range", type=int, default=60)
    args = ap.parse_args()

    best = {}
    empty_n = None
    for seed in range(args.count):
        n = 5 + seed % (args.max_n - 4)
        g = simplify_deletions(gen_decomposition(GenConfig(n=n, range=args.range, seed=seed, delete_prob=1.0)))
        if len(g.internal_faces) < 2:
            continue
        rep = certificate_report(g)
        if rep.arcs and not rep.N and (empty_n is None or g.base.n < empty_n[1].base.n):
            empty_n = (seed, g)
        for u in rep.U:
            kind = "degree3" if g.degree(u) == 3 else "degree>3"
            if kind not in best or g.base.n < best[kind][1].base.n:
                best[kind] = (seed, g, u)
    for kind, (seed, g, u) in sorted(best.items()):
        rep = certificate_report(g)
        print(f"# {kind} collision at u={u}, seed={seed}, g={rep.g}, f-collisions={collisions(rep.f)}")
        print(dumps(g))
    if empty_n:
        seed, g = empty_n
        print(f"# arcs present but N empty, seed={seed}, arcs={sorted(build_arc_graph(g).arcs)}")
        print(dumps(g))


if __name__ == "__main__":
    main()
