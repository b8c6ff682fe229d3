"""Distribution of the certificate quantities over seeded random decompositions.

For each instance (after simplify_deletions) reports |A|, |N|, |U|, |B| and the
slack |A| - |Im g| - |B| - |Im f|. The slack is never negative; if every arc
were blocked it would have to be at most -3.

    python scripts/corpus_stats.py --count 300 --max-n 25
"""
import argparse
import statistics

from convdecomp.arc_graph import certificate_report
from convdecomp.oracle import corpus_config, gen_decomposition
from convdecomp.reduce import simplify_deletions


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=300)
    ap.add_argument("--max-n", type=int, default=25)
    args = ap.parse_args()

    rows = []
    for seed in range(args.count):
        g = simplify_deletions(gen_decomposition(corpus_config(seed, args.max_n)))
        if len(g.internal_faces) < 2:
            continue
        acc = certificate_report(g).accounting
        rows.append(acc)
    print(f"instances with >= 2 polygons after simplification: {len(rows)}")
    for key in ("A", "N", "U", "B", "Im_f", "bound"):
        vals = [r[key] for r in rows]
        print(f"{key:>6}: mean {statistics.mean(vals):6.2f}  max {max(vals):3d}")
    print(f"instances with U nonempty: {sum(r['U'] > 0 for r in rows)}")
    print(f"fraction of arcs non-contractible: {sum(r['N'] for r in rows) / sum(r['A'] for r in rows):.3f}")
    print(f"min slack (bound - |Im f|): {min(r['bound'] - r['Im_f'] for r in rows)}")


if __name__ == "__main__":
    main()
