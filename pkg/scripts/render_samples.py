"""Write the sample decompositions S1-S3 as text files and SVG drawings.

    python scripts/render_samples.py out/
"""
import sys
from pathlib import Path

from convdecomp.fileio import dump
from convdecomp.samples import S3_NAMES, SAMPLES
from convdecomp.svg import SvgOptions, render_svg


def main(outdir="samples_out"):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, make in SAMPLES.items():
        g = make()
        dump(g, out / f"{name}.txt", comment=make.__doc__.splitlines()[0])
        labels = S3_NAMES if name == "S3" else None
        svg = render_svg(g, SvgOptions(arcs=True, witnesses=True, labels=labels))
        (out / f"{name}.svg").write_text(svg)
        print(f"wrote {out / name}.txt and .svg")


if __name__ == "__main__":
    main(*sys.argv[1:])
