"""Write SVGs for a few representative polygons into ``figures/``."""
import argparse
from pathlib import Path

from socs.census import inward_turning_polygon
from socs.core import SolutionTriple
from socs.geometry import construct_chainsaw, validate
from socs.svg import render_svg

FIGURES = [
    ("convex_9_12_14", (9, 12, 14), inward_turning_polygon),
    ("chainsaw_9_12_14", (9, 12, 14), construct_chainsaw),
    ("chainsaw_464_480_495", (464, 480, 495), construct_chainsaw),
    ("chainsaw_59_110_135", (59, 110, 135), construct_chainsaw),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="figures")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, triple, build in FIGURES:
        t = SolutionTriple(*triple)
        path = build(t)
        report = validate(path, t)
        (out / f"{name}.svg").write_text(render_svg(path, f"{t} {name.split('_')[0]}", report))
        print(f"{name}.svg  mu={report.mu}  crossing={report.self_intersecting}  "
              f"side residual={report.max_side_residual:.2e}")


if __name__ == "__main__":
    main()
