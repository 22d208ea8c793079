#!/usr/bin/env python3
"""Sweep curvature densities over (model, k, Im s) and print plot-ready CSV.

Reproduces the headline contrast: corrected weights are flat, bare weights
are curved, and only the commutative bare case is k-independent.

    python3 scripts/curvature_sweep.py --ks 0,1,2,4 --ys 0.5,1,2
"""
import argparse
import csv
import sys

from quantfield import liecore
from quantfield.quantization import ModelSpec, curvature


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ks", default="0,1,2,4")
    ap.add_argument("--ys", default="0.5,1,2")
    args = ap.parse_args()
    ks = [int(v) for v in args.ks.split(",")]
    ys = [float(v) for v in args.ys.split(",")]

    su2 = liecore.su2()
    families = [
        ("su2 corrected", lambda k: ModelSpec.group(su2, k, corrected=True)),
        ("su2 bare", lambda k: ModelSpec.group(su2, k, corrected=False)),
        ("torus1 bare", lambda k: ModelSpec.torus(1, k, corrected=False)),
        ("circle r=1 bare",
         lambda k: ModelSpec.truncated_circle(1.0, k, corrected=False)),
    ]
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["family", "k", "im_s", "kappa"])
    for label, make in families:
        for k in ks:
            for y in ys:
                c = curvature(make(k), complex(0, y))
                writer.writerow([label, k, y, format(c.kappa, ".10g")])
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
