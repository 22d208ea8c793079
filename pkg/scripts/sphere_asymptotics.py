#!/usr/bin/env python3
"""Compare sphere curvature against its large-k prediction
(m-1)(m-3)/(8 (2k+m-1)^2 y^3) and print the convergence table.

    python3 scripts/sphere_asymptotics.py --m 2 --ks 5,10,20,40
"""
import argparse

from quantfield.quantization import ModelSpec, curvature, sphere_asymptote


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=2)
    ap.add_argument("--ks", default="5,10,20,40")
    ap.add_argument("--y", type=float, default=1.0)
    args = ap.parse_args()
    s = complex(0, args.y)
    print(f"{'k':>4s} {'kappa':>14s} {'asymptote':>14s} {'ratio':>9s}")
    for k in (int(v) for v in args.ks.split(",")):
        c = curvature(ModelSpec.sphere(args.m, k), s)
        asym = sphere_asymptote(k, args.m, s)
        ratio = c.kappa / asym if asym != 0.0 else float("nan")
        print(f"{k:4d} {c.kappa:14.6e} {asym:14.6e} {ratio:9.5f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
