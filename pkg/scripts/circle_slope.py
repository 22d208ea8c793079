#!/usr/bin/env python3
"""Truncated-circle curvature: the 1/k correction to the limiting value.

Prints k (kappa_k - kappa_inf), which should approach r/(2 y^3) from above.

    python3 scripts/circle_slope.py --r 1 --ks 10,20,40,80,160
"""
import argparse

from quantfield.quantization import (ModelSpec, curvature,
                                     truncated_circle_kappa_limit)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r", type=float, default=1.0)
    ap.add_argument("--y", type=float, default=1.0)
    ap.add_argument("--ks", default="10,20,40,80,160")
    args = ap.parse_args()
    s = complex(0, args.y)
    kinf = truncated_circle_kappa_limit(args.r, s, corrected=False)
    target = args.r / (2 * args.y ** 3)
    print(f"kappa_inf = {kinf:.8f}, target slope = {target:.6f}")
    for k in (int(v) for v in args.ks.split(",")):
        c = curvature(ModelSpec.truncated_circle(args.r, k, corrected=False), s)
        print(f"k={k:4d}  k*(kappa-kappa_inf) = {k * (c.kappa - kinf):.6f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
