#!/usr/bin/env python3
"""Compare the exact orbifold determinant against the small-radius expansion
and against the reference expansion it disagrees with.

The residual column should shrink like eta^2; the reference residual should
flatten out at a w-dependent constant instead of vanishing.
"""

import argparse
import math

from conedet import fp_asymptotics_reference, logdet_orbifold_cone, small_eta_asymptotics


def sweep(w: int, eta_min: float, eta_max: float, count: int) -> None:
    step = (math.log(eta_max) - math.log(eta_min)) / (count - 1)
    print(f"w = {w}")
    print(f"{'eta':>10} {'exact':>22} {'residual':>13} {'ref residual':>13}")
    for k in range(count):
        eta = math.exp(math.log(eta_min) + k * step)
        exact = logdet_orbifold_cone(w, eta).value
        res = exact - small_eta_asymptotics(w, eta)
        ref_res = exact - fp_asymptotics_reference(w, eta)
        print(f"{eta:>10.2e} {exact:>22.15f} {res:>13.3e} {ref_res:>13.3e}")
    print()


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--w", type=int, nargs="+", default=[1, 2, 3, 5])
    ap.add_argument("--eta-min", type=float, default=1e-4)
    ap.add_argument("--eta-max", type=float, default=0.5)
    ap.add_argument("--count", type=int, default=8)
    args = ap.parse_args()
    for w in args.w:
        sweep(w, args.eta_min, args.eta_max, args.count)


if __name__ == "__main__":
    main()
