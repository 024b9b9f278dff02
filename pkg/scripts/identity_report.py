#!/usr/bin/env python3
"""Run the full cross-formula identity suite and print one line per identity.

Useful while editing any determinant formula: every closed form here is
reachable along at least two independent routes, so a typo in one route
shows up as a broken identity rather than silently wrong numbers.
"""

import argparse
import sys

from conedet import verify_identities


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tol", type=float, default=1e-8)
    args = ap.parse_args()

    reports = verify_identities(tol=args.tol)
    width = max(len(r.identity_name) for r in reports)
    failures = 0
    for r in reports:
        status = "ok" if r.passed else "FAIL"
        print(f"{r.identity_name:<{width}}  {status:>4}  |lhs-rhs| = {r.abs_diff:.3e}  (tol {r.tolerance:.1e})")
        failures += not r.passed
    print(f"{len(reports) - failures}/{len(reports)} passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
