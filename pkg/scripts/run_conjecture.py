#!/usr/bin/env python3
"""Reproduce the two-angle pivot search for the best known configuration.

    python scripts/run_conjecture.py [--coarse 1e-3] [--final 1e-7]

With the defaults this converges to an area of 0.2275896755... in well
under a minute; the final step of 1e-7 matches the reference experiment.
"""

import argparse
import time

from wormbound import conjecture_search
from wormbound.output import to_json


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--coarse", type=float, default=1e-3)
    ap.add_argument("--final", type=float, default=1e-7)
    args = ap.parse_args()
    t0 = time.time()
    result = conjecture_search(args.coarse, args.final)
    print(to_json(result.to_dict()))
    print("elapsed: %.1fs" % (time.time() - t0))


if __name__ == "__main__":
    main()
