"""Sweep girth targets on the all-ones (3,4) base and report the smallest
tailbiting length found per target, plus certified girth and distance."""

from __future__ import annotations

import argparse
import time

from girthforge.lifting import TailbitingCode
from girthforge.mindist import iterative_deepening_distance
from girthforge.search import SearchConfig, search


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=4)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--budget", type=float, default=60.0)
    parser.add_argument("--girths", default="6,8,10,12")
    parser.add_argument("--m-max", type=int, default=120)
    args = parser.parse_args()

    for g in (int(x) for x in args.girths.split(",")):
        cfg = SearchConfig(base={"kind": "all_ones", "j": 3, "k": args.k},
                           girth=g, m_max=args.m_max, seed=args.seed,
                           budget_secs=args.budget)
        t0 = time.time()
        result = search(cfg)
        code = TailbitingCode(result.degree, result.m)
        dist = iterative_deepening_distance(code, 8, 26)
        print(f"g={g}: M={result.m} (n={code.n}, k={code.k}) girth={result.girth} "
              f"d_min={dist} attempts={result.attempts} wall={time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
