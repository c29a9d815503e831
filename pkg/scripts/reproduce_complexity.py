"""Print the reduced-tree node and unique-inequality counts for all-ones
(3,K) bases, K = 4..12, g in {8, 10, 12}."""

from __future__ import annotations

import time

from girthforge.bases import all_ones_base
from girthforge.girth import complexity_counts


def main() -> None:
    girths = (8, 10, 12)
    header = "K   " + "   ".join(f"g={g}: N_T/N_L" for g in girths)
    print(header)
    t0 = time.time()
    for k in range(4, 13):
        cells = []
        for g in girths:
            n_t, n_l = complexity_counts(all_ones_base(3, k), g)
            cells.append(f"{n_t}/{n_l}")
        print(f"{k:<3} " + "   ".join(f"{c:<14}" for c in cells))
    print(f"total {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
