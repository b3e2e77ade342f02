"""Exploratory: joint distribution of (pk, mix) over S_n. Prints a matrix with
rows indexed by pk and columns by mix; no claims are attached to it."""
from __future__ import annotations

import argparse
from collections import Counter

from webperm import perms
from webperm.config import Caps


def joint(n: int, caps: Caps) -> Counter:
    return Counter((perms.pk(p), perms.mix(p)) for p in perms.enumerate_perms(n, caps))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("n", type=int, nargs="?", default=6)
    args = ap.parse_args()
    counts = joint(args.n, Caps())
    top = max(max(k) for k in counts)
    print("pk\\mix " + " ".join(f"{j:>6}" for j in range(top + 1)))
    for i in range(top + 1):
        print(f"{i:>6} " + " ".join(f"{counts.get((i, j), 0):>6}" for j in range(top + 1)))
    diagonal = sum(c for (i, j), c in counts.items() if i == j)
    print(f"on the diagonal: {diagonal} of {sum(counts.values())}")


if __name__ == "__main__":
    main()
