"""Print the small tables: tilde web sets, first-letter counts beside Seidel
entries, chord multiplicities and gamma coefficients."""
from __future__ import annotations

import argparse

from webperm import chord, gamma, grid, perms, seq
from webperm.config import Caps


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--max-chords", type=int, default=6)
    args = ap.parse_args()
    caps = Caps(max_n=args.max_n, max_chords=args.max_chords)

    print("tilde web permutations")
    for n in range(1, min(args.max_n, 6) + 1):
        words = [perms.format_word(p) for p in grid.tilde_web(n, caps)]
        print(f"  n={n} ({len(words)}): {' '.join(words)}")

    print("\nfirst-letter counts f(n,k), k = 1..n")
    for n in range(1, args.max_n + 1):
        print(f"  n={n}: {[grid.f(n, k, caps) for k in range(1, n + 1)]}")

    print("\nSeidel triangle")
    for i in range(1, 10):
        print(f"  {i}: {list(seq.seidel_row(i))}")

    print("\nb+(n,k), k = 0..n")
    for n in range(0, args.max_chords):
        print(f"  n={n}: {[chord.b_plus(n, k, caps) for k in range(n + 1)]}")

    print("\ngamma coefficients of A_n(x,t|alpha)")
    for n in range(1, args.max_n + 1):
        gs = gamma.gamma_expand(gamma.at_eulerian(n, caps), n)
        print(f"  n={n}: " + " ; ".join(str(g) for g in gs))


if __name__ == "__main__":
    main()
