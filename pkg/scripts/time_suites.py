"""Wall time of every verification suite at a given size."""
from __future__ import annotations

import argparse

from webperm.verify import SUITES, run_suite


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--max-chords", type=int, default=6)
    args = ap.parse_args()
    for name in SUITES:
        r = run_suite(name, args.max_n, args.max_chords)
        status = "pass" if r.passed else "FAIL"
        print(f"{name:16} {len(r.checks):4} checks  {r.elapsed_ms / 1000:7.2f} s  {status}")


if __name__ == "__main__":
    main()
