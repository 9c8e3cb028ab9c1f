#!/usr/bin/env python3
"""Tabulate the local corpus: how often the square root of the inverse different
exists, broken down by p and by tame/wild, and the freeness congruence rate."""
import argparse
from collections import Counter

from galjacobi.corpus import CorpusConfig, local_data
from galjacobi.localext import freeness_congruence, is_weakly_ramified, sqrt_inv_different


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=24)
    args = ap.parse_args()
    total, with_a, weak, cong = Counter(), Counter(), Counter(), Counter()
    for d in local_data(CorpusConfig(max_order=args.max_order)):
        key = (d.p, "tame" if d.is_tame else "wild")
        total[key] += 1
        if sqrt_inv_different(d) is None:
            continue
        with_a[key] += 1
        if is_weakly_ramified(d):
            weak[key] += 1
            cong[key] += freeness_congruence(d)
    print(f"{'p':>3} {'kind':5} {'data':>6} {'A exists':>9} {'weak':>6} {'n=1 mod |G1|':>13}")
    for key in sorted(total):
        p, kind = key
        print(f"{p:>3} {kind:5} {total[key]:>6} {with_a[key]:>9} {weak[key]:>6} {cong[key]:>13}")


if __name__ == "__main__":
    main()
