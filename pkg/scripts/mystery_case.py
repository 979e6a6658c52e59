"""ish^-1 distributions on D^p(n) for p not of the form mn +- 1."""

import argparse
from math import gcd

from aqt.qt import QPoly, q_rational
from aqt.regions import SimplexSpec, dominant_inverse_filter, enumerate_simplex
from aqt.stats import ish_inv


def distribution(ws):
    counts = {}
    for w in ws:
        counts[ish_inv(w)] = counts.get(ish_inv(w), 0) + 1
    return QPoly([counts.get(k, 0) for k in range(max(counts) + 1)])


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--p", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--list", action="store_true", help="print the alcoves")
    args = ap.parse_args()
    for p in args.p:
        if gcd(p, args.n) != 1:
            print(f"skip p={p}: not coprime to n={args.n}")
            continue
        ws = enumerate_simplex(SimplexSpec(args.n, p))
        dom = dominant_inverse_filter(ws)
        print(f"D^{p}({args.n}): {len(ws)} alcoves, {len(dom)} with dominant inverse")
        if args.list:
            for w in ws:
                print(f"   [{w}]{'  *' if w in dom else ''}")
        print(f"  ish^-1 over all:      {distribution(ws)}")
        print(f"  ish^-1 over dominant: {distribution(dom)}")
        print(f"  rational q-Catalan:   {q_rational(args.n, p)}\n")


if __name__ == "__main__":
    main()
