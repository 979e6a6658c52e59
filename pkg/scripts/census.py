"""Chamber census of Shi^m(n): counts, representatives and the inverse-simplex checks."""

import argparse
import time

from aqt.afperm import invert
from aqt.arr import build, charpoly_ff, zaslavsky_counts
from aqt.regions import SimplexSpec, enumerate_chambers, enumerate_simplex, max_alcove_of_bounded


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("pairs", nargs="*", default=["3:1", "3:2", "4:1", "3:3", "4:2"],
                    help="n:m pairs")
    args = ap.parse_args()
    print(f"{'n':>2} {'m':>2} {'chambers':>9} {'bounded':>8} {'zaslavsky':>12} "
          f"{'min^-1=D+':>10} {'max^-1=D-':>10} {'secs':>6}")
    for pair in args.pairs:
        n, m = map(int, pair.split(":"))
        t = time.perf_counter()
        chambers = enumerate_chambers(n, m)
        maxima = max_alcove_of_bounded(n, m, chambers)
        z = zaslavsky_counts(charpoly_ff(build("shi_m", n, m)), n) if n <= 4 else ("-", "-")
        low = sorted(invert(c.minimum) for c in chambers) == enumerate_simplex(SimplexSpec(n, m * n + 1))
        high = sorted(invert(w) for w in maxima) == enumerate_simplex(SimplexSpec(n, m * n - 1))
        print(f"{n:>2} {m:>2} {len(chambers):>9} {len(maxima):>8} {str(z):>12} "
              f"{str(low):>10} {str(high):>10} {time.perf_counter() - t:>6.2f}")


if __name__ == "__main__":
    main()
