"""Print the joint (shi^m, ish^-1) tables and their q,1/q specializations."""

import argparse

from aqt.qt import genfun, q_fuss_catalan, q_fuss_catalan_bounded, q_int, specialize_antidiagonal, t_offset
from aqt.regions import shi_source


def show(n, m, negative, positive):
    g = genfun(shi_source(n, m, negative, positive), m, negative)
    off = t_offset(n, m, negative)
    label = f"Shi^{'-' if negative else ''}{m}{'_+' if positive else ''}({n})"
    print(f"{label}   rows shi^{m}, columns ish^-1")
    for r, row in enumerate(g.matrix(off)):
        print(f"  {r:>2} | " + " ".join(f"{x:>3}" if x else "  ." for x in row))
    spec = specialize_antidiagonal(g, off)
    p = m * n - 1 if negative else m * n + 1
    if positive:
        target = q_fuss_catalan_bounded(n, m) if negative else q_fuss_catalan(n, m)
    else:
        target = q_int(p) ** (n - 1)
    print(f"  q^{off} F(q,1/q) = {spec}   [{'matches' if spec == target else 'DIFFERS'}]\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--m", type=int, nargs="+", default=[1, 2])
    args = ap.parse_args()
    for m in args.m:
        for negative in ((False,) if m == 1 and args.n <= 2 else (False, True)):
            for positive in (False, True):
                show(args.n, m, negative, positive)


if __name__ == "__main__":
    main()
