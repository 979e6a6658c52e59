"""Exact Fourier-Motzkin elimination over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

# a row (coeffs, c) encodes  sum(coeffs[i] * x[i]) >= c
Row = tuple[tuple[Fraction, ...], Fraction]


def _normalize(row: Row) -> Row:
    coeffs, c = row
    scale = max((abs(x) for x in coeffs), default=Fraction(0))
    if scale == 0:
        return row
    return tuple(x / scale for x in coeffs), c / scale


def _to_row(coeffs: Sequence, c=0) -> Row:
    return tuple(Fraction(x) for x in coeffs), Fraction(c)


def eliminate(rows: list[Row], var: int) -> list[Row]:
    """Project out one variable."""
    pos, neg, out = [], [], set()
    for row in rows:
        a = row[0][var]
        if a > 0:
            pos.append(row)
        elif a < 0:
            neg.append(row)
        else:
            out.add(row)
    for pc, pv in pos:
        for nc, nv in neg:
            lp, ln = pc[var], -nc[var]
            coeffs = tuple(ln * x + lp * y for x, y in zip(pc, nc))
            out.add(_normalize((coeffs, ln * pv + lp * nv)))
    return sorted(out)


def feasible(ineqs: Sequence[Row]) -> bool:
    """Whether {x : A x >= c} is non-empty."""
    rows = sorted({_normalize(_to_row(*r)) for r in ineqs})
    if not rows:
        return True
    dim = len(rows[0][0])
    for var in range(dim):
        rows = eliminate(rows, var)
    return all(c <= 0 for _, c in rows)


def cone_is_trivial(ineqs: Sequence[Sequence[int]], eqs: Sequence[Sequence[int]], dim: int) -> bool:
    """
    True iff the only x with A x >= 0 and E x = 0 is x = 0.

    A nonzero cone point can be scaled so that some coordinate is +-1, so the
    cone is trivial iff all 2*dim systems with x_i >= 1 or -x_i >= 1 added are
    infeasible.
    """
    base = [(tuple(r), 0) for r in ineqs]
    for r in eqs:
        base.append((tuple(r), 0))
        base.append((tuple(-x for x in r), 0))
    for i in range(dim):
        for sign in (1, -1):
            unit = [0] * dim
            unit[i] = sign
            if feasible(base + [(tuple(unit), 1)]):
                return False
    return True
