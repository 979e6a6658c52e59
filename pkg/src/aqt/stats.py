"""
Statistics on affine permutations: shi, shi^m, ish, ish^-1, inversion
partitions and alcove addresses.

Addresses are dicts keyed by `PositiveRoot`.  The alcove of a window w is the
one separated from the fundamental alcove exactly by the hyperplanes of the
affine inversions of w; its address satisfies
k(e_a - e_b) < (x, e_a - e_b) < k(e_a - e_b) + 1 on the alcove.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import floor
from typing import Mapping

from .afperm import (
    PositiveRoot, Window, height, inversions, parabolic_decompose,
    transposition_hyperplane, translation_decompose,
)
from .errors import AddressError

Address = dict[PositiveRoot, int]

__all__ = [
    "Address", "positive_roots", "summable_triples", "shi", "shi_m",
    "ish_def", "ish_closed", "ish", "ish_inv", "inversion_partition",
    "inversion_partition_by_gap", "address", "address_at_point",
    "address_tuple", "is_shi_admissible", "alcove_from_address", "record",
]


def positive_roots(n: int) -> list[PositiveRoot]:
    """Positive roots e_a - e_b, lexicographic in (a, b)."""
    return [PositiveRoot(a, b) for a, b in combinations(range(1, n + 1), 2)]


def summable_triples(n: int):
    """All (alpha, beta, alpha + beta) in the positive roots, alpha first in the chain."""
    for a, c, b in ((a, c, b) for a in range(1, n + 1)
                    for c in range(a + 1, n + 1) for b in range(c + 1, n + 1)):
        yield PositiveRoot(a, c), PositiveRoot(c, b), PositiveRoot(a, b)


def shi(w: Window) -> int:
    """Inversions ((i, j)) of height 0, i.e. with i < j < n + i."""
    return shi_m(w, 1)


def shi_m(w: Window, m: int) -> int:
    """Inversions whose hyperplane has height at most m - 1."""
    if m < 1:
        raise ValueError("m must be positive")
    n = w.n
    return sum(1 for t in inversions(w) if height(t, n) < m)


def ish_def(w: Window) -> int:
    """Inversions ((n, j)) of the minimal coset representative, counted literally."""
    _, w_min = parabolic_decompose(w)
    n = w.n
    return sum(1 for t in inversions(w_min) if t.i == n)


def ish_closed(w: Window) -> int:
    return max(w.values) - w.n


ish = ish_closed


def ish_inv(w: Window) -> int:
    """ish(w^-1) from the root-lattice part r of w = perm + n*r."""
    n = w.n
    _, r = translation_decompose(w)
    low = min(r)
    j = max(i for i in range(1, n + 1) if r[i - 1] == low)
    return j + n * (-low - 1)


def _trim(counts: list[int]) -> tuple[int, ...]:
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def inversion_partition(w: Window) -> tuple[int, ...]:
    """I_k = number of inversions of height k; trailing zeros dropped."""
    n = w.n
    counts: list[int] = []
    for t in inversions(w):
        h = height(t, n)
        if h >= len(counts):
            counts.extend([0] * (h + 1 - len(counts)))
        counts[h] += 1
    return _trim(counts)


def inversion_partition_by_gap(w: Window) -> tuple[int, ...]:
    """Inversions bucketed by floor((w(i) - w(j)) / n); equals the partition of w^-1."""
    n = w.n
    counts: list[int] = []
    for t in inversions(w):
        h = (w(t.i) - w(t.j)) // n
        if h >= len(counts):
            counts.extend([0] * (h + 1 - len(counts)))
        counts[h] += 1
    return _trim(counts)


def address(w: Window) -> Address:
    """Address read off the separating hyperplanes (inversion dictionary)."""
    n = w.n
    above = {alpha: 0 for alpha in positive_roots(n)}
    below = dict(above)
    for t in inversions(w):
        alpha, level = transposition_hyperplane(t, n)
        if level >= 1:
            above[alpha] += 1
        else:
            below[alpha] += 1
    out = {}
    for alpha in above:
        if above[alpha] and below[alpha]:
            raise AssertionError(f"hyperplanes on both sides of {alpha}")
        out[alpha] = above[alpha] - below[alpha]
    return out


def address_at_point(w: Window) -> Address:
    """
    Address evaluated geometrically at the rational point x = -w/n, which lies
    inside the alcove of w (no coordinate difference is an integer).
    """
    n = w.n
    x = [Fraction(-v, n) for v in w.values]
    return {alpha: floor(x[alpha.a - 1] - x[alpha.b - 1]) for alpha in positive_roots(n)}


def address_tuple(values: tuple[int, ...]) -> tuple[int, ...]:
    """`address_at_point` as a tuple in `positive_roots` order; integer-only fast path."""
    n = len(values)
    return tuple((values[b] - values[a]) // n
                 for a in range(n) for b in range(a + 1, n))


def is_shi_admissible(k: Mapping[PositiveRoot, int], n: int | None = None) -> bool:
    """Shi's criterion k(a) + k(b) <= k(a+b) <= k(a) + k(b) + 1 on all summable triples."""
    if n is None:
        n = max((alpha.b for alpha in k), default=1)
    for alpha, beta, gamma in summable_triples(n):
        s = k.get(alpha, 0) + k.get(beta, 0)
        if not s <= k.get(gamma, 0) <= s + 1:
            return False
    return True


def alcove_from_address(k: Mapping[PositiveRoot, int], n: int) -> Window:
    """
    The unique window whose address is k.

    Solves the difference constraints k*n < w(b) - w(a) < (k+1)*n with
    Bellman-Ford; the solution is unique up to a constant, fixed by the sum.
    """
    # v(b) - v(a) <= (k+1)n - 1   and   v(a) - v(b) <= -(kn + 1)
    edges = []
    for alpha in positive_roots(n):
        kv = k.get(alpha, 0)
        a, b = alpha.a - 1, alpha.b - 1
        edges.append((a, b, (kv + 1) * n - 1))
        edges.append((b, a, -(kv * n + 1)))
    dist = [0] * n
    for _ in range(n):
        changed = False
        for u, v, wgt in edges:
            if dist[u] + wgt < dist[v]:
                dist[v] = dist[u] + wgt
                changed = True
        if not changed:
            break
    else:
        raise AddressError("address violates Shi's inequalities (infeasible)")
    shift, extra = divmod(n * (n + 1) // 2 - sum(dist), n)
    if extra:
        raise AddressError("address has no integral window")
    w = Window([d + shift for d in dist])
    if address_tuple(w.values) != tuple(k.get(alpha, 0) for alpha in positive_roots(n)):
        raise AddressError("address is not realized by an alcove")
    return w


def record(w: Window, m_max: int | None = None) -> dict:
    """JSON statistic record of a window."""
    part = inversion_partition(w)
    if m_max is None:
        m_max = max(1, len(part))
    return {
        "window": list(w.values),
        "length": sum(part),
        "shi": shi(w),
        "ish": ish(w),
        "shi_m": {str(m): sum(part[:m]) for m in range(1, m_max + 1)},
        "ish_inv": ish_inv(w),
        "inversion_partition": list(part),
    }
