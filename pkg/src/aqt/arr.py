"""
Integer hyperplane arrangements e_i - e_j = level in R^n, characteristic
polynomials by counting points over finite fields, and Zaslavsky counts.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Sequence

import numpy as np

from .errors import BadArgs, BudgetExceeded, InsufficientPrimes, UnknownFamily
from .qt import QPoly

__all__ = [
    "Hyperplane", "Arrangement", "FAMILIES", "build", "count_complement",
    "charpoly_ff", "quotient_view", "ish_cyclic_count", "ish_cyclic_placements",
    "zaslavsky_counts", "admissible_primes", "workers",
]

FAMILIES = ("cox", "shi", "shi_m", "ish", "aff")
POINT_BUDGET = 5 * 10 ** 7


class Hyperplane(NamedTuple):
    i: int
    j: int
    level: int


@dataclass(frozen=True)
class Arrangement:
    n: int
    name: str
    hyperplanes: frozenset[Hyperplane]

    def max_level(self) -> int:
        return max((abs(h.level) for h in self.hyperplanes), default=0)

    def prime_floor(self) -> int:
        """
        Primes above this reduce well: a relation among levels around a cycle
        of at most n coordinates has absolute value at most n * max|level|.
        """
        return max(self.n, self.n * self.max_level())

    def sorted(self) -> list[Hyperplane]:
        return sorted(self.hyperplanes)


def build(name: str, n: int, m: int | None = None) -> Arrangement:
    """
    cox: level 0; shi: levels {0, 1}; shi_m: levels -m+1..m;
    ish: cox plus e_i - e_n = a for 1 <= a <= n - i;
    aff: levels -m..m (a truncation of the affine arrangement).
    """
    if n < 2:
        raise BadArgs("arrangements need n >= 2")
    pairs = list(combinations(range(1, n + 1), 2))
    if name == "cox":
        hs = {Hyperplane(i, j, 0) for i, j in pairs}
    elif name == "shi":
        hs = {Hyperplane(i, j, a) for i, j in pairs for a in (0, 1)}
    elif name == "shi_m":
        if m is None or m < 1:
            raise BadArgs("shi_m needs m >= 1")
        hs = {Hyperplane(i, j, a) for i, j in pairs for a in range(-m + 1, m + 1)}
    elif name == "ish":
        hs = {Hyperplane(i, j, 0) for i, j in pairs}
        hs |= {Hyperplane(i, n, a) for i in range(1, n) for a in range(1, n - i + 1)}
    elif name == "aff":
        if m is None or m < 0:
            raise BadArgs("aff needs a truncation m >= 0")
        hs = {Hyperplane(i, j, a) for i, j in pairs for a in range(-m, m + 1)}
    else:
        raise UnknownFamily(f"unknown arrangement family {name!r}; expected one of {FAMILIES}")
    label = f"shi_m({m})" if name == "shi_m" else name
    return Arrangement(n, label, frozenset(hs))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def admissible_primes(arr: Arrangement, count: int, skip: int = 0) -> list[int]:
    """The smallest `count` primes above `arr.prime_floor()`, after skipping `skip` of them."""
    p = arr.prime_floor() + 1
    out = []
    while len(out) < count + skip:
        if _is_prime(p):
            out.append(p)
        p += 1
    return out[skip:]


def count_complement(arr: Arrangement, p: int) -> int:
    """Points of F_p^n on none of the reduced hyperplanes, by brute force."""
    n = arr.n
    if p ** n > POINT_BUDGET:
        raise BudgetExceeded(f"{p}^{n} points exceed the budget {POINT_BUDGET}")
    # one slab per value of x_1; the remaining n-1 coordinates are a dense grid
    grids = np.indices((p,) * (n - 1), dtype=np.int64).reshape(n - 1, -1) if n > 1 else None
    by_pair: dict[tuple[int, int], list[int]] = {}
    for h in arr.hyperplanes:
        by_pair.setdefault((h.i, h.j), []).append(h.level % p)
    total = 0
    for x1 in range(p):
        coords = [np.full(grids.shape[1], x1, dtype=np.int64)] + list(grids)
        ok = np.ones(grids.shape[1], dtype=bool)
        for (i, j), levels in by_pair.items():
            diff = (coords[i - 1] - coords[j - 1]) % p
            for lv in levels:
                ok &= diff != lv
        total += int(ok.sum())
    return total


def workers() -> int:
    env = os.environ.get("AQT_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Coefficients (ascending) of the Lagrange interpolant through the points."""
    k = len(xs)
    coeffs = [Fraction(0)] * k
    for i in range(k):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(k):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xs[j] * basis[t + 1]
            denom *= xs[i] - xs[j]
        for t in range(k):
            coeffs[t] += ys[i] * basis[t] / denom
    return coeffs


def charpoly_ff(arr: Arrangement, primes: Sequence[int] | None = None) -> QPoly:
    """
    Ambient characteristic polynomial (degree n) interpolated from point
    counts at n + 1 primes; one extra prime must agree with the result.
    """
    n = arr.n
    if primes is None:
        primes = admissible_primes(arr, n + 2)
    primes = list(primes)
    if len(primes) < n + 2:
        raise InsufficientPrimes(f"need n + 2 = {n + 2} primes, got {len(primes)}")
    bad = [p for p in primes if p <= arr.prime_floor()]
    if bad:
        raise InsufficientPrimes(f"primes {bad} are too small for this arrangement")
    if workers() > 1 and sum(p ** n for p in primes) > 10 ** 6:
        with ProcessPoolExecutor(max_workers=workers()) as pool:
            counts = list(pool.map(count_complement, [arr] * len(primes), primes))
    else:
        counts = [count_complement(arr, p) for p in primes]
    fit = _interpolate(primes[: n + 1], counts[: n + 1])
    if any(c.denominator != 1 for c in fit):
        raise InsufficientPrimes(f"point counts are not an integer polynomial: {fit}")
    chi = QPoly([int(c) for c in fit])
    for p, c in zip(primes, counts):
        if chi(p) != c:
            raise InsufficientPrimes(f"count {c} at p={p} disagrees with {chi}")
    return chi


def quotient_view(chi: QPoly) -> QPoly:
    """chi(q) / q: the polynomial in the essential quotient R^n / (1, ..., 1)."""
    return chi.exact_div(QPoly([0, 1]))


def ish_cyclic_placements(n: int, p: int) -> int:
    """
    Count the complement of Ish(n) over F_p by placing labels on a p-gon:
    v_n anywhere, then v_1, v_2, ... avoiding v_n, the n - i vertices
    clockwise of v_n, and the labels already placed.

    Walks every placement with v_n = 0 (rotation gives the factor p) and
    checks that each step offers exactly p - n choices.
    """
    if p <= n:
        raise BadArgs("need p > n")

    def rec(i: int, placed: list[int]) -> int:
        if i == n:
            return 1
        forbidden = {0, *range(1, n - i + 1), *placed}
        choices = [x for x in range(p) if x not in forbidden]
        if len(choices) != p - n:
            raise AssertionError(f"step {i} has {len(choices)} choices, expected {p - n}")
        return sum(rec(i + 1, placed + [x]) for x in choices)

    return p * rec(1, [])


def ish_cyclic_count(n: int, p: int) -> int:
    if p <= n:
        raise BadArgs("need p > n")
    return p * (p - n) ** (n - 1)


def zaslavsky_counts(chi: QPoly, n: int) -> tuple[int, int]:
    """(chambers, bounded chambers) for an arrangement whose lineality space is a line."""
    return (-1) ** n * chi(-1), (-1) ** (n - 1) * chi(1)
