"""
Alcove regions: Sommers' simplices D^p(n), chambers of the extended Shi
arrangements Shi^m(n), their minimal and maximal alcoves, and boundedness.

Walks use left multiplication by simple reflections, which moves an alcove
across one wall.  The address of the alcove of w is
k(e_a - e_b) = floor((w(b) - w(a)) / n); regions are tested on addresses.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass
from math import comb, gcd
from typing import Iterable

from .afperm import PositiveRoot, Window, invert
from .errors import BudgetExceeded, NonUniqueMaximum, NonUniqueMinimum, NotCoprime
from .fme import cone_is_trivial
from .stats import address_tuple, positive_roots

__all__ = [
    "SimplexSpec", "ChamberDescriptor", "Chamber", "simplex_contains",
    "enumerate_simplex", "dominant_inverse_filter", "shi_source", "chamber_descriptor",
    "enumerate_chambers", "is_bounded_chamber", "chamber_alcoves",
    "max_alcove_of_bounded", "is_chamber_minimal", "separating_count",
    "neighbors",
]

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class SimplexSpec:
    """D^p(n) with p = a*n + b, 1 <= b <= n-1 (b = 0 only when n = 1)."""
    n: int
    p: int

    def __post_init__(self):
        if self.n < 1 or self.p < 1 or gcd(self.p, self.n) != 1:
            raise NotCoprime(f"p={self.p} and n={self.n} must be coprime positive integers")

    @property
    def a(self) -> int:
        return self.p // self.n

    @property
    def b(self) -> int:
        return self.p % self.n

    def alcove_count(self) -> int:
        return self.p ** (self.n - 1)

    def dominant_count(self) -> int:
        return comb(self.p + self.n, self.n) // (self.p + self.n)


def _root_index(n: int) -> dict[PositiveRoot, int]:
    return {r: i for i, r in enumerate(positive_roots(n))}


def _simplex_test(s: SimplexSpec):
    n, a, b = s.n, s.a, s.b
    if n == 1:
        return lambda k: True
    idx = _root_index(n)
    # (x, beta) > -a for beta of height b;  (x, alpha) < a + 1 for alpha of height n - b
    low = [idx[PositiveRoot(i, i + b)] for i in range(1, n - b + 1)]
    high = [idx[PositiveRoot(i, i + n - b)] for i in range(1, b + 1)]

    def inside(k: tuple[int, ...]) -> bool:
        return all(k[i] >= -a for i in low) and all(k[i] <= a for i in high)
    return inside


def simplex_contains(s: SimplexSpec, w: Window) -> bool:
    return _simplex_test(s)(address_tuple(w.values))


def neighbors(values: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Windows of s_i * w for i = 1..n (the alcoves sharing a wall with w)."""
    n = len(values)
    if n == 1:
        return []
    out = []
    for i in range(1, n + 1):
        lo, hi = i % n, (i + 1) % n
        out.append(tuple(v + 1 if v % n == lo else v - 1 if v % n == hi else v
                         for v in values))
    return out


def _flood(start: tuple[int, ...], keep, budget: int) -> list[tuple[int, ...]]:
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in neighbors(cur):
            if nxt not in seen and keep(nxt):
                seen.add(nxt)
                if len(seen) > budget:
                    raise BudgetExceeded(f"region exceeds {budget} alcoves")
                queue.append(nxt)
    return sorted(seen)


def enumerate_simplex(s: SimplexSpec, budget: int = DEFAULT_BUDGET) -> list[Window]:
    """All alcoves of D^p(n), sorted by window."""
    if s.alcove_count() > budget:
        raise BudgetExceeded(f"D^{s.p}({s.n}) has {s.alcove_count()} alcoves > budget {budget}")
    inside = _simplex_test(s)
    start = tuple(range(1, s.n + 1))
    found = _flood(start, lambda v: inside(address_tuple(v)), budget)
    return [Window._trusted(v) for v in found]


def dominant_inverse_filter(ws: Iterable[Window]) -> list[Window]:
    out = []
    for w in ws:
        v = invert(w).values
        if all(x < y for x, y in zip(v, v[1:])):
            out.append(w)
    return out


def shi_source(n: int, m: int = 1, negative: bool = False, positive: bool = False,
               budget: int = DEFAULT_BUDGET) -> list[Window]:
    """
    The alcoves summed over by Shi^m(n;q,t): D^{mn+1}(n), or D^{mn-1}(n) when
    negative; positive keeps those whose inverse lies in the dominant cone.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    p = m * n - 1 if negative else m * n + 1
    if p < 1:
        raise ValueError(f"m*n - 1 must be positive, got n={n}, m={m}")
    ws = enumerate_simplex(SimplexSpec(n, p), budget)
    return dominant_inverse_filter(ws) if positive else ws


@dataclass(frozen=True)
class ChamberDescriptor:
    """The Shi^m chamber of an alcove: its address clamped to [-m, m], in root order."""
    n: int
    m: int
    clamp: tuple[int, ...]

    def as_dict(self) -> dict[PositiveRoot, int]:
        return dict(zip(positive_roots(self.n), self.clamp))

    def digest(self) -> str:
        text = f"{self.n};{self.m};" + ",".join(map(str, self.clamp))
        return hashlib.sha1(text.encode()).hexdigest()[:12]


def _clamp(k: tuple[int, ...], m: int) -> tuple[int, ...]:
    return tuple(m if x > m else -m if x < -m else x for x in k)


def chamber_descriptor(w: Window, m: int) -> ChamberDescriptor:
    if m < 1:
        raise ValueError("m must be positive")
    return ChamberDescriptor(w.n, m, _clamp(address_tuple(w.values), m))


def separating_count(u: Window, v: Window, m: int) -> int:
    """Number of Shi^m hyperplanes (levels -m+1..m) separating the alcoves of u and v."""
    total = 0
    for x, y in zip(address_tuple(u.values), address_tuple(v.values)):
        lo, hi = min(x, y), max(x, y)
        # levels strictly above lo and at most hi lie between the two alcoves
        total += max(0, min(hi, m) - max(lo, -m))
    return total


def _alcove_length(k: tuple[int, ...]) -> int:
    return sum(abs(x) for x in k)


def is_chamber_minimal(w: Window, m: int) -> bool:
    """
    Every wall of w that separates it from the fundamental alcove belongs to
    Shi^m(n).  Chambers are convex, so this local test picks out the minimum.
    """
    k = address_tuple(w.values)
    d = _clamp(k, m)
    here = _alcove_length(k)
    for nxt in neighbors(w.values):
        kn = address_tuple(nxt)
        if _alcove_length(kn) < here and _clamp(kn, m) == d:
            return False
    return True


@dataclass(frozen=True)
class Chamber:
    descriptor: ChamberDescriptor
    minimum: Window

    @property
    def length(self) -> int:
        return _alcove_length(address_tuple(self.minimum.values))


def enumerate_chambers(n: int, m: int, budget: int = DEFAULT_BUDGET) -> list[Chamber]:
    """
    Chambers of Shi^m(n) with their minimum-length alcoves, sorted by minimum.

    Alcoves are enumerated inside the box |k(alpha)| <= B, starting at
    B = m + 1 and growing by one until the chambers and minima stop changing.
    Moving toward the fundamental alcove never leaves such a box, so the
    minimum found for a chamber meeting the box is its true minimum.
    The flood is resumed from the box boundary each time B grows.
    """
    if m < 1:
        raise ValueError("m must be positive")
    start = tuple(range(1, n + 1))
    k0 = address_tuple(start)
    seen = {start}
    best: dict[tuple[int, ...], tuple[int, tuple[int, ...]]] = {}
    tied: set[tuple[int, ...]] = set()
    outside: dict[tuple[int, ...], int] = {}  # rejected alcove -> max |k|

    def visit(v: tuple[int, ...], k: tuple[int, ...]) -> None:
        d = _clamp(k, m)
        ln = _alcove_length(k)
        if d not in best or ln < best[d][0]:
            best[d] = (ln, v)
            tied.discard(d)
        elif ln == best[d][0]:
            tied.add(d)

    visit(start, k0)
    queue = deque([start])
    bound = m + 1
    prev = None
    while True:
        while queue:
            cur = queue.popleft()
            for nxt in neighbors(cur):
                if nxt in seen or nxt in outside:
                    continue
                k = address_tuple(nxt)
                top = max(map(abs, k), default=0)
                if top > bound:
                    outside[nxt] = top
                    continue
                seen.add(nxt)
                if len(seen) > budget:
                    raise BudgetExceeded(f"chamber search exceeds {budget} alcoves")
                visit(nxt, k)
                queue.append(nxt)
        snapshot = {d: v for d, (_, v) in best.items()}
        if snapshot == prev:
            break
        prev = snapshot
        bound += 1
        for v in [v for v, top in outside.items() if top <= bound]:
            del outside[v]
            seen.add(v)
            visit(v, address_tuple(v))
            queue.append(v)
    if tied:
        d = sorted(tied)[0]
        raise NonUniqueMinimum(f"chamber {d} of Shi^{m}({n}) has two minimal alcoves")
    out = [Chamber(ChamberDescriptor(n, m, d), Window._trusted(v)) for d, v in prev.items()]
    out.sort(key=lambda c: c.minimum.values)
    return out


def is_bounded_chamber(d: ChamberDescriptor) -> bool:
    """Decide boundedness from the recession cone, by exact Fourier-Motzkin elimination."""
    n, m = d.n, d.m
    if n == 1:
        return True
    dim = n - 1  # coordinates x_1..x_{n-1}, x_n = 0 fixes the lineality line
    ineqs, eqs = [], []
    for r, c in zip(positive_roots(n), d.clamp):
        row = [0] * dim
        row[r.a - 1] += 1
        if r.b <= dim:
            row[r.b - 1] -= 1
        if c == m:
            ineqs.append(row)
        elif c == -m:
            ineqs.append([-x for x in row])
        else:
            eqs.append(row)
    return cone_is_trivial(ineqs, eqs, dim)


def chamber_alcoves(d: ChamberDescriptor, start: Window, budget: int = DEFAULT_BUDGET) -> list[Window]:
    """All alcoves of a bounded chamber, flooding from one of its alcoves."""
    if _clamp(address_tuple(start.values), d.m) != d.clamp:
        raise ValueError(f"{start} is not in chamber {d.clamp}")
    found = _flood(start.values, lambda v: _clamp(address_tuple(v), d.m) == d.clamp, budget)
    return [Window._trusted(v) for v in found]


def max_alcove_of_bounded(n: int, m: int, chambers: list[Chamber] | None = None,
                          budget: int = DEFAULT_BUDGET) -> list[Window]:
    """Maximum-length alcove of every bounded chamber of Shi^m(n), sorted."""
    if chambers is None:
        chambers = enumerate_chambers(n, m, budget)
    out = []
    for ch in chambers:
        if not is_bounded_chamber(ch.descriptor):
            continue
        alcoves = chamber_alcoves(ch.descriptor, ch.minimum, budget)
        lengths = [_alcove_length(address_tuple(w.values)) for w in alcoves]
        top = max(lengths)
        if lengths.count(top) > 1:
            raise NonUniqueMaximum(f"bounded chamber {ch.descriptor.clamp} has two maximal alcoves")
        out.append(alcoves[lengths.index(top)])
    return sorted(out)
