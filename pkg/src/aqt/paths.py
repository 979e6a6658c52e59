"""
Root ideals (Dyck paths), labeled Dyck paths and the bijection between Shi
chambers and labeled paths.

The cell of root e_i - e_j has top right corner (i, j).  An ideal is a set of
cells justified up and to the left; its lower boundary is a Dyck path from
(0, 0) to (n, n).  The full ideal is the staircase path.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import comb
from typing import Iterable, Iterator

from .afperm import PositiveRoot, Window, compose, lift, parabolic_decompose, perm_inverse
from .errors import ComparableGenerators, InvalidLabeledPath, NotRepresentingAlcove, ValleyViolation
from .stats import Address, address, alcove_from_address, positive_roots

__all__ = [
    "RootIdeal", "LabeledPath", "root_leq", "ideal_from_minimal_roots",
    "ideal_from_heights", "all_ideals", "valleys", "bounce", "bounce_touches",
    "area", "area_prime", "sommers_address", "positive_alcove",
    "to_labeled_path", "from_labeled_path", "all_labeled_paths", "render",
]


def root_leq(x: PositiveRoot, y: PositiveRoot) -> bool:
    """e_j - e_k <= e_i - e_l iff i <= j < k <= l."""
    return y.a <= x.a and x.b <= y.b


@dataclass(frozen=True)
class RootIdeal:
    n: int
    members: frozenset[PositiveRoot]

    def __post_init__(self):
        for x in self.members:
            if not 1 <= x.a < x.b <= self.n:
                raise ValueError(f"{x} is not a positive root for n={self.n}")
            # upward closure only needs the two covering moves
            for y in (PositiveRoot(x.a - 1, x.b), PositiveRoot(x.a, x.b + 1)):
                if 1 <= y.a and y.b <= self.n and y not in self.members:
                    raise ValueError(f"not an ideal: {x} present but {y} missing")

    def __contains__(self, root) -> bool:
        return root in self.members

    def __len__(self):
        return len(self.members)

    def heights(self) -> tuple[int, ...]:
        """Height of the lower boundary above column i (x in [i-1, i]), for i = 1..n."""
        out = []
        for i in range(1, self.n + 1):
            js = [r.b for r in self.members if r.a == i]
            out.append(min(js) - 1 if js else self.n)
        return tuple(out)

    def sorted_roots(self) -> list[PositiveRoot]:
        return sorted(self.members)

    def to_json(self) -> list[list[int]]:
        return [[r.a, r.b] for r in self.sorted_roots()]


def ideal_from_minimal_roots(n: int, gens: Iterable[PositiveRoot]) -> RootIdeal:
    gens = [PositiveRoot(*g) for g in gens]
    for x in gens:
        for y in gens:
            if x != y and root_leq(x, y):
                raise ComparableGenerators(f"{x} <= {y}")
    members = frozenset(r for r in positive_roots(n) if any(root_leq(g, r) for g in gens))
    return RootIdeal(n, members)


def ideal_from_heights(h: Iterable[int]) -> RootIdeal:
    """Inverse of `RootIdeal.heights`."""
    h = tuple(h)
    n = len(h)
    members = frozenset(PositiveRoot(i, j) for i in range(1, n + 1)
                        for j in range(h[i - 1] + 1, n + 1) if i < j)
    return RootIdeal(n, members)


def all_ideals(n: int) -> Iterator[RootIdeal]:
    """All Catalan(n) ideals, via weakly increasing heights with h_i >= i and h_n = n."""
    def rec(i: int, lo: int, acc: list[int]):
        if i > n:
            yield ideal_from_heights(acc)
            return
        for h in range(max(lo, i), n + 1):
            acc.append(h)
            yield from rec(i + 1, h, acc)
            acc.pop()
    yield from rec(1, 1, [])


def valleys(ideal: RootIdeal) -> set[PositiveRoot]:
    """Minimal members of the ideal."""
    return {x for x in ideal.members
            if not any(y != x and root_leq(y, x) for y in ideal.members)}


def bounce_touches(ideal: RootIdeal) -> list[int]:
    """Diagonal points (i, i), 1 <= i <= n-1, visited by the bounce path, descending."""
    h = ideal.heights()
    touches = []
    y = ideal.n
    while True:
        # moving left at height y stops at the first vertical step: x = #{i : h_i < y}
        x = sum(1 for v in h if v < y)
        if x == 0:
            return touches
        touches.append(x)
        y = x


def bounce(ideal: RootIdeal) -> int:
    return sum(bounce_touches(ideal))


def area(ideal: RootIdeal) -> int:
    """Full cells between the path and the diagonal."""
    return comb(ideal.n, 2) - len(ideal)


@dataclass(frozen=True)
class LabeledPath:
    w: tuple[int, ...]
    ideal: RootIdeal

    def __post_init__(self):
        n = self.ideal.n
        if sorted(self.w) != list(range(1, n + 1)):
            raise InvalidLabeledPath(f"{self.w} is not a permutation of 1..{n}")
        for v in valleys(self.ideal):
            if self.w[v.a - 1] > self.w[v.b - 1]:
                raise ValleyViolation(f"valley {v} is an inversion of {self.w}")

    @property
    def n(self) -> int:
        return self.ideal.n

    def to_json(self) -> dict:
        return {"w": list(self.w), "ideal": self.ideal.to_json()}


def area_prime(p: LabeledPath) -> int:
    """Non-inversions of w below the path."""
    w = p.w
    return sum(1 for r in positive_roots(p.n)
               if w[r.a - 1] < w[r.b - 1] and r not in p.ideal)


def sommers_address(ideal: RootIdeal) -> Address:
    """k(alpha) = the largest r with alpha a sum of r roots of the ideal."""
    n = ideal.n
    # best[i][j]: longest chain i = c0 < c1 < ... < cr = j with every step in the ideal
    best = [[0] * (n + 1) for _ in range(n + 1)]
    for span in range(1, n):
        for i in range(1, n - span + 1):
            j = i + span
            if PositiveRoot(i, j) not in ideal:
                continue
            top = 1
            for c in range(i + 1, j):
                if best[i][c] and best[c][j]:
                    top = max(top, best[i][c] + best[c][j])
            best[i][j] = top
    return {r: best[r.a][r.b] for r in positive_roots(n)}


def positive_alcove(ideal: RootIdeal) -> Window:
    """The minimal alcove of the positive Shi chamber of the ideal."""
    return alcove_from_address(sommers_address(ideal), ideal.n)


def to_labeled_path(w: Window) -> LabeledPath:
    """
    Representing alcove -> (cone permutation, ideal).

    With w = w_min o sigma, the alcove lies in the cone of sigma^-1, and the
    ideal is read off the positive alcove w_min.
    """
    sigma, w_min = parabolic_decompose(w)
    k = address(w_min)
    ideal = RootIdeal(w.n, frozenset(r for r, v in k.items() if v >= 1))
    try:
        path = LabeledPath(perm_inverse(sigma), ideal)
    except InvalidLabeledPath as exc:
        raise NotRepresentingAlcove(f"{w}: {exc}") from None
    if from_labeled_path(path) != w:
        raise NotRepresentingAlcove(f"{w} is not the minimal alcove of its Shi chamber")
    return path


def from_labeled_path(p: LabeledPath) -> Window:
    return compose(positive_alcove(p.ideal), lift(perm_inverse(p.w)))


def all_labeled_paths(n: int) -> Iterator[LabeledPath]:
    ideals = list(all_ideals(n))
    for w in permutations(range(1, n + 1)):
        for ideal in ideals:
            if all(w[v.a - 1] < w[v.b - 1] for v in valleys(ideal)):
                yield LabeledPath(w, ideal)


def render(p: LabeledPath) -> str:
    """
    Rows top to bottom (j = n..2); cell (i, j) is '×' for an inversion of w
    and 'o' otherwise.  '|' is the vertical step of the path in that row:
    ideal cells sit to its left.  The last line lists the labels.
    """
    n, w = p.n, p.w
    lines = []
    for j in range(n, 1, -1):
        cells = ["×" if w[i - 1] > w[j - 1] else "o" for i in range(1, j)]
        k = sum(1 for i in range(1, j) if PositiveRoot(i, j) in p.ideal)
        lines.append(" ".join(cells[:k] + ["|"] + cells[k:] + ["\\"]))
    lines.append("w = " + " ".join(map(str, w)))
    return "\n".join(lines)
