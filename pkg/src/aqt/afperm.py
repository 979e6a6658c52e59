"""
Affine permutations of type A in window notation.

An affine permutation of rank n is a bijection w: Z -> Z with
w(k + n) = w(k) + n and w(1) + ... + w(n) = n(n+1)/2.  It is stored as its
window [w(1), ..., w(n)].

Products are composition of functions, ``compose(u, v)(k) == u(v(k))``.

>>> w = Window((1, 5, 0))
>>> w(4), w(0)
(4, -3)
>>> invert(w)
Window(1, -1, 6)
>>> inversions(w)
[(1, 3), (2, 3), (2, 4), (2, 6)]
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import BadLength, BadResidues, BadSum, RankMismatch

__all__ = [
    "Window", "AffineTransposition", "PositiveRoot",
    "rem", "quo", "validate_window", "identity", "lift", "compose", "invert",
    "length", "inversions", "parabolic_decompose", "translation_decompose",
    "from_translation", "transposition_hyperplane", "height",
    "left_simple", "right_simple", "perm_inverse",
]


def rem(k: int, n: int) -> int:
    """Remainder of k by n taken in {1, ..., n}."""
    return (k - 1) % n + 1


def quo(k: int, n: int) -> int:
    """Quotient matching `rem`: k == quo(k, n) * n + rem(k, n)."""
    return (k - 1) // n


class AffineTransposition(NamedTuple):
    """((i, j)), standard representative: 1 <= i <= n and i < j."""
    i: int
    j: int


class PositiveRoot(NamedTuple):
    """e_a - e_b with a < b."""
    a: int
    b: int

    @property
    def height(self) -> int:
        return self.b - self.a


@dataclass(frozen=True, slots=True)
class Window:
    values: tuple[int, ...]

    def __init__(self, values: Sequence[int], n: int | None = None):
        values = tuple(int(v) for v in values)
        if n is not None and len(values) != n:
            raise BadLength(f"window has {len(values)} entries, expected n={n}")
        _check(values)
        object.__setattr__(self, "values", values)

    @classmethod
    def _trusted(cls, values: tuple[int, ...]) -> Window:
        # caller guarantees the invariants; skips validation in hot loops
        w = object.__new__(cls)
        object.__setattr__(w, "values", values)
        return w

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> Window:
        """Parse the text form ``"1,5,0"``."""
        parts = [p.strip() for p in text.strip().strip("[]").split(",")]
        try:
            values = [int(p) for p in parts if p]
        except ValueError:
            raise BadLength(f"cannot parse window {text!r}") from None
        return cls(values, n)

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, k: int) -> int:
        n = len(self.values)
        r = (k - 1) % n
        return self.values[r] + n * ((k - 1) // n)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __lt__(self, other: Window) -> bool:
        return self.values < other.values

    def __repr__(self):
        return f"Window({', '.join(map(str, self.values))})"

    def __str__(self):
        return ",".join(map(str, self.values))


def _check(values: tuple[int, ...]) -> None:
    n = len(values)
    if n == 0:
        raise BadLength("window must have at least one entry")
    total = sum(values)
    if total != n * (n + 1) // 2:
        raise BadSum(f"window sum is {total}, must be n(n+1)/2 = {n * (n + 1) // 2}")
    residues = {v % n for v in values}
    if len(residues) != n:
        raise BadResidues("window entries must be pairwise incongruent modulo n")


def validate_window(n: int, values: Sequence[int]) -> Window:
    return Window(values, n)


def identity(n: int) -> Window:
    return Window._trusted(tuple(range(1, n + 1)))


def lift(perm: Sequence[int]) -> Window:
    """A finite permutation of {1..n} as an affine permutation (periodic extension)."""
    return Window(perm)


def compose(u: Window, v: Window) -> Window:
    """The window of k -> u(v(k))."""
    if u.n != v.n:
        raise RankMismatch(f"cannot compose ranks {u.n} and {v.n}")
    return Window._trusted(tuple(u(x) for x in v.values))


def invert(w: Window) -> Window:
    n = w.n
    out = [0] * n
    for i, v in enumerate(w.values, start=1):
        # w(i) = v  =>  w^-1(rem(v)) = i - n*quo(v)
        out[rem(v, n) - 1] = i - n * quo(v, n)
    return Window._trusted(tuple(out))


def perm_inverse(perm: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(perm)
    for i, v in enumerate(perm, start=1):
        out[v - 1] = i
    return tuple(out)


def inversions(w: Window) -> list[AffineTransposition]:
    """All ((i, j)) with 1 <= i <= n, i < j and w(i) > w(j), sorted."""
    vals = w.values
    n = len(vals)
    out = []
    for i in range(1, n + 1):
        wi = vals[i - 1]
        for c in range(1, n + 1):
            # j = c + q*n ranges over j > i with w(c) + q*n < w(i)
            q_lo = 0 if c > i else 1
            q_hi = (wi - vals[c - 1] - 1) // n
            for q in range(q_lo, q_hi + 1):
                out.append(AffineTransposition(i, c + q * n))
    out.sort()
    return out


def length(w: Window) -> int:
    """Number of affine inversions, by the pairwise floor formula."""
    vals = w.values
    n = len(vals)
    total = 0
    for a in range(n):
        for b in range(a + 1, n):
            total += abs((vals[b] - vals[a]) // n)
    return total


def height(t: AffineTransposition, n: int) -> int:
    return (t.j - t.i) // n


def parabolic_decompose(w: Window) -> tuple[tuple[int, ...], Window]:
    """
    Split w into (sigma, w_min): w_min has the increasing rearrangement of
    w's window and w(k) == w_min(sigma(k)).  sigma(k) is the rank of w(k)
    inside the window.
    """
    vals = w.values
    order = sorted(range(len(vals)), key=vals.__getitem__)
    sigma = [0] * len(vals)
    for rank, k in enumerate(order, start=1):
        sigma[k] = rank
    return tuple(sigma), Window._trusted(tuple(sorted(vals)))


def translation_decompose(w: Window) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """values[i] == perm[i] + n * r[i] with perm a permutation and sum(r) == 0."""
    n = w.n
    return (tuple(rem(v, n) for v in w.values),
            tuple(quo(v, n) for v in w.values))


def from_translation(perm: Sequence[int], r: Sequence[int]) -> Window:
    n = len(perm)
    return Window([p + n * x for p, x in zip(perm, r)])


def transposition_hyperplane(t: AffineTransposition, n: int) -> tuple[PositiveRoot, int]:
    """
    The reflecting hyperplane of ((i, j)), e_rem(j) - e_rem(i) = quo(j),
    normalized to (positive root, level) by flipping both signs if needed.
    """
    if not (1 <= t.i <= n and t.i < t.j):
        raise ValueError(f"{t} is not a standard representative for n={n}")
    a, b, level = rem(t.j, n), t.i, quo(t.j, n)
    if a < b:
        return PositiveRoot(a, b), level
    return PositiveRoot(b, a), -level


def left_simple(w: Window, i: int) -> Window:
    """s_i * w: swaps the values congruent to i and i+1 (mod n); an adjacent alcove."""
    n = w.n
    if n == 1:
        return w
    lo = i % n
    hi = (i + 1) % n
    out = []
    for v in w.values:
        r = v % n
        if r == lo:
            out.append(v + 1)
        elif r == hi:
            out.append(v - 1)
        else:
            out.append(v)
    return Window._trusted(tuple(out))


def right_simple(w: Window, i: int) -> Window:
    """w * s_i: swaps positions i and i+1 of the periodic word."""
    n = w.n
    if n == 1:
        return w
    vals = list(w.values)
    if i < n:
        vals[i - 1], vals[i] = vals[i], vals[i - 1]
    else:
        vals[n - 1], vals[0] = vals[0] + n, vals[n - 1] - n
    return Window._trusted(tuple(vals))
