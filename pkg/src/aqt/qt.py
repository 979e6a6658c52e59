"""
Exact integer polynomials in q (QPoly) and in q, t (QTPoly), q-analogues,
and the bivariate generating functions over alcove sets.

>>> q_binom(4, 2)
QPoly(1 + q + 2q^2 + q^3 + q^4)
>>> q_catalan(3)
QPoly(1 + q^2 + q^3 + q^4 + q^6)
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, gcd
from typing import Iterable, Mapping

from .afperm import Window
from .errors import BadArgs, InexactDivision, NegativeExponent
from .stats import ish_inv, shi_m

__all__ = [
    "QPoly", "QTPoly", "q_int", "q_fact", "q_binom", "q_catalan",
    "q_fuss_catalan", "q_fuss_catalan_bounded", "q_rational", "genfun",
    "t_offset", "specialize_antidiagonal", "is_qt_symmetric",
]


class QPoly:
    """Univariate polynomial with integer coefficients, ascending, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> QPoly:
        if k < 0:
            raise NegativeExponent(f"q^{k}")
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly([other])
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: QPoly) -> QPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self):
        return QPoly([-x for x in self.coeffs])

    def __sub__(self, other: QPoly) -> QPoly:
        return self + (-other)

    def __mul__(self, other: QPoly | int) -> QPoly:
        if isinstance(other, int):
            return QPoly([x * other for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> QPoly:
        out = QPoly([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod(self, d: QPoly) -> tuple[QPoly, QPoly]:
        """Division over the integers; requires a leading coefficient of +-1 in d."""
        if not d.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        lead = d.coeffs[-1]
        if lead not in (1, -1):
            raise BadArgs("divisor must be monic up to sign")
        r = list(self.coeffs)
        dq = len(r) - len(d.coeffs)
        if dq < 0:
            return QPoly(), self
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = r[k + len(d.coeffs) - 1] * lead
            quot[k] = c
            if c:
                for j, y in enumerate(d.coeffs):
                    r[k + j] -= c * y
        return QPoly(quot), QPoly(r)

    def exact_div(self, d: QPoly) -> QPoly:
        quot, r = self.divmod(d)
        if r.coeffs:
            raise InexactDivision(f"{self} is not divisible by {d}")
        return quot

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> QPoly:
        """Multiply by q^k (k may be negative if the low coefficients vanish)."""
        if k >= 0:
            return QPoly([0] * k + list(self.coeffs))
        if any(self.coeffs[:-k]):
            raise NegativeExponent(f"q^{k} * {self} is not a polynomial")
        return QPoly(self.coeffs[-k:])

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    def __repr__(self):
        return f"QPoly({self})"

    def __str__(self):
        return _format({(k, 0): c for k, c in enumerate(self.coeffs) if c})


class QTPoly:
    """Sparse polynomial in q, t: {(q_exp, t_exp): nonzero coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise NegativeExponent(f"q^{a} t^{b}")
            if c:
                clean[(int(a), int(b))] = int(c)
        self.terms = clean

    def __eq__(self, other):
        return isinstance(other, QTPoly) and self.terms == other.terms

    def __add__(self, other: QTPoly) -> QTPoly:
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return QTPoly(out)

    def __mul__(self, other: QTPoly) -> QTPoly:
        out: dict[tuple[int, int], int] = {}
        for (a, b), c in self.terms.items():
            for (x, y), d in other.terms.items():
                out[(a + x, b + y)] = out.get((a + x, b + y), 0) + c * d
        return QTPoly(out)

    def coefficient(self, a: int, b: int) -> int:
        return self.terms.get((a, b), 0)

    def swap(self) -> QTPoly:
        return QTPoly({(b, a): c for (a, b), c in self.terms.items()})

    def at_one(self) -> int:
        return sum(self.terms.values())

    def to_json(self) -> dict:
        return {"terms": [[a, b, c] for (a, b), c in sorted(self.terms.items())]}

    def matrix(self, offset: int) -> list[list[int]]:
        """Rows indexed by offset - t_exp (the shi-like statistic), columns by q_exp."""
        if not self.terms:
            return []
        rows = max(offset - b for _, b in self.terms) + 1
        cols = max(a for a, _ in self.terms) + 1
        out = [[0] * cols for _ in range(rows)]
        for (a, b), c in self.terms.items():
            out[offset - b][a] = c
        return out

    def __repr__(self):
        return f"QTPoly({self})"

    def __str__(self):
        return _format(self.terms)


def _format(terms: Mapping[tuple[int, int], int]) -> str:
    if not terms:
        return "0"
    parts = []
    for (a, b), c in sorted(terms.items()):
        mono = ""
        if a:
            mono += "q" if a == 1 else f"q^{a}"
        if b:
            mono += "t" if b == 1 else f"t^{b}"
        if not mono:
            body = str(abs(c))
        else:
            body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def q_int(a: int) -> QPoly:
    if a < 0:
        raise BadArgs("q-integer needs a >= 0")
    return QPoly([1] * a)


def q_fact(a: int) -> QPoly:
    if a < 0:
        raise BadArgs("q-factorial needs a >= 0")
    out = QPoly([1])
    for k in range(2, a + 1):
        out = out * q_int(k)
    return out


@lru_cache(maxsize=None)
def q_binom(a: int, b: int) -> QPoly:
    """Gaussian binomial by [a, b] = [a-1, b-1] + q^b [a-1, b]."""
    if not 0 <= b <= a:
        raise BadArgs(f"q-binomial needs 0 <= b <= a, got ({a}, {b})")
    if b == 0 or b == a:
        return QPoly([1])
    return q_binom(a - 1, b - 1) + q_binom(a - 1, b).shift(b)


def q_catalan(n: int) -> QPoly:
    if n < 1:
        raise BadArgs("n must be positive")
    return q_binom(2 * n, n - 1).exact_div(q_int(n))


def q_fuss_catalan(n: int, m: int) -> QPoly:
    if n < 1 or m < 1:
        raise BadArgs("n and m must be positive")
    return q_binom((m + 1) * n, n - 1).exact_div(q_int(n))


def q_fuss_catalan_bounded(n: int, m: int) -> QPoly:
    """(1/[n]) [(m+1)n - 2, n - 1]_q, the bounded-chamber analogue."""
    if n < 1 or m < 1 or (m + 1) * n - 2 < n - 1:
        raise BadArgs("need n, m >= 1 with (m+1)n - 2 >= n - 1")
    return q_binom((m + 1) * n - 2, n - 1).exact_div(q_int(n))


def q_rational(n: int, p: int) -> QPoly:
    """Rational q-Catalan (1/[p+n]) [p+n, n]_q for gcd(p, n) = 1."""
    if n < 1 or p < 1 or gcd(n, p) != 1:
        raise BadArgs(f"rational q-Catalan needs coprime positive (n, p), got ({n}, {p})")
    return q_binom(p + n, n).exact_div(q_int(p + n))


def t_offset(n: int, m: int, negative: bool = False) -> int:
    """m*C(n,2) for D^{mn+1}(n); (mn-2)(n-1)/2 for D^{mn-1}(n)."""
    if negative:
        return (m * n - 2) * (n - 1) // 2
    return m * comb(n, 2)


def genfun(ws: Iterable[Window], m: int, negative: bool = False) -> QTPoly:
    """Sum of q^{ish^-1(w)} t^{offset - shi^m(w)} over the windows."""
    terms: dict[tuple[int, int], int] = {}
    n = None
    for w in ws:
        if n is None:
            n = w.n
            off = t_offset(n, m, negative)
        key = (ish_inv(w), off - shi_m(w, m))
        if key[1] < 0:
            raise NegativeExponent(f"shi^{m}({w}) exceeds the t-offset {off}")
        terms[key] = terms.get(key, 0) + 1
    return QTPoly(terms)


def specialize_antidiagonal(p: QTPoly, k: int) -> QPoly:
    """q^k * p(q, 1/q): each q^a t^b becomes q^(k + a - b)."""
    out: dict[int, int] = {}
    for (a, b), c in p.terms.items():
        e = k + a - b
        if e < 0:
            raise NegativeExponent(f"q^{e} from q^{a} t^{b} with k={k}")
        out[e] = out.get(e, 0) + c
    if not out:
        return QPoly()
    return QPoly([out.get(e, 0) for e in range(max(out) + 1)])


def is_qt_symmetric(p: QTPoly) -> bool:
    return p == p.swap()
