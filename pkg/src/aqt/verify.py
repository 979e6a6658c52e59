"""
Verification suites.  Each suite returns a Report whose cases carry a status:
proved-match (the claim is a theorem and the data agree), conjecture-match
(the claim is conjectural and the data agree) or mismatch.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Any, Callable

from .afperm import Window, identity, invert, left_simple
from .arr import (admissible_primes, build, charpoly_ff, count_complement, ish_cyclic_count,
                  ish_cyclic_placements, quotient_view, zaslavsky_counts)
from .errors import AqtError, NonUniqueMaximum, NonUniqueMinimum
from .paths import (all_ideals, all_labeled_paths, area, area_prime, bounce, from_labeled_path,
                    to_labeled_path)
from .qt import (QPoly, QTPoly, genfun, is_qt_symmetric, q_catalan, q_fuss_catalan,
                 q_fuss_catalan_bounded, q_int, specialize_antidiagonal, t_offset)
from .regions import (DEFAULT_BUDGET, SimplexSpec, dominant_inverse_filter, enumerate_chambers,
                      enumerate_simplex, max_alcove_of_bounded, shi_source)
from .stats import inversion_partition, ish_closed, ish_def, ish_inv, shi

PROVED = "proved-match"
CONJECTURE = "conjecture-match"
MISMATCH = "mismatch"

SUITES = ("assertions", "conjectures-positive", "conjectures-negative", "bijection",
          "inverse-statistics", "charpoly", "census", "mystery-case")

# the sixteen windows of D^2(5) as printed; one entry has window sum 14
MYSTERY_PRINTED = [
    (-1, 2, 5, 3, 6), (0, 3, 2, 4, 6), (1, 2, 4, 3, 5), (2, 1, 3, 4, 5),
    (0, 2, 3, 4, 6), (2, 0, 3, 6, 4), (1, 3, 2, 4, 5), (2, 1, 3, 5, 4),
    (0, 2, 4, 3, 6), (1, 2, 3, 4, 5), (1, 3, 2, 5, 4), (2, 1, 4, 3, 5),
    (0, 3, 1, 4, 6), (1, 2, 3, 5, 4), (1, 4, 2, 5, 3), (3, 1, 4, 2, 5),
]
MYSTERY_TYPO = (0, 3, 1, 4, 6)
MYSTERY_REPAIR = (0, 3, 1, 4, 7)


@dataclass
class Case:
    claim: str
    parameters: dict
    status: str
    expected: Any
    actual: Any


@dataclass
class Report:
    suite: str
    cases: list[Case] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != MISMATCH for c in self.cases)

    def add(self, claim: str, params: dict, expected, actual, proved: bool = True) -> Case:
        if expected == actual:
            status = PROVED if proved else CONJECTURE
        else:
            status = MISMATCH
        case = Case(claim, params, status, _plain(expected), _plain(actual))
        self.cases.append(case)
        return case

    def to_json(self) -> dict:
        return {"suite": self.suite, "ok": self.ok, "cases": [asdict(c) for c in self.cases]}


def _plain(x):
    if isinstance(x, QPoly):
        return list(x.coeffs)
    if isinstance(x, QTPoly):
        return x.to_json()["terms"]
    if isinstance(x, Window):
        return list(x.values)
    if isinstance(x, tuple):
        return [_plain(v) for v in x]
    if isinstance(x, list):
        return [_plain(v) for v in x]
    return x


@dataclass
class Bounds:
    n_max: int | None = None
    pairs: list[tuple[int, int]] | None = None
    samples: int = 10_000
    seed: int = 0
    budget: int = DEFAULT_BUDGET


def assertions(b: Bounds) -> Report:
    rep = Report("assertions")
    for n in range(2, (b.n_max or 5) + 1):
        par = {"n": n}
        full = genfun(shi_source(n, 1, budget=b.budget), 1)
        pos = genfun(shi_source(n, 1, positive=True, budget=b.budget), 1)
        off = comb(n, 2)
        rep.add("alcove-count", par, (n + 1) ** (n - 1), full.at_one())
        rep.add("loehr", par, q_int(n + 1) ** (n - 1), specialize_antidiagonal(full, off))
        rep.add("haglund", par, q_catalan(n), specialize_antidiagonal(pos, off))
        bounce_area = QTPoly()
        for ideal in all_ideals(n):
            bounce_area = bounce_area + QTPoly({(bounce(ideal), area(ideal)): 1})
        rep.add("positive-part-bounce-area", par, bounce_area, pos)
        rep.add("qt-symmetry", par, True, is_qt_symmetric(full), proved=False)
        rep.add("qt-symmetry-positive", par, True, is_qt_symmetric(pos), proved=False)
    return rep


def _conjectures(b: Bounds, negative: bool) -> Report:
    rep = Report("conjectures-negative" if negative else "conjectures-positive")
    default = [(3, 2), (3, 3)] if negative else [(3, 2), (3, 3), (4, 2)]
    for n, m in b.pairs or default:
        par = {"n": n, "m": m}
        p = m * n - 1 if negative else m * n + 1
        off = t_offset(n, m, negative)
        full = genfun(shi_source(n, m, negative, budget=b.budget), m, negative)
        pos = genfun(shi_source(n, m, negative, positive=True, budget=b.budget), m, negative)
        catalan = q_fuss_catalan_bounded(n, m) if negative else q_fuss_catalan(n, m)
        rep.add("alcove-count", par, p ** (n - 1), full.at_one())
        rep.add("dominant-count", par, SimplexSpec(n, p).dominant_count(), pos.at_one())
        rep.add("antidiagonal", par, q_int(p) ** (n - 1), specialize_antidiagonal(full, off),
                proved=False)
        rep.add("antidiagonal-positive", par, catalan, specialize_antidiagonal(pos, off),
                proved=False)
        rep.add("qt-symmetry", par, True, is_qt_symmetric(full), proved=False)
        rep.add("qt-symmetry-positive", par, True, is_qt_symmetric(pos), proved=False)
    return rep


def bijection(b: Bounds) -> Report:
    rep = Report("bijection")
    for n in range(1, (b.n_max or 4) + 1):
        par = {"n": n}
        minima = [c.minimum for c in enumerate_chambers(n, 1, b.budget)]
        rep.add("chamber-count", par, (n + 1) ** (n - 1), len(minima))
        paths, failures = [], 0
        stat_bad = trip_bad = 0
        for w in minima:
            try:
                path = to_labeled_path(w)
            except AqtError:
                failures += 1
                continue
            paths.append(path)
            if from_labeled_path(path) != w:
                trip_bad += 1
            if (comb(n, 2) - shi(w), ish_closed(w)) != (area_prime(path), bounce(path.ideal)):
                stat_bad += 1
        rep.add("to-labeled-path-defined", par, 0, failures)
        rep.add("round-trip", par, 0, trip_bad)
        image = sorted((p.w, p.ideal.to_json()) for p in paths)
        target = sorted((p.w, p.ideal.to_json()) for p in all_labeled_paths(n))
        rep.add("bijective-onto-labeled-paths", par, True, image == target)
        rep.add("statistics-area-bounce", par, 0, stat_bad)
    return rep


def _random_windows(count: int, seed: int) -> list[Window]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, 6)
        w = identity(n)
        for _ in range(rng.randint(0, 12)):
            w = left_simple(w, rng.randint(1, n))
        out.append(w)
    return out


INVERSE_CLAIMS: dict[str, Callable[[Window, Window], bool]] = {
    "shi-inverse": lambda w, v: shi(w) == shi(v),
    "inversion-partition-inverse": lambda w, v: inversion_partition(w) == inversion_partition(v),
    "ish-closed-form": lambda w, v: ish_def(w) == ish_closed(w),
    "ish-inv-is-ish-of-inverse": lambda w, v: ish_inv(w) == ish_closed(v),
}


def inverse_statistics(b: Bounds) -> Report:
    rep = Report("inverse-statistics")
    sources = [(f"D^{p}(3)", enumerate_simplex(SimplexSpec(3, p), b.budget)) for p in (4, 7, 5)]
    sources.append((f"random(seed={b.seed})", _random_windows(b.samples, b.seed)))
    for name, ws in sources:
        pairs = [(w, invert(w)) for w in ws]
        for claim, test in INVERSE_CLAIMS.items():
            bad = sum(1 for w, v in pairs if not test(w, v))
            rep.add(claim, {"source": name, "windows": len(ws)}, 0, bad)
    return rep


def _q_minus(c: int) -> QPoly:
    return QPoly([-c, 1])


def charpoly(b: Bounds) -> Report:
    rep = Report("charpoly")
    q = QPoly([0, 1])
    for n in range(2, (b.n_max or 4) + 1):
        expected = q * _q_minus(n) ** (n - 1)
        for fam in ("shi", "ish"):
            par = {"family": fam, "n": n}
            arr = build(fam, n)
            chi = charpoly_ff(arr)
            rep.add("charpoly", par, expected, chi)
            other = charpoly_ff(arr, admissible_primes(arr, n + 2, skip=n + 2))
            rep.add("prime-set-independence", par, chi, other)
            rep.add("zaslavsky", par, ((n + 1) ** (n - 1), (n - 1) ** (n - 1)),
                    zaslavsky_counts(chi, n))
        ish = build("ish", n)
        for p in admissible_primes(ish, n + 2):
            par = {"family": "ish", "n": n, "p": p}
            brute = count_complement(ish, p)
            rep.add("cyclic-count", par, ish_cyclic_count(n, p), brute)
            rep.add("cyclic-placements", par, ish_cyclic_placements(n, p), brute)
    rep.add("charpoly", {"family": "cox", "n": 3}, q * _q_minus(1) * _q_minus(2),
            charpoly_ff(build("cox", 3)))
    for n, m in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]:
        par = {"family": "shi_m", "n": n, "m": m}
        chi = charpoly_ff(build("shi_m", n, m))
        rep.add("charpoly", par, q * _q_minus(m * n) ** (n - 1), chi)
        rep.add("quotient-charpoly", par, _q_minus(m * n) ** (n - 1), quotient_view(chi))
        rep.add("zaslavsky", par, ((m * n + 1) ** (n - 1), (m * n - 1) ** (n - 1)),
                zaslavsky_counts(chi, n))
    return rep


def census(b: Bounds) -> Report:
    rep = Report("census")
    for n, m in b.pairs or [(3, 1), (3, 2), (4, 1)]:
        par = {"n": n, "m": m}
        chambers_z, bounded_z = zaslavsky_counts(charpoly_ff(build("shi_m", n, m)), n)
        try:
            chambers = enumerate_chambers(n, m, b.budget)
            rep.add("unique-minimum", par, True, True)
        except NonUniqueMinimum as exc:
            rep.add("unique-minimum", par, True, str(exc))
            continue
        rep.add("chamber-count", par, chambers_z, len(chambers))
        try:
            maxima = max_alcove_of_bounded(n, m, chambers, b.budget)
            rep.add("unique-maximum", par, True, True, proved=m == 1)
        except NonUniqueMaximum as exc:
            rep.add("unique-maximum", par, True, str(exc), proved=m == 1)
            continue
        rep.add("bounded-count", par, bounded_z, len(maxima))
        low = sorted(invert(c.minimum) for c in chambers)
        high = sorted(invert(w) for w in maxima)
        rep.add("minimum-inverses-are-simplex", par, True,
                low == enumerate_simplex(SimplexSpec(n, m * n + 1), b.budget), proved=m == 1)
        rep.add("maximum-inverses-are-simplex", par, True,
                high == enumerate_simplex(SimplexSpec(n, m * n - 1), b.budget), proved=False)
    return rep


def _distribution(ws: list[Window]) -> QPoly:
    counts: dict[int, int] = {}
    for w in ws:
        counts[ish_inv(w)] = counts.get(ish_inv(w), 0) + 1
    return QPoly([counts.get(k, 0) for k in range(max(counts) + 1)])


def mystery_case(b: Bounds) -> Report:
    rep = Report("mystery-case")
    par = {"n": 5, "p": 2}
    ws = enumerate_simplex(SimplexSpec(5, 2), b.budget)
    found = {w.values for w in ws}
    rep.add("alcove-count", par, 16, len(ws))
    verbatim = [v for v in MYSTERY_PRINTED if v != MYSTERY_TYPO]
    rep.add("printed-windows-found", par, len(verbatim), sum(1 for v in verbatim if v in found))
    try:
        Window(MYSTERY_TYPO)
        typo = "valid"
    except AqtError as exc:
        typo = type(exc).__name__
    rep.add("printed-typo-is-invalid", {**par, "window": list(MYSTERY_TYPO)}, "BadSum", typo)
    repaired = sorted(MYSTERY_REPAIR if v == MYSTERY_TYPO else v for v in MYSTERY_PRINTED)
    rep.add("windows", par, [list(v) for v in repaired], [list(w.values) for w in ws])
    rep.add("ish-inv-distribution", par, QPoly([10, 5, 1]), _distribution(ws))
    dom = dominant_inverse_filter(ws)
    rep.add("dominant-inverse-windows", par, [[0, 2, 3, 4, 6], [1, 2, 3, 4, 5], [2, 0, 3, 6, 4]],
            [list(w.values) for w in dom])
    rep.add("dominant-inverse-distribution", par, QPoly([1, 1, 1]), _distribution(dom))
    return rep


RUNNERS: dict[str, Callable[[Bounds], Report]] = {
    "assertions": assertions,
    "conjectures-positive": lambda b: _conjectures(b, False),
    "conjectures-negative": lambda b: _conjectures(b, True),
    "bijection": bijection,
    "inverse-statistics": inverse_statistics,
    "charpoly": charpoly,
    "census": census,
    "mystery-case": mystery_case,
}


def run(suite: str, bounds: Bounds | None = None) -> Report:
    if suite not in RUNNERS:
        raise KeyError(suite)
    return RUNNERS[suite](bounds or Bounds())
