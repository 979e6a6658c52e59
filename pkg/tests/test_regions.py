import itertools
from math import comb, gcd

import pytest

from aqt.afperm import Window, identity, invert, left_simple
from aqt.errors import BudgetExceeded, NotCoprime
from aqt.regions import (ChamberDescriptor, SimplexSpec, chamber_alcoves, chamber_descriptor,
                         dominant_inverse_filter, enumerate_chambers, enumerate_simplex,
                         is_bounded_chamber, is_chamber_minimal, max_alcove_of_bounded,
                         separating_count, shi_source, simplex_contains)
from aqt.stats import positive_roots

D25 = [Window(v) for v in ([0, 2, 3, 4, 6], [1, 2, 3, 4, 5], [2, 0, 3, 6, 4])]


def test_simplex_spec():
    s = SimplexSpec(5, 2)
    assert (s.a, s.b) == (0, 2)
    assert s.alcove_count() == 16
    assert s.dominant_count() == 3
    with pytest.raises(NotCoprime):
        SimplexSpec(4, 6)


def test_simplex_contains():
    assert simplex_contains(SimplexSpec(3, 4), identity(3))
    assert simplex_contains(SimplexSpec(5, 2), Window([2, 0, 3, 6, 4]))
    inside = set(enumerate_simplex(SimplexSpec(5, 2)))
    for w in enumerate_simplex(SimplexSpec(5, 3)):
        assert simplex_contains(SimplexSpec(5, 2), w) == (w in inside)


@pytest.mark.parametrize("n,p", [(n, p) for n in range(1, 6) for p in range(1, 8)
                                 if gcd(n, p) == 1 and p ** (n - 1) <= 3000])
def test_simplex_counts(n, p):
    ws = enumerate_simplex(SimplexSpec(n, p))
    assert len(ws) == len(set(ws)) == p ** (n - 1)
    assert ws == sorted(ws)
    assert len(dominant_inverse_filter(ws)) == comb(p + n, n) // (p + n)


def test_simplex_small_examples():
    assert len(enumerate_simplex(SimplexSpec(3, 4))) == 16
    assert len(enumerate_simplex(SimplexSpec(2, 3))) == 3
    assert dominant_inverse_filter(enumerate_simplex(SimplexSpec(5, 2))) == D25
    assert len(dominant_inverse_filter(enumerate_simplex(SimplexSpec(3, 4)))) == 5
    assert dominant_inverse_filter([identity(4)]) == [identity(4)]


def test_simplex_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_simplex(SimplexSpec(5, 7), budget=100)


def test_descriptors():
    assert chamber_descriptor(identity(3), 1).clamp == (0, 0, 0)
    assert chamber_descriptor(Window([0, 2, 4]), 1).clamp == (0, 1, 0)
    w = Window([1, 5, 0])
    d = chamber_descriptor(w, 1)
    # a wall-neighbour across a non-Shi hyperplane stays in the chamber
    same = [v for v in map(lambda i: left_simple(w, i), range(1, 4))
            if separating_count(w, v, 1) == 0]
    assert same and all(chamber_descriptor(v, 1) == d for v in same)
    assert len(d.digest()) == 12


def test_bounded_chamber_flood():
    for c in enumerate_chambers(3, 2):
        if is_bounded_chamber(c.descriptor):
            alcoves = chamber_alcoves(c.descriptor, c.minimum)
            assert c.minimum in alcoves
            assert all(chamber_descriptor(v, 2) == c.descriptor for v in alcoves)


@pytest.mark.parametrize("n,m,count", [(2, 1, 3), (3, 1, 16), (3, 2, 49), (4, 1, 125)])
def test_chamber_counts(n, m, count):
    chambers = enumerate_chambers(n, m)
    assert len(chambers) == count
    assert all(is_chamber_minimal(c.minimum, m) for c in chambers)
    bounded = [c for c in chambers if is_bounded_chamber(c.descriptor)]
    assert len(bounded) == (m * n - 1) ** (n - 1)


def test_boundedness_examples():
    assert is_bounded_chamber(ChamberDescriptor(3, 1, (0, 0, 0)))
    assert not is_bounded_chamber(ChamberDescriptor(3, 1, (1, 1, 1)))


def test_fig3_minima_are_inverse_simplex():
    minima = sorted(invert(c.minimum) for c in enumerate_chambers(3, 1))
    assert minima == enumerate_simplex(SimplexSpec(3, 4))


@pytest.mark.parametrize("n,m,count", [(2, 1, 1), (3, 1, 4), (3, 2, 25)])
def test_maxima(n, m, count):
    tops = max_alcove_of_bounded(n, m)
    assert len(tops) == count
    assert sorted(invert(w) for w in tops) == enumerate_simplex(SimplexSpec(n, m * n - 1))


def test_descriptor_iff_no_separating_hyperplane():
    ws = enumerate_simplex(SimplexSpec(3, 7))
    for m in (1, 2):
        for u, v in itertools.combinations(ws, 2):
            same = chamber_descriptor(u, m) == chamber_descriptor(v, m)
            assert same == (separating_count(u, v, m) == 0)


def test_chamber_minimality_is_local():
    # every non-minimal alcove has a shorter wall-neighbour in its chamber
    w = Window([-3, 4, 5])
    assert not is_chamber_minimal(w, 1)
    assert is_chamber_minimal(Window([1, 5, 0]), 1)


def test_shi_source():
    assert len(shi_source(3, 2)) == 49
    assert len(shi_source(3, 2, negative=True)) == 25
    assert len(shi_source(3, 2, positive=True)) == 12
    with pytest.raises(ValueError):
        shi_source(1, 1, negative=True)


def test_neighbours_are_adjacent():
    w = Window([1, 5, 0])
    roots = positive_roots(3)
    for i in range(1, 4):
        assert separating_count(w, left_simple(w, i), 10) == 1
    assert len(roots) == 3
