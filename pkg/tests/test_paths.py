from math import comb

import pytest
from hypothesis import given, strategies as st

from aqt.afperm import PositiveRoot as R, Window, identity, invert
from aqt.errors import ComparableGenerators, NotRepresentingAlcove, ValleyViolation
from aqt.paths import (LabeledPath, RootIdeal, all_ideals, all_labeled_paths, area, area_prime,
                       bounce, bounce_touches, from_labeled_path, ideal_from_heights,
                       ideal_from_minimal_roots, positive_alcove, render, sommers_address,
                       to_labeled_path, valleys)
from aqt.regions import enumerate_chambers
from aqt.stats import address, ish, positive_roots, shi

FIG4_GENS = [R(1, 4), R(2, 6), R(6, 7), R(7, 9)]
CATALAN = [1, 1, 2, 5, 14, 42, 132, 429]


@pytest.fixture
def fig4():
    return ideal_from_minimal_roots(9, FIG4_GENS)


def empty(n):
    return RootIdeal(n, frozenset())


def full(n):
    return RootIdeal(n, frozenset(positive_roots(n)))


def test_minimal_roots_closure():
    assert len(ideal_from_minimal_roots(3, [])) == 0
    assert ideal_from_minimal_roots(3, [R(1, 2)]).members == {R(1, 2), R(1, 3)}
    with pytest.raises(ComparableGenerators):
        ideal_from_minimal_roots(3, [R(1, 2), R(1, 3)])


def test_non_ideal_rejected():
    with pytest.raises(ValueError):
        RootIdeal(3, frozenset({R(2, 3)}))


def test_valleys(fig4):
    assert valleys(fig4) == set(FIG4_GENS)
    assert valleys(full(3)) == {R(1, 2), R(2, 3)}
    assert valleys(empty(3)) == set()


def test_fig4_bounce_and_address(fig4):
    assert fig4.heights() == (3, 5, 6, 6, 6, 6, 8, 9, 9)
    assert bounce_touches(fig4) == [7, 6, 2]
    assert bounce(fig4) == 15
    k = sommers_address(fig4)
    top = [k[R(i, 9)] for i in range(1, 9)]
    assert top == [3, 3, 2, 2, 2, 2, 1, 0]
    assert sum(top) == 15
    assert address(positive_alcove(fig4)) == k


@pytest.mark.parametrize("n", range(1, 7))
def test_bounce_extremes(n):
    # the empty ideal goes straight up then right; the staircase touches every diagonal point
    assert bounce(empty(n)) == 0
    assert bounce(full(n)) == comb(n, 2)


def test_sommers_extremes():
    assert set(sommers_address(empty(4)).values()) == {0}
    assert all(v == r.b - r.a for r, v in sommers_address(full(4)).items())


def test_area_examples():
    ideal = ideal_from_minimal_roots(3, [R(1, 2)])
    assert area_prime(LabeledPath((1, 3, 2), ideal)) == 0
    assert area_prime(LabeledPath((1, 2, 3), empty(3))) == area(empty(3)) == 3
    assert area_prime(LabeledPath((1, 2, 3), full(3))) == 0


def test_labeled_path_examples():
    ideal = ideal_from_minimal_roots(3, [R(1, 2)])
    p = to_labeled_path(Window([-1, 4, 3]))
    assert p == LabeledPath((1, 3, 2), ideal)
    assert from_labeled_path(p) == Window([-1, 4, 3])
    assert to_labeled_path(identity(3)) == LabeledPath((1, 2, 3), empty(3))
    assert from_labeled_path(LabeledPath((1, 2, 3), empty(3))) == identity(3)
    with pytest.raises(ValleyViolation):
        LabeledPath((1, 3, 2), ideal_from_minimal_roots(3, [R(2, 3)]))


def test_cone_permutation_convention():
    # [1,5,0] is the minimum of its chamber; its cone permutation is sigma^-1 = (3,1,2)
    p = to_labeled_path(Window([1, 5, 0]))
    assert p.w == (3, 1, 2)
    assert p.ideal.members == {R(1, 3), R(2, 3)}
    assert (area_prime(p), bounce(p.ideal)) == (0, 2)


def test_non_representing_rejected():
    # positive alcoves beyond the Shi minimum of their chamber
    for values in ([-3, 4, 5], [-2, 3, 5], [-4, 6, 4]):
        with pytest.raises(NotRepresentingAlcove):
            to_labeled_path(Window(values))


@pytest.mark.parametrize("n", range(1, 8))
def test_catalan_counts(n):
    ideals = list(all_ideals(n))
    assert len(ideals) == CATALAN[n]
    assert len({i.members for i in ideals}) == CATALAN[n]
    assert all(ideal_from_heights(i.heights()) == i for i in ideals)


@pytest.mark.parametrize("n", range(1, 8))
def test_ish_equals_bounce_on_positive_part(n):
    for ideal in all_ideals(n):
        k = sommers_address(ideal)
        assert sum(k[R(i, n)] for i in range(1, n)) == bounce(ideal)
        w = positive_alcove(ideal)
        assert address(w) == k
        assert ish(w) == bounce(ideal)


@pytest.mark.parametrize("n", range(1, 6))
def test_labeled_path_counts(n):
    ps = list(all_labeled_paths(n))
    assert len(ps) == (n + 1) ** (n - 1)
    assert sum(1 for p in ps if p.w == tuple(range(1, n + 1))) == CATALAN[n]


@pytest.mark.parametrize("n", range(1, 5))
def test_main_bijection_small(n):
    minima = [c.minimum for c in enumerate_chambers(n, 1)]
    images = set()
    for w in minima:
        p = to_labeled_path(w)
        images.add((p.w, p.ideal.members))
        assert from_labeled_path(p) == w
        assert comb(n, 2) - shi(w) == area_prime(p)
        assert ish(w) == bounce(p.ideal)
    assert images == {(p.w, p.ideal.members) for p in all_labeled_paths(n)}


@given(st.integers(2, 5).flatmap(lambda n: st.sampled_from(list(all_labeled_paths(n)))))
def test_from_to_round_trip(p):
    w = from_labeled_path(p)
    assert to_labeled_path(w) == p
    # the alcove lies in the cone of the labels: w^-1 sorts into the order of p.w
    assert invert(w).n == p.n


def test_json_and_render():
    p = to_labeled_path(Window([1, 5, 0]))
    assert p.to_json() == {"w": [3, 1, 2], "ideal": [[1, 3], [2, 3]]}
    assert render(p) == "× o | \\\n| × \\\nw = 3 1 2"
