from math import comb

import pytest
from hypothesis import given, strategies as st

from aqt.errors import BadArgs, InexactDivision, NegativeExponent
from aqt.paths import all_ideals, area, bounce
from aqt.qt import (QPoly, QTPoly, genfun, is_qt_symmetric, q_binom, q_catalan, q_fact,
                    q_fuss_catalan, q_fuss_catalan_bounded, q_int, q_rational,
                    specialize_antidiagonal, t_offset)
from aqt.regions import shi_source

polys = st.lists(st.integers(-5, 5), max_size=6).map(QPoly)


def test_q_analogues():
    assert q_int(3) == QPoly([1, 1, 1])
    assert q_int(0) == 0
    assert q_fact(3) == QPoly([1, 2, 2, 1])
    assert q_binom(4, 2) == QPoly([1, 1, 2, 1, 1])
    assert q_binom(5, 0) == 1
    with pytest.raises(BadArgs):
        q_binom(2, 3)


def test_catalans():
    assert q_catalan(3) == QPoly([1, 0, 1, 1, 1, 0, 1])
    assert [q_catalan(n)(1) for n in range(1, 7)] == [1, 2, 5, 14, 42, 132]
    assert q_fuss_catalan(3, 2)(1) == 12
    assert q_fuss_catalan_bounded(3, 2)(1) == 7
    assert q_rational(5, 2) == QPoly([1, 0, 1, 0, 1])
    assert q_rational(3, 4) == q_catalan(3)
    with pytest.raises(BadArgs):
        q_rational(4, 2)


def test_division():
    assert (q_int(6) * q_int(5)).exact_div(q_int(3) * q_int(2)) == q_catalan(3)
    with pytest.raises(InexactDivision):
        q_int(3).exact_div(q_int(2))
    with pytest.raises(ZeroDivisionError):
        q_int(3).divmod(QPoly())


@given(polys, polys)
def test_ring_laws(a, b):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) - b == a
    assert (a * b)(2) == a(2) * b(2)
    d = QPoly([1, 1])
    assert (a * d).exact_div(d) == a


@given(st.integers(0, 9), st.integers(0, 9))
def test_binomial_symmetry(a, b):
    if b > a:
        a, b = b, a
    assert q_binom(a, b) == q_binom(a, a - b)
    assert q_binom(a, b)(1) == comb(a, b)
    assert q_binom(a, b) * q_fact(b) * q_fact(a - b) == q_fact(a)


def test_qtpoly_basics():
    p = QTPoly({(1, 0): 2, (0, 3): 1})
    assert p.swap() == QTPoly({(0, 1): 2, (3, 0): 1})
    assert p.at_one() == 3
    assert p.to_json() == {"terms": [[0, 3, 1], [1, 0, 2]]}
    assert str(p) == "t^3 + 2q"
    with pytest.raises(NegativeExponent):
        QTPoly({(-1, 0): 1})
    assert is_qt_symmetric(QTPoly({(0, 0): 1}))
    assert not is_qt_symmetric(QTPoly({(1, 0): 1}))


def test_specialize():
    p = QTPoly({(0, 3): 1, (1, 1): 1})
    assert specialize_antidiagonal(p, 3) == QPoly([1, 0, 0, 1])
    with pytest.raises(NegativeExponent):
        specialize_antidiagonal(p, 2)


def test_table_n3():
    g = genfun(shi_source(3, 1), 1)
    assert g.matrix(t_offset(3, 1)) == [[1, 0, 0, 0], [2, 1, 0, 0], [2, 3, 1, 0], [1, 2, 2, 1]]
    assert is_qt_symmetric(g)
    pos = genfun(shi_source(3, 1, positive=True), 1)
    assert specialize_antidiagonal(pos, 3) == QPoly([1, 0, 1, 1, 1, 0, 1])
    assert is_qt_symmetric(pos)


@pytest.mark.parametrize("n", range(2, 6))
def test_positive_part_is_bounce_area(n):
    pos = genfun(shi_source(n, 1, positive=True), 1)
    expected = QTPoly()
    for ideal in all_ideals(n):
        expected = expected + QTPoly({(bounce(ideal), area(ideal)): 1})
    assert pos == expected


def test_offsets():
    assert t_offset(3, 2) == 6
    assert t_offset(3, 2, negative=True) == 4
    assert genfun(shi_source(3, 2, negative=True), 2, negative=True).at_one() == 25
