from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from cgrational.symmetries import (
    GENERATOR_ELEMENTS,
    GENERATORS,
    IDENTITY,
    RELATION_GENERATORS,
    ReggeElement,
    ReggeSymbol,
    all_elements,
    element_word,
    regge_orbit,
    regge_symbol,
    related_coord,
    related_coord_element,
    symbol_to_indices,
    transform_indices,
    verify_orbit_factors,
    verify_recurrences,
    verify_regge,
    weyl_factor,
)
from cgrational.weight_basis import IndexTuple, coord, window


@st.composite
def valid_tuples(draw, max_mn=10):
    m = draw(st.integers(0, max_mn))
    n = draw(st.integers(0, max_mn))
    k = draw(st.integers(0, min(m, n)))
    i = draw(st.integers(0, m))
    j = draw(st.integers(max(0, k - i), min(n, m + n - k - i)))
    return m, n, k, i, j


def small_tuples(limit=6):
    for m in range(limit + 1):
        for n in range(limit + 1):
            for k in range(min(m, n) + 1):
                for i, j in window(m, n, k):
                    yield m, n, k, i, j


@pytest.mark.parametrize(
    "t,grid",
    [
        ((3, 4, 1, 0, 3), ((3, 2, 1), (0, 3, 3), (3, 1, 2))),
        ((1, 1, 1, 0, 1), ((0, 0, 1), (0, 1, 0), (1, 0, 0))),
        ((3, 4, 0, 0, 0), ((4, 3, 0), (0, 0, 7), (3, 4, 0))),
    ],
)
def test_symbol_examples(t, grid):
    s = regge_symbol(*t)
    assert s.grid == grid
    assert symbol_to_indices(s) == t


def test_symbol_rejects_off_window():
    with pytest.raises(ValueError):
        regge_symbol(3, 4, 1, 0, 0)


@pytest.mark.parametrize(
    "grid",
    [
        ((1, 0, 0), (0, 1, 0), (0, 0, 2)),
        ((1, -1, 1), (0, 1, 0), (0, 1, 0)),
        ((1, 0), (0, 1)),
    ],
)
def test_symbol_invariants_enforced(grid):
    with pytest.raises(ValueError):
        ReggeSymbol(grid)


@given(st.lists(st.integers(0, 6), min_size=4, max_size=4), st.integers(0, 12))
def test_every_equal_sum_grid_is_a_symbol(corner, total):
    # the top-left 2x2 block and the line sum fix the whole grid
    a, b, c, d = corner
    g = ((a, b, total - a - b), (c, d, total - c - d), (total - a - c, total - b - d, a + b + c + d - total))
    if any(v < 0 for r in g for v in r):
        return
    s = ReggeSymbol(g)
    assert regge_symbol(*symbol_to_indices(s)) == s


@given(valid_tuples())
def test_line_sums(t):
    m, n, k, _, _ = t
    s = regge_symbol(*t)
    assert {sum(r) for r in s.grid} | {sum(c) for c in zip(*s.grid)} == {m + n - k}
    assert s.line_sum == m + n - k


def test_group_has_72_distinct_elements():
    elements = all_elements()
    assert len(set(elements)) == 72
    images = {e.apply(ReggeSymbol(((2, 7, 6), (9, 5, 1), (4, 3, 8)))) for e in elements}
    assert len(images) == 72


def test_group_laws():
    elements = all_elements()
    probe = ReggeSymbol(((2, 7, 6), (9, 5, 1), (4, 3, 8)))
    for a in elements[::7]:
        assert (a @ a.inverse()) == IDENTITY
        for b in elements[::11]:
            assert (a @ b).apply(probe) == a.apply(b.apply(probe))


@pytest.mark.parametrize(
    "generator,t,expected",
    [
        ("R23", (3, 4, 1, 0, 3), (3, 4, 1, 3, 1)),
        ("R13", (3, 4, 1, 2, 1), (5, 3, 2, 2, 1)),
        ("C12", (3, 4, 1, 2, 1), (4, 3, 1, 1, 2)),
        ("Transpose", (3, 4, 1, 0, 3), (3, 6, 3, 2, 3)),
        ("ModifiedTranspose", (3, 4, 1, 0, 3), (3, 3, 0, 1, 2)),
    ],
)
def test_transform_examples(generator, t, expected):
    assert transform_indices(*t, generator) == expected


@given(valid_tuples())
def test_transforms_match_grid_action(t):
    s = regge_symbol(*t)
    for name in (*GENERATORS, "ModifiedTranspose"):
        out = transform_indices(*t, name)
        assert out.is_valid()
        assert out == symbol_to_indices(GENERATOR_ELEMENTS[name].apply(s))


@given(valid_tuples())
def test_involutions(t):
    for name in ("C12", "R23", "Transpose", "R13"):
        once = transform_indices(*t, name)
        assert transform_indices(*once, name) == t


def test_unknown_generator():
    with pytest.raises(ValueError):
        transform_indices(1, 1, 0, 0, 0, "R12")
    with pytest.raises(ValueError):
        related_coord("Transpose", 1, 1, 0, 0, 0)


def test_relation_examples():
    t, f = related_coord("R23", 3, 4, 1, 0, 3)
    assert t == (3, 4, 1, 3, 1)
    assert f == Fraction(-3)
    assert coord(*t) == -9 == f * 3
    t, f = related_coord("C12", 3, 4, 1, 2, 1)
    assert coord(*t) == 5 == f * coord(3, 4, 1, 2, 1)
    t, f = related_coord("R13", 3, 4, 1, 0, 1)
    assert coord(*t) == f * coord(3, 4, 1, 0, 1)


@pytest.mark.parametrize("name", RELATION_GENERATORS)
def test_relations_against_representation_oracle(name):
    for t in small_tuples(6):
        image, factor = related_coord(name, *t)
        assert oracles.coordinate(*image) == factor * oracles.coordinate(*t), (name, t)


def test_r23_factor_direct_form():
    for m, n, k, i, j in small_tuples(7):
        s = m + n - k
        rhs = Fraction(
            (-1) ** k * oracles.multinomial(s, m - i, n - j, s - m - n + i + j),
            oracles.multinomial(s, i, j, s - i - j),
        )
        assert related_coord("R23", m, n, k, i, j)[1] == rhs == weyl_factor(m, n, k, i, j)


@given(valid_tuples(max_mn=7))
@settings(max_examples=40)
def test_orbit_properties(t):
    orbit = regge_orbit(*t)
    assert 72 % len(orbit) == 0
    assert all(IndexTuple(*u).is_valid() for u in orbit)
    for u in orbit:
        assert regge_orbit(*u) == orbit


def test_trivial_orbit():
    assert regge_orbit(0, 0, 0, 0, 0) == {(0, 0, 0, 0, 0)}


def test_permutation_matrix_orbit():
    orbit = regge_orbit(1, 1, 1, 0, 1)
    # six permutation matrices, each readable as a symbol in one way
    assert len(orbit) == 6
    for u in orbit:
        assert abs(coord(*u)) == 1


@given(valid_tuples(max_mn=6))
@settings(max_examples=25)
def test_composite_factors(t):
    base = coord(*t)
    for e in all_elements():
        image, factor = related_coord_element(e, *t)
        assert coord(*image) == factor * base


def test_words_cover_group():
    lengths = [len(element_word(e)) for e in all_elements()]
    assert lengths.count(0) == 1
    assert element_word(IDENTITY) == ()
    assert all(len(element_word(GENERATOR_ELEMENTS[g])) == 1 for g in RELATION_GENERATORS)


def test_element_without_transpose_keeps_flag():
    e = ReggeElement((1, 0, 2), (0, 1, 2), False)
    assert not e.transposed
    assert (e @ e) == IDENTITY


@pytest.mark.parametrize("m,n", [(3, 4), (5, 5), (0, 4), (2, 0)])
def test_verify_recurrences(m, n):
    report = verify_recurrences(m, n)
    assert report.passed, "\n".join(report.lines())


@pytest.mark.parametrize("m,n", [(3, 4), (1, 1), (0, 0), (4, 2)])
def test_verify_regge(m, n):
    report = verify_regge(m, n)
    assert report.passed, "\n".join(report.lines())


def test_verify_orbit_factors():
    report = verify_orbit_factors(3, 4, 1, 0, 3)
    assert report.passed, "\n".join(report.lines())
