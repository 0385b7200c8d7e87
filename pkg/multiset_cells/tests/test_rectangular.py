# Copyright the multiset-cells contributors.
#
# This program is Free Software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 2
# of the License, or (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, write to the Free Software
# Foundation, Inc., 59 Temple Place - Suite 330, Boston, MA  02111-1307, USA.

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import pytest
from pytest_cases import parametrize

from ..errors import (
    CompositionError,
    InputError,
    MultisetError,
    ResourceGuardError,
    SizeMismatchError,
)
from ..graphs import Side
from ..linear import LinearComposition, comp1d, leq_linear
from ..rectangular import (
    PREIMAGE_LIMIT,
    Multiset2D,
    RectComposition,
    brute_force_rect,
    col_merge,
    comp2d,
    count_placements,
    count_preimages,
    dimension_rect,
    enumerate_rect,
    leq_rect,
    lower_covers_rect,
    maximal_elements,
    minimal_elements,
    pi_im,
    pi_re,
    quadrants,
    random_multiset,
    row_merge,
    spine_rect,
    validate_rect,
)
from ..symmetry import Permutation
from .conftest import GENERIC_IMAGE


@parametrize(
    "rows, message",
    (
        ([[1, 1]], "1 row\\(s\\), at least 2 are required"),
        ([[1, 0], [0]], "rows have different lengths"),
        ([[1], [1]], "at least 2 columns are required"),
        ([[1, -1], [0, 1]], "negative entry -1 at \\(0, 1\\)"),
        ([[0, 1], [0, 0], [1, 0]], "internal row 1 sums to zero"),
        ([[1, 0, 1], [1, 0, 1]], "internal column 1 sums to zero"),
        ([[0, 0], [0, 0]], "entries sum to 0"),
        ([["a", 1], [0, 1]], "Cannot read 'a' as an integer"),
        ([[1.5, 0], [0, 1]], "Cannot read 1.5 as an integer"),
        ([[True, 0], [0, 1]], "Cannot read True as an integer"),
        (["10", "01"], "Not an integer matrix"),
        (5, "Not an integer matrix"),
    ),
)
def test_validate_names_rule(rows, message):
    with pytest.raises(CompositionError, match=message):
        validate_rect(rows)


def test_prism_shape(prism):
    assert prism.n == 16
    assert (prism.h, prism.k) == (1, 2)
    assert dimension_rect(prism) == 3
    assert pi_re(prism) == LinearComposition((3, 6, 7))
    assert pi_im(prism) == LinearComposition((0, 5, 8, 3))
    assert str(prism) == "[0 2 1 0; 0 3 2 1; 0 0 5 2]"


def test_merges(prism):
    assert row_merge(prism, 1).matrix == ((0, 5, 3, 1), (0, 0, 5, 2))
    assert row_merge(prism, 2).matrix == ((0, 2, 1, 0), (0, 3, 7, 3))
    assert col_merge(prism, 1).matrix == ((2, 1, 0), (3, 2, 1), (0, 5, 2))
    assert col_merge(prism, 3).matrix == ((0, 2, 1), (0, 3, 3), (0, 0, 7))
    with pytest.raises(CompositionError):
        row_merge(prism, 3)
    with pytest.raises(CompositionError):
        col_merge(RectComposition(((1, 1), (1, 1))), 1)


def test_leq(prism):
    merged = row_merge(prism, 1)
    assert leq_rect(merged, prism)
    assert not leq_rect(prism, merged)
    assert leq_rect(RectComposition(((0, 3), (0, 13))), prism)
    assert not leq_rect(RectComposition(((3, 0), (0, 13))), prism)
    with pytest.raises(SizeMismatchError):
        leq_rect(RectComposition(((1, 0), (0, 0))), prism)


def test_lower_covers(prism):
    covers = lower_covers_rect(prism)
    assert [label.dot_label for label, _ in covers] == ["Row2", "Row1", "Col3", "Col2", "Col1"]
    assert all(dimension_rect(c) == 2 for _, c in covers)
    assert lower_covers_rect(RectComposition(((1, 0), (0, 1)))) == []


def test_lower_covers_two_rows():
    covers = lower_covers_rect(RectComposition(((0, 1, 0), (1, 0, 0))))
    assert [c.matrix for _, c in covers] == [((0, 1), (1, 0)), ((1, 0), (1, 0))]
    assert [label.dot_label for label, _ in covers] == ["Col2", "Col1"]
    assert {label.side for label, _ in covers} == {Side.COL}


def test_padded_permutation(generic):
    assert generic.shape == (6, 6)
    assert generic.matrix[1] == (0, 0, 1, 0, 0, 0)
    assert generic.permutation() == Permutation(GENERIC_IMAGE)
    assert dimension_rect(generic) == 8


def test_not_a_permutation(prism):
    with pytest.raises(CompositionError):
        prism.permutation()


def test_from_linear():
    a = RectComposition.from_linear(LinearComposition((0, 2, 1)))
    assert a.matrix == ((0, 0), (2, 0), (1, 0))
    assert pi_re(a) == LinearComposition((0, 2, 1))


@parametrize("n", (1, 2, 3, 4, 5))
def test_maximal_count(n):
    elements = maximal_elements(n)
    assert len(elements) == factorial(n)
    assert all(dimension_rect(a) == 2 * n for a in elements)


@parametrize("n", (1, 2, 3, 6))
def test_minimal_count(n):
    elements = minimal_elements(n)
    assert len(elements) == comb(n + 3, 3)
    assert all(a.shape == (2, 2) for a in elements)


@parametrize("n", (1, 2, 3))
def test_enumerate_matches_brute_force(n):
    assert enumerate_rect(n) == brute_force_rect(n)


def _merge_closure(elements):
    """Everything reachable from each element by chains of single merges."""
    below: dict[RectComposition, frozenset[RectComposition]] = {}
    # Covers have a strictly smaller shape, so ascending shapes see them first.
    for a in sorted(elements, key=lambda e: e.sort_key):
        reached = {a}
        for _, cover in lower_covers_rect(a):
            reached |= below[cover]
        below[a] = frozenset(reached)
    return below


@parametrize("n", (1, 2, 3))
def test_leq_matches_merge_chains(n):
    elements = enumerate_rect(n)
    below = _merge_closure(elements)
    for b in elements:
        for a in elements:
            assert leq_rect(a, b) == (a in below[b]), (a, b)


@parametrize("n", (1, 2, 3))
def test_leq_projects_to_linear_order(n):
    elements = enumerate_rect(n)
    for b in elements:
        for a in elements:
            if leq_rect(a, b):
                assert leq_linear(pi_re(a), pi_re(b))
                assert leq_linear(pi_im(a), pi_im(b))


@parametrize("n", (2, 3))
def test_row_and_column_merges_commute(n):
    for a in enumerate_rect(n):
        rows, cols = a.shape
        if rows <= 2 or cols <= 2:
            continue
        for i in range(1, rows):
            for j in range(1, cols):
                assert row_merge(col_merge(a, j), i) == col_merge(row_merge(a, i), j)


def test_enumerate_n1():
    elements = enumerate_rect(1)
    assert len(elements) == 9
    assert [dimension_rect(a) for a in elements].count(2) == 1


def test_count_preimages():
    assert count_preimages(LinearComposition((1, 1)), LinearComposition((1, 1))) == 2
    for n in range(1, 5):
        unit = LinearComposition.unit(n)
        assert count_preimages(unit, unit) == factorial(n)
    with pytest.raises(SizeMismatchError):
        count_preimages(LinearComposition((1, 1)), LinearComposition((1, 2)))
    unit = LinearComposition.unit(PREIMAGE_LIMIT + 1)
    with pytest.raises(ResourceGuardError):
        count_preimages(unit, unit)


def test_count_placements_oracle():
    xc, yc = LinearComposition((0, 1, 1, 0)), LinearComposition((1, 1, 0))
    assert count_placements(xc, yc) == count_preimages(xc, yc) == 2
    unit = LinearComposition.unit(3)
    assert count_placements(unit, unit) == 6


def test_comp2d_generic(generic):
    z = Multiset2D.build((0, 5, 0, 5), [(1, 2, 1), (2, 3, 1), (3, 1, 1), (4, 4, 1)])
    a = comp2d(z)
    assert a == generic
    assert pi_re(a) == comp1d(z.re())
    assert pi_im(a) == comp1d(z.im())


def test_comp2d_boundary_and_repeats():
    z = Multiset2D.build(
        ("0", "1", "0", "1"),
        [(0, 0, 1), ("1/2", 0, 2), ("1/2", 0, 1), (1, "1/3", 1)],
    )
    assert z.n == 5
    assert comp2d(z).matrix == ((1, 0, 0), (3, 0, 0), (0, 1, 0))


@parametrize(
    "rect, points",
    (
        ((0, 0, 0, 1), [(0, 0, 1)]),
        ((0, 1, 0), [(0, 0, 1)]),
        ((0, 1, 0, 1), []),
        ((0, 1, 0, 1), [(2, 0, 1)]),
        ((0, 1, 0, 1), [(0, 0, 0)]),
        ((0, 1, 0, 1), [(0.5, 0, 1)]),
    ),
)
def test_invalid_multiset(rect, points):
    with pytest.raises(MultisetError):
        Multiset2D.build(rect, points)


def test_random_multiset_is_deterministic():
    assert random_multiset(5, 7) == random_multiset(5, 7)
    assert random_multiset(5, 7, mode="grid") == random_multiset(5, 7, mode="grid")


@parametrize("seed", (0, 1, 42))
def test_random_generic_is_top_cell(seed):
    a = comp2d(random_multiset(5, seed, rect=("-1", "1", "0", "3")))
    assert a.shape == (7, 7)
    assert a.permutation().n == 5


def test_random_grid():
    z = random_multiset(6, 3, mode="grid")
    assert z.n == 6
    assert comp2d(z).n == 6


def test_random_rejects():
    with pytest.raises(InputError):
        random_multiset(0, 1)
    with pytest.raises(InputError):
        random_multiset(3, 1, mode="lattice")


def test_prism_spine(prism):
    spine = spine_rect(prism)
    assert spine.vertex_count == 6
    assert len(spine.edges) == 7
    assert spine.faces == ((1, 1), (1, 2))
    assert {e.squared_length for e in spine.edges} == {5, 6, 8}
    assert spine.corners()[0] == ((0, 3), (0, 13))
    assert spine.corners()[-1] == ((8, 1), (5, 2))
    assert quadrants(prism, 1, 1) == spine.vertex(1, 1)
    assert {e.color for e in spine.edges} <= {"blue", "cyan", "red", "orange", "mixed"}


def test_prism_spine_scaled(prism):
    spine = spine_rect(prism, ("2", "1/2"))
    by_direction = {(e.direction, e.index): e.squared_length for e in spine.edges}
    assert by_direction[(Side.ROW, 1)] == 24
    assert by_direction[(Side.COL, 1)] == Fraction(5, 4)
    assert by_direction[(Side.COL, 2)] == 2


def test_generic_spine(generic):
    spine = spine_rect(generic)
    assert spine.vertex_count == 25
    assert len(spine.edges) == 40
    assert len(spine.faces) == 16
    assert all(e.weight == 1 for e in spine.edges)
    assert spine.four_colored_faces() == [(1, 2), (2, 3), (3, 1), (4, 4)]
    graph = spine.as_graph()
    assert (graph.vertex_count, graph.edge_count) == (25, 40)


def test_spine_edge_ends(prism):
    spine = spine_rect(prism)
    for edge in spine.edges:
        i, j = edge.end
        assert spine.vertex(i, j)
