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

from math import comb, factorial

import pytest
from pytest_cases import parametrize

from ..complexes import (
    DUAL_LIMIT,
    dual_graph,
    face_poset_linear,
    face_poset_rect,
    has_zero_line,
    is_cycle,
    lower_set,
    permutahedron,
    realize_biorthoscheme,
    realize_orthoscheme,
    tetra_boundary,
    tetra_graph,
    tetra_position,
    verify_dual_graph,
)
from ..errors import GeometryInputError, ResourceGuardError, SizeMismatchError
from ..graphs import Side
from ..linear import LinearComposition
from ..rectangular import enumerate_rect, spine_rect
from ..symmetry import cayley_graph


def test_face_poset_n1():
    poset = face_poset_rect(1)
    assert poset.f_vector == (4, 4, 1)
    assert poset.euler_characteristic == 1
    assert poset.is_graded()
    assert len(poset.maximal()) == 1


@parametrize("n", (2, 3))
def test_face_poset_rect(n):
    poset = face_poset_rect(n)
    assert poset.top_dimension == 2 * n
    assert poset.f_vector[-1] == factorial(n)
    assert poset.f_vector[0] == comb(n + 3, 3)
    assert poset.euler_characteristic == 1
    assert poset.is_graded()
    assert sorted(poset.elements, key=lambda e: e.sort_key) == enumerate_rect(n)


def test_codimension_one_parents():
    poset = face_poset_rect(3)
    top = poset.top_dimension
    parent_counts = [
        len(poset.upper_covers(i)) for i, d in enumerate(poset.dims) if d == top - 1
    ]
    assert set(parent_counts) == {1, 2}
    assert parent_counts.count(2) == factorial(3) * 2


@parametrize("n", (1, 2, 3, 5))
def test_face_poset_linear(n):
    poset = face_poset_linear(n)
    assert poset.f_vector == tuple(comb(n + 1, d + 1) for d in range(n + 1))
    assert len(poset) == 2 ** (n + 1) - 1


def test_prism_lower_set(prism):
    faces = lower_set(prism)
    assert len(faces) == 21
    assert faces.f_vector == (6, 9, 5, 1)
    assert faces.maximal() == [faces.index[prism]]


def test_dual_graph_n2():
    graph = dual_graph(2)
    assert graph.vertices == ("1,2", "2,1")
    assert [label.dot_label for _, _, label in graph.edges] == ["Col1", "Row1"]


@parametrize("n", (1, 2, 3, 4))
def test_dual_graph_is_overlay(n):
    report = verify_dual_graph(n)
    assert report, report.discrepancy
    assert report.dual.edge_count == factorial(n) * (n - 1)


def test_dual_graph_guards():
    with pytest.raises(ResourceGuardError):
        verify_dual_graph(DUAL_LIMIT + 1)
    with pytest.raises(ResourceGuardError):
        face_poset_rect(5)
    with pytest.raises(ResourceGuardError):
        face_poset_linear(13)


def test_tetra_positions():
    assert tetra_position((1, 0, 0, 0)) == (1, 1, 1)
    assert tetra_position((0, 0, 0, 2)) == (-2, -2, 2)
    assert tetra_position((1, 1, 1, 1)) == (0, 0, 0)


@parametrize("n", (1, 2, 4))
def test_tetra_graph(n):
    graph = tetra_graph(n)
    assert graph.vertex_count == comb(n + 3, 3)
    assert graph.edge_count == 4 * comb(n + 2, 3)
    boundary = tetra_boundary(graph)
    assert boundary.vertex_count == 4 * n
    assert is_cycle(boundary)


def test_tetra_n4():
    graph = tetra_graph(4)
    assert graph.vertex_count == 35
    assert graph.positions["4,0,0,0"] == (4, 4, 4)
    assert {label.color for _, _, label in graph.edges} == {"red", "orange", "cyan", "blue"}


def test_zero_lines():
    assert has_zero_line((1, 2, 0, 0))
    assert has_zero_line((0, 2, 0, 3))
    assert not has_zero_line((0, 1, 1, 0))


def test_top_spine_inside_tetra(generic):
    graph = tetra_graph(4)
    spine = spine_rect(generic).as_graph()
    assert graph.contains(spine)
    assert spine.contains(tetra_boundary(graph))


def test_permutahedron_hexagon():
    hexagon = permutahedron(3, (0, 1), ("1/4", "1/2", "3/4"))
    assert len(hexagon.keys) == 6
    assert len(hexagon.edges) == 6
    assert is_cycle(hexagon.as_graph())
    assert hexagon.distance_errors() == []
    assert set(hexagon.coordinate_sums().round(9)) == {1.5}
    assert hexagon.point("1,2,3").tolist() == [0.25, 0.5, 0.75]
    assert hexagon.as_graph().discrepancy(cayley_graph(3, Side.RIGHT)) is None


def test_permutahedron_edge_lengths():
    square = permutahedron(2, (0, 4), (1, 3))
    assert [e[3] for e in square.edges] == [8]
    assert square.squared_distances().tolist() == [8.0]


@parametrize(
    "interval, basepoint, error",
    (
        ((0, 1), ("1/2", "1/4", "3/4"), GeometryInputError),
        ((0, 1), ("1/4", "1/4", "3/4"), GeometryInputError),
        ((0, 1), ("1/4", "1/2", "2"), GeometryInputError),
        ((0, 1), ("1/4", "1/2"), SizeMismatchError),
    ),
)
def test_permutahedron_rejects(interval, basepoint, error):
    with pytest.raises(error):
        permutahedron(3, interval, basepoint)


def test_prism_realization(prism):
    realization = realize_biorthoscheme(prism)
    assert len(realization.keys) == 6
    assert sorted(e[3] for e in realization.edges) == [5, 5, 6, 6, 6, 8, 8]
    assert realization.distance_errors() == []

    full = realize_biorthoscheme(prism, full_skeleton=True)
    assert len(full.edges) == 9
    assert {e[3] for e in full.edges} == {5, 6, 8, 13}
    assert full.distance_errors() == []


def test_scaled_realization(prism):
    realization = realize_biorthoscheme(prism, ("1/2", "3"))
    assert realization.distance_errors() == []
    assert {e[3] for e in realization.edges} == {45, 72, 1.5}


def test_orthoscheme_realization():
    realization = realize_orthoscheme(LinearComposition((3, 4, 1, 2, 1)))
    assert len(realization.keys) == 4
    assert [e[3] for e in realization.edges] == [4, 1, 2]
    assert realization.distance_errors() == []
    assert realization.as_array().shape == (4, 3)


def test_distance_errors_detects_mismatch(prism):
    realization = realize_biorthoscheme(prism)
    broken = type(realization)(
        realization.keys,
        realization.coordinates,
        tuple((u, v, label, declared + 1) for u, v, label, declared in realization.edges),
    )
    assert len(broken.distance_errors()) == len(realization.edges)


def test_orthoscheme_n3_two_cells():
    poset = face_poset_linear(3)
    assert poset.f_vector == (4, 6, 4, 1)
    assert [e.entries for e, d in zip(poset.elements, poset.dims) if d == 2] == [
        (0, 1, 1, 1),
        (0, 1, 2, 0),
        (0, 2, 1, 0),
        (1, 1, 1, 0),
    ]
