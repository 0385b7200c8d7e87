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

import pytest
from pytest_cases import parametrize

from ..complexes import dual_graph, face_poset_rect, permutahedron, tetra_graph
from ..errors import CompositionError, InputError, MultisetError
from ..export import (
    composition_to_dict,
    dumps,
    format_rational,
    graph_to_dict,
    linear_spine_to_dict,
    load_composition,
    load_graph,
    load_multiset,
    multiset_from_dict,
    multiset_to_dict,
    poset_to_dict,
    realization_to_dict,
    spine_to_dict,
    to_dot,
)
from ..linear import LinearComposition, Multiset1D, spine_linear
from ..rectangular import ORIENTATION, random_multiset, spine_rect


@parametrize(
    "value, text",
    (
        (Fraction(2, 4), "1/2"),
        (3, "3/1"),
        (Fraction(-1, 3), "-1/3"),
        (0, "0/1"),
    ),
)
def test_format_rational(value, text):
    assert format_rational(value) == text


def test_dumps_layout():
    assert dumps({"a": [1]}) == '{\n  "a": [\n    1\n  ]\n}\n'


def test_composition_documents(prism):
    assert composition_to_dict(LinearComposition((0, 2, 1))) == {"n": 3, "entries": [0, 2, 1]}
    data = composition_to_dict(prism)
    assert data["orientation"] == ORIENTATION
    assert data["matrix"][2] == [0, 0, 5, 2]
    assert load_composition(dumps(data)) == prism


def test_load_composition_with_comments():
    text = """
    # Three points, two of them together.
    {"n": 3, "entries": [0, 2, 1]}
    """
    assert load_composition(text) == LinearComposition((0, 2, 1))


@parametrize(
    "text, error",
    (
        ('{"n": 3, "entries": [1, 0, 1]}', CompositionError),
        ('{"n": 4, "entries": [0, 2, 1]}', CompositionError),
        ('{"entries": ["a", 1]}', CompositionError),
        ('{"entries": 5}', CompositionError),
        ('{"entries": [1.5, 0.5]}', CompositionError),
        ('{"matrix": [[1.9, 0], [0, 0.6]]}', CompositionError),
        ('{"n": 2.5, "entries": [1, 1]}', InputError),
        ('{"n": 4, "matrix": [[1, 0], [0, 1]]}', InputError),
        ('{"n": 3}', InputError),
        ("[1, 2]", InputError),
        ('{"entries": ', InputError),
    ),
)
def test_load_composition_rejects(text, error):
    with pytest.raises(error):
        load_composition(text)


def test_multiset_documents():
    z = Multiset1D.from_points(("0", "1"), ["1/3", "1/3", "1/2"])
    data = multiset_to_dict(z)
    assert data == {
        "interval": ["0/1", "1/1"],
        "points": [{"x": "1/3", "m": 2}, {"x": "1/2", "m": 1}],
    }
    assert multiset_from_dict(data) == z

    plane = random_multiset(4, 3, rect=("0", "2", "0", "1"))
    data = multiset_to_dict(plane)
    assert data["rect"] == {"xl": "0/1", "xr": "2/1", "yb": "0/1", "yt": "1/1"}
    assert load_multiset(dumps(data)) == plane


@parametrize(
    "data, error",
    (
        ({"interval": [0, 1], "points": [{"x": "1/2"}]}, InputError),
        ({"interval": [0, 1], "points": [{"x": "1/2", "m": 0}]}, InputError),
        ({"interval": [0, 1], "points": [{"x": 0.5, "m": 1}]}, MultisetError),
        ({"interval": [0, 1], "points": [{"x": "1/2", "m": 1.9}]}, MultisetError),
        ({"interval": [0, 1], "points": [{"x": "1/2", "m": True}]}, MultisetError),
        (
            {"rect": {"xl": 0, "xr": 1, "yb": 0, "yt": 1}, "points": [{"x": 0, "y": 0, "m": 2.7}]},
            MultisetError,
        ),
        ({"rect": {"xl": 0, "xr": 1}, "points": []}, InputError),
        ({"points": []}, InputError),
    ),
)
def test_malformed_multiset(data, error):
    with pytest.raises(error):
        multiset_from_dict(data)


def test_load_multiset_needs_object():
    with pytest.raises(InputError):
        load_multiset('"points"')


def test_linear_spine_document():
    data = linear_spine_to_dict(spine_linear(LinearComposition((3, 4, 1, 2, 1)), "1/2"))
    assert data["length"] == "1/2"
    assert data["vertices"] == [[3, 8], [7, 4], [8, 3], [10, 1]]
    assert data["edges"][0] == {"from": 1, "to": 2, "weight": 4, "squared_length": "1/1"}


def test_spine_document(prism):
    data = spine_to_dict(spine_rect(prism))
    assert data["lengths"] == ["1/1", "1/1"]
    assert data["grid"][0][0] == [[0, 3], [0, 13]]
    assert len(data["edges"]) == 7
    assert data["edges"][0] == {
        "from": [1, 1],
        "to": [2, 1],
        "direction": "Row",
        "index": 1,
        "color": "blue",
        "weight": 6,
        "squared_length": "6/1",
    }
    assert data["faces"] == [[1, 1], [1, 2]]


def test_poset_document():
    data = poset_to_dict(face_poset_rect(1))
    assert data["f_vector"] == [4, 4, 1]
    assert data["euler_characteristic"] == 1
    assert len(data["elements"]) == 9
    assert len(data["covers"]) == 12
    assert data["dims"] == sorted(data["dims"])


def test_realization_document():
    data = realization_to_dict(permutahedron(2, (0, 4), (1, 3)))
    assert data == {
        "keys": ["1,2", "2,1"],
        "vertices": [[1.0, 3.0], [3.0, 1.0]],
        "edges": [["1,2", "2,1", {"side": "Right", "index": 1}, "8/1"]],
    }


def test_tetra_documents():
    graph = tetra_graph(2)
    data = graph_to_dict(graph)
    assert list(data)[0] == "embedding"
    assert data["positions"]["0,0,0,2"] == [-2, -2, 2]
    assert load_graph(dumps(data)) == graph
    assert to_dot(graph).startswith("// vertex [a b; c d] sits at")


def test_dual_documents():
    graph = dual_graph(2)
    assert "embedding" not in graph_to_dict(graph)
    assert to_dot(graph).startswith("graph dual_2 {\n")


def test_exports_are_byte_identical():
    first = dumps(graph_to_dict(dual_graph(3)))
    second = dumps(graph_to_dict(dual_graph(3)))
    assert first == second
    assert to_dot(tetra_graph(3)) == to_dot(tetra_graph(3))
