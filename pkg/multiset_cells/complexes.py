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

"""Whole-complex constructions.

Face posets are built as downward closures under single merges, starting from the
top-dimensional cells. The dual graph is built by matching merged matrices, never by
assuming which permutations are adjacent. Geometry switches to floats only here, in
:py:class:`GeometricRealization`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Callable, Hashable, Iterable, Sequence, Union

import networkx as nx
import numpy as np

from .errors import GeometryInputError, SizeMismatchError, guard
from .graphs import EdgeLabel, LabeledMultigraph, Side
from .linear import (
    LINEAR_LIMIT,
    LinearComposition,
    dimension_linear,
    lower_covers_linear,
    parse_rational,
)
from .logging import logger
from .rectangular import (
    MAXIMAL_LIMIT,
    RECT_LIMIT,
    RectComposition,
    dimension_rect,
    lower_covers_rect,
    maximal_elements,
    minimal_elements,
    spine_rect,
)
from .symmetry import Permutation, act_right, all_permutations, compose, overlay_lr

DUAL_LIMIT = 5
TETRA_LIMIT = 6
"""Largest ``n`` whose top spines all get placed in the tetrahedral graph."""
TOLERANCE = 1e-9

TETRA_CORNERS = ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1))
TETRA_EMBEDDING = (
    "vertex [a b; c d] sits at a*(1,1,1) + b*(1,-1,-1) + c*(-1,1,-1) + d*(-1,-1,1)"
)

TETRA_MOVES = (
    # (from, to) flat positions in [a, b, c, d], and the label of the move.
    ((0, 1), EdgeLabel(Side.ROW, 1, "red")),
    ((2, 3), EdgeLabel(Side.ROW, 2, "orange")),
    ((0, 2), EdgeLabel(Side.COL, 1, "cyan")),
    ((1, 3), EdgeLabel(Side.COL, 2, "blue")),
)
"""Unit moves inside the top row, bottom row, left column and right column."""

Composition = Union[LinearComposition, RectComposition]


@dataclass(frozen=True)
class FacePoset:
    """Graded poset given by its elements, cover pairs and dimensions.

    ``covers`` holds ``(lower, upper)`` index pairs, each a single merge.
    """

    elements: tuple[Composition, ...]
    covers: tuple[tuple[int, int], ...]
    dims: tuple[int, ...]

    @cached_property
    def index(self) -> dict[Composition, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def _upper(self) -> dict[int, list[int]]:
        upper = defaultdict(list)
        for lo, hi in self.covers:
            upper[lo].append(hi)
        return upper

    def upper_covers(self, i: int) -> list[int]:
        return self._upper.get(i, [])

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def top_dimension(self) -> int:
        return max(self.dims)

    @property
    def f_vector(self) -> tuple[int, ...]:
        """Number of cells per dimension, from 0 to the top dimension."""
        counts = [0] * (self.top_dimension + 1)
        for d in self.dims:
            counts[d] += 1
        return tuple(counts)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** d * count for d, count in enumerate(self.f_vector))

    def is_graded(self) -> bool:
        return all(self.dims[hi] == self.dims[lo] + 1 for lo, hi in self.covers)

    def maximal(self) -> list[int]:
        return [i for i in range(len(self)) if not self.upper_covers(i)]


def downward_closure(
    tops: Iterable[Hashable], lower: Callable[[Any], Iterable[Any]]
) -> set:
    """Everything reachable from ``tops`` through repeated ``lower`` steps."""
    seen = set(tops)
    frontier = list(seen)
    rounds = 0
    while frontier:
        rounds += 1
        found = []
        for element in frontier:
            for below in lower(element):
                if below not in seen:
                    seen.add(below)
                    found.append(below)
        frontier = found
    logger.debug(f"Closure reached {len(seen)} elements in {rounds} rounds.")
    return seen


def _rect_lower(a: RectComposition) -> list[RectComposition]:
    return [c for _, c in lower_covers_rect(a)]


def _build_poset(tops: Sequence[Composition]) -> FacePoset:
    if isinstance(tops[0], RectComposition):
        lower: Callable = _rect_lower
        dimension: Callable = dimension_rect
    else:
        lower, dimension = lower_covers_linear, dimension_linear
    elements = sorted(downward_closure(tops, lower), key=lambda e: e.sort_key)
    index = {e: i for i, e in enumerate(elements)}
    covers = sorted(
        (index[below], index[e]) for e in elements for below in lower(e)
    )
    return FacePoset(tuple(elements), tuple(covers), tuple(map(dimension, elements)))


def face_poset_rect(n: int) -> FacePoset:
    """Face poset of ``n``-multisets in a rectangle."""
    guard("face_poset_rect", n, RECT_LIMIT)
    return _build_poset(maximal_elements(n))


def face_poset_linear(n: int) -> FacePoset:
    """Face poset of ``n``-multisets in an interval, a single orthoscheme."""
    guard("face_poset_linear", n, LINEAR_LIMIT)
    return _build_poset([LinearComposition.unit(n)])


def lower_set(a: Composition) -> FacePoset:
    """Faces of the single cell labeled ``a``."""
    return _build_poset([a])


def dual_graph(n: int) -> LabeledMultigraph:
    """One vertex per top cell, one edge per codimension-1 face shared by two of them.

    A row merge at position ``p`` joins internal rows ``p-1`` and ``p``, and gives the
    label ``(Row, p-1)``. Boundary merges only have one parent and give no edge.
    """
    guard("dual_graph", n, MAXIMAL_LIMIT)
    parents: dict[RectComposition, list[tuple[str, EdgeLabel]]] = defaultdict(list)
    tops = maximal_elements(n)
    for top in tops:
        key = top.permutation().key
        for label, face in lower_covers_rect(top):
            parents[face].append((key, label))
    edges = []
    for owners in parents.values():
        if len(owners) == 2:
            (u, label), (v, _) = owners
            edges.append((u, v, EdgeLabel(label.side, label.index - 1)))
        elif len(owners) > 2:
            raise AssertionError(f"Codimension-1 face shared by {len(owners)} top cells.")
    logger.debug(
        f"{len(parents)} codimension-1 faces, {len(edges)} of them shared by two top cells."
    )
    return LabeledMultigraph.build(
        (top.permutation().key for top in tops), edges, name=f"dual_{n}"
    )


_TO_CAYLEY = {Side.ROW: Side.LEFT, Side.COL: Side.RIGHT}


@dataclass(frozen=True)
class DualGraphReport:
    n: int
    dual: LabeledMultigraph
    overlay: LabeledMultigraph
    discrepancy: str | None

    @property
    def equal(self) -> bool:
        return self.discrepancy is None

    def __bool__(self) -> bool:
        return self.equal


def verify_dual_graph(n: int) -> DualGraphReport:
    """Compare the dual graph with the left-right Cayley overlay, ``Row`` read as
    ``Left`` and ``Col`` as ``Right``."""
    guard("verify_dual_graph", n, DUAL_LIMIT)
    dual = dual_graph(n).relabel(
        lambda label: EdgeLabel(_TO_CAYLEY[label.side], label.index, label.color)
    )
    overlay = overlay_lr(n)
    return DualGraphReport(n, dual, overlay, dual.discrepancy(overlay))


def quadrants_key(entries: Sequence[int]) -> str:
    return ",".join(map(str, entries))


def tetra_position(entries: Sequence[int]) -> tuple[int, int, int]:
    """Integer coordinates of ``[a b; c d]`` in the fixed tetrahedron embedding."""
    return tuple(  # type: ignore[return-value]
        sum(w * corner[axis] for w, corner in zip(entries, TETRA_CORNERS))
        for axis in range(3)
    )


def tetra_graph(n: int) -> LabeledMultigraph:
    """Graph on the ``2×2`` compositions of ``n``, joined by unit moves within a row
    or a column, with 3D coordinates."""
    vertices = [
        tuple(v for row in m.matrix for v in row) for m in minimal_elements(n)
    ]
    edges = []
    for entries in vertices:
        for (source, target), label in TETRA_MOVES:
            if entries[source]:
                moved = list(entries)
                moved[source] -= 1
                moved[target] += 1
                edges.append((quadrants_key(entries), quadrants_key(moved), label))
    return LabeledMultigraph.build(
        map(quadrants_key, vertices),
        edges,
        positions={quadrants_key(v): tetra_position(v) for v in vertices},
        name=f"tetra_{n}",
    )


def has_zero_line(entries: Sequence[int]) -> bool:
    """Does ``[a b; c d]`` have a zero row or a zero column?"""
    a, b, c, d = entries
    return not (a + b and c + d and a + c and b + d)


def tetra_boundary(graph: LabeledMultigraph) -> LabeledMultigraph:
    """Sub-graph induced by vertices with a zero row or a zero column."""
    return graph.induced(
        key
        for key in graph.vertices
        if has_zero_line([int(v) for v in key.split(",")])
    )


def is_cycle(graph: LabeledMultigraph) -> bool:
    """Connected, with every vertex of degree 2."""
    g = graph.to_networkx()
    return (
        g.number_of_nodes() > 0
        and nx.is_connected(g)
        and all(degree == 2 for _, degree in g.degree())
    )


@dataclass(frozen=True)
class GeometricRealization:
    """Coordinates for named vertices plus edges with exact declared squared lengths."""

    keys: tuple[str, ...]
    coordinates: tuple[tuple[float, ...], ...]
    edges: tuple[tuple[str, str, EdgeLabel, Fraction], ...]
    name: str = "realization"
    comment: str = field(default="", compare=False)

    @cached_property
    def _row(self) -> dict[str, int]:
        return {k: i for i, k in enumerate(self.keys)}

    def as_array(self) -> np.ndarray:
        points = np.array(self.coordinates, dtype=float)
        return points if points.ndim == 2 else points.reshape(len(self.keys), 0)

    def point(self, key: str) -> np.ndarray:
        return self.as_array()[self._row[key]]

    def squared_distances(self) -> np.ndarray:
        """Coordinate squared distance of each edge, in edge order."""
        points = self.as_array()
        if not self.edges:
            return np.zeros(0)
        u = points[[self._row[e[0]] for e in self.edges]]
        v = points[[self._row[e[1]] for e in self.edges]]
        return np.sum((u - v) ** 2, axis=1)

    def distance_errors(
        self, tolerance: float = TOLERANCE
    ) -> list[tuple[str, str, float, float]]:
        """Edges whose coordinate length disagrees with the declared one.

        Relative error on squared lengths, absolute when the declared length is zero.
        """
        errors = []
        for (u, v, _, declared), actual in zip(self.edges, self.squared_distances()):
            expected = float(declared)
            scale = abs(expected) if expected else 1.0
            if abs(actual - expected) / scale > tolerance:
                errors.append((u, v, expected, float(actual)))
        return errors

    def coordinate_sums(self) -> np.ndarray:
        return self.as_array().sum(axis=1)

    def as_graph(self) -> LabeledMultigraph:
        return LabeledMultigraph.build(
            self.keys,
            ((u, v, label) for u, v, label, _ in self.edges),
            positions=dict(zip(self.keys, self.coordinates)),
            name=self.name,
        )


def permutahedron(
    n: int, interval: Sequence[object], basepoint: Sequence[object]
) -> GeometricRealization:
    """Orbit of a generic ``basepoint`` under coordinate permutations.

    The vertex of ``σ`` is ``(x_{1·σ}, …, x_{n·σ})``. Vertices ``σ`` and ``σ σ_i`` then
    differ by swapping the values ``x_i`` and ``x_{i+1}``, at squared distance
    ``2 (x_{i+1} - x_i)²``.
    """
    x = [parse_rational(v) for v in basepoint]
    low, high = (parse_rational(v) for v in interval)
    if len(x) != n:
        raise SizeMismatchError(f"Basepoint has {len(x)} coordinates, expected {n}.")
    if any(b <= a for a, b in zip(x, x[1:])):
        raise GeometryInputError(
            f"Basepoint {[str(v) for v in x]} is not strictly increasing."
        )
    if x and not (low <= x[0] and x[-1] <= high):
        raise GeometryInputError(f"Basepoint leaves the interval [{low}, {high}].")
    perms = list(all_permutations(n))
    coordinates = tuple(
        tuple(float(x[act_right(k, sigma) - 1]) for k in range(1, n + 1))
        for sigma in perms
    )
    edges = []
    for sigma in perms:
        for i in range(1, n):
            other = compose(sigma, Permutation.transposition(n, i))
            if sigma < other:
                edges.append(
                    (sigma.key, other.key, EdgeLabel(Side.RIGHT, i), 2 * (x[i] - x[i - 1]) ** 2)
                )
    return GeometricRealization(
        tuple(p.key for p in perms),
        coordinates,
        tuple(edges),
        name=f"permutahedron_{n}",
    )


def _orthoscheme_path(weights: Sequence[int], length: Fraction) -> list[np.ndarray]:
    """Vertices ``p_0, …, p_m`` with orthogonal steps of lengths ``sqrt(w_t)·L``."""
    steps = np.sqrt(np.array(weights, dtype=float)) * float(length)
    size = len(weights)
    return [
        np.concatenate([steps[:i], np.zeros(size - i)]) for i in range(size + 1)
    ]


def realize_biorthoscheme(
    a: RectComposition,
    lengths: Sequence[object] = (1, 1),
    full_skeleton: bool = False,
) -> GeometricRealization:
    """Product of the two factor orthoschemes, keyed by spine quadrant labels.

    With ``full_skeleton``, every pair of vertices of a factor simplex gets an edge,
    not only consecutive ones.
    """
    spine = spine_rect(a, lengths)
    l_i, l_j = spine.lengths
    blue = _orthoscheme_path(a.row_sums[1:-1], l_i)
    red = _orthoscheme_path(a.col_sums[1:-1], l_j)
    key = {
        (i, j): quadrants_key([v for row in spine.vertex(i, j) for v in row])
        for i in range(1, len(blue) + 1)
        for j in range(1, len(red) + 1)
    }
    keys = tuple(key[(i, j)] for i in range(1, len(blue) + 1) for j in range(1, len(red) + 1))
    coordinates = tuple(
        tuple(float(c) for c in np.concatenate([blue[i - 1], red[j - 1]]))
        for i in range(1, len(blue) + 1)
        for j in range(1, len(red) + 1)
    )
    edges = [
        (key[e.start], key[e.end], EdgeLabel(e.direction, e.index, e.color), e.squared_length)
        for e in spine.edges
    ]
    if full_skeleton:
        rows, cols = a.row_sums, a.col_sums
        for j in range(1, len(red) + 1):
            for i in range(1, len(blue) + 1):
                for i2 in range(i + 2, len(blue) + 1):
                    edges.append(
                        (key[(i, j)], key[(i2, j)], EdgeLabel(Side.ROW, i), sum(rows[i:i2]) * l_i**2)
                    )
        for i in range(1, len(blue) + 1):
            for j in range(1, len(red) + 1):
                for j2 in range(j + 2, len(red) + 1):
                    edges.append(
                        (key[(i, j)], key[(i, j2)], EdgeLabel(Side.COL, j), sum(cols[j:j2]) * l_j**2)
                    )
    return GeometricRealization(keys, coordinates, tuple(edges), name="biorthoscheme")


def realize_orthoscheme(a: LinearComposition, length: object = 1) -> GeometricRealization:
    """The orthoscheme of ``a``, as a bi-orthoscheme whose red factor is a point."""
    return realize_biorthoscheme(RectComposition.from_linear(a), (length, 1))
