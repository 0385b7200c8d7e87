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

"""Rectangular compositions, multisets in a rectangle and bi-orthoscheme spines.

Matrix orientation: rows follow the horizontal interval ``I`` (the ``x`` coordinate,
blue factor), columns follow the vertical interval ``J`` (the ``y`` coordinate, red
factor). Row ``0`` holds the points on ``x = x_l``, column ``0`` those on ``y = y_b``.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import CompositionError, InputError, MultisetError, SizeMismatchError, guard
from .graphs import EdgeLabel, LabeledMultigraph, Side
from .linear import (
    LinearComposition,
    Multiset1D,
    enumerate_linear,
    parse_count,
    parse_rational,
)
from .symmetry import Permutation, all_permutations

MAXIMAL_LIMIT = 7
PREIMAGE_LIMIT = 6
RECT_LIMIT = 4
BRUTE_FORCE_LIMIT = 3

ORIENTATION = "rows follow I (x, blue), columns follow J (y, red)"

Matrix = tuple[tuple[int, ...], ...]


def _rule_violation(matrix: Sequence[Sequence[int]]) -> str | None:
    if len(matrix) < 2:
        return f"{len(matrix)} row(s), at least 2 are required"
    widths = {len(row) for row in matrix}
    if len(widths) != 1:
        return "rows have different lengths"
    if widths.pop() < 2:
        return "at least 2 columns are required"
    for i, row in enumerate(matrix):
        for j, value in enumerate(row):
            if value < 0:
                return f"negative entry {value} at ({i}, {j})"
    for i, row in enumerate(matrix[1:-1], start=1):
        if not sum(row):
            return f"internal row {i} sums to zero"
    columns = list(zip(*matrix))
    for j, column in enumerate(columns[1:-1], start=1):
        if not sum(column):
            return f"internal column {j} sums to zero"
    if sum(map(sum, matrix)) < 1:
        return "entries sum to 0, n must be positive"
    return None


@dataclass(frozen=True)
class RectComposition:
    """``(h+2)×(k+2)`` nonnegative matrix without zero internal rows or columns."""

    matrix: Matrix

    def __post_init__(self) -> None:
        problem = _rule_violation(self.matrix)
        if problem:
            raise CompositionError(f"Invalid rectangular composition: {problem}.")

    @property
    def n(self) -> int:
        return sum(map(sum, self.matrix))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.matrix), len(self.matrix[0])

    @property
    def h(self) -> int:
        return len(self.matrix) - 2

    @property
    def k(self) -> int:
        return len(self.matrix[0]) - 2

    @property
    def row_sums(self) -> tuple[int, ...]:
        return tuple(map(sum, self.matrix))

    @property
    def col_sums(self) -> tuple[int, ...]:
        return tuple(map(sum, zip(*self.matrix)))

    @property
    def sort_key(self) -> tuple:
        """Canonical order: by shape, then row-major lexicographic."""
        return self.shape, tuple(v for row in self.matrix for v in row)

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(map(str, row)) for row in self.matrix) + "]"

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> RectComposition:
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def from_linear(cls, a: LinearComposition) -> RectComposition:
        """Embed ``a`` as a single occupied column, the red factor being a point."""
        return cls(tuple((v, 0) for v in a.entries))

    @classmethod
    def padded(cls, p: Permutation) -> RectComposition:
        """``M_π`` surrounded by zero rows and columns."""
        size = p.n + 2
        rows = [[0] * size for _ in range(size)]
        for i, value in enumerate(p.image, start=1):
            rows[i][value] = 1
        return cls.from_rows(rows)

    def permutation(self) -> Permutation:
        """The ``π`` of a padded permutation matrix."""
        n = self.n
        if self.shape != (n + 2, n + 2) or self.row_sums[0] or self.row_sums[-1]:
            raise CompositionError(f"{self} is not a padded permutation matrix.")
        if self.col_sums[0] or self.col_sums[-1]:
            raise CompositionError(f"{self} is not a padded permutation matrix.")
        return Permutation(tuple(row.index(1) for row in self.matrix[1:-1]))


def validate_rect(m: Iterable[Iterable[int]]) -> RectComposition:
    """Build a :py:class:`RectComposition`, naming the first violated rule on rejection."""
    try:
        lines = [] if isinstance(m, (str, bytes)) else list(m)
        if isinstance(m, (str, bytes)) or any(isinstance(row, (str, bytes)) for row in lines):
            raise CompositionError(f"Not an integer matrix: {m!r}")
        rows = tuple(tuple(parse_count(v, CompositionError) for v in row) for row in lines)
    except TypeError as ex:
        raise CompositionError(f"Not an integer matrix: {ex}") from ex
    return RectComposition(rows)


def row_merge(a: RectComposition, i: int) -> RectComposition:
    """Replace rows ``i-1`` and ``i`` by their sum, ``i`` in ``1..h+1``."""
    rows, _ = a.shape
    if rows <= 2:
        raise CompositionError(f"Cannot row-merge {a}: it only has 2 rows.")
    if not 1 <= i <= rows - 1:
        raise CompositionError(f"Row merge position {i} out of range 1..{rows - 1}.")
    m = a.matrix
    merged = tuple(x + y for x, y in zip(m[i - 1], m[i]))
    return RectComposition(m[: i - 1] + (merged,) + m[i + 1 :])


def _transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def col_merge(a: RectComposition, j: int) -> RectComposition:
    """Replace columns ``j-1`` and ``j`` by their sum, ``j`` in ``1..k+1``."""
    _, cols = a.shape
    if cols <= 2:
        raise CompositionError(f"Cannot column-merge {a}: it only has 2 columns.")
    if not 1 <= j <= cols - 1:
        raise CompositionError(f"Column merge position {j} out of range 1..{cols - 1}.")
    t = _transpose(a.matrix)
    merged = tuple(x + y for x, y in zip(t[j - 1], t[j]))
    return RectComposition(_transpose(t[: j - 1] + (merged,) + t[j + 1 :]))


def pi_re(a: RectComposition) -> LinearComposition:
    """Row sums, the composition of the ``x`` projection."""
    return LinearComposition(a.row_sums)


def pi_im(a: RectComposition) -> LinearComposition:
    """Column sums, the composition of the ``y`` projection."""
    return LinearComposition(a.col_sums)


def _block_partitions(sums: Sequence[int], targets: Sequence[int]) -> Iterator[list[int]]:
    """Boundaries splitting ``sums`` into ``len(targets)`` consecutive blocks with the
    given block totals."""
    size, blocks = len(sums), len(targets)
    for inner in combinations(range(1, size), blocks - 1):
        bounds = [0, *inner, size]
        if all(
            sum(sums[lo:hi]) == target
            for lo, hi, target in zip(bounds, bounds[1:], targets)
        ):
            yield bounds


def block_sum(b: RectComposition, row_bounds: Sequence[int], col_bounds: Sequence[int]) -> Matrix:
    """Sum ``b`` over the blocks delimited by ``row_bounds`` and ``col_bounds``."""
    return tuple(
        tuple(
            sum(
                b.matrix[r][c]
                for r in range(r_lo, r_hi)
                for c in range(c_lo, c_hi)
            )
            for c_lo, c_hi in zip(col_bounds, col_bounds[1:])
        )
        for r_lo, r_hi in zip(row_bounds, row_bounds[1:])
    )


def leq_rect(a: RectComposition, b: RectComposition) -> bool:
    """Is ``a`` obtained from ``b`` by row and column merges?

    Merges commute, so this amounts to finding consecutive row and column blocks of
    ``b`` whose block sums are ``a``. Candidate partitions are pre-filtered on margins.
    """
    if a.n != b.n:
        raise SizeMismatchError(f"Cannot compare compositions of {a.n} and {b.n}.")
    if a.shape[0] > b.shape[0] or a.shape[1] > b.shape[1]:
        return False
    row_candidates = list(_block_partitions(b.row_sums, a.row_sums))
    col_candidates = list(_block_partitions(b.col_sums, a.col_sums))
    return any(
        block_sum(b, rows, cols) == a.matrix
        for rows in row_candidates
        for cols in col_candidates
    )


def lower_covers_rect(a: RectComposition) -> list[tuple[EdgeLabel, RectComposition]]:
    """All single merges, each tagged ``Row(i)`` or ``Col(j)``.

    Deduplicated on the resulting matrix, first tag wins, in canonical order.
    """
    rows, cols = a.shape
    tagged: dict[RectComposition, EdgeLabel] = {}
    if rows > 2:
        for i in range(1, rows):
            tagged.setdefault(row_merge(a, i), EdgeLabel(Side.ROW, i))
    if cols > 2:
        for j in range(1, cols):
            tagged.setdefault(col_merge(a, j), EdgeLabel(Side.COL, j))
    return sorted(
        ((label, c) for c, label in tagged.items()), key=lambda pair: pair[1].sort_key
    )


def dimension_rect(a: RectComposition) -> int:
    return a.h + a.k


def maximal_elements(n: int) -> list[RectComposition]:
    """The ``n!`` padded permutation matrices, in lexicographic order of ``π``."""
    if n < 1:
        raise CompositionError("Compositions need n >= 1.")
    guard("maximal_elements", n, MAXIMAL_LIMIT)
    return [RectComposition.padded(p) for p in all_permutations(n)]


def minimal_elements(n: int) -> list[RectComposition]:
    """All ``C(n+3, 3)`` nonnegative ``2×2`` matrices of sum ``n``."""
    if n < 1:
        raise CompositionError("Compositions need n >= 1.")
    elements = [
        RectComposition(((a, b), (c, n - a - b - c)))
        for a in range(n + 1)
        for b in range(n + 1 - a)
        for c in range(n + 1 - a - b)
    ]
    assert len(elements) == comb(n + 3, 3)
    return sorted(elements, key=lambda e: e.sort_key)


def contingency_tables(
    row_sums: Sequence[int], col_sums: Sequence[int]
) -> Iterator[Matrix]:
    """Nonnegative integer matrices with the given margins, filled row by row."""
    if sum(row_sums) != sum(col_sums):
        return

    def fill_row(total: int, capacity: Sequence[int]) -> Iterator[tuple[int, ...]]:
        if len(capacity) == 1:
            if total <= capacity[0]:
                yield (total,)
            return
        rest_capacity = sum(capacity[1:])
        for first in range(max(0, total - rest_capacity), min(total, capacity[0]) + 1):
            for tail in fill_row(total - first, capacity[1:]):
                yield (first, *tail)

    def fill(index: int, remaining: tuple[int, ...]) -> Iterator[Matrix]:
        if index == len(row_sums) - 1:
            if sum(remaining) == row_sums[index]:
                yield (remaining,)
            return
        for row in fill_row(row_sums[index], remaining):
            left = tuple(c - r for c, r in zip(remaining, row))
            for tail in fill(index + 1, left):
                yield (row, *tail)

    yield from fill(0, tuple(col_sums))


def count_preimages(xc: LinearComposition, yc: LinearComposition) -> int:
    """Number of rectangular compositions projecting to ``xc`` and ``yc``."""
    if xc.n != yc.n:
        raise SizeMismatchError(f"Projections of {xc.n} and {yc.n} points.")
    guard("count_preimages", xc.n, PREIMAGE_LIMIT)
    return sum(1 for _ in contingency_tables(xc.entries, yc.entries))


def enumerate_rect(n: int) -> list[RectComposition]:
    """All rectangular compositions of ``n``, as preimages of every projection pair."""
    guard("enumerate_rect", n, RECT_LIMIT)
    linear = enumerate_linear(n)
    elements = [
        RectComposition(table)
        for xc in linear
        for yc in linear
        for table in contingency_tables(xc.entries, yc.entries)
    ]
    return sorted(elements, key=lambda e: e.sort_key)


def brute_force_rect(n: int) -> list[RectComposition]:
    """All rectangular compositions of ``n``, by filtering every nonnegative matrix of
    every shape up to ``(n+2)×(n+2)``."""
    if n < 1:
        raise CompositionError("Compositions need n >= 1.")
    guard("brute_force_rect", n, BRUTE_FORCE_LIMIT)
    found = []
    for rows, cols in product(range(2, n + 3), repeat=2):
        cells = list(product(range(rows), range(cols)))
        for chosen in combinations_with_replacement(cells, n):
            counts = Counter(chosen)
            matrix = tuple(
                tuple(counts[(i, j)] for j in range(cols)) for i in range(rows)
            )
            if _rule_violation(matrix) is None:
                found.append(RectComposition(matrix))
    return sorted(found, key=lambda e: e.sort_key)


@dataclass(frozen=True)
class Multiset2D:
    """Exact-rational points with positive multiplicities in ``[x_l, x_r]×[y_b, y_t]``."""

    rect: tuple[Fraction, Fraction, Fraction, Fraction]
    points: tuple[tuple[Fraction, Fraction, int], ...]

    def __post_init__(self) -> None:
        x_l, x_r, y_b, y_t = self.rect
        if not (x_l < x_r and y_b < y_t):
            raise MultisetError(f"Degenerate rectangle {[str(v) for v in self.rect]}.")
        if not self.points:
            raise MultisetError("A multiset needs at least one point.")
        coordinates = [(x, y) for x, y, _ in self.points]
        if len(set(coordinates)) != len(coordinates):
            raise MultisetError("Points must be pairwise distinct.")
        for x, y, m in self.points:
            if not (x_l <= x <= x_r and y_b <= y <= y_t):
                raise MultisetError(f"Point ({x}, {y}) lies outside the rectangle.")
            if m < 1:
                raise MultisetError(f"Nonpositive multiplicity {m} at ({x}, {y}).")

    @classmethod
    def build(
        cls, rect: Sequence[object], points: Iterable[tuple[object, object, int]]
    ) -> Multiset2D:
        """Parse coordinates, merge repeated points and sort."""
        bounds = tuple(parse_rational(v) for v in rect)
        if len(bounds) != 4:
            raise MultisetError("A rectangle has 4 bounds: x_l, x_r, y_b, y_t.")
        counts: Counter = Counter()
        for x, y, m in points:
            m = parse_count(m, MultisetError)
            if m < 1:
                raise MultisetError(f"Nonpositive multiplicity {m} at ({x}, {y}).")
            counts[(parse_rational(x), parse_rational(y))] += m
        return cls(
            bounds,  # type: ignore[arg-type]
            tuple((x, y, m) for (x, y), m in sorted(counts.items())),
        )

    @property
    def n(self) -> int:
        return sum(m for _, _, m in self.points)

    def re(self) -> Multiset1D:
        """Projection on the horizontal interval ``I``."""
        return Multiset1D.from_points(
            self.rect[:2], (x for x, _, m in self.points for _ in range(m))
        )

    def im(self) -> Multiset1D:
        """Projection on the vertical interval ``J``."""
        return Multiset1D.from_points(
            self.rect[2:], (y for _, y, m in self.points for _ in range(m))
        )


def comp2d(z: Multiset2D) -> RectComposition:
    """Multiplicity matrix on the grid of distinct coordinates, boundary lines kept."""
    x_l, x_r, y_b, y_t = z.rect
    xs = [x_l, *sorted({x for x, _, _ in z.points} - {x_l, x_r}), x_r]
    ys = [y_b, *sorted({y for _, y, _ in z.points} - {y_b, y_t}), y_t]
    row_of = {x: i for i, x in enumerate(xs)}
    col_of = {y: j for j, y in enumerate(ys)}
    rows = [[0] * len(ys) for _ in xs]
    for x, y, m in z.points:
        rows[row_of[x]][col_of[y]] += m
    return RectComposition.from_rows(rows)


def random_multiset(
    n: int,
    seed: int,
    rect: Sequence[object] = (0, 1, 0, 1),
    mode: str = "generic",
) -> Multiset2D:
    """Deterministic test input.

    ``generic`` draws ``n`` pairwise distinct interior ``x`` and ``y`` coordinates so the
    label is a padded permutation matrix. ``grid`` drops ``n`` points, repetitions
    allowed, on the ``(n+2)×(n+2)`` grid including the boundary.
    """
    if n < 1:
        raise InputError("A multiset needs n >= 1.")
    x_l, x_r, y_b, y_t = (parse_rational(v) for v in rect)
    rng = random.Random(seed)
    if mode == "generic":
        steps = 4 * n
        xs = rng.sample(range(1, steps), n)
        ys = rng.sample(range(1, steps), n)
        points = [
            (x_l + (x_r - x_l) * Fraction(i, steps), y_b + (y_t - y_b) * Fraction(j, steps), 1)
            for i, j in zip(xs, ys)
        ]
    elif mode == "grid":
        steps = n + 1
        cells = Counter(
            (rng.randint(0, steps), rng.randint(0, steps)) for _ in range(n)
        )
        points = [
            (x_l + (x_r - x_l) * Fraction(i, steps), y_b + (y_t - y_b) * Fraction(j, steps), m)
            for (i, j), m in sorted(cells.items())
        ]
    else:
        raise InputError(f"Unknown sampling mode {mode!r}.")
    return Multiset2D.build((x_l, x_r, y_b, y_t), points)


def placement_labels(
    row_lines: int, col_lines: int, n: int
) -> Counter:
    """Distinct labels reached by placing ``n`` points on a ``row_lines×col_lines``
    grid, counted per projection pair."""
    rect = (0, row_lines - 1, 0, col_lines - 1)
    cells = list(product(range(row_lines), range(col_lines)))
    labels = set()
    for chosen in combinations_with_replacement(cells, n):
        points = Counter(chosen)
        z = Multiset2D.build(rect, ((x, y, m) for (x, y), m in points.items()))
        labels.add(comp2d(z))
    return Counter((pi_re(a), pi_im(a)) for a in labels)


def count_placements(xc: LinearComposition, yc: LinearComposition) -> int:
    """Distinct labels with projections ``xc`` and ``yc`` among all placements on the
    ``len(xc)×len(yc)`` grid. Independent oracle for :py:func:`count_preimages`."""
    if xc.n != yc.n:
        raise SizeMismatchError(f"Projections of {xc.n} and {yc.n} points.")
    guard("count_placements", xc.n, RECT_LIMIT)
    return placement_labels(len(xc.entries), len(yc.entries), xc.n)[(xc, yc)]


@dataclass(frozen=True)
class SpineEdge:
    """Edge from grid vertex ``start`` to the next cut in ``direction``.

    A ``Row`` edge moves internal row ``index`` from the bottom block to the top one and
    has squared length ``weight · L_I²``. A ``Col`` edge does the same with internal
    column ``index`` and ``L_J``.
    """

    start: tuple[int, int]
    direction: Side
    index: int
    color: str
    weight: int
    squared_length: Fraction

    @property
    def end(self) -> tuple[int, int]:
        i, j = self.start
        return (i + 1, j) if self.direction is Side.ROW else (i, j + 1)


Quadrants = tuple[tuple[int, int], tuple[int, int]]


def _quadrants_key(q: Quadrants) -> str:
    return ",".join(str(v) for row in q for v in row)


def _edge_color(before: Quadrants, after: Quadrants) -> str:
    """Color by the side of the ``2×2`` label left untouched.

    Left column fixed is blue, right column fixed cyan, bottom row fixed red, top row
    fixed orange. Anything else is mixed.
    """
    (a, b), (c, d) = before
    (a2, b2), (c2, d2) = after
    left_fixed = (a, c) == (a2, c2)
    right_fixed = (b, d) == (b2, d2)
    top_fixed = (a, b) == (a2, b2)
    bottom_fixed = (c, d) == (c2, d2)
    if left_fixed and not right_fixed:
        return "blue"
    if right_fixed and not left_fixed:
        return "cyan"
    if bottom_fixed and not top_fixed:
        return "red"
    if top_fixed and not bottom_fixed:
        return "orange"
    return "mixed"


@dataclass(frozen=True)
class SpineComplex:
    """Grid of ``2×2`` quadrant counts, product of the two factor spines.

    ``grid[i-1][j-1]`` is the vertex at row cut ``i`` and column cut ``j``: its upper
    left entry counts the points in rows ``< i`` and columns ``< j``.
    """

    composition: RectComposition
    grid: tuple[tuple[Quadrants, ...], ...]
    edges: tuple[SpineEdge, ...]
    faces: tuple[tuple[int, int], ...]
    lengths: tuple[Fraction, Fraction] = (Fraction(1), Fraction(1))

    def vertex(self, i: int, j: int) -> Quadrants:
        return self.grid[i - 1][j - 1]

    @property
    def vertex_count(self) -> int:
        return sum(len(row) for row in self.grid)

    def corners(self) -> list[Quadrants]:
        """Vertices at the four extreme cut pairs."""
        last_i, last_j = len(self.grid), len(self.grid[0])
        return [self.vertex(i, j) for i in (1, last_i) for j in (1, last_j)]

    def face_colors(self, i: int, j: int) -> list[str]:
        """Colors of the four edges around the unit square with lower corner ``(i, j)``."""
        around = {
            (i, j, Side.ROW),
            (i, j + 1, Side.ROW),
            (i, j, Side.COL),
            (i + 1, j, Side.COL),
        }
        return [e.color for e in self.edges if (*e.start, e.direction) in around]

    def four_colored_faces(self) -> list[tuple[int, int]]:
        """Unit squares whose four edges carry four distinct colors."""
        return [
            face
            for face in self.faces
            if len(set(self.face_colors(*face)) - {"mixed"}) == 4
        ]

    def as_graph(self) -> LabeledMultigraph:
        """1-skeleton keyed by flattened quadrant labels ``a,b,c,d``."""
        return LabeledMultigraph.build(
            (_quadrants_key(q) for row in self.grid for q in row),
            (
                (
                    _quadrants_key(self.vertex(*e.start)),
                    _quadrants_key(self.vertex(*e.end)),
                    EdgeLabel(e.direction, e.index, e.color),
                )
                for e in self.edges
            ),
            name="spine",
        )


def quadrants(a: RectComposition, i: int, j: int) -> Quadrants:
    """``2×2`` block sums of ``a`` split before row ``i`` and before column ``j``."""
    (top, bottom) = block_sum(a, [0, i, a.shape[0]], [0, j, a.shape[1]])
    return (top[0], top[1]), (bottom[0], bottom[1])


def spine_rect(a: RectComposition, lengths: Sequence[object] = (1, 1)) -> SpineComplex:
    """Spine of the bi-orthoscheme labeled ``a``, for side lengths ``L_I`` and ``L_J``."""
    l_i, l_j = (parse_rational(v) for v in lengths)
    rows, cols = a.shape
    grid = tuple(
        tuple(quadrants(a, i, j) for j in range(1, cols)) for i in range(1, rows)
    )
    row_sums, col_sums = a.row_sums, a.col_sums
    edges = []
    for i in range(1, rows):
        for j in range(1, cols):
            if i < rows - 1:
                edges.append(
                    SpineEdge(
                        (i, j),
                        Side.ROW,
                        i,
                        _edge_color(grid[i - 1][j - 1], grid[i][j - 1]),
                        row_sums[i],
                        row_sums[i] * l_i**2,
                    )
                )
            if j < cols - 1:
                edges.append(
                    SpineEdge(
                        (i, j),
                        Side.COL,
                        j,
                        _edge_color(grid[i - 1][j - 1], grid[i - 1][j]),
                        col_sums[j],
                        col_sums[j] * l_j**2,
                    )
                )
    faces = tuple((i, j) for i in range(1, rows - 1) for j in range(1, cols - 1))
    return SpineComplex(a, grid, tuple(edges), faces, (l_i, l_j))
