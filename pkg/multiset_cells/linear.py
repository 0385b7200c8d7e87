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

"""Linear compositions and multisets in an interval.

A linear composition ``[a_l a_1 … a_k a_r]`` labels a face of the orthoscheme of
``n``-multisets in an interval. Its end entries may be zero, its internal ones may
not. Merging two adjacent entries moves to a face of codimension one, and the merge
order is the inclusion order of cut sets.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate, combinations
from typing import Iterable, Sequence

from .errors import (
    CompositionError,
    InputError,
    MultisetError,
    SizeMismatchError,
    guard,
)
from .graphs import EdgeLabel, LabeledMultigraph, Side

LINEAR_LIMIT = 12
"""Largest ``n`` for which all ``2^(n+1) - 1`` linear compositions get enumerated."""


def _rule_violation(entries: Sequence[int], n: int | None = None) -> str | None:
    if len(entries) < 2:
        return f"length {len(entries)} is below the minimum of 2"
    for position, value in enumerate(entries):
        if value < 0:
            return f"negative entry {value} at position {position}"
    for position, value in enumerate(entries[1:-1], start=1):
        if value == 0:
            return f"zero internal entry at position {position}"
    total = sum(entries)
    if total < 1:
        return "entries sum to 0, n must be positive"
    if n is not None and total != n:
        return f"entries sum to {total} instead of {n}"
    return None


@dataclass(frozen=True)
class LinearComposition:
    """Integer vector ``[a_l a_1 … a_k a_r]``, positive inside, summing to ``n >= 1``."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        problem = _rule_violation(self.entries)
        if problem:
            raise CompositionError(f"Invalid linear composition {list(self.entries)}: {problem}.")

    @property
    def n(self) -> int:
        return sum(self.entries)

    @property
    def k(self) -> int:
        """Number of internal entries."""
        return len(self.entries) - 2

    @property
    def internal(self) -> tuple[int, ...]:
        return self.entries[1:-1]

    @property
    def sort_key(self) -> tuple:
        """Canonical order: ascending length, then lexicographic."""
        return len(self.entries), self.entries

    def __str__(self) -> str:
        return f"[{' '.join(map(str, self.entries))}]"

    @classmethod
    def unit(cls, n: int) -> LinearComposition:
        """``[0 1 … 1 0]``, the top cell of ``n`` distinct interior points."""
        return cls((0,) + (1,) * n + (0,))


def validate_linear(v: Iterable[int], n: int | None = None) -> LinearComposition:
    """Build a :py:class:`LinearComposition`, rejecting ``v`` on its first violated rule.

    ``n``, if given, is the expected entry sum.
    """
    if isinstance(v, (str, bytes)):
        raise CompositionError(f"Not an integer vector: {v!r}")
    try:
        entries = tuple(parse_count(x, CompositionError) for x in v)
    except TypeError as ex:
        raise CompositionError(f"Not an integer vector: {ex}") from ex
    problem = _rule_violation(entries, n)
    if problem:
        raise CompositionError(f"Invalid linear composition {list(entries)}: {problem}.")
    return LinearComposition(entries)


def merge_at(a: LinearComposition, i: int) -> LinearComposition:
    """Replace entries ``i-1`` and ``i`` by their sum, ``i`` in ``1..k+1``."""
    if len(a.entries) <= 2:
        raise CompositionError(f"Cannot merge {a}: a composition keeps at least 2 entries.")
    if not 1 <= i <= len(a.entries) - 1:
        raise CompositionError(f"Merge position {i} out of range 1..{len(a.entries) - 1} for {a}.")
    e = a.entries
    return LinearComposition(e[: i - 1] + (e[i - 1] + e[i],) + e[i + 1 :])


@dataclass(frozen=True)
class CutSet:
    """Nonempty subset of ``{0, …, n}``."""

    n: int
    cuts: frozenset[int]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise CompositionError("A cut set needs n >= 1.")
        if not self.cuts:
            raise CompositionError("A cut set cannot be empty.")
        outside = [c for c in self.cuts if not 0 <= c <= self.n]
        if outside:
            raise CompositionError(f"Cuts {sorted(outside)} fall outside 0..{self.n}.")


def to_cutset(a: LinearComposition) -> CutSet:
    """Proper prefix sums ``{a_l, a_l + a_1, …, n - a_r}``."""
    return CutSet(a.n, frozenset(accumulate(a.entries[:-1])))


def from_cutset(c: CutSet) -> LinearComposition:
    bounds = [0] + sorted(c.cuts) + [c.n]
    return LinearComposition(tuple(hi - lo for lo, hi in zip(bounds, bounds[1:])))


def _same_n(a: LinearComposition, b: LinearComposition) -> None:
    if a.n != b.n:
        raise SizeMismatchError(f"Cannot compare {a} (n={a.n}) with {b} (n={b.n}).")


def leq_linear(a: LinearComposition, b: LinearComposition) -> bool:
    """Is ``a`` obtained from ``b`` by merges?"""
    _same_n(a, b)
    return to_cutset(a).cuts <= to_cutset(b).cuts


def lower_covers_linear(a: LinearComposition) -> list[LinearComposition]:
    """All single merges of ``a``, deduplicated and in canonical order."""
    if len(a.entries) <= 2:
        return []
    covers = {merge_at(a, i) for i in range(1, len(a.entries))}
    return sorted(covers, key=lambda c: c.sort_key)


def enumerate_linear(n: int) -> list[LinearComposition]:
    """All ``2^(n+1) - 1`` linear compositions of ``n``, in canonical order."""
    if n < 1:
        raise CompositionError("Compositions need n >= 1.")
    guard("enumerate_linear", n, LINEAR_LIMIT)
    points = range(n + 1)
    compositions = [
        from_cutset(CutSet(n, frozenset(cuts)))
        for size in range(1, n + 2)
        for cuts in combinations(points, size)
    ]
    return sorted(compositions, key=lambda c: c.sort_key)


def dimension_linear(a: LinearComposition) -> int:
    return len(a.entries) - 2


def parse_rational(value: object) -> Fraction:
    """Exact rational from an ``int``, ``Fraction`` or a ``"p/q"`` / decimal string.

    Floats are refused: the Comp maps need exact equality between coordinates.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise MultisetError(f"Inexact coordinate {value!r}: use a 'p/q' string.")
    try:
        return Fraction(value)  # type: ignore[arg-type]
    except (TypeError, ValueError, ZeroDivisionError) as ex:
        raise MultisetError(f"Cannot read {value!r} as an exact rational.") from ex


def parse_count(value: object, error: type[InputError] = InputError) -> int:
    """Exact integer from an ``int`` or a string of digits.

    Floats and booleans are refused rather than truncated.
    """
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            pass
    raise error(f"Cannot read {value!r} as an integer.")


@dataclass(frozen=True)
class Multiset1D:
    """Exact-rational points with positive multiplicities in ``[x_l, x_r]``."""

    interval: tuple[Fraction, Fraction]
    support: tuple[tuple[Fraction, int], ...]

    def __post_init__(self) -> None:
        x_l, x_r = self.interval
        if not x_l < x_r:
            raise MultisetError(f"Empty interval [{x_l}, {x_r}].")
        if not self.support:
            raise MultisetError("A multiset needs at least one point.")
        values = [x for x, _ in self.support]
        if any(b <= a for a, b in zip(values, values[1:])):
            raise MultisetError("Support values must be strictly increasing.")
        for x, m in self.support:
            if not x_l <= x <= x_r:
                raise MultisetError(f"Point {x} lies outside [{x_l}, {x_r}].")
            if m < 1:
                raise MultisetError(f"Nonpositive multiplicity {m} at {x}.")

    @classmethod
    def from_points(
        cls, interval: Sequence[object], points: Iterable[object]
    ) -> Multiset1D:
        """Collect repeated coordinates into multiplicities."""
        x_l, x_r = (parse_rational(v) for v in interval)
        counts = Counter(parse_rational(x) for x in points)
        return cls((x_l, x_r), tuple(sorted(counts.items())))

    @property
    def n(self) -> int:
        return sum(m for _, m in self.support)

    @property
    def length(self) -> Fraction:
        return self.interval[1] - self.interval[0]


def comp1d(x: Multiset1D) -> LinearComposition:
    """Multiplicity vector, endpoint slots always present."""
    x_l, x_r = x.interval
    counts = dict(x.support)
    interior = [m for value, m in x.support if x_l < value < x_r]
    return LinearComposition((counts.get(x_l, 0), *interior, counts.get(x_r, 0)))


@dataclass(frozen=True)
class LinearSpine:
    """Path through the orthoscheme vertices ``[s_t, n - s_t]``.

    Edge ``t`` moves the internal entry ``a_t`` across the cut and has squared length
    ``a_t · L²``.
    """

    composition: LinearComposition
    vertices: tuple[LinearComposition, ...]
    weights: tuple[int, ...]
    length: Fraction = Fraction(1)

    @property
    def squared_lengths(self) -> tuple[Fraction, ...]:
        return tuple(w * self.length**2 for w in self.weights)

    @property
    def edge_lengths(self) -> tuple[float, ...]:
        return tuple(math.sqrt(s) for s in self.squared_lengths)

    def as_graph(self) -> LabeledMultigraph:
        """Path keyed by the vertex labels ``s,n-s``, edges in the blue direction."""
        keys = [",".join(map(str, v.entries)) for v in self.vertices]
        return LabeledMultigraph.build(
            keys,
            (
                (u, v, EdgeLabel(Side.ROW, t, "blue"))
                for t, (u, v) in enumerate(zip(keys, keys[1:]), start=1)
            ),
            name="spine",
        )


def spine_linear(a: LinearComposition, length: object = 1) -> LinearSpine:
    """Spine of the orthoscheme labeled ``a``, for an interval of length ``L``."""
    e = a.entries
    vertices = tuple(
        LinearComposition((sum(e[:t]), sum(e[t:]))) for t in range(1, len(e))
    )
    return LinearSpine(a, vertices, a.internal, parse_rational(length))
