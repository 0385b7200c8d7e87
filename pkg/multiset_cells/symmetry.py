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

"""Permutations of ``[n]``, their matrices and Cayley graphs.

Permutations act on the right: ``i·π`` is ``image[i]``, read 1-indexed. Products
compose left to right, so ``compose(p, q)`` first applies ``p`` then ``q`` and its
matrix is ``matrix(p) @ matrix(q)``.

The left action ``π·i`` returns the preimage of ``i``. Both actions are inverse
functions of the point: ``act_right(act_left(π, i), π) == i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence, TypeVar

from .errors import PermutationError, SizeMismatchError
from .graphs import EdgeLabel, LabeledMultigraph, Side

T = TypeVar("T")


@dataclass(frozen=True, order=True)
class Permutation:
    """Bijection of ``[n]`` in one-line form."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.image:
            raise PermutationError("A permutation needs n >= 1.")
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise PermutationError(
                f"{list(self.image)} is not a bijection of [{len(self.image)}]."
            )

    @property
    def n(self) -> int:
        return len(self.image)

    @property
    def key(self) -> str:
        """Canonical serialized form, like ``2,3,1``."""
        return ",".join(map(str, self.image))

    def __str__(self) -> str:
        return f"({' '.join(map(str, self.image))})"

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int) -> Permutation:
        """The adjacent transposition ``σ_i = (i i+1)``."""
        if not 1 <= i <= n - 1:
            raise PermutationError(f"No adjacent transposition σ_{i} in Sym_{n}.")
        image = list(range(1, n + 1))
        image[i - 1], image[i] = image[i], image[i - 1]
        return cls(tuple(image))

    @classmethod
    def from_key(cls, key: str) -> Permutation:
        try:
            return cls(tuple(int(part) for part in key.split(",")))
        except ValueError as ex:
            raise PermutationError(f"Cannot parse permutation key {key!r}.") from ex

    @classmethod
    def from_cycles(cls, n: int, text: str) -> Permutation:
        """Parse cycle notation like ``(1 2 3)(4 5)``.

        Each cycle ``(a b c)`` sends ``a`` to ``b``, ``b`` to ``c`` and ``c`` to ``a``.
        An empty string or ``()`` is the identity.
        """
        if not re.fullmatch(r"(\s*\(\s*(\d+([\s,]+\d+)*)?\s*\))*\s*", text):
            raise PermutationError(f"Malformed cycle notation {text!r}.")
        image = list(range(1, n + 1))
        seen: set[int] = set()
        for body in re.findall(r"\(([^)]*)\)", text):
            cycle = [int(v) for v in re.split(r"[\s,]+", body.strip()) if v]
            for value in cycle:
                if not 1 <= value <= n or value in seen:
                    raise PermutationError(
                        f"Invalid or repeated point {value} in {text!r}."
                    )
                seen.add(value)
            for source, target in zip(cycle, cycle[1:] + cycle[:1]):
                image[source - 1] = target
        return cls(tuple(image))

    def inverse(self) -> Permutation:
        inverse = [0] * self.n
        for i, value in enumerate(self.image, start=1):
            inverse[value - 1] = i
        return Permutation(tuple(inverse))

    def matrix(self) -> PermutationMatrix:
        return PermutationMatrix.from_permutation(self)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All ``n!`` permutations, in lexicographic order of their one-line form."""
    for image in permutations(range(1, n + 1)):
        yield Permutation(image)


@dataclass(frozen=True)
class PermutationMatrix:
    """0/1 matrix with ``entries[i][j] == 1`` exactly when ``i·π = j``."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        rows_ok = all(
            len(row) == n and sorted(row) == [0] * (n - 1) + [1] for row in self.entries
        )
        cols_ok = rows_ok and all(
            sum(row[j] for row in self.entries) == 1 for j in range(n)
        )
        if not n or not cols_ok:
            raise PermutationError("Not a permutation matrix.")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_permutation(cls, p: Permutation) -> PermutationMatrix:
        return cls(
            tuple(
                tuple(int(j == value) for j in range(1, p.n + 1)) for value in p.image
            )
        )

    def permutation(self) -> Permutation:
        return Permutation(tuple(row.index(1) + 1 for row in self.entries))

    def __matmul__(self, other: PermutationMatrix) -> PermutationMatrix:
        if self.n != other.n:
            raise SizeMismatchError(f"Cannot multiply {self.n}x{self.n} by {other.n}x{other.n}.")
        columns = list(zip(*other.entries))
        return PermutationMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in columns)
                for row in self.entries
            )
        )


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The product ``pq``: apply ``p`` first, then ``q``."""
    if p.n != q.n:
        raise SizeMismatchError(f"Cannot compose permutations of {p.n} and {q.n} points.")
    return Permutation(tuple(q.image[value - 1] for value in p.image))


def _check_point(p: Permutation, i: int) -> None:
    if not 1 <= i <= p.n:
        raise PermutationError(f"Point {i} is outside of [{p.n}].")


def act_left(p: Permutation, i: int) -> int:
    """Left action ``π·i``: the point sent to ``i`` by ``π``."""
    _check_point(p, i)
    return p.image.index(i) + 1


def act_right(i: int, p: Permutation) -> int:
    """Right action ``i·π``: the image of ``i``."""
    _check_point(p, i)
    return p.image[i - 1]


def _check_swap(m: PermutationMatrix, i: int) -> None:
    if not 1 <= i <= m.n - 1:
        raise PermutationError(f"Cannot swap {i} and {i + 1} in a {m.n}x{m.n} matrix.")


def swap_rows(m: PermutationMatrix, i: int) -> PermutationMatrix:
    """Swap rows ``i`` and ``i+1``, i.e. the matrix of ``σ_i π``."""
    _check_swap(m, i)
    rows = list(m.entries)
    rows[i - 1], rows[i] = rows[i], rows[i - 1]
    return PermutationMatrix(tuple(rows))


def swap_cols(m: PermutationMatrix, i: int) -> PermutationMatrix:
    """Swap columns ``i`` and ``i+1``, i.e. the matrix of ``π σ_i``."""
    _check_swap(m, i)
    swapped = []
    for row in m.entries:
        row = list(row)
        row[i - 1], row[i] = row[i], row[i - 1]
        swapped.append(tuple(row))
    return PermutationMatrix(tuple(swapped))


def left_act_tuple(sigma: Permutation, x: Sequence[T]) -> tuple[T, ...]:
    """``σ·x = (x_{σ·1}, …, x_{σ·n})``. For display only."""
    if len(x) != sigma.n:
        raise SizeMismatchError(f"Tuple of length {len(x)} for Sym_{sigma.n}.")
    return tuple(x[act_left(sigma, i) - 1] for i in range(1, sigma.n + 1))


def right_act_tuple(x: Sequence[T], sigma: Permutation) -> tuple[T, ...]:
    """``x·σ = (x_{n·σ}, …, x_{1·σ})``, listing reversed as written. For display only."""
    if len(x) != sigma.n:
        raise SizeMismatchError(f"Tuple of length {len(x)} for Sym_{sigma.n}.")
    return tuple(x[act_right(i, sigma) - 1] for i in range(sigma.n, 0, -1))


def _cayley_edges(n: int, side: Side) -> Iterator[tuple[str, str, EdgeLabel]]:
    generators = [Permutation.transposition(n, i) for i in range(1, n)]
    for pi in all_permutations(n):
        for i, sigma in enumerate(generators, start=1):
            other = compose(sigma, pi) if side is Side.LEFT else compose(pi, sigma)
            # Each undirected edge is met twice, keep the one seen from its smaller end.
            if pi < other:
                yield pi.key, other.key, EdgeLabel(side, i)


def cayley_graph(n: int, side: Side) -> LabeledMultigraph:
    """Left (``π`` to ``σ_i π``) or right (``π`` to ``π σ_i``) Cayley graph of ``Sym_n``."""
    if side not in (Side.LEFT, Side.RIGHT):
        raise ValueError(f"Cayley graphs have a Left or Right side, not {side}.")
    if n < 1:
        raise PermutationError("Sym_n needs n >= 1.")
    vertices = [p.key for p in all_permutations(n)]
    return LabeledMultigraph.build(
        vertices, _cayley_edges(n, side), name=f"cayley_{side.value.lower()}_{n}"
    )


def overlay_lr(n: int) -> LabeledMultigraph:
    """Overlay of the left and right Cayley graphs, parallel edges kept."""
    left = cayley_graph(n, Side.LEFT)
    right = cayley_graph(n, Side.RIGHT)
    return LabeledMultigraph.build(
        left.vertices, left.edges + right.edges, name=f"overlay_lr_{n}"
    )
