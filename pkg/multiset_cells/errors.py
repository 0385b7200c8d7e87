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

"""Exception hierarchy.

Each exception carries the exit code the CLI terminates with when it bubbles up to
the command group.
"""

from __future__ import annotations


class MultisetCellsError(Exception):
    """Root of all errors raised by ``multiset_cells``."""

    exit_code: int = 1


class InputError(MultisetCellsError, ValueError):
    """Rejected user input: malformed vector, matrix, permutation or file."""

    exit_code = 2


class CompositionError(InputError):
    """A vector or matrix violates the rules of linear or rectangular compositions."""


class PermutationError(InputError):
    """Not a bijection of ``[n]``, or an index outside of ``[n]``."""


class MultisetError(InputError):
    """Points outside their interval or rectangle, or nonpositive multiplicities."""


class SizeMismatchError(InputError):
    """Two objects were expected to share the same ``n``."""


class GeometryInputError(InputError):
    """Non-generic basepoint or degenerate interval."""


class ResourceGuardError(MultisetCellsError):
    """Explicit refusal to build an object above its practical size bound."""

    exit_code = 3

    def __init__(self, operation: str, n: int, limit: int) -> None:
        self.operation = operation
        self.n = n
        self.limit = limit
        super().__init__(
            f"{operation} refused for n={n}: practical bound is n <= {limit}."
        )


class VerificationFailed(MultisetCellsError):
    """At least one check of a verification run did not pass."""

    exit_code = 1


def guard(operation: str, n: int, limit: int) -> None:
    """Raise :py:class:`ResourceGuardError` if ``n`` exceeds ``limit``."""
    if n > limit:
        raise ResourceGuardError(operation, n, limit)
