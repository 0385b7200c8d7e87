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

"""Our own flavor of ``Option``, parameter types for exact rationals and ranges of
``n``, and environment variable utilities.
"""

from __future__ import annotations

import re
from fractions import Fraction

import click
import cloup
from boltons.iterutils import unique


def normalize_envvar(envvar: str) -> str:
    """Join the alphanumeric segments of ``envvar`` with underscores, uppercased.

    ``multiset-cells`` becomes ``MULTISET_CELLS``.
    """
    return "_".join(p for p in re.split(r"[^a-zA-Z0-9]+", envvar) if p).upper()


class CellsOption(cloup.Option):
    """All options implemented by ``multiset-cells`` derive from this class.

    Lets commands move them to the end of the help screen.
    """


class RationalType(click.ParamType):
    """Exact rational from ``3``, ``-1/2`` or ``0.25``."""

    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not an exact rational.", param, ctx)


class RationalListType(click.ParamType):
    """Comma-separated exact rationals, optionally of a fixed count."""

    name = "rationals"

    def __init__(self, count: int | None = None) -> None:
        self.count = count

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        parts = [p for p in re.split(r"[,\s]+", str(value).strip()) if p]
        numbers = tuple(RationalType().convert(p, param, ctx) for p in parts)
        if self.count is not None and len(numbers) != self.count:
            self.fail(
                f"expected {self.count} comma-separated values, got {len(numbers)}.",
                param,
                ctx,
            )
        return numbers


class NRangeType(click.ParamType):
    """Values of ``n`` as ``3``, ``1..4`` or ``1,2,5``, deduplicated and sorted."""

    name = "n-range"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        if isinstance(value, int):
            values = [value]
        else:
            values = []
            for part in str(value).split(","):
                part = part.strip()
                bounds = re.fullmatch(r"(\d+)\s*\.\.\s*(\d+)", part)
                if bounds:
                    low, high = map(int, bounds.groups())
                    if low > high:
                        self.fail(f"empty range {part!r}.", param, ctx)
                    values.extend(range(low, high + 1))
                elif part.isdigit():
                    values.append(int(part))
                else:
                    self.fail(f"{part!r} is neither an integer nor a range A..B.", param, ctx)
        if any(v < 1 for v in values):
            self.fail("n must be positive.", param, ctx)
        return tuple(sorted(unique(values)))


LENGTHS = RationalListType(2)
RECTANGLE = RationalListType(4)
N_RANGE = NRangeType()
