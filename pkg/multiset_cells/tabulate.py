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

"""Table rendering for enumeration listings and verification reports."""

from __future__ import annotations

import csv
from functools import partial
from gettext import gettext as _
from io import StringIO

import click
import tabulate

from .parameters import CellsOption

tabulate.MIN_PADDING = 0
"""Neutralize spurious double-spacing in table rendering."""

output_formats: list[str] = sorted(
    list(tabulate._table_formats) + ["csv"]  # type: ignore[attr-defined]
)
"""Formats from tabulate, plus plain CSV."""


def render_csv(tabular_data, headers=()):
    with StringIO(newline="") as output:
        writer = csv.writer(output, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(tabular_data)
        click.echo(output.getvalue(), nl=False)


def render_table(tabular_data, headers=(), **kwargs):
    """Render a table with tabulate and output it via echo."""
    defaults = {"disable_numparse": True, "numalign": None}
    defaults.update(kwargs)
    click.echo(tabulate.tabulate(tabular_data, headers, **defaults))


def print_table(tabular_data, headers=(), table_format: str = "rounded_outline"):
    """Render with the format chosen on the command line, or ``table_format``."""
    ctx = click.get_current_context(silent=True)
    render = getattr(ctx.find_root(), "print_table", None) if ctx else None
    if render is None:
        render = get_renderer(table_format)
    render(tabular_data, headers)


def get_renderer(table_format: str):
    if table_format == "csv":
        return render_csv
    return partial(render_table, tablefmt=table_format)


class TableFormatOption(CellsOption):
    """A pre-configured option that is adding a ``-t``/``--table-format`` flag to select
    the rendering style of a table."""

    def init_formatter(self, ctx, param, value):
        """Save the format in the context and attach a ready-to-use ``print_table()``."""
        ctx.table_format = value
        ctx.print_table = get_renderer(value)

    def __init__(
        self,
        param_decls=None,
        type=click.Choice(output_formats, case_sensitive=False),
        default="rounded_outline",
        expose_value=False,
        help=_("Rendering style of tables."),
        **kwargs,
    ):
        if not param_decls:
            param_decls = ("-t", "--table-format")

        kwargs.setdefault("callback", self.init_formatter)

        super().__init__(
            param_decls=param_decls,
            type=type,
            default=default,
            expose_value=expose_value,
            help=help,
            **kwargs,
        )
