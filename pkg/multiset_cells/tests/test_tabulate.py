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

import click
import pytest
from pytest_cases import parametrize

from ..cli import multiset_cells
from ..decorators import table_format_option
from ..tabulate import output_formats, print_table, render_csv

ROWS = [(1, "[0 1]", 0), (2, "[1 0]", 0), (3, "[0 1 0]", 1)]
HEADERS = ("#", "Composition", "Dimension")


def test_formats():
    assert "csv" in output_formats
    assert "rounded_outline" in output_formats
    assert output_formats == sorted(output_formats)


@parametrize("option_decorator", (table_format_option, table_format_option()))
def test_standalone_table_format(invoke, option_decorator):
    @click.command()
    @option_decorator
    def table_cli():
        print_table(ROWS, headers=HEADERS)

    result = invoke(table_cli, "--table-format", "csv")
    assert result.exit_code == 0
    assert result.output == "#,Composition,Dimension\n1,[0 1],0\n2,[1 0],0\n3,[0 1 0],1\n"
    assert not result.stderr

    result = invoke(table_cli)
    assert result.exit_code == 0
    assert result.output.startswith("╭")
    assert "[0 1 0]" in result.output


def test_unrecognized_format(invoke):
    result = invoke(multiset_cells, "--table-format", "random", "enumerate", "-n", "1")
    assert result.exit_code == 2
    assert not result.output
    assert "Error: Invalid value for '-t' / '--table-format'" in result.stderr


@pytest.mark.parametrize("table_format", ("plain", "github", "csv", "rounded_outline"))
def test_enumeration_table(invoke, table_format):
    result = invoke(multiset_cells, "-t", table_format, "enumerate", "-n", "1")
    assert result.exit_code == 0
    for row in ("[0 1]", "[1 0]", "[0 1 0]"):
        assert row in result.output
    assert "Composition" in result.output


def test_print_table_outside_cli(capsys):
    print_table(ROWS[:1], headers=HEADERS, table_format="csv")
    assert capsys.readouterr().out == "#,Composition,Dimension\n1,[0 1],0\n"


def test_render_csv_quotes(capsys):
    render_csv([("demo", "a, b")], headers=("Claim", "Check"))
    assert capsys.readouterr().out == 'Claim,Check\ndemo,"a, b"\n'
