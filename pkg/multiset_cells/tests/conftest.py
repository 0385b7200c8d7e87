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

"""Fixtures, configuration and helpers for tests."""

from __future__ import annotations

from pathlib import Path
from textwrap import dedent, indent
from typing import IO, Any, Mapping, Optional, Sequence

import click
import click.testing
import pytest
from boltons.iterutils import flatten
from boltons.strutils import strip_ansi
from boltons.tbutils import ExceptionInfo

from ..rectangular import RectComposition
from ..symmetry import Permutation

EnvVars = Mapping[str, Optional[str]]


PRISM_ROWS = ((0, 2, 1, 0), (0, 3, 2, 1), (0, 0, 5, 2))
"""Cell with projections [3 6 7] and [0 5 8 3]: a right triangle times a segment."""

GENERIC_IMAGE = (2, 3, 1, 4)
"""Four points in general position: (1,2), (2,3), (3,1), (4,4) in [0,5]²."""

SIGMA_EXAMPLE_IMAGE = (4, 1, 5, 2, 3)


def args_cleanup(*args) -> tuple[str, ...]:
    """Flatten nested iterables, drop ``None`` and cast to strings."""
    return tuple(str(arg) for arg in flatten(args) if arg is not None)


class CellsCliRunner(click.testing.CliRunner):
    def invoke(
        self,
        cli: click.core.BaseCommand,
        args: str | Sequence[str] | None = None,
        input: str | bytes | IO | None = None,
        env: EnvVars | None = None,
        catch_exceptions: bool = True,
        color: bool = False,
        **extra: Any,
    ) -> click.testing.Result:
        result = super().invoke(
            cli=cli,
            args=args,
            input=input,
            env=env,
            catch_exceptions=catch_exceptions,
            color=color,
            **extra,
        )

        if result.exception:
            print(ExceptionInfo.from_exc_info(*result.exc_info).get_formatted())

        return result


@pytest.fixture
def runner():
    runner = CellsCliRunner(mix_stderr=False)
    with runner.isolated_filesystem():
        yield runner


@pytest.fixture
def invoke(runner):
    """Executes Click's CLI, print output and return results.

    ``<stdout>`` and ``<stderr>`` are stripped out of ANSI codes unless ``color`` is
    set.
    """

    def _run(cli, *args, env: EnvVars | None = None, input=None, color=False):
        args = args_cleanup(args)
        result = runner.invoke(cli=cli, args=args, env=env, input=input, color=color)

        if not color:
            result.stdout_bytes = strip_ansi(result.stdout_bytes)
            result.stderr_bytes = strip_ansi(result.stderr_bytes)

        print(f"\n► {runner.get_default_prog_name(cli)} {' '.join(args)}")
        if result.output:
            print(indent(result.output, "  "))
        if result.stderr:
            print(indent(result.stderr, "  "))
        print(f"  Return code: {result.exit_code}")

        return result

    return _run


@pytest.fixture
def create_config(tmp_path):
    """A generic fixture to produce a temporary configuration file."""

    def _create_config(filename, content):
        assert isinstance(content, str)

        if isinstance(filename, str):
            config_path = tmp_path.joinpath(filename)
        else:
            assert isinstance(filename, Path)
            config_path = filename.resolve()

        config_path.parent.mkdir(parents=True, exist_ok=True)
        config_path.write_text(dedent(content).strip())

        return config_path

    return _create_config


@pytest.fixture
def prism():
    return RectComposition(PRISM_ROWS)


@pytest.fixture
def generic():
    return RectComposition.padded(Permutation(GENERIC_IMAGE))


@pytest.fixture
def sigma_example():
    return Permutation(SIGMA_EXAMPLE_IMAGE)
