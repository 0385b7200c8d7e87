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

"""Cloup commands and groups pre-configured with our defaults.

Library errors raised while a command runs are turned into
:py:class:`CellsException`, which Click prints as ``Error: …`` before exiting with the
error's own exit code.
"""

from __future__ import annotations

from gettext import gettext as _
from time import perf_counter
from typing import Any

import click
import cloup

from .errors import MultisetCellsError
from .logging import logger
from .parameters import CellsOption, normalize_envvar


class TimerOption(CellsOption):
    """A pre-configured option that is adding a ``--time``/``--no-time`` flag to print
    elapsed time at the end of CLI execution."""

    def print_timer(self):
        click.echo(
            f"Execution time: {perf_counter() - self.start_time:0.3f} seconds.", err=True
        )

    def register_timer_on_close(self, ctx, param, value):
        if not value:
            return
        self.start_time = perf_counter()
        ctx.call_on_close(self.print_timer)

    def __init__(
        self,
        param_decls=None,
        default=False,
        expose_value=False,
        help=_("Measure and print elapsed execution time."),
        **kwargs,
    ):
        if not param_decls:
            param_decls = ("--time/--no-time",)

        kwargs.setdefault("callback", self.register_timer_on_close)

        super().__init__(
            param_decls=param_decls,
            default=default,
            expose_value=expose_value,
            help=help,
            **kwargs,
        )


class CellsException(click.ClickException):
    """Carries a library error up to Click, with its exit code."""

    def __init__(self, error: MultisetCellsError) -> None:
        super().__init__(str(error))
        self.exit_code = error.exit_code
        self.error = error


class CellsCommand(cloup.Command):
    """Like ``cloup.Command``, with sane defaults.

    These context settings are applied unless overridden by ``context_settings``:

    - ``show_default = True``
    - ``auto_envvar_prefix``, derived from the group name
    - ``align_option_groups = False``
    - ``help_option_names = ("--help", "-h")``

    Our own options are moved to the end of the parameter list.
    """

    def __init__(self, *args, **kwargs: Any):
        super().__init__(*args, **kwargs)

        default_ctx_settings: dict[str, Any] = {
            "show_default": True,
            "align_option_groups": False,
            "help_option_names": ("--help", "-h"),
        }
        # Subcommands derive their prefix from the group one.
        if isinstance(self, click.Group):
            default_ctx_settings["auto_envvar_prefix"] = normalize_envvar(self.name or "")
        default_ctx_settings.update(self.context_settings)
        self.context_settings = default_ctx_settings

        self.params.sort(key=lambda p: isinstance(p, CellsOption))
        self.arguments, self.option_groups, self.ungrouped_options = self._group_params(
            self.params
        )

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except MultisetCellsError as ex:
            logger.debug(f"{type(ex).__name__} raised by {ctx.info_name}.")
            raise CellsException(ex) from ex


class CellsGroup(CellsCommand, cloup.Group):
    """Same as :py:class:`CellsCommand`, for groups. Subcommands default to
    :py:class:`CellsCommand`."""

    def command(self, *args, **kwargs):
        kwargs.setdefault("cls", CellsCommand)
        return super().command(*args, **kwargs)
