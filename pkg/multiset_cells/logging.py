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

"""Logging utilities."""

from __future__ import annotations

import logging
from gettext import gettext as _

import click
from cloup import Style

from .parameters import CellsOption

LOG_LEVELS = {
    name: value
    for value, name in sorted(logging._levelToName.items(), reverse=True)
    if name != "NOTSET"
}
"""Mapping of canonical log level names to their IDs, from least to most verbose."""

LEVEL_STYLES = {
    "critical": Style(fg="red", bold=True),
    "error": Style(fg="red"),
    "warning": Style(fg="yellow"),
    "info": None,
    "debug": Style(fg="blue"),
}

logger = logging.getLogger("multiset_cells")
"""Package logger. Library code only logs, the CLI decides where it goes."""


class ColorFormatter(logging.Formatter):
    def __init__(self, fmt: str = "%(levelname)s: %(message)s", *args, **kwargs) -> None:
        super().__init__(fmt, *args, **kwargs)

    def formatMessage(self, record):
        """Lower-case and colorize the level name."""
        level = record.levelname.lower()
        style = LEVEL_STYLES.get(level)
        record.levelname = style(level) if style else level
        return super().formatMessage(record)


class EchoHandler(logging.Handler):
    def emit(self, record):
        """Print the log message to ``<stderr>`` through ``click.echo``."""
        try:
            click.echo(self.format(record), err=True)
        except Exception:
            self.handleError(record)


def install_handler(target: logging.Logger = logger) -> logging.Logger:
    """Route ``target`` to a single :py:class:`EchoHandler`."""
    handler = EchoHandler()
    handler.setFormatter(ColorFormatter())
    target.handlers = [handler]
    target.propagate = False
    return target


class VerbosityOption(CellsOption):
    """Adds a ``--verbosity``/``-v`` option."""

    @staticmethod
    def set_level(ctx, param, value):
        """Set the logger level, and reset it when the CLI exits so test invocations
        don't leak their level into each other."""
        logger.setLevel(LOG_LEVELS[value])
        logger.debug(f"Verbosity set to {value}.")
        ctx.call_on_close(lambda: logger.setLevel(logging.NOTSET))

    def __init__(
        self,
        param_decls=None,
        default="INFO",
        metavar="LEVEL",
        type=click.Choice(list(LOG_LEVELS), case_sensitive=False),
        expose_value=False,
        help=_("Either {log_levels}.").format(log_levels=", ".join(LOG_LEVELS)),
        is_eager=True,
        **kwargs,
    ):
        if not param_decls:
            param_decls = ("--verbosity", "-v")

        kwargs.setdefault("callback", self.set_level)

        install_handler()

        super().__init__(
            param_decls=param_decls,
            default=default,
            metavar=metavar,
            type=type,
            expose_value=expose_value,
            help=help,
            is_eager=is_eager,
            **kwargs,
        )
