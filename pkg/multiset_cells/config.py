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

"""Load CLI defaults from a TOML, YAML or JSON configuration file.

The file mirrors the command tree: a root section named after the CLI holds group
options, and one sub-section per subcommand holds its own::

    [multiset-cells]
    verbosity = "DEBUG"

    [multiset-cells.verify]
    ns = "1..2"
"""

from __future__ import annotations

import os
import sys
from enum import Enum
from gettext import gettext as _
from pathlib import Path
from typing import Any, Iterator, Sequence

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib  # type: ignore[import]

import click
import commentjson as json
import yaml
from boltons.iterutils import flatten, remap
from mergedeep import merge
from wcmatch.glob import BRACE, DOTGLOB, FOLLOW, GLOBSTAR, GLOBTILDE, IGNORECASE, NODIR, iglob

from .logging import logger
from .parameters import CellsOption


class Formats(Enum):
    """Supported formats and their extensions, in search priority order."""

    TOML = ("toml",)
    YAML = ("yaml", "yml")
    JSON = ("json",)


EXCLUDED_PARAMS = ("config", "help", "version")
"""Parameters a configuration file cannot set."""


def params_template(cli: click.Command) -> dict[str, Any]:
    """Tree of ``None`` leaves shadowing every configurable parameter of ``cli``."""
    template: dict[str, Any] = {
        p.name: None for p in cli.params if p.name not in EXCLUDED_PARAMS
    }
    for name, sub in getattr(cli, "commands", {}).items():
        if name in template:
            raise ValueError(f"{name} subcommand conflicts with a top-level parameter.")
        template[name] = {p.name: None for p in sub.params if p.name != "help"}
    return {cli.name: template}


class ConfigOption(CellsOption):
    """A pre-configured option adding ``--config``/``-C``."""

    def __init__(
        self,
        param_decls=None,
        metavar="CONFIG_PATH",
        type=click.STRING,
        help=_("Location of the configuration file. Supports glob patterns."),
        is_eager=True,
        expose_value=False,
        formats: Sequence[Formats] = tuple(Formats),
        strict: bool = False,
        **kwargs,
    ):
        """``strict`` rejects configuration files with unknown keys instead of dropping
        them."""
        if not param_decls:
            param_decls = ("--config", "-C")

        self.formats = formats
        self.strict = strict

        kwargs.setdefault("default", self.default_pattern)
        kwargs.setdefault("callback", self.load_conf)

        super().__init__(
            param_decls=param_decls,
            metavar=metavar,
            type=type,
            help=help,
            is_eager=is_eager,
            expose_value=expose_value,
            **kwargs,
        )

    def default_pattern(self) -> str:
        """``<app_dir>/*.{toml,yaml,yml,json}``, with the app dir from
        ``click.get_app_dir()``."""
        ctx = click.get_current_context()
        cli_name = ctx.find_root().info_name
        if not cli_name:
            raise ValueError
        app_dir = Path(click.get_app_dir(cli_name)).resolve()
        extensions = flatten(f.value for f in self.formats)
        return f"{app_dir}{os.path.sep}*.{{{','.join(extensions)}}}"

    def search_conf(self, pattern: str) -> Iterator[str]:
        """Yield the content of every local file matching ``pattern``."""
        for file in iglob(
            pattern.replace("\\", "/"),
            flags=NODIR | GLOBSTAR | DOTGLOB | GLOBTILDE | BRACE | FOLLOW | IGNORECASE,
        ):
            logger.debug(f"Configuration file found at {file}")
            yield Path(file).read_text()

    def parse_conf(self, content: str) -> dict | None:
        """Try each format in turn. The first one producing a ``dict`` wins."""
        for conf_format in self.formats:
            logger.debug(f"Parse configuration as {conf_format.name}...")
            try:
                if conf_format is Formats.TOML:
                    conf = tomllib.loads(content)
                elif conf_format is Formats.YAML:
                    conf = yaml.safe_load(content)
                else:
                    conf = json.loads(content)
            except Exception as ex:
                logger.debug(ex)
                continue
            if isinstance(conf, dict):
                return conf
        return None

    def recursive_update(self, template: dict, conf: dict) -> dict:
        """Copy ``conf`` values into ``template``, dropping unknown keys."""
        for key, value in conf.items():
            if isinstance(value, dict) and isinstance(template.get(key), dict):
                template[key] = self.recursive_update(template[key], value)
            elif key in template and not isinstance(template[key], dict):
                template[key] = value
            elif self.strict:
                raise click.BadParameter(
                    f"Parameter {key!r} is not allowed in configuration file.",
                    param_hint="--config",
                )
        return template

    def merge_conf(self, cli: click.Command, user_conf: dict) -> dict:
        valid = self.recursive_update(params_template(cli), user_conf)
        return remap(
            valid,
            visit=lambda path, key, value: value is not None
            and not (isinstance(value, dict) and not value),
        )

    def load_conf(self, ctx, param, path_pattern):
        """Merge the configuration into ``ctx.default_map``.

        Command line, environment variables and prompts keep precedence over the file.
        A file that was explicitly asked for but cannot be read stops the CLI.
        """
        explicit = ctx.get_parameter_source("config") in (
            click.core.ParameterSource.COMMANDLINE,
            click.core.ParameterSource.ENVIRONMENT,
        )
        message = f"Load configuration matching {path_pattern}"
        if explicit:
            click.echo(message, err=True)
        else:
            logger.debug(message)

        user_conf = None
        for content in self.search_conf(path_pattern):
            user_conf = self.parse_conf(content)
            if user_conf is not None:
                break

        if user_conf is None:
            if explicit:
                logger.critical("No configuration file found.")
                ctx.exit(2)
            logger.debug("No configuration file found.")
            return path_pattern

        cli = ctx.find_root().command
        conf = self.merge_conf(cli, user_conf)
        logger.debug(f"Loaded configuration: {conf}")
        if ctx.default_map is None:
            ctx.default_map = {}
        merge(ctx.default_map, conf.get(cli.name, {}))
        return path_pattern
