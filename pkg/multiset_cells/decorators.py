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

"""Decorators for our group and its options."""

from functools import wraps

import cloup

from .commands import CellsGroup, TimerOption
from .config import ConfigOption
from .logging import VerbosityOption
from .tabulate import TableFormatOption


def allow_missing_parenthesis(dec_factory):
    """Allow to use decorators with or without parenthesis.

    As proposed in
    `Cloup issue #127 <https://github.com/janluke/cloup/issues/127#issuecomment-1264704896>`_.
    """

    @wraps(dec_factory)
    def new_factory(*args, **kwargs):
        if args and callable(args[0]):
            return dec_factory(*args[1:], **kwargs)(args[0])
        return dec_factory(*args, **kwargs)

    return new_factory


def decorator_factory(dec, **new_defaults):
    """Clone decorator with a set of new defaults.

    A callable ``params`` default is called on each use, so option instances are
    never shared between commands.
    """

    @allow_missing_parenthesis
    def decorator(*args, **kwargs):
        new_kwargs = new_defaults.copy()
        new_kwargs.update(kwargs)

        params_func = new_kwargs.get("params")
        if callable(params_func):
            new_kwargs["params"] = params_func()

        return dec(*args, **new_kwargs)

    return decorator


def default_cells_params():
    """Options added to ``cells_group``:

    #. ``--time`` / ``--no-time``
    #. ``-C``, ``--config CONFIG_PATH``
    #. ``-v``, ``--verbosity LEVEL``
    #. ``-t``, ``--table-format FORMAT``

    Order is important to let options at the top have influence on those below.
    """
    return [
        TimerOption(),
        ConfigOption(),
        VerbosityOption(),
        TableFormatOption(),
    ]


cells_group = decorator_factory(
    dec=cloup.group, cls=CellsGroup, params=default_cells_params
)

config_option = decorator_factory(dec=cloup.option, cls=ConfigOption)
table_format_option = decorator_factory(dec=cloup.option, cls=TableFormatOption)
timer_option = decorator_factory(dec=cloup.option, cls=TimerOption)
verbosity_option = decorator_factory(dec=cloup.option, cls=VerbosityOption)
