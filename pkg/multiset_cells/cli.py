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

"""The ``multiset-cells`` command line.

Machine-readable documents (JSON, DOT, tables) go to ``<stdout>`` or ``--output``.
Summaries go through the logger to ``<stderr>``, so outputs stay byte-identical
between runs.
"""

from __future__ import annotations

from gettext import gettext as _

import click
from cloup import option, option_group

from . import __version__
from .complexes import dual_graph, permutahedron, tetra_graph
from .errors import VerificationFailed
from .export import (
    composition_to_dict,
    dumps,
    graph_to_dict,
    linear_spine_to_dict,
    load_composition,
    load_multiset,
    multiset_to_dict,
    realization_to_dict,
    spine_to_dict,
    to_dot,
)
from .decorators import cells_group
from .graphs import Side
from .linear import (
    LinearComposition,
    Multiset1D,
    comp1d,
    dimension_linear,
    enumerate_linear,
    spine_linear,
)
from .logging import logger
from .parameters import LENGTHS, N_RANGE, RECTANGLE, RationalListType
from .rectangular import (
    comp2d,
    dimension_rect,
    enumerate_rect,
    maximal_elements,
    minimal_elements,
    pi_im,
    pi_re,
    random_multiset,
    spine_rect,
)
from .symmetry import cayley_graph, overlay_lr
from .tabulate import print_table
from .verify import CRITERIA, run

output_option = option(
    "-o",
    "--output",
    type=click.File("w", lazy=True),
    default="-",
    help=_("Write the document to this file instead of <stdout>."),
)

input_option = option(
    "-i",
    "--input",
    "source",
    type=click.File("r"),
    default="-",
    help=_("JSON document to read, <stdin> by default."),
)

format_option = option(
    "-f",
    "--format",
    "doc_format",
    type=click.Choice(["json", "dot"], case_sensitive=False),
    default="json",
    help=_("Document format."),
)


@cells_group(name="multiset-cells")
@click.version_option(version=__version__, prog_name="multiset-cells")
def multiset_cells():
    """Cell structure of the spaces of n-element multisets in an interval and in a
    rectangle."""


@multiset_cells.command()
@input_option
@output_option
def comp(source, output):
    """Composition labeling the cell of a multiset."""
    z = load_multiset(source.read())
    if isinstance(z, Multiset1D):
        a = comp1d(z)
        logger.info(f"{a}: n={a.n}, dimension {dimension_linear(a)}.")
    else:
        a = comp2d(z)
        logger.info(
            f"{a}: n={a.n}, projections {pi_re(a)} and {pi_im(a)}, "
            f"dimension {dimension_rect(a)}."
        )
    output.write(dumps(composition_to_dict(a)))


@multiset_cells.command()
@input_option
@output_option
@format_option
@option(
    "--lengths",
    type=LENGTHS,
    default="1,1",
    help=_("Lengths L_I,L_J of the interval sides, as exact rationals."),
)
def spine(source, output, doc_format, lengths):
    """Spine of the cell labeled by a composition."""
    a = load_composition(source.read())
    if isinstance(a, LinearComposition):
        path = spine_linear(a, lengths[0])
        logger.info(f"Spine of {a}: path with {len(path.vertices)} vertices.")
        document = (
            dumps(linear_spine_to_dict(path)) if doc_format == "json" else to_dot(path.as_graph())
        )
    else:
        grid = spine_rect(a, lengths)
        logger.info(
            f"Spine of {a}: {grid.vertex_count} vertices, {len(grid.edges)} edges, "
            f"{len(grid.faces)} faces."
        )
        document = dumps(spine_to_dict(grid)) if doc_format == "json" else to_dot(grid.as_graph())
    output.write(document)


ENUMERATORS = {
    "linear": enumerate_linear,
    "rect": enumerate_rect,
    "minimal": minimal_elements,
    "maximal": maximal_elements,
}


@multiset_cells.command(name="enumerate")
@option("-n", "--n", "n", type=click.IntRange(min=1), required=True, help=_("Number of points."))
@option(
    "--kind",
    type=click.Choice(list(ENUMERATORS), case_sensitive=False),
    default="linear",
    help=_("Family of compositions to list."),
)
@option(
    "--json/--table",
    "as_json",
    default=False,
    help=_("Emit a JSON document instead of a table."),
)
@output_option
def enumerate_command(n, kind, as_json, output):
    """List compositions of n, in canonical order."""
    elements = ENUMERATORS[kind](n)
    logger.info(f"{len(elements)} {kind} compositions for n={n}.")
    if as_json:
        output.write(
            dumps(
                {
                    "n": n,
                    "kind": kind,
                    "count": len(elements),
                    "elements": [composition_to_dict(e) for e in elements],
                }
            )
        )
        return
    dimension = dimension_linear if kind == "linear" else dimension_rect
    print_table(
        [(i, str(e), dimension(e)) for i, e in enumerate(elements, start=1)],
        headers=("#", "Composition", "Dimension"),
    )


@multiset_cells.command()
@option("-n", "--n", "n", type=click.IntRange(min=1), required=True, help=_("Number of points."))
@option(
    "--which",
    type=click.Choice(["dual", "lr", "left", "right", "tetra", "permutahedron"], case_sensitive=False),
    default="dual",
    help=_("Graph to build."),
)
@option_group(
    _("Permutahedron geometry"),
    option(
        "--basepoint",
        type=RationalListType(),
        help=_("Strictly increasing coordinates. Defaults to 1,2,…,n."),
    ),
    option(
        "--interval",
        type=RationalListType(2),
        help=_("Interval holding the basepoint. Defaults to 0,n+1."),
    ),
)
@format_option
@output_option
def graph(n, which, basepoint, interval, doc_format, output):
    """Dual graph, Cayley graphs, tetrahedral graph or permutahedron of Sym_n."""
    if which == "permutahedron":
        realization = permutahedron(
            n,
            interval or (0, n + 1),
            basepoint or tuple(range(1, n + 1)),
        )
        g = realization.as_graph()
        document = dumps(realization_to_dict(realization)) if doc_format == "json" else to_dot(g)
    else:
        g = {
            "dual": dual_graph,
            "lr": overlay_lr,
            "left": lambda size: cayley_graph(size, Side.LEFT),
            "right": lambda size: cayley_graph(size, Side.RIGHT),
            "tetra": tetra_graph,
        }[which](n)
        document = dumps(graph_to_dict(g)) if doc_format == "json" else to_dot(g)
    logger.info(f"{g.name}: {g.vertex_count} vertices, {g.edge_count} edges.")
    output.write(document)


@multiset_cells.command()
@option(
    "-n",
    "--n",
    "ns",
    type=N_RANGE,
    default="1..3",
    help=_("Values of n: 3, 1..4 or 1,2,5."),
)
@option(
    "--only",
    type=click.Choice(list(CRITERIA)),
    multiple=True,
    help=_("Run only these criteria. Repeat to select several."),
)
@option(
    "-o",
    "--output",
    type=click.File("w", lazy=True),
    help=_("Also write the JSON report to this file."),
)
def verify(ns, only, output):
    """Run the verification suite for every requested n."""
    report = run(ns, only)
    print_table(
        report.rows(), headers=("Claim", "Check", "Expected", "Actual", "Status")
    )
    if output:
        output.write(dumps(report.to_dict()))
    failures = report.failures
    logger.info(f"{len(report.checks) - len(failures)} of {len(report.checks)} checks passed.")
    if failures:
        raise VerificationFailed(
            f"{len(failures)} check(s) failed: "
            + ", ".join(sorted({c.claim for c in failures}))
        )


@multiset_cells.command(name="random")
@option("-n", "--n", "n", type=click.IntRange(min=1), required=True, help=_("Number of points."))
@option("--seed", type=int, default=0, help=_("Seed of the generator."))
@option(
    "--rect",
    type=RECTANGLE,
    default="0,1,0,1",
    help=_("Bounds x_l,x_r,y_b,y_t of the rectangle."),
)
@option(
    "--mode",
    type=click.Choice(["generic", "grid"], case_sensitive=False),
    default="generic",
    help=_("Distinct interior coordinates, or points dropped on the grid."),
)
@output_option
def random_command(n, seed, rect, mode, output):
    """Deterministic random multiset in a rectangle."""
    z = random_multiset(n, seed, rect, mode)
    logger.info(f"{z.n} points, label shape {comp2d(z).shape}.")
    output.write(dumps(multiset_to_dict(z)))


def main():
    multiset_cells()

