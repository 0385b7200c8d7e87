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

"""Exhaustive small-``n`` verification suite.

Each criterion is a function producing :py:class:`Check` records, registered under a
claim id in :py:data:`CRITERIA`. Criteria depending on ``n`` run once per requested
value and refuse values above their own bound. The others run once per suite.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Any, Callable, Iterable, Iterator, Sequence

from .complexes import (
    DUAL_LIMIT,
    TETRA_LIMIT,
    TOLERANCE,
    downward_closure,
    dual_graph,
    face_poset_linear,
    face_poset_rect,
    is_cycle,
    lower_set,
    permutahedron,
    realize_biorthoscheme,
    realize_orthoscheme,
    tetra_boundary,
    tetra_graph,
    verify_dual_graph,
)
from .errors import InputError, guard
from .export import (
    dumps,
    format_rational,
    multiset_to_dict,
    poset_to_dict,
    realization_to_dict,
    spine_to_dict,
    to_dot,
)
from .graphs import Side
from .linear import (
    LINEAR_LIMIT,
    LinearComposition,
    Multiset1D,
    comp1d,
    enumerate_linear,
    from_cutset,
    leq_linear,
    lower_covers_linear,
    spine_linear,
    to_cutset,
)
from .logging import logger
from .rectangular import (
    BRUTE_FORCE_LIMIT,
    MAXIMAL_LIMIT,
    PREIMAGE_LIMIT,
    RECT_LIMIT,
    RectComposition,
    brute_force_rect,
    count_preimages,
    enumerate_rect,
    maximal_elements,
    minimal_elements,
    pi_im,
    pi_re,
    placement_labels,
    random_multiset,
    spine_rect,
)
from .symmetry import Permutation, cayley_graph

LEQ_ORACLE_LIMIT = 6
"""Largest ``n`` for which the linear order is compared on every pair."""

PRISM = RectComposition.from_rows([[0, 2, 1, 0], [0, 3, 2, 1], [0, 0, 5, 2]])
"""Cell with projections ``[3 6 7]`` and ``[0 5 8 3]``: a triangle times a segment."""

GENERIC = RectComposition.padded(Permutation((2, 3, 1, 4)))
"""Top cell of four points in general position, as a ``6×6`` matrix."""

SPINE_EXAMPLE = Multiset1D.from_points(
    (0, 4), [0, 0, 0, 1, 1, 1, 1, 2, 3, 3, 4]
)
"""Three points at the left end, then 4, 1 and 2 inside, and one at the right end."""


def _plain(value: Any) -> Any:
    """JSON-friendly copy of ``value``."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, float):
        return 0.0 if value == 0 else value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return str(value)


@dataclass(frozen=True)
class Check:
    claim: str
    description: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "description": self.description,
            "expected": _plain(self.expected),
            "actual": _plain(self.actual),
            "passed": self.passed,
        }

    def row(self) -> list[str]:
        status = "pass" if self.passed else "FAIL"
        return [self.claim, self.description, str(self.expected), str(self.actual), status]


@dataclass
class RunReport:
    """Outcome of a CLI command: parsed inputs, structured results and checks."""

    command: str
    inputs: dict[str, Any] = field(default_factory=dict)
    results: dict[str, Any] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "inputs": _plain(self.inputs),
            "results": _plain(self.results),
            "checks": [c.to_dict() for c in self.checks],
            "passed": self.passed,
        }

    def rows(self) -> list[list[str]]:
        return [c.row() for c in self.checks]


def _merge_reachable(b: LinearComposition) -> set:
    return downward_closure([b], lower_covers_linear)


def check_linear_poset(n: int) -> Iterator[Check]:
    claim = "linear.poset"
    elements = enumerate_linear(n)
    yield Check(claim, f"n={n}: number of linear compositions", 2 ** (n + 1) - 1, len(elements))
    yield Check(
        claim,
        f"n={n}: f-vector of the orthoscheme",
        tuple(comb(n + 1, d + 1) for d in range(n + 1)),
        face_poset_linear(n).f_vector,
    )
    yield Check(
        claim,
        f"n={n}: cut sets biject with compositions",
        len(elements),
        len({from_cutset(to_cutset(a)) for a in elements}),
    )
    if n <= LEQ_ORACLE_LIMIT:
        below = {b: _merge_reachable(b) for b in elements}
        disagreements = sum(
            leq_linear(a, b) != (a in below[b]) for a in elements for b in elements
        )
        yield Check(claim, f"n={n}: order disagreements with merge reachability", 0, disagreements)


def check_spine_example() -> Iterator[Check]:
    claim = "linear.spine"
    a = comp1d(SPINE_EXAMPLE)
    spine = spine_linear(a)
    yield Check(claim, "composition of the multiset", "[3 4 1 2 1]", str(a))
    yield Check(
        claim,
        "spine vertices",
        ["[3 8]", "[7 4]", "[8 3]", "[10 1]"],
        [str(v) for v in spine.vertices],
    )
    yield Check(claim, "squared edge lengths", (4, 1, 2), spine.squared_lengths)
    yield Check(
        claim,
        "coordinate lengths match declared ones",
        [],
        realize_orthoscheme(a).distance_errors(),
    )


def check_face_poset(n: int) -> Iterator[Check]:
    claim = "rect.face-poset"
    poset = face_poset_rect(n)
    if n == 1:
        yield Check(claim, "n=1: f-vector of the rectangle", (4, 4, 1), poset.f_vector)
    yield Check(claim, f"n={n}: Euler characteristic", 1, poset.euler_characteristic)
    yield Check(claim, f"n={n}: covers drop dimension by one", True, poset.is_graded())
    yield Check(claim, f"n={n}: top dimension", 2 * n, poset.top_dimension)
    yield Check(claim, f"n={n}: top cells", factorial(n), poset.f_vector[-1])
    yield Check(claim, f"n={n}: all compositions are faces", len(enumerate_rect(n)), len(poset))

    codim_one = [i for i, d in enumerate(poset.dims) if d == 2 * n - 1]
    parents = Counter(len(poset.upper_covers(i)) for i in codim_one)
    yield Check(claim, f"n={n}: codimension-1 faces with one or two parents", True, set(parents) <= {1, 2})
    yield Check(
        claim,
        f"n={n}: codimension-1 faces with two parents",
        factorial(n) * (n - 1),
        parents[2],
    )

    if n <= BRUTE_FORCE_LIMIT:
        brute = Counter(a.h + a.k for a in brute_force_rect(n))
        yield Check(
            claim,
            f"n={n}: f-vector against brute force",
            poset.f_vector,
            tuple(brute[d] for d in range(max(brute) + 1)),
        )


def check_dual_graph(n: int) -> Iterator[Check]:
    claim = "dual-graph"
    report = verify_dual_graph(n)
    yield Check(claim, f"n={n}: dual graph equals the Cayley overlay", None, report.discrepancy)
    yield Check(claim, f"n={n}: vertices", factorial(n), report.dual.vertex_count)
    yield Check(claim, f"n={n}: edges", factorial(n) * (n - 1), report.dual.edge_count)


def check_counts(n: int) -> Iterator[Check]:
    claim = "counts"
    yield Check(claim, f"n={n}: maximal elements", factorial(n), len(maximal_elements(n)))
    yield Check(claim, f"n={n}: minimal elements", comb(n + 3, 3), len(minimal_elements(n)))


def check_preimages(n: int) -> Iterator[Check]:
    claim = "preimages"
    unit = LinearComposition.unit(n)
    yield Check(claim, f"n={n}: preimages of generic projections", factorial(n), count_preimages(unit, unit))
    if n <= RECT_LIMIT:
        placed = placement_labels(n + 2, n + 2, n)
        linear = enumerate_linear(n)
        mismatches = sum(
            count_preimages(xc, yc) != placed[(xc, yc)] for xc in linear for yc in linear
        )
        yield Check(claim, f"n={n}: margins disagreeing with placements", 0, mismatches)
        yield Check(
            claim,
            f"n={n}: labels reached by placements",
            len(enumerate_rect(n)),
            sum(placed.values()),
        )


def check_prism() -> Iterator[Check]:
    claim = "prism"
    spine = spine_rect(PRISM)
    yield Check(claim, "projections", ("[3 6 7]", "[0 5 8 3]"), (str(pi_re(PRISM)), str(pi_im(PRISM))))
    yield Check(
        claim,
        "spine vertices, edges and faces",
        (6, 7, 2),
        (spine.vertex_count, len(spine.edges), len(spine.faces)),
    )
    yield Check(
        claim,
        "squared spine edge lengths",
        [5, 6, 8],
        sorted({int(e.squared_length) for e in spine.edges}),
    )
    cell = lower_set(PRISM)
    yield Check(claim, "faces of the cell", 21, len(cell))
    yield Check(claim, "f-vector of the cell", (6, 9, 5, 1), cell.f_vector)
    full = realize_biorthoscheme(PRISM, full_skeleton=True)
    yield Check(claim, "coordinate lengths match declared ones", [], full.distance_errors())
    yield Check(
        claim,
        "squared lengths of the full 1-skeleton",
        [5, 6, 8, 13],
        sorted({int(squared) for *_, squared in full.edges}),
    )


def _permutahedron(n: int):
    return permutahedron(n, (0, n + 1), tuple(range(1, n + 1)))


def check_permutahedron_example() -> Iterator[Check]:
    claim = "permutahedron"
    hexagon = permutahedron(3, (0, 4), (1, 2, 3))
    sums = hexagon.coordinate_sums()
    yield Check(claim, "hexagon vertices", 6, len(hexagon.keys))
    yield Check(
        claim,
        "vertices on x+y+z=6",
        True,
        bool(all(abs(s - 6) <= TOLERANCE for s in sums)),
    )
    yield Check(
        claim,
        "edges of length sqrt(2)",
        [2.0] * 6,
        [round(float(d), 9) for d in hexagon.squared_distances()],
    )
    yield Check(
        claim,
        "1-skeleton isomorphic to the right Cayley graph",
        True,
        hexagon.as_graph().is_isomorphic(cayley_graph(3, Side.RIGHT)),
    )


def check_permutahedron(n: int) -> Iterator[Check]:
    claim = "permutahedron"
    realization = _permutahedron(n)
    yield Check(
        claim,
        f"n={n}: 1-skeleton equals the right Cayley graph",
        None,
        realization.as_graph().discrepancy(cayley_graph(n, Side.RIGHT)),
    )
    yield Check(claim, f"n={n}: coordinate lengths match declared ones", [], realization.distance_errors())


def check_tetra(n: int) -> Iterator[Check]:
    claim = "tetra"
    graph = tetra_graph(n)
    boundary = tetra_boundary(graph)
    yield Check(claim, f"n={n}: vertices", comb(n + 3, 3), graph.vertex_count)
    yield Check(
        claim,
        f"n={n}: boundary cycle vertices and edges",
        (4 * n, 4 * n),
        (boundary.vertex_count, boundary.edge_count),
    )
    yield Check(claim, f"n={n}: boundary is a cycle", True, is_cycle(boundary))
    spines = [spine_rect(top).as_graph() for top in maximal_elements(n)]
    yield Check(
        claim,
        f"n={n}: top spines lying in the graph",
        len(spines),
        sum(graph.contains(s) for s in spines),
    )
    yield Check(
        claim,
        f"n={n}: top spines around the boundary cycle",
        len(spines),
        sum(s.contains(boundary) for s in spines),
    )


def check_tetra_example() -> Iterator[Check]:
    claim = "tetra"
    spine = spine_rect(GENERIC)
    yield Check(
        claim,
        "generic spine lies in the n=4 graph",
        True,
        tetra_graph(4).contains(spine.as_graph()),
    )
    p = GENERIC.permutation()
    yield Check(
        claim,
        "four-colored squares sit on the 1 entries",
        [(i, p.image[i - 1]) for i in range(1, p.n + 1)],
        spine.four_colored_faces(),
    )


def _exports() -> list[str]:
    return [
        dumps(poset_to_dict(face_poset_rect(2))),
        to_dot(dual_graph(3)),
        dumps(spine_to_dict(spine_rect(PRISM))),
        dumps(realization_to_dict(realize_biorthoscheme(PRISM))),
        dumps(multiset_to_dict(random_multiset(4, seed=7))),
    ]


def check_determinism() -> Iterator[Check]:
    first, second = _exports(), _exports()
    yield Check(
        "determinism",
        "exports are byte-identical across runs",
        len(first),
        sum(a == b for a, b in zip(first, second)),
    )


@dataclass(frozen=True)
class Criterion:
    claim: str
    description: str
    per_n: Callable[[int], Iterable[Check]] | None = None
    once: Callable[[], Iterable[Check]] | None = None
    limit: int | None = None


CRITERIA: dict[str, Criterion] = {
    c.claim: c
    for c in (
        Criterion(
            "linear.poset",
            "linear compositions form the orthoscheme face poset",
            per_n=check_linear_poset,
            limit=LINEAR_LIMIT,
        ),
        Criterion("linear.spine", "worked spine example", once=check_spine_example),
        Criterion(
            "rect.face-poset",
            "rectangular compositions form the face poset",
            per_n=check_face_poset,
            limit=RECT_LIMIT,
        ),
        Criterion(
            "dual-graph",
            "dual graph is the left-right Cayley overlay",
            per_n=check_dual_graph,
            limit=DUAL_LIMIT,
        ),
        Criterion(
            "counts",
            "maximal and minimal element counts",
            per_n=check_counts,
            limit=MAXIMAL_LIMIT,
        ),
        Criterion(
            "preimages",
            "preimage counts of projection pairs",
            per_n=check_preimages,
            limit=PREIMAGE_LIMIT,
        ),
        Criterion("prism", "triangular prism cell", once=check_prism),
        Criterion(
            "permutahedron",
            "permutahedron geometry",
            per_n=check_permutahedron,
            once=check_permutahedron_example,
            limit=MAXIMAL_LIMIT,
        ),
        Criterion(
            "tetra",
            "tetrahedral graph of minimal elements",
            per_n=check_tetra,
            once=check_tetra_example,
            limit=TETRA_LIMIT,
        ),
        Criterion("determinism", "byte-identical exports", once=check_determinism),
    )
}


def select(only: Sequence[str] = ()) -> list[Criterion]:
    unknown = sorted(set(only) - set(CRITERIA))
    if unknown:
        raise InputError(
            f"Unknown criteria {unknown}. Choose among: {', '.join(CRITERIA)}."
        )
    return [c for claim, c in CRITERIA.items() if not only or claim in only]


def run(ns: Sequence[int], only: Sequence[str] = ()) -> RunReport:
    """Run the selected criteria for every ``n`` in ``ns``.

    Every bound is checked before anything runs, so a refused range does no work.
    """
    criteria = select(only)
    ns = sorted(set(ns))
    if any(n < 1 for n in ns):
        raise InputError("Verification needs n >= 1.")
    for criterion in criteria:
        if criterion.per_n and criterion.limit is not None and ns:
            guard(criterion.claim, ns[-1], criterion.limit)

    report = RunReport(
        "verify", inputs={"n": list(ns), "only": [c.claim for c in criteria]}
    )
    for criterion in criteria:
        logger.debug(f"Run {criterion.claim}: {criterion.description}.")
        if criterion.once:
            report.checks.extend(criterion.once())
        if criterion.per_n:
            for n in ns:
                report.checks.extend(criterion.per_n(n))
    report.results = {
        "checks": len(report.checks),
        "failures": len(report.failures),
    }
    return report
