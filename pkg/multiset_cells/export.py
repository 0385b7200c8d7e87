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

"""JSON and DOT documents for every data type.

Rationals are written as ``"p/q"`` strings in lowest terms with ``q > 0``. Arrays are
in canonical order and no document carries timestamps, so exports are byte-identical
across runs. Reading accepts comments in JSON.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Mapping, Union

import commentjson as json

from .complexes import TETRA_EMBEDDING, FacePoset, GeometricRealization
from .errors import InputError, MultisetError
from .graphs import LabeledMultigraph
from .linear import (
    LinearComposition,
    LinearSpine,
    Multiset1D,
    parse_count,
    parse_rational,
    validate_linear,
)
from .rectangular import (
    ORIENTATION,
    Multiset2D,
    RectComposition,
    SpineComplex,
    validate_rect,
)

Composition = Union[LinearComposition, RectComposition]
Multiset = Union[Multiset1D, Multiset2D]


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def _float(value: float) -> float:
    # Avoid -0.0 in documents.
    return 0.0 if value == 0 else float(value)


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except Exception as ex:
        raise InputError(f"Malformed JSON document: {ex}") from ex


def composition_to_dict(a: Composition) -> dict[str, Any]:
    if isinstance(a, LinearComposition):
        return {"n": a.n, "entries": list(a.entries)}
    return {"n": a.n, "orientation": ORIENTATION, "matrix": [list(r) for r in a.matrix]}


def composition_from_dict(data: Mapping[str, Any]) -> Composition:
    if not isinstance(data, Mapping):
        raise InputError("A composition document is a JSON object.")
    expected = data.get("n")
    if expected is not None:
        expected = parse_count(expected)
    if "entries" in data:
        return validate_linear(data["entries"], expected)
    if "matrix" in data:
        a = validate_rect(data["matrix"])
        if expected is not None and a.n != expected:
            raise InputError(f"Matrix sums to {a.n} instead of {expected}.")
        return a
    raise InputError("A composition document has either 'entries' or 'matrix'.")


def multiset_to_dict(z: Multiset) -> dict[str, Any]:
    if isinstance(z, Multiset1D):
        return {
            "interval": [format_rational(v) for v in z.interval],
            "points": [{"x": format_rational(x), "m": m} for x, m in z.support],
        }
    x_l, x_r, y_b, y_t = z.rect
    return {
        "rect": {
            "xl": format_rational(x_l),
            "xr": format_rational(x_r),
            "yb": format_rational(y_b),
            "yt": format_rational(y_t),
        },
        "points": [
            {"x": format_rational(x), "y": format_rational(y), "m": m}
            for x, y, m in z.points
        ],
    }


def multiset_from_dict(data: Mapping[str, Any]) -> Multiset:
    try:
        points = data["points"]
        if "interval" in data:
            x_l, x_r = (parse_rational(v) for v in data["interval"])
            collected: dict[Fraction, int] = {}
            for p in points:
                x, m = parse_rational(p["x"]), parse_count(p["m"], MultisetError)
                if m < 1:
                    raise InputError(f"Nonpositive multiplicity {m} at {x}.")
                collected[x] = collected.get(x, 0) + m
            return Multiset1D((x_l, x_r), tuple(sorted(collected.items())))
        rect = data["rect"]
        return Multiset2D.build(
            (rect["xl"], rect["xr"], rect["yb"], rect["yt"]),
            ((p["x"], p["y"], p["m"]) for p in points),
        )
    except (KeyError, TypeError, ValueError) as ex:
        if isinstance(ex, InputError):
            raise
        raise InputError(f"Malformed multiset document: {ex!r}") from ex


def linear_spine_to_dict(spine: LinearSpine) -> dict[str, Any]:
    return {
        "composition": composition_to_dict(spine.composition),
        "length": format_rational(spine.length),
        "vertices": [list(v.entries) for v in spine.vertices],
        "edges": [
            {
                "from": t,
                "to": t + 1,
                "weight": w,
                "squared_length": format_rational(s),
            }
            for t, (w, s) in enumerate(zip(spine.weights, spine.squared_lengths), start=1)
        ],
    }


def spine_to_dict(spine: SpineComplex) -> dict[str, Any]:
    return {
        "composition": composition_to_dict(spine.composition),
        "lengths": [format_rational(v) for v in spine.lengths],
        "grid": [[[list(r) for r in q] for q in row] for row in spine.grid],
        "edges": [
            {
                "from": list(e.start),
                "to": list(e.end),
                "direction": e.direction.value,
                "index": e.index,
                "color": e.color,
                "weight": e.weight,
                "squared_length": format_rational(e.squared_length),
            }
            for e in spine.edges
        ],
        "faces": [list(f) for f in spine.faces],
    }


def poset_to_dict(poset: FacePoset) -> dict[str, Any]:
    return {
        "elements": [composition_to_dict(e) for e in poset.elements],
        "covers": [list(c) for c in poset.covers],
        "dims": list(poset.dims),
        "f_vector": list(poset.f_vector),
        "euler_characteristic": poset.euler_characteristic,
    }


def realization_to_dict(r: GeometricRealization) -> dict[str, Any]:
    return {
        "keys": list(r.keys),
        "vertices": [[_float(c) for c in point] for point in r.coordinates],
        "edges": [
            [u, v, label.to_dict(), format_rational(squared)]
            for u, v, label, squared in r.edges
        ],
    }


def graph_to_dict(graph: LabeledMultigraph) -> dict[str, Any]:
    data = graph.to_dict()
    if graph.name.startswith("tetra"):
        data = {"embedding": TETRA_EMBEDDING, **data}
    return data


def to_dot(graph: LabeledMultigraph) -> str:
    comment = TETRA_EMBEDDING if graph.name.startswith("tetra") else None
    return graph.to_dot(comment)


def load_composition(text: str) -> Composition:
    return composition_from_dict(loads(text))


def load_multiset(text: str) -> Multiset:
    data = loads(text)
    if not isinstance(data, Mapping):
        raise InputError("A multiset document is a JSON object.")
    return multiset_from_dict(data)


def load_graph(text: str, name: str = "G") -> LabeledMultigraph:
    data = loads(text)
    if not isinstance(data, Mapping):
        raise InputError("A graph document is a JSON object.")
    return LabeledMultigraph.from_dict(data, name)
