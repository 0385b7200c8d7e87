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

"""Undirected labeled multigraphs with a canonical form.

Cayley graphs, dual graphs, spines and the tetrahedral graph are all carried by
:py:class:`LabeledMultigraph`. Two graphs built in different orders compare equal and
serialize to the same bytes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Iterable, Mapping, Sequence, Tuple

import networkx as nx
from networkx.algorithms import isomorphism

from .errors import InputError


class Side(Enum):
    """Tag of an edge: which generator family, or which merge direction, produced it."""

    LEFT = "Left"
    RIGHT = "Right"
    ROW = "Row"
    COL = "Col"

    @property
    def prefix(self) -> str:
        """Short prefix used in DOT labels, i.e. ``L1``, ``R2``, ``Row1``."""
        return {"Left": "L", "Right": "R"}.get(self.value, self.value)


@dataclass(frozen=True)
class EdgeLabel:
    side: Side
    index: int
    color: str = ""

    @property
    def sort_key(self) -> tuple[str, int, str]:
        return self.side.value, self.index, self.color

    @property
    def dot_label(self) -> str:
        return f"{self.side.prefix}{self.index}"

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"side": self.side.value, "index": self.index}
        if self.color:
            data["color"] = self.color
        return data

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> EdgeLabel:
        try:
            return cls(Side(data["side"]), int(data["index"]), data.get("color", ""))
        except (KeyError, TypeError, ValueError) as ex:
            raise InputError(f"Malformed edge label {data!r}.") from ex


Edge = Tuple[str, str, EdgeLabel]


def vertex_sort_key(key: str) -> tuple:
    """Order vertex keys made of comma-separated integers numerically.

    ``"10,2"`` then sorts after ``"9,1"``. Any other key falls back to plain string
    ordering, after all numeric ones.
    """
    parts = key.split(",")
    try:
        return (0, tuple(int(p) for p in parts))
    except ValueError:
        return (1, key)


@dataclass(frozen=True)
class LabeledMultigraph:
    """Undirected multigraph, parallel edges allowed, in canonical order.

    Build instances with :py:meth:`build`, which sorts vertices, orients every edge
    from its smaller endpoint and sorts the edge list.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    positions: Mapping[str, tuple] = field(default_factory=dict, compare=False)
    name: str = field(default="G", compare=False)

    @classmethod
    def build(
        cls,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str, EdgeLabel]],
        positions: Mapping[str, Sequence] | None = None,
        name: str = "G",
    ) -> LabeledMultigraph:
        vertex_list = sorted(set(vertices), key=vertex_sort_key)
        known = set(vertex_list)
        canonical = []
        for u, v, label in edges:
            if u not in known or v not in known:
                raise InputError(f"Edge {u!r} -- {v!r} has an unlisted endpoint.")
            if vertex_sort_key(v) < vertex_sort_key(u):
                u, v = v, u
            canonical.append((u, v, label))
        canonical.sort(
            key=lambda e: (vertex_sort_key(e[0]), vertex_sort_key(e[1]), e[2].sort_key)
        )
        return cls(
            vertices=tuple(vertex_list),
            edges=tuple(canonical),
            positions={k: tuple(p) for k, p in (positions or {}).items()},
            name=name,
        )

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, vertex: str) -> int:
        """Degree of ``vertex``, counting parallel edges."""
        return sum((u == vertex) + (v == vertex) for u, v, _ in self.edges)

    def label_counts(self) -> Counter:
        return Counter(label.side for _, _, label in self.edges)

    def relabel(self, mapping: Callable[[EdgeLabel], EdgeLabel]) -> LabeledMultigraph:
        """Returns a copy whose edge labels went through ``mapping``."""
        return LabeledMultigraph.build(
            self.vertices,
            ((u, v, mapping(label)) for u, v, label in self.edges),
            self.positions,
            self.name,
        )

    def induced(self, keep: Iterable[str]) -> LabeledMultigraph:
        """Sub-graph induced by the ``keep`` vertices."""
        kept = set(keep) & set(self.vertices)
        return LabeledMultigraph.build(
            kept,
            (e for e in self.edges if e[0] in kept and e[1] in kept),
            {k: p for k, p in self.positions.items() if k in kept},
            self.name,
        )

    def discrepancy(self, other: LabeledMultigraph) -> str | None:
        """Describe the first difference with ``other``, or ``None`` if equal."""
        if self.vertices != other.vertices:
            missing = sorted(set(other.vertices) - set(self.vertices))
            extra = sorted(set(self.vertices) - set(other.vertices))
            return f"vertex sets differ: missing {missing[:3]}, extra {extra[:3]}"
        mine, theirs = Counter(self.edges), Counter(other.edges)
        for edge in self.edges + other.edges:
            if mine[edge] != theirs[edge]:
                u, v, label = edge
                return (
                    f"edge {u} -- {v} [{label.dot_label}] appears {mine[edge]} "
                    f"time(s) versus {theirs[edge]}"
                )
        return None

    def contains(
        self,
        other: LabeledMultigraph,
        key: Callable[[EdgeLabel], Any] = lambda label: label.color,
    ) -> bool:
        """Is ``other`` a sub-graph of this graph?

        Edges are compared on their endpoints plus ``key(label)``, by default the
        color only, so graphs labeled by different generator families can be matched.
        """
        if not set(other.vertices) <= set(self.vertices):
            return False
        available = Counter((u, v, key(label)) for u, v, label in self.edges)
        needed = Counter((u, v, key(label)) for u, v, label in other.edges)
        return all(available[e] >= count for e, count in needed.items())

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph(name=self.name)
        graph.add_nodes_from(self.vertices)
        for u, v, label in self.edges:
            graph.add_edge(u, v, label=label.dot_label, color=label.color)
        return graph

    def is_isomorphic(self, other: LabeledMultigraph, match_labels: bool = True) -> bool:
        """Graph isomorphism, up to vertex renaming, through ``networkx``.

        With ``match_labels``, parallel edge bundles must carry the same multiset of
        labels on both sides.
        """
        edge_match = (
            isomorphism.categorical_multiedge_match("label", None)
            if match_labels
            else None
        )
        return nx.is_isomorphic(
            self.to_networkx(), other.to_networkx(), edge_match=edge_match
        )

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "vertices": list(self.vertices),
            "edges": [[u, v, label.to_dict()] for u, v, label in self.edges],
        }
        if self.positions:
            data["positions"] = {
                k: list(self.positions[k]) for k in self.vertices if k in self.positions
            }
        return data

    @classmethod
    def from_dict(cls, data: Mapping[str, Any], name: str = "G") -> LabeledMultigraph:
        try:
            edges = [(u, v, EdgeLabel.from_dict(label)) for u, v, label in data["edges"]]
            return cls.build(data["vertices"], edges, data.get("positions"), name)
        except (KeyError, TypeError, ValueError) as ex:
            if isinstance(ex, InputError):
                raise
            raise InputError(f"Malformed graph document: {ex}") from ex

    def to_dot(self, comment: str | None = None) -> str:
        """Render as an undirected Graphviz document, one line per parallel edge."""
        lines = []
        if comment:
            lines.extend(f"// {line}" for line in comment.splitlines())
        lines.append(f"graph {self.name} {{")
        for vertex in self.vertices:
            attrs = ""
            if vertex in self.positions:
                coords = ",".join(_dot_number(c) for c in self.positions[vertex])
                attrs = f' [pos="{coords}"]'
            lines.append(f'    "{vertex}"{attrs};')
        for u, v, label in self.edges:
            attrs = [f'label="{label.dot_label}"']
            if label.color:
                attrs.append(f'color="{label.color}"')
            lines.append(f'    "{u}" -- "{v}" [{", ".join(attrs)}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _dot_number(value: Any) -> str:
    if isinstance(value, float):
        return repr(0.0 if value == 0 else round(value, 12))
    return str(value)
