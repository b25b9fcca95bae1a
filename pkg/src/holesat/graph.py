"""Undirected graph with labeled nodes and colored edges, plus DOT/JSON IO.

Node ids are dense integers handed out in insertion order. Edge color is
provenance only: adjacency queries never look at it.
"""

from __future__ import annotations

import json
from enum import Enum
from typing import Iterable, Iterator, Sequence

import jsonschema


class GraphError(ValueError):
    pass


class EdgeColor(str, Enum):
    BLUE = "blue"
    RED = "red"
    FILL = "fill"


_DOT_STYLE = {
    EdgeColor.BLUE: "color=blue",
    EdgeColor.RED: "color=red, penwidth=2",
    EdgeColor.FILL: "color=green",
}

GRAPH_SCHEMA = {
    "type": "object",
    "required": ["nodes", "edges"],
    "additionalProperties": False,
    "properties": {
        "nodes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "label"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "integer", "minimum": 0},
                    "label": {"type": "string"},
                },
            },
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["a", "b", "color"],
                "additionalProperties": False,
                "properties": {
                    "a": {"type": "integer", "minimum": 0},
                    "b": {"type": "integer", "minimum": 0},
                    "color": {"enum": [c.value for c in EdgeColor]},
                },
            },
        },
    },
}


def _key(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


class LabeledGraph:
    def __init__(self):
        self.labels: list[str] = []
        self._index: dict[str, int] = {}
        self._adj: list[set[int]] = []
        self._colors: dict[tuple[int, int], EdgeColor] = {}

    def add_node(self, label: str) -> int:
        if label in self._index:
            raise GraphError(f"duplicate label {label!r}")
        node = len(self.labels)
        self.labels.append(label)
        self._index[label] = node
        self._adj.append(set())
        return node

    def add_edge(self, a: int, b: int, color: EdgeColor = EdgeColor.BLUE) -> None:
        self._check(a)
        self._check(b)
        if a == b:
            raise GraphError(f"self-loop at node {a}")
        key = _key(a, b)
        if key in self._colors:
            raise GraphError(f"parallel edge {key}")
        self._colors[key] = EdgeColor(color)
        self._adj[a].add(b)
        self._adj[b].add(a)

    def _check(self, a: int) -> None:
        if not (isinstance(a, int) and 0 <= a < len(self.labels)):
            raise GraphError(f"invalid node id {a!r}")

    def node(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise GraphError(f"unknown label {label!r}") from None

    def has_edge(self, a: int, b: int) -> bool:
        return b in self._adj[a]

    def edge_color(self, a: int, b: int) -> EdgeColor:
        try:
            return self._colors[_key(a, b)]
        except KeyError:
            raise GraphError(f"no edge between {a} and {b}") from None

    def neighbors(self, a: int) -> set[int]:
        return self._adj[a]

    def degree(self, a: int) -> int:
        return len(self._adj[a])

    def nodes(self) -> range:
        return range(len(self.labels))

    def edges(self) -> list[tuple[int, int, EdgeColor]]:
        """All edges as ``(a, b, color)`` with ``a < b``, sorted."""
        return [(a, b, c) for (a, b), c in sorted(self._colors.items())]

    @property
    def node_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return len(self._colors)

    def adjacency_lists(self) -> list[list[int]]:
        """Sorted neighbor lists, the input format of the search kernels."""
        return [sorted(s) for s in self._adj]

    def copy(self) -> "LabeledGraph":
        g = LabeledGraph()
        g.labels = list(self.labels)
        g._index = dict(self._index)
        g._adj = [set(s) for s in self._adj]
        g._colors = dict(self._colors)
        return g

    def without_color(self, color: EdgeColor) -> "LabeledGraph":
        g = LabeledGraph()
        for label in self.labels:
            g.add_node(label)
        for a, b, c in self.edges():
            if c is not color:
                g.add_edge(a, b, c)
        return g

    def is_connected(self) -> bool:
        if not self.labels:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for b in self._adj[stack.pop()]:
                if b not in seen:
                    seen.add(b)
                    stack.append(b)
        return len(seen) == len(self.labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self.labels == other.labels and self._colors == other._colors

    def __repr__(self) -> str:
        return f"LabeledGraph(nodes={self.node_count}, edges={self.edge_count})"


def from_edges(edges: Iterable[tuple], labels: Sequence[str] = None,
               color: EdgeColor = EdgeColor.BLUE) -> LabeledGraph:
    """Build a graph from an edge list over node labels (or ints).

    Nodes are created in ``labels`` order if given, else in first-seen order.
    """
    g = LabeledGraph()
    for label in labels or ():
        g.add_node(str(label))
    for a, b in edges:
        ids = []
        for x in (str(a), str(b)):
            ids.append(g._index[x] if x in g._index else g.add_node(x))
        g.add_edge(ids[0], ids[1], color)
    return g


def are_adjacent(g: LabeledGraph, a: int, b: int) -> bool:
    g._check(a)
    g._check(b)
    return g.has_edge(a, b)


def is_chordless_cycle(g: LabeledGraph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` (cyclically) is an induced cycle of ``g``."""
    k = len(seq)
    if k < 4:
        raise GraphError(f"a hole needs at least 4 nodes, got {k}")
    if len(set(seq)) != k:
        raise GraphError("duplicate node in cycle sequence")
    for a in seq:
        g._check(a)
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(seq[i], seq[j]) != consecutive:
                return False
    return True


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate the smallest node to the front, then head toward its smaller neighbor."""
    k = len(seq)
    i = min(range(k), key=seq.__getitem__)
    forward = tuple(seq[(i + s) % k] for s in range(k))
    if k > 2 and forward[-1] < forward[1]:
        return (forward[0],) + forward[:0:-1]
    return forward


def _dot_id(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: LabeledGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for label in g.labels:
        lines.append(f"  {_dot_id(label)};")
    for a, b, color in g.edges():
        lines.append(f"  {_dot_id(g.labels[a])} -- {_dot_id(g.labels[b])} [{_DOT_STYLE[color]}];")
    lines.append("}")
    if len(lines) == 2:
        return f"graph {name} {{ }}\n"
    return "\n".join(lines) + "\n"


def graph_to_dict(g: LabeledGraph) -> dict:
    return {
        "nodes": [{"id": i, "label": label} for i, label in enumerate(g.labels)],
        "edges": [{"a": a, "b": b, "color": c.value} for a, b, c in g.edges()],
    }


def to_json(g: LabeledGraph) -> str:
    return json.dumps(graph_to_dict(g), indent=1) + "\n"


def graph_from_dict(doc) -> LabeledGraph:
    try:
        jsonschema.validate(doc, GRAPH_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise GraphError(f"malformed graph document: {exc.message}") from None
    nodes = sorted(doc["nodes"], key=lambda n: n["id"])
    if [n["id"] for n in nodes] != list(range(len(nodes))):
        raise GraphError("node ids must be exactly 0..N-1")
    g = LabeledGraph()
    for n in nodes:
        g.add_node(n["label"])
    for e in sorted(doc["edges"], key=lambda e: _key(e["a"], e["b"])):
        g.add_edge(e["a"], e["b"], EdgeColor(e["color"]))
    return g


def from_json(text: str) -> LabeledGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed graph document: {exc}") from None
    return graph_from_dict(doc)


def iter_cycle_edges(seq: Sequence[int]) -> Iterator[tuple[int, int]]:
    k = len(seq)
    for i in range(k):
        yield seq[i], seq[(i + 1) % k]
