"""Hole detection and the fill-and-harvest loop.

A hole is a chordless cycle on at least four nodes. Harvesting repeatedly
finds a hole, records it and turns its node set into a clique with
``Fill`` edges, until the working copy is hole-free.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from . import kernels
from .graph import EdgeColor, GraphError, LabeledGraph, canonical_cycle, is_chordless_cycle

log = logging.getLogger(__name__)


class HoleError(ValueError):
    pass


@dataclass(frozen=True)
class Hole:
    cycle: tuple[int, ...]

    def __post_init__(self):
        if len(self.cycle) < 4:
            raise HoleError(f"a hole has at least 4 nodes, got {len(self.cycle)}")
        object.__setattr__(self, "cycle", canonical_cycle(tuple(self.cycle)))

    @property
    def nodes(self) -> frozenset[int]:
        return frozenset(self.cycle)

    def __len__(self) -> int:
        return len(self.cycle)

    def edges(self) -> list[tuple[int, int]]:
        k = len(self.cycle)
        return [(self.cycle[i], self.cycle[(i + 1) % k]) for i in range(k)]


@dataclass(frozen=True)
class PathFragment:
    """A simple path of original edges, or a whole untouched hole if ``closed``.

    ``source`` is the index of the harvested hole it came from, or -1 for
    two-paths found by :func:`find_two_paths`.
    """

    nodes: tuple[int, ...]
    closed: bool = False
    source: int = -1

    @property
    def edge_count(self) -> int:
        return len(self.nodes) if self.closed else len(self.nodes) - 1

    @property
    def single_edge(self) -> bool:
        return self.edge_count == 1


@dataclass
class HarvestResult:
    holes: list[Hole] = field(default_factory=list)
    fragments: list[PathFragment] = field(default_factory=list)
    fill_edges_added: int = 0
    iterations: int = 0
    fills_per_hole: list[int] = field(default_factory=list)

    def to_dict(self, g: Optional[LabeledGraph] = None) -> dict:
        doc = {
            "holes": [list(h.cycle) for h in self.holes],
            "fragments": [
                {"nodes": list(p.nodes), "closed": p.closed, "source": p.source}
                for p in self.fragments
            ],
            "fill_edges_added": self.fill_edges_added,
            "iterations": self.iterations,
        }
        if g is not None:
            doc["hole_labels"] = [[g.labels[i] for i in h.cycle] for h in self.holes]
        return doc


HARVEST_SCHEMA = {
    "type": "object",
    "required": ["holes", "fragments", "fill_edges_added", "iterations"],
    "properties": {
        "holes": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}, "minItems": 4}},
        "fragments": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["nodes", "closed", "source"],
                "properties": {
                    "nodes": {"type": "array", "items": {"type": "integer"}, "minItems": 2},
                    "closed": {"type": "boolean"},
                    "source": {"type": "integer"},
                },
            },
        },
        "two_paths": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}, "minItems": 3, "maxItems": 3}},
        "fill_edges_added": {"type": "integer", "minimum": 0},
        "iterations": {"type": "integer", "minimum": 0},
        "hole_labels": {"type": "array"},
    },
}


def find_hole(g: LabeledGraph) -> Optional[Hole]:
    """Shortest hole through the lowest-numbered node that lies on a hole."""
    cycle = kernels.shortest_hole(g.adjacency_lists())
    return None if cycle is None else Hole(tuple(cycle))


def fill_hole(g: LabeledGraph, h: Hole) -> set[tuple[int, int]]:
    """Add every missing pair among the hole's nodes as a Fill edge."""
    if not is_chordless_cycle(g, h.cycle):
        raise HoleError(f"{h.cycle} is not a hole of this graph")
    nodes = sorted(h.cycle)
    added = set()
    for i, a in enumerate(nodes):
        for b in nodes[i + 1:]:
            if not g.has_edge(a, b):
                g.add_edge(a, b, EdgeColor.FILL)
                added.add((a, b))
    return added


def _is_original(original: LabeledGraph, a: int, b: int) -> bool:
    return original.has_edge(a, b) and original.edge_color(a, b) is not EdgeColor.FILL


def strip_fill(h: Hole, original: LabeledGraph, source: int = -1) -> list[PathFragment]:
    """Split a hole at its non-original edges into maximal original runs."""
    cycle = h.cycle
    k = len(cycle)
    keep = [_is_original(original, cycle[i], cycle[(i + 1) % k]) for i in range(k)]
    if all(keep):
        return [PathFragment(cycle, closed=True, source=source)]
    # keep[i] describes edge cycle[i] -- cycle[i+1]; start just after a dropped edge
    start = next(i for i in range(k) if not keep[i]) + 1
    fragments = []
    run = [cycle[start % k]]
    for s in range(k):
        i = (start + s) % k
        nxt = cycle[(i + 1) % k]
        if keep[i]:
            run.append(nxt)
        else:
            if len(run) > 1:
                fragments.append(PathFragment(tuple(run), source=source))
            run = [nxt]
    return fragments


def harvest_holes(g: LabeledGraph) -> HarvestResult:
    if any(c is EdgeColor.FILL for _, _, c in g.edges()):
        raise GraphError("harvest_holes expects a graph without Fill edges")
    work = g.copy()
    limit = g.node_count * (g.node_count - 1) // 2
    result = HarvestResult()
    while True:
        h = find_hole(work)
        if h is None:
            break
        result.iterations += 1
        assert result.iterations <= limit, "harvest did not terminate within V(V-1)/2 fills"
        assert is_chordless_cycle(work, h.cycle), f"recorded non-hole {h.cycle}"
        index = len(result.holes)
        result.holes.append(h)
        result.fragments.extend(strip_fill(h, g, source=index))
        added = fill_hole(work, h)
        result.fills_per_hole.append(sum(1 for a, b in h.edges() if not _is_original(g, a, b)))
        result.fill_edges_added += len(added)
    log.debug("harvest: %d holes, %d fill edges", len(result.holes), result.fill_edges_added)
    return result


def find_two_paths(g: LabeledGraph) -> list[PathFragment]:
    """Paths a-b-c with a, c non-adjacent and both of degree > 2.

    The middle node's degree is unconstrained. Oriented with a < c and
    sorted by ``(a, b, c)``.
    """
    found = []
    for b in g.nodes():
        nbrs = sorted(x for x in g.neighbors(b) if g.degree(x) > 2)
        for i, a in enumerate(nbrs):
            for c in nbrs[i + 1:]:
                if not g.has_edge(a, c):
                    found.append((a, b, c))
    return [PathFragment(p) for p in sorted(found)]
