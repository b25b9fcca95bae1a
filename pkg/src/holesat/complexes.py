"""Merging holes, path fragments and two-paths into maximal hole complexes.

Two pieces merge when their shared nodes contain a pair that is not
adjacent in the original graph. Assembly grows one complex at a time and
tests each remaining item against the complex's accumulated node set.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, Union

from .graph import LabeledGraph
from .holes import HarvestResult, Hole, PathFragment


class ComplexInvariantError(RuntimeError):
    pass


class ItemKind(str, Enum):
    HOLE = "hole"
    FRAGMENT = "fragment"
    TWO_PATH = "two_path"


@dataclass(frozen=True)
class ComplexItem:
    kind: ItemKind
    nodes: frozenset[int]
    payload: Union[Hole, PathFragment]

    def __post_init__(self):
        if not self.nodes:
            raise ValueError("complex item with no nodes")

    def sequence(self) -> tuple[int, ...]:
        p = self.payload
        return p.cycle if isinstance(p, Hole) else p.nodes


@dataclass(frozen=True)
class HoleComplex:
    items: tuple[ComplexItem, ...]
    node_set: frozenset[int]

    @property
    def nodes(self) -> frozenset[int]:
        return self.node_set

    def to_dict(self, g: Optional[LabeledGraph] = None) -> dict:
        doc = {
            "nodes": sorted(self.node_set),
            "items": [{"kind": it.kind.value, "nodes": list(it.sequence())} for it in self.items],
        }
        if g is not None:
            doc["labels"] = [g.labels[i] for i in sorted(self.node_set)]
        return doc


COMPLEXES_SCHEMA = {
    "type": "object",
    "required": ["complexes"],
    "properties": {
        "complexes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["nodes", "items"],
                "properties": {
                    "nodes": {"type": "array", "items": {"type": "integer"}},
                    "labels": {"type": "array", "items": {"type": "string"}},
                    "items": {
                        "type": "array",
                        "minItems": 1,
                        "items": {
                            "type": "object",
                            "required": ["kind", "nodes"],
                            "properties": {
                                "kind": {"enum": [k.value for k in ItemKind]},
                                "nodes": {"type": "array", "items": {"type": "integer"}},
                            },
                        },
                    },
                },
            },
        }
    },
}


def items_from_harvest(harvest: HarvestResult, two_paths: Sequence[PathFragment] = (),
                       strict: bool = False) -> list[ComplexItem]:
    """Untouched holes become Hole items, other fragments Fragment items.

    ``strict`` drops fragments shorter than two edges.
    """
    items = []
    for frag in harvest.fragments:
        if frag.closed:
            items.append(ComplexItem(ItemKind.HOLE, frozenset(frag.nodes), harvest.holes[frag.source]))
        elif not (strict and frag.edge_count < 2):
            items.append(ComplexItem(ItemKind.FRAGMENT, frozenset(frag.nodes), frag))
    items.extend(ComplexItem(ItemKind.TWO_PATH, frozenset(p.nodes), p) for p in two_paths)
    return items


def _has_nonadjacent_pair(shared: Iterable[int], g: LabeledGraph) -> bool:
    shared = set(shared)
    for a in shared:
        if len(shared) - 1 > len(shared & g.neighbors(a)):
            return True
    return False


def mergeable(a, b, g: LabeledGraph) -> bool:
    """True iff ``a`` and ``b`` share two nodes that are not adjacent in ``g``.

    ``a`` and ``b`` are anything with a ``nodes`` set (items or complexes).
    """
    return _has_nonadjacent_pair(a.nodes & b.nodes, g)


def assemble_complexes(items: Sequence[ComplexItem], g: LabeledGraph) -> list[HoleComplex]:
    remaining = list(items)
    complexes = []
    while remaining:
        members = [remaining.pop(0)]
        nodes = set(members[0].nodes)
        grew = True
        while grew:
            grew = False
            keep = []
            for item in remaining:
                if _has_nonadjacent_pair(nodes & item.nodes, g):
                    members.append(item)
                    nodes |= item.nodes
                    grew = True
                else:
                    keep.append(item)
            remaining = keep
        complexes.append(HoleComplex(tuple(members), frozenset(nodes)))
    return complexes


def pairwise_closure(items: Sequence[ComplexItem], g: LabeledGraph) -> list[frozenset[int]]:
    """Connected components of the item-to-item merge relation.

    Independent reference for :func:`assemble_complexes`: returns the item
    index classes, ordered by smallest index.
    """
    parent = list(range(len(items)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if mergeable(items[i], items[j], g):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    classes: dict[int, set[int]] = {}
    for i in range(len(items)):
        classes.setdefault(find(i), set()).add(i)
    return [frozenset(c) for _, c in sorted(classes.items())]


def complex_containing(cs: Sequence[HoleComplex], x: int) -> Optional[HoleComplex]:
    hits = [c for c in cs if x in c.node_set]
    if len(hits) > 1:
        raise ComplexInvariantError(f"node {x} lies in {len(hits)} complexes")
    return hits[0] if hits else None
