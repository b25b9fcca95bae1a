"""Bienstock's graph: 3SAT instance -> induced odd cycle through a node u."""

from __future__ import annotations

from dataclasses import dataclass

from .formula import CnfFormula
from .graph import EdgeColor, GraphError, LabeledGraph

BLUE, RED = EdgeColor.BLUE, EdgeColor.RED

# Variable gadget: a 4-cycle through c1/c3 and an 8-cycle through c2/c4,
# tied together by a red zig-zag.
_VARIABLE_BLUE = [
    ("t1", "c3"), ("c3", "f1"), ("f1", "c1"), ("c1", "t1"),
    ("t2", "t3"), ("t3", "t4"), ("t4", "c4"), ("c4", "f4"),
    ("f4", "f3"), ("f3", "f2"), ("f2", "c2"), ("c2", "t2"),
]
_VARIABLE_RED = [("f2", "t1"), ("t1", "f3"), ("f3", "t3"), ("t3", "f1"), ("f1", "t2")]
_CLAUSE_BLUE = [
    ("d1", "r"), ("r", "d3"),
    ("d4", "fz3"), ("fz3", "d2"), ("d2", "fz2"), ("fz2", "d4"), ("d4", "fz1"), ("fz1", "d2"),
]


def variable_label(kind: str, i: int, k: int) -> str:
    return f"{kind}{i}.{k}"


def _variable_node(i: int, short: str) -> str:
    return variable_label(short[0], i, int(short[1]))


def _clause_node(j: int, short: str) -> str:
    if short == "r":
        return f"r{j}"
    if short.startswith("fz"):
        return f"fz{j}.{short[2]}"
    return f"d{j}.{short[1]}"


@dataclass
class ReductionGraph:
    graph: LabeledGraph
    u: int
    w: int
    v: int
    label_index: dict[str, int]
    n: int
    m: int


def build_reduction(f: CnfFormula) -> ReductionGraph:
    g = LabeledGraph()
    for label in ("u", "w", "v"):
        g.add_node(label)
    for i in range(1, f.n + 1):
        for kind in "ctf":
            for k in range(1, 5):
                g.add_node(variable_label(kind, i, k))
    for j in range(1, f.m + 1):
        for k in range(1, 5):
            g.add_node(f"d{j}.{k}")
        g.add_node(f"r{j}")
        for k in range(1, 4):
            g.add_node(f"fz{j}.{k}")

    def edge(a: str, b: str, color: EdgeColor) -> None:
        g.add_edge(g.node(a), g.node(b), color)

    for i in range(1, f.n + 1):
        for a, b in _VARIABLE_BLUE:
            edge(_variable_node(i, a), _variable_node(i, b), BLUE)
        for a, b in _VARIABLE_RED:
            edge(_variable_node(i, a), _variable_node(i, b), RED)
    for j in range(1, f.m + 1):
        for a, b in _CLAUSE_BLUE:
            edge(_clause_node(j, a), _clause_node(j, b), BLUE)

    edge("u", "w", BLUE)
    edge("u", "c1.2", BLUE)
    edge("w", "c1.1", BLUE)
    for i in range(1, f.n):
        edge(f"c{i}.3", f"c{i + 1}.1", BLUE)
        edge(f"c{i}.4", f"c{i + 1}.2", BLUE)
    edge(f"c{f.n}.3", "d1.1", BLUE)
    edge(f"c{f.n}.4", "d1.2", BLUE)
    for j in range(1, f.m):
        edge(f"d{j}.3", f"d{j + 1}.1", BLUE)
        edge(f"d{j}.4", f"d{j + 1}.2", BLUE)
    edge(f"d{f.m}.3", "v", BLUE)
    edge(f"d{f.m}.4", "v", BLUE)

    # A literal slot is forbidden on the cycle exactly when the route it
    # would need (f-route for x_i, t-route for ~x_i) is the one taken.
    for j, clause in enumerate(f.clauses, 1):
        for k, lit in enumerate(clause, 1):
            kind = "t" if lit.negated else "f"
            slot = f"fz{j}.{k}"
            edge(variable_label(kind, lit.variable, 1), slot, RED)
            edge(variable_label(kind, lit.variable, 3), slot, RED)

    return ReductionGraph(
        graph=g,
        u=g.node("u"),
        w=g.node("w"),
        v=g.node("v"),
        label_index=dict(g._index),
        n=f.n,
        m=f.m,
    )


def node_of(rg: ReductionGraph, label: str) -> int:
    try:
        return rg.label_index[label]
    except KeyError:
        raise GraphError(f"unknown label {label!r}") from None


def expected_node_count(n: int, m: int) -> int:
    return 12 * n + 8 * m + 3


def expected_edge_count(n: int, m: int) -> int:
    return 19 * n + 16 * m + 3
