"""Ground truth: exhaustive odd-hole search, route-exclusivity check, cross-validation.

Bienstock's theorem says the formula is satisfiable exactly when the
reduction graph has an induced odd cycle of length >= 5 through u. The
harness asserts that equivalence on every instance the search resolves,
and only *measures* whether the hole-complex verdict agrees with it.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from . import kernels
from .decide import DecisionReport, PipelineTrace, run_pipeline
from .formula import Assignment, CnfFormula, brute_force_sat, serialize_dimacs
from .graph import LabeledGraph, canonical_cycle, graph_to_dict, is_chordless_cycle
from .reduction import ReductionGraph

DEFAULT_BUDGET = 50_000_000
MAX_VALIDATION_VARS = 10


class OracleStatus(str, Enum):
    FOUND = "found"
    NONE_EXISTS = "none"
    TIMEOUT = "timeout"


_STATUS = {
    kernels.FOUND: OracleStatus.FOUND,
    kernels.NONE_EXISTS: OracleStatus.NONE_EXISTS,
    kernels.TIMEOUT: OracleStatus.TIMEOUT,
}


class BienstockEquivalenceError(AssertionError):
    """SAT truth and odd-hole truth disagree: the reduction or search is wrong.

    ``bundle`` holds DIMACS, graph JSON and the offending cycle.
    """

    def __init__(self, message: str, bundle: dict):
        super().__init__(message)
        self.bundle = bundle


class PropositionPreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class OracleOutcome:
    status: OracleStatus
    cycle: tuple[int, ...] = ()
    nodes_explored: int = 0
    elapsed: float = field(default=0.0, compare=False)


def find_odd_hole_through(g: LabeledGraph, x: int, budget: int = DEFAULT_BUDGET) -> OracleOutcome:
    if budget <= 0:
        raise ValueError("budget must be positive")
    start = time.perf_counter()
    code, cycle, explored = kernels.odd_hole_through(g.adjacency_lists(), x, budget)
    outcome = OracleOutcome(_STATUS[code], tuple(cycle), explored, time.perf_counter() - start)
    if outcome.status is OracleStatus.FOUND:
        c = outcome.cycle
        assert len(c) >= 5 and len(c) % 2 == 1, f"bad odd-hole length {len(c)}"
        assert x in c and is_chordless_cycle(g, c), f"search returned a non-hole {c}"
    return outcome


def enumerate_induced_cycles(g: LabeledGraph, min_len: int = 4, through: Optional[int] = None,
                             max_nodes: int = 16) -> list[tuple[int, ...]]:
    """Every induced cycle with at least ``min_len`` nodes, by subset enumeration.

    Exponential; refuses graphs larger than ``max_nodes``.
    """
    if g.node_count > max_nodes:
        raise ValueError(f"enumeration limited to {max_nodes} nodes")
    found = []
    for size in range(min_len, g.node_count + 1):
        for subset in itertools.combinations(g.nodes(), size):
            if through is not None and through not in subset:
                continue
            members = set(subset)
            if any(len(g.neighbors(a) & members) != 2 for a in subset):
                continue
            # all degrees 2: a single cycle iff the walk from subset[0] covers it
            cycle = [subset[0]]
            prev = None
            while True:
                step = [b for b in sorted(g.neighbors(cycle[-1]) & members) if b != prev]
                nxt = step[0]
                if nxt == cycle[0]:
                    break
                prev = cycle[-1]
                cycle.append(nxt)
            if len(cycle) == size:
                found.append(canonical_cycle(cycle))
    return sorted(found)


class Branch(str, Enum):
    TRUE = "true"
    FALSE = "false"
    VIOLATION = "violation"


def _contains_subpath(cycle: Sequence[int], path: Sequence[int]) -> bool:
    k = len(cycle)
    try:
        at = cycle.index(path[0])
    except ValueError:
        return False
    forward = all(cycle[(at + s) % k] == p for s, p in enumerate(path))
    backward = all(cycle[(at - s) % k] == p for s, p in enumerate(path))
    return forward or backward


def check_proposition1(cycle: Sequence[int], rg: ReductionGraph) -> list[Branch]:
    """Per variable: does the odd hole take exactly one of the t- or f-routes?"""
    g = rg.graph
    cycle = list(cycle)
    if (len(cycle) < 5 or len(cycle) % 2 == 0 or rg.u not in cycle
            or not is_chordless_cycle(g, cycle)):
        raise PropositionPreconditionError("not an odd hole through u")
    node = rg.label_index.__getitem__
    verdicts = []
    for i in range(1, rg.n + 1):
        routes = {}
        for kind in "tf":
            short = [node(f"c{i}.1"), node(f"{kind}{i}.1"), node(f"c{i}.3")]
            long = [node(f"c{i}.2")] + [node(f"{kind}{i}.{k}") for k in (2, 3, 4)] + [node(f"c{i}.4")]
            routes[kind] = _contains_subpath(cycle, short) and _contains_subpath(cycle, long)
        if routes["t"] and not routes["f"]:
            verdicts.append(Branch.TRUE)
        elif routes["f"] and not routes["t"]:
            verdicts.append(Branch.FALSE)
        else:
            verdicts.append(Branch.VIOLATION)
    return verdicts


@dataclass
class ValidationRecord:
    formula: CnfFormula
    sat_truth: bool
    witness: Optional[Assignment]
    odd_hole_truth: OracleOutcome
    proposition1: Optional[list[Branch]]
    claimed: DecisionReport
    trace: PipelineTrace = field(repr=False)

    @property
    def equivalence(self) -> str:
        """'agree' or 'unresolved'. A disagreement never survives construction."""
        if self.odd_hole_truth.status is OracleStatus.TIMEOUT:
            return "unresolved"
        return "agree"

    @property
    def claim_agrees(self) -> bool:
        return self.claimed.claimed_satisfiable == self.sat_truth

    @property
    def proposition1_violations(self) -> int:
        return sum(v is Branch.VIOLATION for v in self.proposition1 or ())

    def counterexample(self) -> dict:
        g = self.trace.reduction.graph
        return {
            "dimacs": serialize_dimacs(self.formula),
            "graph": graph_to_dict(g),
            "complex_nodes": self.trace.complex_labels(),
        }

    def to_dict(self) -> dict:
        g = self.trace.reduction.graph
        doc = {
            "n": self.formula.n,
            "m": self.formula.m,
            "clauses": [[lit.to_int() for lit in c] for c in self.formula.clauses],
            "sat_truth": self.sat_truth,
            "witness": None if self.witness is None else list(self.witness),
            "odd_hole": {
                "status": self.odd_hole_truth.status.value,
                "cycle": [g.labels[i] for i in self.odd_hole_truth.cycle],
                "nodes_explored": self.odd_hole_truth.nodes_explored,
            },
            "proposition1": None if self.proposition1 is None else [v.value for v in self.proposition1],
            "equivalence": self.equivalence,
            "claimed": self.claimed.to_dict(),
            "claim_agrees": self.claim_agrees,
        }
        if not self.claim_agrees or self.proposition1_violations:
            doc["counterexample"] = self.counterexample()
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True) + "\n"


RECORD_SCHEMA = {
    "type": "object",
    "required": ["n", "m", "clauses", "sat_truth", "witness", "odd_hole", "proposition1",
                 "equivalence", "claimed", "claim_agrees"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "m": {"type": "integer", "minimum": 1},
        "clauses": {"type": "array", "items": {"type": "array", "minItems": 3, "maxItems": 3}},
        "sat_truth": {"type": "boolean"},
        "witness": {"type": ["array", "null"], "items": {"type": "boolean"}},
        "odd_hole": {
            "type": "object",
            "required": ["status", "cycle", "nodes_explored"],
            "properties": {
                "status": {"enum": [s.value for s in OracleStatus]},
                "cycle": {"type": "array", "items": {"type": "string"}},
                "nodes_explored": {"type": "integer", "minimum": 0},
            },
        },
        "proposition1": {"type": ["array", "null"], "items": {"enum": [b.value for b in Branch]}},
        "equivalence": {"enum": ["agree", "unresolved"]},
        "claimed": {"type": "object"},
        "claim_agrees": {"type": "boolean"},
        "counterexample": {
            "type": "object",
            "required": ["dimacs", "graph", "complex_nodes"],
            "properties": {
                "dimacs": {"type": "string"},
                "graph": {"type": "object"},
                "complex_nodes": {"type": "array", "items": {"type": "string"}},
            },
        },
    },
}


def cross_validate(f: CnfFormula, budget: int = DEFAULT_BUDGET, strict: bool = False) -> ValidationRecord:
    if f.n > MAX_VALIDATION_VARS:
        raise ValueError(f"cross-validation is limited to n <= {MAX_VALIDATION_VARS}")
    witness = brute_force_sat(f)
    trace = run_pipeline(f, strict=strict)
    rg = trace.reduction
    outcome = find_odd_hole_through(rg.graph, rg.u, budget)
    verdicts = None
    if outcome.status is OracleStatus.FOUND:
        verdicts = check_proposition1(outcome.cycle, rg)
    record = ValidationRecord(f, witness is not None, witness, outcome, verdicts, trace.report, trace)
    if outcome.status is not OracleStatus.TIMEOUT:
        if record.sat_truth != (outcome.status is OracleStatus.FOUND):
            bundle = record.counterexample()
            bundle["cycle"] = [rg.graph.labels[i] for i in outcome.cycle]
            raise BienstockEquivalenceError(
                f"SAT={record.sat_truth} but odd-hole search says {outcome.status.value} for {f}",
                bundle,
            )
    return record
