"""Literal-set test on the hole complex that contains u."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .complexes import HoleComplex, assemble_complexes, complex_containing, items_from_harvest
from .formula import CnfFormula
from .holes import HarvestResult, PathFragment, find_two_paths, harvest_holes
from .reduction import ReductionGraph, build_reduction

PartialAssignment = tuple[Optional[bool], ...]


def true_set(i: int) -> tuple[str, ...]:
    return (f"c{i}.1", f"t{i}.1", f"c{i}.3", f"c{i}.2", f"t{i}.2", f"t{i}.3", f"t{i}.4", f"c{i}.4")


def false_set(i: int) -> tuple[str, ...]:
    return (f"c{i}.1", f"f{i}.1", f"c{i}.3", f"c{i}.2", f"f{i}.2", f"f{i}.3", f"f{i}.4", f"c{i}.4")


@dataclass(frozen=True)
class VariableFinding:
    true_found: bool
    false_found: bool


@dataclass(frozen=True)
class DecisionReport:
    per_var: tuple[VariableFinding, ...]
    claimed_satisfiable: bool
    candidate: PartialAssignment
    complex_size: int

    def to_dict(self) -> dict:
        return {
            "per_var": [{"t": v.true_found, "f": v.false_found} for v in self.per_var],
            "claimed_sat": self.claimed_satisfiable,
            "candidate": list(self.candidate),
            "complex_nodes": self.complex_size,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict()) + "\n"


REPORT_SCHEMA = {
    "type": "object",
    "required": ["per_var", "claimed_sat", "candidate", "complex_nodes"],
    "additionalProperties": False,
    "properties": {
        "per_var": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["t", "f"],
                "additionalProperties": False,
                "properties": {"t": {"type": "boolean"}, "f": {"type": "boolean"}},
            },
        },
        "claimed_sat": {"type": "boolean"},
        "candidate": {"type": "array", "items": {"type": ["boolean", "null"]}},
        "complex_nodes": {"type": "integer", "minimum": 0},
    },
}


@dataclass
class PipelineTrace:
    """Every intermediate stage of one decision run."""

    reduction: ReductionGraph
    harvest: HarvestResult
    two_paths: list[PathFragment]
    complexes: list[HoleComplex]
    u_complex: Optional[HoleComplex]
    report: DecisionReport

    def complex_labels(self) -> list[str]:
        if self.u_complex is None:
            return []
        g = self.reduction.graph
        return sorted(g.labels[i] for i in self.u_complex.node_set)


def extract_assignment(r: DecisionReport) -> PartialAssignment:
    """True/False where exactly one literal set was found, None otherwise."""
    return tuple(v.true_found if v.true_found != v.false_found else None for v in r.per_var)


def report_from_complex(n: int, labels: set[str]) -> DecisionReport:
    per_var = tuple(
        VariableFinding(
            true_found=labels.issuperset(true_set(i)),
            false_found=labels.issuperset(false_set(i)),
        )
        for i in range(1, n + 1)
    )
    claimed = bool(labels) and all(v.true_found or v.false_found for v in per_var)
    partial = DecisionReport(per_var, claimed, (), len(labels))
    return DecisionReport(per_var, claimed, extract_assignment(partial), len(labels))


def run_pipeline(f: CnfFormula, strict: bool = False) -> PipelineTrace:
    rg = build_reduction(f)
    g = rg.graph
    harvest = harvest_holes(g)
    two_paths = find_two_paths(g)
    complexes = assemble_complexes(items_from_harvest(harvest, two_paths, strict=strict), g)
    home = complex_containing(complexes, rg.u)
    labels = set() if home is None else {g.labels[i] for i in home.node_set}
    return PipelineTrace(rg, harvest, two_paths, complexes, home, report_from_complex(f.n, labels))


def decide_3sat(f: CnfFormula, strict: bool = False) -> DecisionReport:
    """Claimed verdict: satisfiable iff every variable has a literal set in u's complex."""
    return run_pipeline(f, strict).report
