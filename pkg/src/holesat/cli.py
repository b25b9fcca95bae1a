"""Command-line front end: ``holesat {reduce,holes,complexes,decide,verify,gen}``.

Standard output carries only the requested document; logs go to stderr.
Exit codes: 0 success, 1 processing error, 2 usage error, 3 a resolved
instance contradicted Bienstock's equivalence or the route-exclusivity check.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import kernels
from .complexes import assemble_complexes, items_from_harvest
from .decide import run_pipeline
from .formula import CnfFormula, DimacsError, parse_dimacs, random_3sat, serialize_dimacs
from .graph import GraphError, LabeledGraph, export_dot, from_json, to_json
from .holes import HoleError, find_two_paths, harvest_holes
from .oracle import DEFAULT_BUDGET, BienstockEquivalenceError, cross_validate
from .reduction import build_reduction

log = logging.getLogger("holesat")

EXIT_OK, EXIT_PROCESSING, EXIT_USAGE, EXIT_EQUIVALENCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        Path(out).write_text(text)


def _dump(doc) -> str:
    return json.dumps(doc, indent=1) + "\n"


def _load_graph(text: str) -> LabeledGraph:
    """Graph JSON, or DIMACS which is reduced first."""
    if text.lstrip().startswith("{"):
        return from_json(text)
    return build_reduction(parse_dimacs(text)).graph


def _parse_range(value: str) -> tuple[int, int]:
    lo, _, hi = value.partition("-")
    lo, hi = int(lo), int(hi or lo)
    if lo < 1 or hi < lo:
        raise ValueError(f"bad range {value!r}")
    return lo, hi


@dataclass
class BatchSpec:
    n: tuple[int, int]
    m: tuple[int, int]
    instances: int
    seed: int

    @classmethod
    def parse(cls, text: str, seed: Optional[int] = None) -> "BatchSpec":
        fields = {"seed": "0"}
        for part in text.split(","):
            key, sep, value = part.partition("=")
            if not sep or key.strip() not in ("n", "m", "instances", "seed"):
                raise UsageError(f"bad --gen field {part!r}; expected n=,m=,instances=,seed=")
            fields[key.strip()] = value.strip()
        try:
            spec = cls(_parse_range(fields["n"]), _parse_range(fields["m"]),
                       int(fields["instances"]), int(fields["seed"]))
        except (KeyError, ValueError) as exc:
            raise UsageError(f"bad --gen spec {text!r}: {exc}") from None
        if seed is not None:
            spec.seed = seed
        if spec.instances < 1:
            raise UsageError("instances must be positive")
        return spec

    def formulas(self) -> list[CnfFormula]:
        rng = random.Random(self.seed)
        batch = []
        for _ in range(self.instances):
            n = rng.randint(*self.n)
            m = rng.randint(*self.m)
            batch.append(random_3sat(n, m, rng.getrandbits(64)))
        return batch


def cmd_reduce(args) -> int:
    rg = build_reduction(parse_dimacs(_read(args.input)))
    g = rg.graph
    if args.format == "dot":
        _write(export_dot(g), args.out)
    elif args.format == "text":
        _write(f"nodes {g.node_count}\nedges {g.edge_count}\n", args.out)
    else:
        _write(to_json(g), args.out)
    return EXIT_OK


def cmd_holes(args) -> int:
    g = _load_graph(_read(args.input))
    doc = harvest_holes(g).to_dict(g)
    doc["two_paths"] = [list(p.nodes) for p in find_two_paths(g)]
    _write(_dump(doc), args.out)
    return EXIT_OK


def cmd_complexes(args) -> int:
    g = _load_graph(_read(args.input))
    items = items_from_harvest(harvest_holes(g), find_two_paths(g), strict=args.strict_fragments)
    cs = assemble_complexes(items, g)
    _write(_dump({"complexes": [c.to_dict(g) for c in cs]}), args.out)
    return EXIT_OK


def cmd_decide(args) -> int:
    f = parse_dimacs(_read(args.input))
    trace = run_pipeline(f, strict=args.strict_fragments)
    report = trace.report
    if args.format == "text":
        lines = [f"claimed {'SAT' if report.claimed_satisfiable else 'UNSAT'}",
                 f"complex nodes {report.complex_size}"]
        for i, v in enumerate(report.per_var, 1):
            lines.append(f"x{i}: true-set {'yes' if v.true_found else 'no'}, "
                         f"false-set {'yes' if v.false_found else 'no'}")
        _write("\n".join(lines) + "\n", args.out)
    else:
        _write(report.to_json(), args.out)
    return EXIT_OK


def _validate_one(job):
    f, budget, strict = job
    try:
        record = cross_validate(f, budget, strict)
    except BienstockEquivalenceError as exc:
        return None, {"error": str(exc), **exc.bundle}
    return record.to_dict(), None


def _collect_inputs(paths: Sequence[str]) -> list[CnfFormula]:
    formulas = []
    for p in paths:
        path = Path(p)
        if p != "-" and path.is_dir():
            formulas.extend(parse_dimacs(q.read_text()) for q in sorted(path.glob("*.cnf")))
        else:
            formulas.append(parse_dimacs(_read(p)))
    return formulas


def cmd_verify(args) -> int:
    if args.gen and args.inputs:
        raise UsageError("give either input files or --gen, not both")
    if args.gen:
        formulas = BatchSpec.parse(args.gen, args.seed).formulas()
    elif args.inputs:
        formulas = _collect_inputs(args.inputs)
    else:
        raise UsageError("verify needs input files or --gen")
    jobs = [(f, args.budget, args.strict_fragments) for f in formulas]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_validate_one, jobs))
    else:
        results = [_validate_one(j) for j in jobs]

    lines = []
    summary = {"instances": len(formulas), "resolved": 0, "unresolved": 0,
               "equivalence_failures": 0, "proposition1_violations": 0,
               "claim_agreements": 0, "claimed_sat_but_unsat": 0, "claimed_unsat_but_sat": 0}
    bundle_dir = Path(args.bundle_dir) if args.bundle_dir else None
    if bundle_dir:
        bundle_dir.mkdir(parents=True, exist_ok=True)
    for k, (doc, failure) in enumerate(results):
        if failure is not None:
            summary["equivalence_failures"] += 1
            log.error("instance %d: %s", k, failure["error"])
            lines.append(json.dumps({"index": k, "equivalence_failure": failure}, sort_keys=True))
            bundle = failure
        else:
            doc["index"] = k
            lines.append(json.dumps(doc, sort_keys=True))
            summary["resolved" if doc["equivalence"] == "agree" else "unresolved"] += 1
            summary["proposition1_violations"] += (doc["proposition1"] or []).count("violation")
            if doc["claim_agrees"]:
                summary["claim_agreements"] += 1
            elif doc["sat_truth"]:
                summary["claimed_unsat_but_sat"] += 1
            else:
                summary["claimed_sat_but_unsat"] += 1
            bundle = doc.get("counterexample")
        if bundle_dir and bundle:
            stem = bundle_dir / f"inst_{k:04d}"
            Path(f"{stem}.cnf").write_text(bundle["dimacs"])
            Path(f"{stem}.graph.json").write_text(_dump(bundle["graph"]))
            Path(f"{stem}.complex.json").write_text(_dump(bundle["complex_nodes"]))
    summary["claim_agreement_rate"] = round(summary["claim_agreements"] / len(formulas), 6)
    _write("".join(line + "\n" for line in lines), args.out)
    summary_text = json.dumps(summary, sort_keys=True) + "\n"
    if args.summary:
        Path(args.summary).write_text(summary_text)
    sys.stderr.write(summary_text)
    failed = summary["equivalence_failures"] or summary["proposition1_violations"]
    return EXIT_EQUIVALENCE if failed else EXIT_OK


def cmd_gen(args) -> int:
    spec = BatchSpec(_parse_range(args.n), _parse_range(args.m), args.instances, args.seed)
    formulas = spec.formulas()
    if len(formulas) == 1:
        _write(serialize_dimacs(formulas[0]), args.out)
        return EXIT_OK
    if args.out is None or args.out == "-":
        raise UsageError("--out DIR is required when generating several instances")
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for k, f in enumerate(formulas):
        (outdir / f"inst_{k:04d}.cnf").write_text(serialize_dimacs(f))
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="holesat", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="DIMACS CNF -> reduction graph")
    p.add_argument("input", help="DIMACS file or '-'")
    p.add_argument("--format", choices=("json", "dot", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_reduce)

    for name, func, helptext in (("holes", cmd_holes, "graph -> harvested holes"),
                                 ("complexes", cmd_complexes, "graph -> hole complexes")):
        p = sub.add_parser(name, help=helptext + " (DIMACS input is reduced first)")
        p.add_argument("input", help="graph JSON or DIMACS file, or '-'")
        p.add_argument("--out")
        if name == "complexes":
            p.add_argument("--strict-fragments", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("decide", help="DIMACS CNF -> decision report")
    p.add_argument("input")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--strict-fragments", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("verify", help="cross-validate against brute force and the odd-hole oracle")
    p.add_argument("inputs", nargs="*", help="DIMACS files or directories")
    p.add_argument("--gen", help="generated batch, e.g. n=1-3,m=1-4,instances=60,seed=7")
    p.add_argument("--seed", type=int, help="overrides the seed in --gen")
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--strict-fragments", action="store_true")
    p.add_argument("--out", help="JSONL destination (default stdout)")
    p.add_argument("--summary", help="also write the summary JSON here")
    p.add_argument("--bundle-dir", help="write counterexample bundles here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="random 3SAT instances in DIMACS")
    p.add_argument("--n", default="3", help="variable count or range lo-hi")
    p.add_argument("--m", default="4", help="clause count or range lo-hi")
    p.add_argument("--instances", type=_positive, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="file (one instance) or directory")
    p.set_defaults(func=cmd_gen)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    log.debug("kernel backend: %s", kernels.BACKEND)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"holesat: error: {exc}\n")
        return EXIT_USAGE
    except (DimacsError, GraphError, HoleError, OSError, ValueError) as exc:
        sys.stderr.write(f"holesat: {exc}\n")
        return EXIT_PROCESSING


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
