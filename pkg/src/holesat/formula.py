"""3SAT instances: model, DIMACS IO, random generation and a brute-force oracle."""

from __future__ import annotations

import io
import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, TextIO, Union

MAX_BRUTE_FORCE_VARS = 30


class DimacsError(ValueError):
    """Malformed DIMACS input. ``line`` is 1-based, or None at end of input."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        where = f"line {line}: " if line is not None else "end of input: "
        super().__init__(where + message)


@dataclass(frozen=True, order=True)
class Literal:
    variable: int
    negated: bool = False

    def __post_init__(self):
        if self.variable < 1:
            raise ValueError(f"variable index must be >= 1, got {self.variable}")

    @classmethod
    def from_int(cls, value: int) -> "Literal":
        return cls(abs(value), value < 0)

    def to_int(self) -> int:
        return -self.variable if self.negated else self.variable

    def satisfied_by(self, values: "Assignment") -> bool:
        return values[self.variable - 1] != self.negated

    def __str__(self) -> str:
        return f"~x{self.variable}" if self.negated else f"x{self.variable}"


@dataclass(frozen=True)
class Clause:
    literals: tuple[Literal, Literal, Literal]

    def __post_init__(self):
        if len(self.literals) != 3:
            raise ValueError(f"a clause has exactly 3 literals, got {len(self.literals)}")

    @classmethod
    def of(cls, *values: int) -> "Clause":
        return cls(tuple(Literal.from_int(v) for v in values))

    def __iter__(self):
        return iter(self.literals)

    def __str__(self) -> str:
        return "(" + " | ".join(str(lit) for lit in self.literals) + ")"


Assignment = tuple[bool, ...]


@dataclass(frozen=True)
class CnfFormula:
    """A 3SAT instance over variables ``1..n``.

    ``repeated_variables`` is generator metadata: it is set when a clause
    had to reuse a variable because ``n < 3``. It takes no part in equality.
    """

    n: int
    clauses: tuple[Clause, ...]
    repeated_variables: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(self.clauses))
        if self.n < 1:
            raise ValueError("a formula needs at least one variable")
        if not self.clauses:
            raise ValueError("a formula needs at least one clause")
        for j, clause in enumerate(self.clauses, 1):
            for lit in clause:
                if lit.variable > self.n:
                    raise ValueError(f"clause {j} uses x{lit.variable} but n={self.n}")

    @classmethod
    def from_ints(cls, n: int, clauses: Iterable[Iterable[int]]) -> "CnfFormula":
        return cls(n, tuple(Clause.of(*c) for c in clauses))

    @property
    def m(self) -> int:
        return len(self.clauses)

    def __str__(self) -> str:
        return "".join(str(c) for c in self.clauses)


def all_sign_patterns() -> CnfFormula:
    """All eight sign patterns over x1, x2, x3 (unsatisfiable)."""
    rows = itertools.product((1, -1), repeat=3)
    return CnfFormula.from_ints(3, [(a * 1, b * 2, c * 3) for a, b, c in rows])


def parse_dimacs(text: Union[str, TextIO]) -> CnfFormula:
    """Read a DIMACS CNF document whose clauses all have exactly 3 literals.

    Clauses may span lines; every clause must be closed by ``0``. Comment
    lines (``c ...``) and ``%`` trailers are ignored.
    """
    stream = io.StringIO(text) if isinstance(text, str) else text
    header = None
    clauses: list[tuple[int, ...]] = []
    pending: list[int] = []
    pending_line = None
    lineno = 0
    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None:
                raise DimacsError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"malformed header {line!r}", lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise DimacsError(f"malformed header {line!r}", lineno) from None
            if header[0] < 1 or header[1] < 1:
                raise DimacsError(f"header counts must be positive: {line!r}", lineno)
            continue
        if header is None:
            raise DimacsError("clause before problem line", lineno)
        for token in line.split():
            try:
                value = int(token)
            except ValueError:
                raise DimacsError(f"not an integer: {token!r}", lineno) from None
            if value == 0:
                if len(pending) != 3:
                    raise DimacsError(f"clause length {len(pending)} != 3", lineno)
                clauses.append(tuple(pending))
                pending = []
                continue
            if abs(value) > header[0]:
                raise DimacsError(f"variable {abs(value)} out of range 1..{header[0]}", lineno)
            if not pending:
                pending_line = lineno
            pending.append(value)
            if len(pending) > 3:
                raise DimacsError(f"clause length {len(pending)} != 3", lineno)
    if header is None:
        raise DimacsError("missing problem line", None)
    if pending:
        raise DimacsError("clause missing zero terminator", pending_line)
    if len(clauses) != header[1]:
        raise DimacsError(f"header declares {header[1]} clauses, found {len(clauses)}", lineno)
    return CnfFormula.from_ints(header[0], clauses)


def serialize_dimacs(f: CnfFormula) -> str:
    lines = []
    if f.repeated_variables:
        lines.append("c repeated-variables")
    lines.append(f"p cnf {f.n} {f.m}")
    for clause in f.clauses:
        lines.append(" ".join(str(lit.to_int()) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"


def evaluate(f: CnfFormula, a: Assignment) -> bool:
    if len(a) != f.n:
        raise ValueError(f"assignment has {len(a)} values, formula has {f.n} variables")
    return all(any(lit.satisfied_by(a) for lit in clause) for clause in f.clauses)


def brute_force_sat(f: CnfFormula) -> Optional[Assignment]:
    """First satisfying assignment in binary order, x1 most significant."""
    if f.n > MAX_BRUTE_FORCE_VARS:
        raise ValueError(f"n={f.n} exceeds the enumeration guard of {MAX_BRUTE_FORCE_VARS}")
    for values in itertools.product((False, True), repeat=f.n):
        if evaluate(f, values):
            return values
    return None


def random_3sat(n: int, m: int, seed: int) -> CnfFormula:
    """Uniform random 3SAT: three distinct variables per clause, fair signs.

    With fewer than three variables, distinctness is impossible; variables
    are then drawn with replacement and ``repeated_variables`` is set.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    rng = random.Random(seed)
    population = range(1, n + 1)
    clauses = []
    for _ in range(m):
        if n >= 3:
            variables = rng.sample(population, 3)
        else:
            variables = rng.choices(population, k=3)
        clauses.append(Clause(tuple(Literal(v, bool(rng.getrandbits(1))) for v in variables)))
    return CnfFormula(n, tuple(clauses), repeated_variables=n < 3)
