"""3SAT through Bienstock's odd-hole reduction and hole complexes."""

from .decide import decide_3sat, run_pipeline
from .formula import CnfFormula, parse_dimacs
from .oracle import cross_validate
from .reduction import build_reduction

__version__ = "0.1.0"

__all__ = ["CnfFormula", "build_reduction", "cross_validate", "decide_3sat", "parse_dimacs", "run_pipeline"]
