import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from holesat.formula import CnfFormula, all_sign_patterns  # noqa: E402
from holesat.graph import from_edges  # noqa: E402


@pytest.fixture
def sign_formula():
    return all_sign_patterns()


@pytest.fixture
def unit_formula():
    return CnfFormula.from_ints(1, [(1, 1, 1)])


def cycle_graph(k, offset=0):
    nodes = [str(i + offset) for i in range(k)]
    return from_edges([(nodes[i], nodes[(i + 1) % k]) for i in range(k)], nodes)


@pytest.fixture
def data_dir():
    return Path(__file__).parent / "data"
