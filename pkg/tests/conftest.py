import sys
from pathlib import Path

import pytest

from multiutility.documents import parse_profile

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load(name):
    return parse_profile((FIXTURES / name).read_text())


@pytest.fixture
def p1():
    return load("p1.json")


@pytest.fixture
def p2():
    return load("p2.json")


@pytest.fixture
def p5():
    return load("p5.json")
