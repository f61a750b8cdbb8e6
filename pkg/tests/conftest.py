import random
from itertools import combinations

import pytest
import structlog

from algebra import BinaryCode
from topology import TriangularConfiguration


@pytest.fixture(autouse=True)
def reset_logging():
    yield
    structlog.reset_defaults()


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture
def tetrahedron() -> TriangularConfiguration:
    return TriangularConfiguration.from_triangles(combinations(range(4), 3))


@pytest.fixture
def two_tetrahedra() -> TriangularConfiguration:
    return TriangularConfiguration.from_triangles(
        list(combinations(range(4), 3)) + list(combinations(range(4, 8), 3))
    )


@pytest.fixture
def single_triangle() -> TriangularConfiguration:
    return TriangularConfiguration.from_triangles([(0, 1, 2)])


@pytest.fixture
def even_code() -> BinaryCode:
    """{000, 110, 011, 101} with basis {110, 011}."""
    return BinaryCode.from_strings(["110", "011"])


@pytest.fixture
def repetition_code() -> BinaryCode:
    return BinaryCode.from_strings(["111"])
