"""Shared fixtures: the algebras under data/algebras and a few quivers."""

import logging
from pathlib import Path

import pytest

from src.qalg import BoundQuiverAlgebra, load_algebra, load_quiver

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
ALGEBRA_DIR = DATA_DIR / "algebras"
QUIVER_DIR = DATA_DIR / "quivers"
REP_DIR = DATA_DIR / "reps"

ALGEBRA_FILES = {
    "kx2": "kx2.alg",
    "nakayama": "nakayama_3_2.alg",
    "triangles": "two_triangles.alg",
    "hereditary": "hereditary_a2.alg",
    "non_gor": "non_gorenstein_a3.alg",
}

# Algebras that are 1-Gorenstein; every one of them has a full GP classification
GORENSTEIN = ["kx2", "nakayama", "triangles", "hereditary"]
ALL = list(ALGEBRA_FILES)


def algebra(key: str) -> BoundQuiverAlgebra:
    return load_algebra(ALGEBRA_DIR / ALGEBRA_FILES[key])


@pytest.fixture
def kx2() -> BoundQuiverAlgebra:
    return algebra("kx2")


@pytest.fixture
def nakayama() -> BoundQuiverAlgebra:
    return algebra("nakayama")


@pytest.fixture
def triangles() -> BoundQuiverAlgebra:
    return algebra("triangles")


@pytest.fixture
def hereditary() -> BoundQuiverAlgebra:
    return algebra("hereditary")


@pytest.fixture
def non_gor() -> BoundQuiverAlgebra:
    return algebra("non_gor")


@pytest.fixture(params=ALL)
def any_algebra(request) -> BoundQuiverAlgebra:
    return algebra(request.param)


@pytest.fixture(params=GORENSTEIN)
def gorenstein_algebra(request) -> BoundQuiverAlgebra:
    return algebra(request.param)


@pytest.fixture
def a3_quiver():
    return load_quiver(QUIVER_DIR / "a3.quiver")


@pytest.fixture(autouse=True)
def _reset_root_logger():
    """setup_logging replaces root handlers; put the pytest ones back afterwards."""
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    for handler in list(root.handlers):
        if handler not in handlers:
            root.removeHandler(handler)
            handler.close()
    for handler in handlers:
        if handler not in root.handlers:
            root.addHandler(handler)
    root.setLevel(level)
