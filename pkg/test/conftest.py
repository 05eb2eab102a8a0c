"""
Shared fixtures for the ECIC Matroid System test suite
Worked instances from fixtures/ and seeded random instance generators
"""

import os
import sys
from pathlib import Path

import numpy as np
import pytest

# Add parent directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from ecic_matroid_system.coding import Problem, ErrorProfile, IndexCode
from ecic_matroid_system.config import EngineConfig
from ecic_matroid_system.data import load_instance

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture
def config() -> EngineConfig:
    return EngineConfig(max_workers=2, default_trials=200)


@pytest.fixture
def load():
    """load('weighted_three') -> InstanceFile"""
    def _load(name: str):
        return load_instance(FIXTURES_DIR / f"{name}.json")
    return _load


@pytest.fixture
def weighted_three(load):
    return load("weighted_three")


@pytest.fixture
def five_receivers(load):
    return load("five_receivers")


@pytest.fixture
def all_ones(load):
    return load("all_ones")


@pytest.fixture
def three_parity(load):
    return load("three_parity")


def make_random_problem(rng: np.random.Generator, q: int, n: int, m: int) -> Problem:
    demands, side_info = [], []
    for _ in range(m):
        demand = int(rng.integers(1, n + 1))
        others = [j for j in range(1, n + 1) if j != demand]
        side_info.append({j for j in others if rng.random() < 0.5})
        demands.append(demand)
    return Problem.create(q, n, side_info, demands)


def make_random_code(rng: np.random.Generator, q: int, n: int, length: int,
                     allow_zero_columns: bool = True) -> IndexCode:
    matrix = rng.integers(0, q, size=(n, length))
    if not allow_zero_columns:
        for j in range(length):
            while not matrix[:, j].any():
                matrix[:, j] = rng.integers(0, q, size=n)
    return IndexCode.from_rows(q, matrix.tolist())


@pytest.fixture
def random_instance():
    """
    random_instance(rng, ...) -> (problem, profile, code)

    q in {2, 3}, n and m at most 3, N at most 4, every delta at most max_delta.
    """
    def _make(rng: np.random.Generator, max_n: int = 3, max_m: int = 3, max_length: int = 4,
              max_delta: int = 1, allow_zero_columns: bool = True):
        q = int(rng.choice([2, 3]))
        n = int(rng.integers(1, max_n + 1))
        m = int(rng.integers(1, max_m + 1))
        length = int(rng.integers(1, max_length + 1))
        problem = make_random_problem(rng, q, n, m)
        profile = ErrorProfile(tuple(int(d) for d in rng.integers(0, max_delta + 1, size=m)))
        code = make_random_code(rng, q, n, length, allow_zero_columns)
        return problem, profile, code
    return _make


@pytest.fixture
def random_code():
    return make_random_code
