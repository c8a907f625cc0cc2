"""
Pytest Configuration and Fixtures

Shared fixtures and configuration for all tests.
"""

import json

import numpy as np
import pytest
from hypothesis import strategies as st

from src.config import settings
from src.core.rules import ConstRule, GeometricRule, LinearRule, PowerRule
from src.core.sequences import FiniteSequence
from src.gamma_space.config import GammaSpaceConfig

# bounded reals shared by the property tests
finite_floats = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)


@pytest.fixture
def rng():
    """Seeded generator so every run sees the same random inputs."""
    return np.random.default_rng(settings.random_seed)


def complex_values(rng, length: int) -> np.ndarray:
    """Entries with real and imaginary parts in [-1, 1]."""
    return rng.uniform(-1.0, 1.0, length) + 1j * rng.uniform(-1.0, 1.0, length)


@pytest.fixture
def random_sequences(rng):
    """Factory for random complex finitely supported sequences (length <= 64)."""
    def make(count: int, max_length: int = 64, offset: int = 1):
        return [
            FiniteSequence.from_values(
                complex_values(rng, int(rng.integers(1, max_length + 1))), offset=offset
            )
            for _ in range(count)
        ]
    return make


@pytest.fixture
def zero_total_sequences(rng):
    """Factory for sequences whose total weighted sum Σ q_k a_k vanishes."""
    def make(count: int, q=ConstRule(), max_length: int = 32):
        out = []
        for _ in range(count):
            length = int(rng.integers(2, max_length + 1))
            values = complex_values(rng, length)
            ns = np.arange(1, length + 1)
            weights = q.array(ns)
            values[-1] = -np.dot(weights[:-1], values[:-1]) / weights[-1]
            out.append(FiniteSequence.from_values(values))
        return out
    return make


@pytest.fixture
def unit_space():
    """Γ_p with γ ≡ 1 and q ≡ 1 at p = 2."""
    return GammaSpaceConfig(p=2.0, gamma=ConstRule(), q=ConstRule())


@pytest.fixture
def random_configs(rng):
    """A handful of spaces with different exponents and sequences."""
    return [
        GammaSpaceConfig(p=2.0, gamma=PowerRule(exponent=-2.0)),
        GammaSpaceConfig(p=3.0, gamma=PowerRule(exponent=-3.5), q=LinearRule()),
        GammaSpaceConfig(p=1.5, gamma=GeometricRule(ratio=0.5)),
        GammaSpaceConfig(p=float(rng.uniform(1.2, 4.0)), gamma=ConstRule(value=2.0)),
        GammaSpaceConfig.preset("W", 2.0),
    ]


@pytest.fixture
def sequence_file(tmp_path):
    """Write a FiniteSequence-shaped JSON file and return its path."""
    def write(values, offset: int = 1, name: str = "A.json"):
        path = tmp_path / name
        pairs = [[complex(v).real, complex(v).imag] for v in values]
        path.write_text(json.dumps({"offset": offset, "values": pairs}))
        return path
    return write


@pytest.fixture
def config_file(tmp_path):
    """Write a space configuration JSON file and return its path."""
    def write(data: dict, name: str = "space.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return path
    return write
