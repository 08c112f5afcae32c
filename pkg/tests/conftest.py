from fractions import Fraction
from pathlib import Path
from typing import Callable, List

import numpy as np
import pytest

from localh.polynomials.exact_poly import ExactPoly


@pytest.fixture(autouse=True)
def localh_home(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    home = tmp_path / "localh_home"
    monkeypatch.setenv("LOCALH_HOME", str(home))
    monkeypatch.setenv("LOCALH_WORKERS", "1")
    return home


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def linear_product() -> Callable[[np.random.Generator, int], ExactPoly]:
    """Random product of rational linear factors, hence real-rooted."""

    def build(generator: np.random.Generator, max_factors: int = 8) -> ExactPoly:
        count = int(generator.integers(1, max_factors + 1))
        poly = ExactPoly([1])
        roots: List[Fraction] = []
        for _ in range(count):
            root = Fraction(int(generator.integers(-12, 13)), int(generator.integers(1, 5)))
            roots.append(root)
            poly = poly * ExactPoly([-root, 1])
        return poly

    return build
