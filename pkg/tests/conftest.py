"""Shared fixtures; the repository root is put on sys.path so the flat packages import."""

import os
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from models.region import GridSpec, Interval, PlanarGrid, Rectangle, Region  # noqa: E402
from operations.expression_operations import PiecewiseSpec  # noqa: E402
from operations.poisson_operations import BCBoundaryData, step_boundary_data  # noqa: E402
from operations.quadrature_operations import QuadratureConfig  # noqa: E402


@pytest.fixture
def step_spec() -> PiecewiseSpec:
    return step_boundary_data()


@pytest.fixture
def step_data(step_spec) -> BCBoundaryData:
    return BCBoundaryData.diagonal(step_spec)


@pytest.fixture
def quadrature() -> QuadratureConfig:
    return QuadratureConfig()


@pytest.fixture
def unit_region() -> Region:
    square = Rectangle(Interval(-2, 2), Interval(-2, 2))
    return Region(square, square)


@pytest.fixture
def interior_grid() -> GridSpec:
    return GridSpec.diagonal(PlanarGrid((-1.0, 1.0), (-1.0, 1.0), 20, 20))


@pytest.fixture
def upper_grid() -> GridSpec:
    """Distinct component grids, both well above the real axis."""
    return GridSpec(
        PlanarGrid((-2.0, 2.0), (0.6, 2.0), 6, 5),
        PlanarGrid((-1.0, 3.0), (0.8, 2.5), 6, 5),
    )
