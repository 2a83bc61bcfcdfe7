import math

import numpy as np
import pytest

from operations.quadrature_operations import (
    QuadratureConfig,
    composite_rule,
    gauss_legendre,
    panels_for_length,
    segment_rule,
    split_panels,
)


def test_gauss_legendre_weights_and_exactness():
    nodes, weights = gauss_legendre(16)
    assert weights.sum() == pytest.approx(2.0, abs=1e-14)
    # exact through degree 2n - 1
    assert np.dot(weights, nodes ** 30) == pytest.approx(2 / 31, abs=1e-14)
    assert gauss_legendre(16) is gauss_legendre(16)


def test_split_panels_proportional_with_floor_of_one():
    assert split_panels([0.0, 1.0, 3.0], 30) == [10, 20]
    assert split_panels([0.0, 1e-9, 1.0], 8) == [1, 8]


def test_composite_rule_over_sub_intervals():
    nodes, weights = composite_rule([-math.pi / 2, 0.0, math.pi / 2], [4, 4], 8)
    assert nodes.shape == weights.shape == (64,)
    assert weights.sum() == pytest.approx(math.pi, abs=1e-14)
    assert np.dot(weights, np.cos(nodes)) == pytest.approx(2.0, abs=1e-14)


def test_composite_rule_on_a_smooth_function():
    nodes, weights = composite_rule([0.0, 1.0], [4], 16)
    assert nodes.shape == weights.shape == (64,)
    assert np.dot(weights, np.exp(nodes)) == pytest.approx(math.e - 1, abs=1e-14)


def test_segment_rule_is_oriented():
    a = np.array([0.0, 1.0, 2.0])
    b = np.array([1.0, 0.0, 2.0])
    nodes, weights = segment_rule(a, b, 3, 16)
    assert nodes.shape == weights.shape == (3, 48)
    integrals = np.sum(weights * nodes ** 2, axis=1)
    assert integrals == pytest.approx([1 / 3, -1 / 3, 0.0], abs=1e-14)


def test_panels_for_length():
    assert panels_for_length(0.0) == 1
    assert panels_for_length(1.01) == 9
    assert panels_for_length(-2.0, per_unit=3) == 6


def test_quadrature_config(monkeypatch):
    with pytest.raises(ValueError):
        QuadratureConfig(nodes_per_panel=0)
    assert QuadratureConfig().refined().panels == 128
    monkeypatch.setenv("BICOMPLEX_QUAD_PANELS", "16")
    monkeypatch.setenv("BICOMPLEX_QUAD_NODES", "8")
    monkeypatch.delenv("BICOMPLEX_QUAD_ABS_TOL", raising=False)
    assert QuadratureConfig.from_environment() == QuadratureConfig(8, 16, 1e-10)
