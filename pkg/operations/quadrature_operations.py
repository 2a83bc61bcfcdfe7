"""
Quadrature Operations
Composite Gauss-Legendre rules shared by conjugate line integrals and Poisson integrals.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np

from config import toolkit_config

CONJUGATE_NODES = 16
CONJUGATE_PANELS_PER_UNIT = 8


@dataclass(frozen=True)
class QuadratureConfig:
    nodes_per_panel: int = 32
    panels: int = 64
    abs_tol: float = 1e-10

    def __post_init__(self):
        if self.nodes_per_panel < 1 or self.panels < 1 or not self.abs_tol > 0:
            raise ValueError(f"quadrature settings must be positive: {self}")

    @classmethod
    def from_environment(cls) -> "QuadratureConfig":
        return cls(
            nodes_per_panel=toolkit_config.get_quadrature_nodes(),
            panels=toolkit_config.get_quadrature_panels(),
            abs_tol=toolkit_config.get_quadrature_abs_tol(),
        )

    def refined(self) -> "QuadratureConfig":
        return QuadratureConfig(self.nodes_per_panel, self.panels * 2, self.abs_tol)


@lru_cache(maxsize=32)
def gauss_legendre(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Nodes and weights on [-1, 1]."""
    nodes, weights = np.polynomial.legendre.leggauss(n)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def panels_for_length(length: float, per_unit: int = CONJUGATE_PANELS_PER_UNIT) -> int:
    return max(1, math.ceil(per_unit * abs(length)))


def split_panels(edges: Sequence[float], total_panels: int) -> List[int]:
    """Distribute panels over consecutive sub-intervals in proportion to length, at least one each."""
    lengths = np.diff(np.asarray(edges, dtype=float))
    span = float(lengths.sum())
    return [max(1, int(round(total_panels * length / span))) for length in lengths]


def composite_rule(edges: Sequence[float], panel_counts: Sequence[int], n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of a composite n-point rule over the sub-intervals of `edges`."""
    base_nodes, base_weights = gauss_legendre(n)
    all_nodes, all_weights = [], []
    for (a, b), count in zip(zip(edges[:-1], edges[1:]), panel_counts):
        panel_edges = np.linspace(a, b, count + 1)
        half = 0.5 * np.diff(panel_edges)
        mid = 0.5 * (panel_edges[:-1] + panel_edges[1:])
        all_nodes.append((mid[:, None] + half[:, None] * base_nodes[None, :]).ravel())
        all_weights.append((half[:, None] * base_weights[None, :]).ravel())
    return np.concatenate(all_nodes), np.concatenate(all_weights)


def segment_rule(a: np.ndarray, b: np.ndarray, panels: int, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    One composite rule per segment [a_k, b_k], all with the same panel count.

    Returns nodes and weights of shape (len(a), panels * n); reversed segments
    get negative weights so the result is the oriented integral.
    """
    a = np.atleast_1d(np.asarray(a, dtype=float))
    b = np.atleast_1d(np.asarray(b, dtype=float))
    base_nodes, base_weights = gauss_legendre(n)
    fractions = np.linspace(0.0, 1.0, panels + 1)
    starts = a[:, None] + (b - a)[:, None] * fractions[None, :-1]
    half = 0.5 * (b - a)[:, None] / panels
    mid = starts + half
    nodes = (mid[:, :, None] + half[:, :, None] * base_nodes[None, None, :]).reshape(len(a), -1)
    weights = (half[:, :, None] * base_weights[None, None, :] * np.ones((1, panels, 1))).reshape(len(a), -1)
    return nodes, weights
