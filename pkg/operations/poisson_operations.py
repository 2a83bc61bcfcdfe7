"""
Poisson Operations
Complex and bicomplex Poisson kernels on the upper half-plane and the quadrature engine
that extends bicomplex boundary data to a hyperbolic harmonic function.

The improper integral over the real line is mapped onto (-pi/2, pi/2) by
t = x + y tan(theta), which absorbs the kernel:

    u(x, y) = (1/pi) * integral of b(x + y tan(theta)) d(theta)
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config import toolkit_config
from models.bicomplex import Bicomplex, Hyperbolic
from models.errors import ComponentMismatch, DegenerateKernel, OutOfHalfPlane, RepresentationMismatch
from models.region import GridSpec, Interval, Rectangle, Region
from operations.expression_operations import PiecewiseSpec, eval_piecewise
from operations.holomorphic_operations import HyperbolicFnPair
from operations.quadrature_operations import QuadratureConfig, composite_rule, split_panels
from utils.logger import console_debug, console_info, console_warning

MODULE = "PoissonOps"

# panel doublings attempted before settling for the last estimate
MAX_REFINEMENTS = 6

UPPER_HALF_PLANE = Rectangle(Interval(), Interval(0.0, math.inf))


@dataclass(frozen=True)
class UpperHalfPoint:
    """(x1 + i y1) e1 + (x2 + i y2) e2 with y1, y2 > 0."""

    x1: float
    y1: float
    x2: float
    y2: float

    def __post_init__(self):
        for name in ("x1", "y1", "x2", "y2"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise OutOfHalfPlane(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)
        if not (self.y1 > 0 and self.y2 > 0):
            raise OutOfHalfPlane(f"point needs y1 > 0 and y2 > 0, got y1={self.y1}, y2={self.y2}")

    @classmethod
    def from_bicomplex(cls, zeta: Bicomplex) -> "UpperHalfPoint":
        return cls(zeta.zeta1.real, zeta.zeta1.imag, zeta.zeta2.real, zeta.zeta2.imag)

    @classmethod
    def diagonal(cls, x: float, y: float) -> "UpperHalfPoint":
        return cls(x, y, x, y)

    def component(self, index: int) -> Tuple[float, float]:
        return (self.x1, self.y1) if index == 1 else (self.x2, self.y2)

    def to_bicomplex(self) -> Bicomplex:
        return Bicomplex(complex(self.x1, self.y1), complex(self.x2, self.y2))


@dataclass(frozen=True)
class BCBoundaryData:
    """Boundary data b1(t1) e1 + b2(t2) e2 on the real lines of both components."""

    b1: PiecewiseSpec
    b2: PiecewiseSpec

    @classmethod
    def diagonal(cls, spec: PiecewiseSpec) -> "BCBoundaryData":
        return cls(spec, spec)

    def component(self, index: int) -> PiecewiseSpec:
        return self.b1 if index == 1 else self.b2

    def bounds(self) -> Hyperbolic:
        return Hyperbolic(self.b1.bound, self.b2.bound)

    def describe(self) -> dict:
        return {"b1": self.b1.describe(), "b2": self.b2.describe()}


@dataclass(frozen=True)
class TraceReport:
    """Distance between the extension and its boundary value as y decreases."""

    t1: float
    t2: float
    heights: Tuple[float, ...]
    boundary_value: Hyperbolic
    errors: Tuple[Hyperbolic, ...]
    tol: float
    monotone: bool = field(default=False)

    @property
    def final_error(self) -> Hyperbolic:
        return self.errors[-1]

    @property
    def verdict(self) -> bool:
        return self.monotone and self.final_error.max_component() <= self.tol

    def to_dict(self) -> dict:
        return {
            "t1": self.t1,
            "t2": self.t2,
            "boundary1": self.boundary_value.eta1,
            "boundary2": self.boundary_value.eta2,
            "rows": [
                {"y": y, "error1": error.eta1, "error2": error.eta2}
                for y, error in zip(self.heights, self.errors)
            ],
            "monotone": self.monotone,
            "tol": self.tol,
            "verdict": self.verdict,
        }


def step_boundary_data() -> PiecewiseSpec:
    """-1 for t < 0, 1 for t > 0."""
    return PiecewiseSpec.from_text([0.0], ["-1", "1"], 1.0)


def step_closed_form(x, y):
    """(2/pi) atan(x/y), the harmonic extension of the unit step data."""
    y_arr = np.asarray(y, dtype=float)
    if np.any(y_arr <= 0):
        raise OutOfHalfPlane(f"closed form needs y > 0, got min y={float(np.min(y_arr))}")
    values = (2 / np.pi) * np.arctan(np.asarray(x, dtype=float) / y_arr)
    return float(values) if np.ndim(values) == 0 else values


class PoissonOperations:
    """Kernels and harmonic extension on the bicomplex upper half-plane."""

    def __init__(self):
        self.agent_name = MODULE

    def complex_poisson_kernel(self, x: float, y: float) -> float:
        """P(x, y) = (1/pi) y / (x^2 + y^2)."""
        x, y = float(x), float(y)
        denominator = x * x + y * y
        if denominator == 0:
            raise DegenerateKernel("Poisson kernel is undefined at the origin")
        return y / (math.pi * denominator)

    def bc_poisson_kernel(self, *coordinates) -> Hyperbolic:
        """
        P(x1, y1) e1 + P(x2, y2) e2.

        Accepts an UpperHalfPoint, a 4-tuple, or the four coordinates directly.
        """
        if len(coordinates) == 1:
            point = coordinates[0]
            if isinstance(point, UpperHalfPoint):
                coordinates = (point.x1, point.y1, point.x2, point.y2)
            else:
                coordinates = tuple(point)
        if len(coordinates) != 4:
            raise ValueError(f"bicomplex kernel needs (x1, y1, x2, y2), got {coordinates}")
        x1, y1, x2, y2 = coordinates
        return Hyperbolic(self.complex_poisson_kernel(x1, y1), self.complex_poisson_kernel(x2, y2))

    def reduce_kernel_to_complex(self, x: float, y: float) -> float:
        """Kernel at a complex point: both idempotent components coincide with P(x, y)."""
        kernel = self.bc_poisson_kernel(x, y, x, y)
        if kernel.eta1 != kernel.eta2:
            raise ComponentMismatch(f"kernel components differ at a complex point: {kernel}")
        return kernel.eta1

    def _theta_edges(self, spec: PiecewiseSpec, x: float, y: float) -> List[float]:
        edges = [-math.pi / 2]
        for breakpoint in spec.breakpoints:
            edges.append(math.atan((breakpoint - x) / y))
        edges.append(math.pi / 2)
        return edges

    def _theta_rule(self, spec: PiecewiseSpec, x: float, y: float, panels: int, nodes: int):
        edges = self._theta_edges(spec, x, y)
        return composite_rule(edges, split_panels(edges, panels), nodes)

    def _theta_integral(self, spec: PiecewiseSpec, x: float, y: float, panels: int, nodes: int) -> float:
        thetas, weights = self._theta_rule(spec, x, y, panels, nodes)
        values = eval_piecewise(spec, x + y * np.tan(thetas))
        return float(np.dot(weights, values)) / math.pi

    def poisson_integral(self, spec: PiecewiseSpec, x: float, y: float,
                         q: Optional[QuadratureConfig] = None) -> float:
        """
        One-component harmonic extension of `spec` at (x, y).

        Panels are split at the preimages atan((s - x)/y) of the breakpoints and
        doubled until two successive estimates agree within q.abs_tol.
        """
        x, y = float(x), float(y)
        if not y > 0:
            raise OutOfHalfPlane(f"Poisson extension needs y > 0, got y={y}")
        q = q or QuadratureConfig.from_environment()
        panels = q.panels
        estimate = self._theta_integral(spec, x, y, panels, q.nodes_per_panel)
        for _ in range(MAX_REFINEMENTS):
            refined = self._theta_integral(spec, x, y, 2 * panels, q.nodes_per_panel)
            if abs(refined - estimate) <= q.abs_tol:
                return refined
            estimate, panels = refined, 2 * panels
        console_warning(
            f"quadrature at ({x}, {y}) did not reach abs_tol {q.abs_tol:g} after {panels} panels",
            self.agent_name,
        )
        return estimate

    def poisson_extend(self, data: BCBoundaryData, p: UpperHalfPoint,
                       q: Optional[QuadratureConfig] = None) -> Hyperbolic:
        """u1(x1, y1) e1 + u2(x2, y2) e2, each component an independent complex Poisson integral."""
        q = q or QuadratureConfig.from_environment()
        return Hyperbolic(
            self.poisson_integral(data.b1, p.x1, p.y1, q),
            self.poisson_integral(data.b2, p.x2, p.y2, q),
        )

    def extend_component(self, spec: PiecewiseSpec, x, y, q: Optional[QuadratureConfig] = None) -> np.ndarray:
        """Poisson integral at every (x[k], y[k])."""
        q = q or QuadratureConfig.from_environment()
        x_arr, y_arr = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        if np.any(y_arr <= 0):
            raise OutOfHalfPlane(f"Poisson grid touches y <= 0 (min y={float(np.min(y_arr))})")
        values = np.array([self.poisson_integral(spec, xi, yi, q) for xi, yi in zip(x_arr.ravel(), y_arr.ravel())])
        return values.reshape(x_arr.shape)

    def extend_on_grid(self, data: BCBoundaryData, grid: GridSpec,
                       q: Optional[QuadratureConfig] = None) -> Dict[str, np.ndarray]:
        """
        Columns x1, y1, x2, y2, u1, u2 pairing the k-th point of each component grid.

        Identical component grids and data are computed once.
        """
        grid.require_paired()
        q = q or QuadratureConfig.from_environment()
        for index in (1, 2):
            if grid.component(index).y_range[0] <= 0:
                raise OutOfHalfPlane(f"component-{index} grid touches y <= 0: y-range {grid.component(index).y_range}")
        x1, y1 = grid.component1.points()
        x2, y2 = grid.component2.points()
        u1 = self.extend_component(data.b1, x1, y1, q)
        if grid.is_diagonal() and data.b1 == data.b2:
            u2 = u1.copy()
        else:
            u2 = self.extend_component(data.b2, x2, y2, q)
        console_info(f"extended boundary data on {u1.size} paired grid points", self.agent_name)
        return {"x1": x1, "y1": y1, "x2": x2, "y2": y2, "u1": u1, "u2": u2}

    def sample_extension(self, data: BCBoundaryData, q: Optional[QuadratureConfig] = None) -> HyperbolicFnPair:
        """The extension as a hyperbolic function on the bicomplex upper half-plane."""
        q = q or QuadratureConfig.from_environment()
        return HyperbolicFnPair(
            lambda x, y: self.extend_component(data.b1, x, y, q),
            lambda x, y: self.extend_component(data.b2, x, y, q),
            Region(UPPER_HALF_PLANE, UPPER_HALF_PLANE),
            "poisson-extension",
        )

    def extension_trace_check(self, data: BCBoundaryData, t1: float, t2: float, heights: Sequence[float],
                              tol: float = 1e-2, q: Optional[QuadratureConfig] = None) -> TraceReport:
        """Compare the extension at (t1, y, t2, y) with the boundary value for decreasing y."""
        heights = tuple(float(y) for y in heights)
        if not heights or any(a <= b for a, b in zip(heights, heights[1:])):
            raise ValueError(f"heights must be a non-empty strictly decreasing sequence, got {heights}")
        boundary = Hyperbolic(eval_piecewise(data.b1, t1), eval_piecewise(data.b2, t2))
        errors = []
        for y in heights:
            value = self.poisson_extend(data, UpperHalfPoint(t1, y, t2, y), q)
            errors.append(abs(value - boundary))
            console_debug(f"trace at y={y}: {value} vs {boundary}", self.agent_name)
        slack = 1e-15
        monotone = all(
            later.eta1 <= earlier.eta1 + slack and later.eta2 <= earlier.eta2 + slack
            for earlier, later in zip(errors, errors[1:])
        )
        return TraceReport(float(t1), float(t2), heights, boundary, tuple(errors), tol, monotone)

    def represent_angle_function(self, p: UpperHalfPoint, q: Optional[QuadratureConfig] = None,
                                 tol: Optional[float] = None) -> Hyperbolic:
        """
        (2/pi) atan(x1/y1) e1 + (2/pi) atan(x2/y2) e2 by closed form, checked against the
        Poisson extension of step data in both components.
        """
        tol = toolkit_config.get_mismatch_tol() if tol is None else tol
        closed = Hyperbolic(step_closed_form(p.x1, p.y1), step_closed_form(p.x2, p.y2))
        quadrature = self.poisson_extend(BCBoundaryData.diagonal(step_boundary_data()), p, q)
        gap = abs(quadrature - closed).max_component()
        if gap > tol:
            raise RepresentationMismatch(
                f"quadrature disagrees with the closed form at {p}: gap {gap:.3g} > tol {tol:g}"
            )
        return closed


# Singleton instance
poisson_operations = PoissonOperations()
