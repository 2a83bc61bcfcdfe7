"""
Harmonic Operations
Bicomplex Laplacian, harmonicity certification, hyperbolic harmonic conjugates and the
reconstruction of a BC-holomorphic function from its hyperbolic real part.
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

import numpy as np

from config import toolkit_config
from models.bicomplex import Bicomplex, Hyperbolic, render_standard
from models.errors import NotHarmonic, OutOfDomain
from models.region import GridSpec, PlanarGrid, Rectangle
from operations.holomorphic_operations import BCHoloFn, HyperbolicFnPair
from operations.quadrature_operations import (
    CONJUGATE_NODES,
    CONJUGATE_PANELS_PER_UNIT,
    panels_for_length,
    segment_rule,
)
from utils.logger import console_debug, console_info, console_telemetry_event

MODULE = "HarmonicOps"

VERTICAL_FIRST = "vertical-first"
HORIZONTAL_FIRST = "horizontal-first"
PATHS = (VERTICAL_FIRST, HORIZONTAL_FIRST)

# points per quadrature batch when evaluating conjugates over a grid
BATCH_SIZE = 256

PlanarPoint = Tuple[float, float]


def _five_point(evaluate, x, y, h: float):
    """(f(x+h,y) + f(x-h,y) + f(x,y+h) + f(x,y-h) - 4 f(x,y)) / h^2, vectorised."""
    return (
        evaluate(x + h, y) + evaluate(x - h, y) + evaluate(x, y + h) + evaluate(x, y - h) - 4 * evaluate(x, y)
    ) / (h * h)


def _require_stencil(rectangle: Rectangle, x, y, h: float, index: int):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if not (rectangle.contains(x - h, y) and rectangle.contains(x + h, y)
            and rectangle.contains(x, y - h) and rectangle.contains(x, y + h)):
        raise OutOfDomain(f"Laplacian stencil with h={h} leaves Omega{index} {rectangle}")


def _positive_step(h: float, name: str = "h") -> float:
    h = float(h)
    if not h > 0:
        raise ValueError(f"{name} must be positive, got {h}")
    return h


@dataclass(frozen=True)
class LaplacianReport:
    point: Bicomplex
    residual: Union[Hyperbolic, Bicomplex]
    step: float
    tol: float
    verdict: bool

    def component_residuals(self) -> Tuple[float, float]:
        if isinstance(self.residual, Hyperbolic):
            return abs(self.residual.eta1), abs(self.residual.eta2)
        return abs(self.residual.zeta1), abs(self.residual.zeta2)

    def to_dict(self) -> dict:
        residual1, residual2 = self.component_residuals()
        return {
            "point": render_standard(self.point),
            "residual1": residual1,
            "residual2": residual2,
            "h": self.step,
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class HarmonicityReport:
    """Grid-wide harmonicity verdict; passes only when both components pass."""

    max_residual: Hyperbolic
    h: float
    tol: float
    component_pass: Tuple[bool, bool]
    points: int
    refinement_ratio: Optional[Hyperbolic] = None

    @property
    def verdict(self) -> bool:
        return all(self.component_pass)

    def to_dict(self) -> dict:
        document = {
            "residual1": self.max_residual.eta1,
            "residual2": self.max_residual.eta2,
            "h": self.h,
            "tol": self.tol,
            "points": self.points,
            "component1_pass": self.component_pass[0],
            "component2_pass": self.component_pass[1],
            "verdict": self.verdict,
        }
        if self.refinement_ratio is not None:
            document["refinement_ratio1"] = self.refinement_ratio.eta1
            document["refinement_ratio2"] = self.refinement_ratio.eta2
        return document


@dataclass(frozen=True)
class ConjugateFn:
    """
    Hyperbolic harmonic conjugate u* of `base`, realised by line integrals.

    Each component integrates -u_y dx + u_x dy along an axis-aligned path from
    its basepoint, so u*(basepoint_i) = 0.
    """

    base: HyperbolicFnPair
    basepoint1: PlanarPoint
    basepoint2: PlanarPoint
    path: str = VERTICAL_FIRST
    partial_h: float = 1e-4
    per_unit: int = field(default=CONJUGATE_PANELS_PER_UNIT)

    def __post_init__(self):
        if self.path not in PATHS:
            raise ValueError(f"path must be one of {PATHS}, got {self.path!r}")
        _positive_step(self.partial_h, "partial_h")
        for index in (1, 2):
            x0, y0 = self.basepoint(index)
            if not self.base.rectangle(index).contains(x0, y0):
                raise OutOfDomain(f"basepoint{index} ({x0}, {y0}) lies outside Omega{index} {self.base.rectangle(index)}")

    def basepoint(self, index: int) -> PlanarPoint:
        return self.basepoint1 if index == 1 else self.basepoint2

    def _partial_x(self, index: int, x, y):
        h = self.partial_h
        return (self.base.evaluate(index, x + h, y) - self.base.evaluate(index, x - h, y)) / (2 * h)

    def _partial_y(self, index: int, x, y):
        h = self.partial_h
        return (self.base.evaluate(index, x, y + h) - self.base.evaluate(index, x, y - h)) / (2 * h)

    def _vertical(self, index: int, x_fixed, y_from, y_to):
        """Integral of u_x(x_fixed, s) ds from y_from to y_to, per point."""
        panels = panels_for_length(float(np.max(np.abs(y_to - y_from), initial=0.0)), self.per_unit)
        nodes, weights = segment_rule(y_from, y_to, panels, CONJUGATE_NODES)
        xs = np.broadcast_to(x_fixed[:, None], nodes.shape)
        return np.sum(weights * self._partial_x(index, xs, nodes), axis=1)

    def _horizontal(self, index: int, y_fixed, x_from, x_to):
        """Integral of -u_y(s, y_fixed) ds from x_from to x_to, per point."""
        panels = panels_for_length(float(np.max(np.abs(x_to - x_from), initial=0.0)), self.per_unit)
        nodes, weights = segment_rule(x_from, x_to, panels, CONJUGATE_NODES)
        ys = np.broadcast_to(y_fixed[:, None], nodes.shape)
        return -np.sum(weights * self._partial_y(index, nodes, ys), axis=1)

    def _batch(self, index: int, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x0, y0 = self.basepoint(index)
        x0s = np.full_like(x, x0)
        y0s = np.full_like(y, y0)
        if self.path == VERTICAL_FIRST:
            return self._vertical(index, x0s, y0s, y) + self._horizontal(index, y, x0s, x)
        return self._horizontal(index, y0s, x0s, x) + self._vertical(index, x, y0s, y)

    def evaluate(self, index: int, x, y):
        """u*_index at (x, y); scalars in, float out, arrays in, array out."""
        scalar = np.ndim(x) == 0 and np.ndim(y) == 0
        x_arr, y_arr = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        shape = x_arr.shape
        x_flat, y_flat = x_arr.ravel(), y_arr.ravel()
        rectangle = self.base.rectangle(index)
        if not rectangle.contains(x_flat, y_flat):
            raise OutOfDomain(f"conjugate point(s) outside Omega{index} {rectangle}")
        values = np.empty_like(x_flat)
        for start in range(0, x_flat.size, BATCH_SIZE):
            stop = start + BATCH_SIZE
            values[start:stop] = self._batch(index, x_flat[start:stop], y_flat[start:stop])
        return float(values[0]) if scalar else values.reshape(shape)

    def __call__(self, zeta: Bicomplex) -> Hyperbolic:
        return Hyperbolic(
            self.evaluate(1, zeta.zeta1.real, zeta.zeta1.imag),
            self.evaluate(2, zeta.zeta2.real, zeta.zeta2.imag),
        )

    def as_pair(self) -> HyperbolicFnPair:
        return HyperbolicFnPair(
            lambda x, y: self.evaluate(1, x, y),
            lambda x, y: self.evaluate(2, x, y),
            self.base.domain,
            f"conj{self.base.label}",
        )


@dataclass(frozen=True)
class HolomorphicFromHyperbolic:
    """F = u + i u*, i.e. H-Re[F] = u and H-Im[F] = u*."""

    conjugate: ConjugateFn

    @property
    def base(self) -> HyperbolicFnPair:
        return self.conjugate.base

    def evaluate_component(self, index: int, z):
        z = np.asarray(z, dtype=np.complex128)
        x, y = np.real(z), np.imag(z)
        values = self.base.evaluate(index, x, y) + 1j * np.asarray(self.conjugate.evaluate(index, x, y))
        return complex(values) if np.ndim(values) == 0 else values

    def hyperbolic_real_part(self, zeta: Bicomplex) -> Hyperbolic:
        return self.base(zeta)

    def hyperbolic_imag_part(self, zeta: Bicomplex) -> Hyperbolic:
        return self.conjugate(zeta)

    def eval(self, zeta: Bicomplex) -> Bicomplex:
        real, imag = self.hyperbolic_real_part(zeta), self.hyperbolic_imag_part(zeta)
        return Bicomplex(complex(real.eta1, imag.eta1), complex(real.eta2, imag.eta2))

    __call__ = eval


class HarmonicOperations:
    """Laplacian, certification and conjugate construction over product regions."""

    def __init__(self):
        self.agent_name = MODULE

    def bc_laplacian(self, f: HyperbolicFnPair, zeta: Bicomplex, h: Optional[float] = None) -> Hyperbolic:
        """Five-point Laplacian of u1 at (x1, y1) on e1 plus that of u2 at (x2, y2) on e2."""
        h = _positive_step(toolkit_config.get_laplacian_h() if h is None else h)
        components = []
        for index, z in ((1, zeta.zeta1), (2, zeta.zeta2)):
            _require_stencil(f.rectangle(index), z.real, z.imag, h, index)
            components.append(float(_five_point(lambda x, y: f.evaluate(index, x, y), z.real, z.imag, h)))
        return Hyperbolic(*components)

    def bc_laplacian_holo(self, F: BCHoloFn, zeta: Bicomplex, h: Optional[float] = None) -> Bicomplex:
        """Laplacian of the complex-valued components; both parts of a holomorphic F give zero."""
        h = _positive_step(toolkit_config.get_laplacian_h() if h is None else h)
        components = []
        for index, z in ((1, zeta.zeta1), (2, zeta.zeta2)):
            _require_stencil(F.domain.component(index), z.real, z.imag, h, index)
            evaluate = lambda x, y, i=index: F.evaluate_component(i, x + 1j * y)
            components.append(complex(_five_point(evaluate, z.real, z.imag, h)))
        return Bicomplex(*components)

    def laplacian_report(self, f: Union[HyperbolicFnPair, BCHoloFn], zeta: Bicomplex,
                         h: Optional[float] = None, tol: Optional[float] = None) -> LaplacianReport:
        h = toolkit_config.get_laplacian_h() if h is None else h
        tol = toolkit_config.get_harmonic_tol() if tol is None else tol
        if isinstance(f, BCHoloFn):
            residual = self.bc_laplacian_holo(f, zeta, h)
        else:
            residual = self.bc_laplacian(f, zeta, h)
        if isinstance(residual, Hyperbolic):
            worst = max(abs(residual.eta1), abs(residual.eta2))
        else:
            worst = max(abs(residual.zeta1), abs(residual.zeta2))
        return LaplacianReport(zeta, residual, h, tol, worst <= tol)

    def planar_residuals(self, f: HyperbolicFnPair, index: int, grid: PlanarGrid, h: float) -> np.ndarray:
        """Five-point Laplacian of one component at every grid point."""
        grid.require_inside(f.rectangle(index), margin=h, label=f"component-{index} grid")
        x, y = grid.points()
        return _five_point(lambda xs, ys: f.evaluate(index, xs, ys), x, y, h)

    def is_planar_harmonic(self, f: HyperbolicFnPair, index: int, grid: PlanarGrid,
                           h: float, tol: float) -> Tuple[float, bool]:
        """Classical harmonicity test for a single component."""
        worst = float(np.max(np.abs(self.planar_residuals(f, index, grid, h))))
        return worst, worst <= tol

    def refinement_ratio(self, f: HyperbolicFnPair, grid: GridSpec, h: float) -> Hyperbolic:
        """
        Observed convergence factor per component.

        max|L(h) - L(h/2)| / max|L(h/2) - L(h/4)|; a second-order stencil gives about 4
        wherever truncation error dominates rounding.
        """
        ratios = []
        for index in (1, 2):
            coarse = self.planar_residuals(f, index, grid.component(index), h)
            middle = self.planar_residuals(f, index, grid.component(index), h / 2)
            fine = self.planar_residuals(f, index, grid.component(index), h / 4)
            denominator = float(np.max(np.abs(middle - fine)))
            numerator = float(np.max(np.abs(coarse - middle)))
            ratios.append(numerator / denominator if denominator > 0 else float("inf") if numerator > 0 else 1.0)
        return Hyperbolic(*ratios)

    def laplacian_error_ratio(self, f: HyperbolicFnPair, exact: Hyperbolic, zeta: Bicomplex, h: float) -> Hyperbolic:
        """error(h) / error(h/2) against a known Laplacian value."""
        coarse = abs(self.bc_laplacian(f, zeta, h) - exact)
        fine = abs(self.bc_laplacian(f, zeta, h / 2) - exact)
        return Hyperbolic(coarse.eta1 / fine.eta1, coarse.eta2 / fine.eta2)

    def is_bc_harmonic(self, f: HyperbolicFnPair, grid: GridSpec, h: Optional[float] = None,
                       tol: Optional[float] = None, with_refinement: bool = False) -> HarmonicityReport:
        """Certify harmonicity on both component grids; the verdict needs both to pass."""
        h = _positive_step(toolkit_config.get_laplacian_h() if h is None else h)
        tol = toolkit_config.get_harmonic_tol() if tol is None else float(tol)
        worst1, pass1 = self.is_planar_harmonic(f, 1, grid.component1, h, tol)
        worst2, pass2 = self.is_planar_harmonic(f, 2, grid.component2, h, tol)
        ratio = self.refinement_ratio(f, grid, h) if with_refinement else None
        report = HarmonicityReport(
            Hyperbolic(worst1, worst2), h, tol, (pass1, pass2),
            grid.component1.size + grid.component2.size, ratio,
        )
        console_telemetry_event("harmonicity_certified", report.to_dict(), self.agent_name)
        return report

    def harmonic_conjugate(self, u: HyperbolicFnPair, basepoints: Optional[Tuple[PlanarPoint, PlanarPoint]] = None,
                           partial_h: Optional[float] = None, path: str = VERTICAL_FIRST,
                           certify_grid: Optional[GridSpec] = None, h: Optional[float] = None,
                           tol: Optional[float] = None) -> ConjugateFn:
        """
        Build u* by line integrals from the basepoints.

        Args:
            u: hyperbolic function assumed harmonic on its region
            basepoints: ((x1, y1), (x2, y2)); defaults to the rectangle centres
            partial_h: central-difference step for u_x and u_y
            path: "vertical-first" or "horizontal-first"
            certify_grid: when given, u is certified first and NotHarmonic is raised on failure

        Returns:
            ConjugateFn with u*(basepoint_i) = 0 in each component
        """
        if basepoints is None:
            basepoints = (u.rectangle(1).center(), u.rectangle(2).center())
        if certify_grid is not None:
            report = self.is_bc_harmonic(u, certify_grid, h, tol)
            if not report.verdict:
                raise NotHarmonic(
                    f"{u.label or 'input'} is not bicomplex harmonic: residuals "
                    f"{report.max_residual.eta1:.3g}, {report.max_residual.eta2:.3g} exceed tol {report.tol:g}"
                )
        partial_h = toolkit_config.get_partial_h() if partial_h is None else partial_h
        conjugate = ConjugateFn(u, tuple(map(float, basepoints[0])), tuple(map(float, basepoints[1])), path, partial_h)
        console_debug(f"conjugate of {u.label} from {basepoints} along {path}", self.agent_name)
        return conjugate

    def holomorphic_from_hyperbolic(self, u: HyperbolicFnPair,
                                    basepoints: Optional[Tuple[PlanarPoint, PlanarPoint]] = None,
                                    **conjugate_options) -> HolomorphicFromHyperbolic:
        """F = [u1 e1 + u2 e2] + i [u1* e1 + u2* e2]."""
        return HolomorphicFromHyperbolic(self.harmonic_conjugate(u, basepoints, **conjugate_options))

    def conjugate_uniqueness_check(self, u: HyperbolicFnPair, basepoints_a, basepoints_b,
                                   grid: GridSpec, partial_h: Optional[float] = None) -> Hyperbolic:
        """Max deviation of u*_a - u*_b from its grid mean, per component."""
        conj_a = self.harmonic_conjugate(u, basepoints_a, partial_h)
        conj_b = self.harmonic_conjugate(u, basepoints_b, partial_h)
        deviations = []
        for index in (1, 2):
            x, y = grid.component(index).points()
            difference = conj_a.evaluate(index, x, y) - conj_b.evaluate(index, x, y)
            deviations.append(float(np.max(np.abs(difference - difference.mean()))))
        result = Hyperbolic(*deviations)
        console_info(f"conjugate uniqueness deviation {result}", self.agent_name)
        return result

    def cauchy_riemann_residual(self, u: HyperbolicFnPair, conjugate: Union[ConjugateFn, HyperbolicFnPair],
                                grid: GridSpec, h: Optional[float] = None) -> Hyperbolic:
        """Max over the grid of |u_x - v_y| and |u_y + v_x|, per component."""
        h = _positive_step(toolkit_config.get_partial_h() if h is None else h)
        residuals = []
        for index in (1, 2):
            x, y = grid.component(index).points()
            u_x = (u.evaluate(index, x + h, y) - u.evaluate(index, x - h, y)) / (2 * h)
            u_y = (u.evaluate(index, x, y + h) - u.evaluate(index, x, y - h)) / (2 * h)
            v_x = (conjugate.evaluate(index, x + h, y) - conjugate.evaluate(index, x - h, y)) / (2 * h)
            v_y = (conjugate.evaluate(index, x, y + h) - conjugate.evaluate(index, x, y - h)) / (2 * h)
            residuals.append(float(max(np.max(np.abs(u_x - v_y)), np.max(np.abs(u_y + v_x)))))
        return Hyperbolic(*residuals)


# Singleton instance
harmonic_operations = HarmonicOperations()
