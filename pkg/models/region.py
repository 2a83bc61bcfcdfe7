"""
Regions and Grids
Product regions Omega1 e1 (+) Omega2 e2 built from open axis-aligned rectangles,
and the pair of planar sampling grids used by certification, conjugates and Poisson runs.
"""

import math
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from models.bicomplex import Bicomplex
from models.errors import OutOfDomain


@dataclass(frozen=True)
class Interval:
    """Open interval (lo, hi); either end may be infinite."""

    lo: float = -math.inf
    hi: float = math.inf

    def __post_init__(self):
        object.__setattr__(self, "lo", float(self.lo))
        object.__setattr__(self, "hi", float(self.hi))
        if math.isnan(self.lo) or math.isnan(self.hi) or not self.lo < self.hi:
            raise ValueError(f"interval needs lo < hi, got ({self.lo}, {self.hi})")

    def contains(self, value) -> bool:
        return bool(np.all((value > self.lo) & (value < self.hi)))

    def midpoint(self) -> float:
        if math.isfinite(self.lo) and math.isfinite(self.hi):
            return (self.lo + self.hi) / 2
        if math.isfinite(self.lo):
            return self.lo + 1.0
        if math.isfinite(self.hi):
            return self.hi - 1.0
        return 0.0


@dataclass(frozen=True)
class Rectangle:
    """Open rectangle x-interval times y-interval in the complex plane."""

    x: Interval = field(default_factory=Interval)
    y: Interval = field(default_factory=Interval)

    def contains(self, x, y) -> bool:
        return self.x.contains(x) and self.y.contains(y)

    def contains_point(self, z: complex) -> bool:
        return self.contains(z.real, z.imag)

    def center(self) -> Tuple[float, float]:
        return self.x.midpoint(), self.y.midpoint()


@dataclass(frozen=True)
class Region:
    """Omega = Omega1 e1 (+) Omega2 e2."""

    omega1: Rectangle = field(default_factory=Rectangle)
    omega2: Rectangle = field(default_factory=Rectangle)

    def component(self, index: int) -> Rectangle:
        return self.omega1 if index == 1 else self.omega2

    def contains(self, zeta: Bicomplex) -> bool:
        return self.omega1.contains_point(zeta.zeta1) and self.omega2.contains_point(zeta.zeta2)

    def require(self, zeta: Bicomplex):
        if not self.omega1.contains_point(zeta.zeta1):
            raise OutOfDomain(f"zeta1 = {zeta.zeta1} lies outside Omega1 {self.omega1}")
        if not self.omega2.contains_point(zeta.zeta2):
            raise OutOfDomain(f"zeta2 = {zeta.zeta2} lies outside Omega2 {self.omega2}")


@dataclass(frozen=True)
class PlanarGrid:
    """Uniform nx-by-ny grid over [x_lo, x_hi] x [y_lo, y_hi]."""

    x_range: Tuple[float, float]
    y_range: Tuple[float, float]
    nx: int
    ny: int

    def __post_init__(self):
        object.__setattr__(self, "x_range", (float(self.x_range[0]), float(self.x_range[1])))
        object.__setattr__(self, "y_range", (float(self.y_range[0]), float(self.y_range[1])))
        for name, (lo, hi) in (("x", self.x_range), ("y", self.y_range)):
            if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
                raise ValueError(f"grid {name}-range needs finite lo < hi, got ({lo}, {hi})")
        if self.nx < 2 or self.ny < 2:
            raise ValueError(f"grid needs nx, ny >= 2, got {self.nx} x {self.ny}")

    @property
    def size(self) -> int:
        return self.nx * self.ny

    def axes(self) -> Tuple[np.ndarray, np.ndarray]:
        return np.linspace(*self.x_range, self.nx), np.linspace(*self.y_range, self.ny)

    def points(self) -> Tuple[np.ndarray, np.ndarray]:
        """Flattened (x, y) coordinates, row-major by y then x."""
        xs, ys = self.axes()
        x_grid, y_grid = np.meshgrid(xs, ys)
        return x_grid.ravel(), y_grid.ravel()

    def spacing(self) -> Tuple[float, float]:
        return (
            (self.x_range[1] - self.x_range[0]) / (self.nx - 1),
            (self.y_range[1] - self.y_range[0]) / (self.ny - 1),
        )

    def require_inside(self, rectangle: Rectangle, margin: float = 0.0, label: str = "grid"):
        """Every grid point, widened by `margin`, must lie inside the open rectangle."""
        (x_lo, x_hi), (y_lo, y_hi) = self.x_range, self.y_range
        if not (rectangle.x.lo < x_lo - margin and x_hi + margin < rectangle.x.hi
                and rectangle.y.lo < y_lo - margin and y_hi + margin < rectangle.y.hi):
            raise OutOfDomain(f"{label} {self.x_range} x {self.y_range} with margin {margin} leaves {rectangle}")


@dataclass(frozen=True)
class GridSpec:
    """One planar grid per idempotent component."""

    component1: PlanarGrid
    component2: PlanarGrid

    @classmethod
    def diagonal(cls, grid: PlanarGrid) -> "GridSpec":
        return cls(grid, grid)

    def component(self, index: int) -> PlanarGrid:
        return self.component1 if index == 1 else self.component2

    def is_diagonal(self) -> bool:
        return self.component1 == self.component2

    def require_paired(self):
        """Rows pair the k-th point of each grid, so shapes must agree."""
        if (self.component1.nx, self.component1.ny) != (self.component2.nx, self.component2.ny):
            raise ValueError(
                f"component grids must share a shape to be paired: "
                f"{self.component1.nx}x{self.component1.ny} vs {self.component2.nx}x{self.component2.ny}"
            )
