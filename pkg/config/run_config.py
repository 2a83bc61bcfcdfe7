"""
Run Configuration
The validated document behind every CLI command. A config file (JSON or YAML) supplies
the base document, command-line flags override it, and unknown keys are rejected.
"""

import math
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from models.errors import ConfigError
from models.region import GridSpec, Interval, PlanarGrid, Rectangle, Region
from operations.expression_operations import PiecewiseSpec
from operations.poisson_operations import BCBoundaryData, step_boundary_data
from operations.quadrature_operations import QuadratureConfig
from config.toolkit_config import toolkit_config

Command = Literal["eval", "poisson", "certify", "conjugate", "grid-info"]


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class RectangleConfig(_Section):
    """Open rectangle; a missing bound means unbounded on that side."""

    x_lo: Optional[float] = None
    x_hi: Optional[float] = None
    y_lo: Optional[float] = None
    y_hi: Optional[float] = None

    def to_rectangle(self) -> Rectangle:
        return Rectangle(
            Interval(-math.inf if self.x_lo is None else self.x_lo, math.inf if self.x_hi is None else self.x_hi),
            Interval(-math.inf if self.y_lo is None else self.y_lo, math.inf if self.y_hi is None else self.y_hi),
        )


class RegionConfig(_Section):
    omega1: RectangleConfig = Field(default_factory=RectangleConfig)
    omega2: RectangleConfig = Field(default_factory=RectangleConfig)

    def to_region(self) -> Region:
        return Region(self.omega1.to_rectangle(), self.omega2.to_rectangle())


class PlanarGridConfig(_Section):
    x: Tuple[float, float]
    y: Tuple[float, float]
    nx: int = Field(ge=2)
    ny: int = Field(ge=2)

    @field_validator("x", "y")
    @classmethod
    def _ordered(cls, value: Tuple[float, float]) -> Tuple[float, float]:
        lo, hi = value
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise ValueError(f"range needs finite lo < hi, got {list(value)}")
        return value

    def to_grid(self) -> PlanarGrid:
        return PlanarGrid(self.x, self.y, self.nx, self.ny)


class GridConfig(_Section):
    component1: PlanarGridConfig
    component2: Optional[PlanarGridConfig] = None
    diagonal: bool = False

    @model_validator(mode="after")
    def _paired(self) -> "GridConfig":
        if self.component2 is not None and not self.diagonal:
            if (self.component1.nx, self.component1.ny) != (self.component2.nx, self.component2.ny):
                raise ValueError("component grids must share nx and ny so their points can be paired")
        return self

    def to_grid_spec(self) -> GridSpec:
        first = self.component1.to_grid()
        if self.diagonal or self.component2 is None:
            return GridSpec.diagonal(first)
        return GridSpec(first, self.component2.to_grid())


class PiecewiseConfig(_Section):
    breakpoints: List[float] = Field(default_factory=list)
    pieces: List[str]
    bound: float = Field(gt=0)

    def to_spec(self) -> PiecewiseSpec:
        try:
            return PiecewiseSpec.from_text(self.breakpoints, self.pieces, self.bound)
        except ValueError as e:
            raise ConfigError(f"invalid boundary data: {e}") from e


class BoundaryConfig(_Section):
    """Boundary data per component; `preset: step` fills both with the unit step."""

    preset: Optional[Literal["step"]] = None
    b1: Optional[PiecewiseConfig] = None
    b2: Optional[PiecewiseConfig] = None

    @model_validator(mode="after")
    def _something_given(self) -> "BoundaryConfig":
        if self.preset is None and self.b1 is None:
            raise ValueError("boundary needs `preset` or `b1`")
        return self

    def to_boundary_data(self) -> BCBoundaryData:
        step = step_boundary_data() if self.preset == "step" else None
        b1 = self.b1.to_spec() if self.b1 is not None else step
        if self.b2 is not None:
            b2 = self.b2.to_spec()
        elif self.preset == "step" and self.b1 is not None:
            b2 = step
        else:
            b2 = b1
        return BCBoundaryData(b1, b2)


class QuadratureSettings(_Section):
    nodes_per_panel: Optional[int] = Field(default=None, ge=1)
    panels: Optional[int] = Field(default=None, ge=1)
    abs_tol: Optional[float] = Field(default=None, gt=0)

    def to_quadrature(self) -> QuadratureConfig:
        defaults = QuadratureConfig.from_environment()
        return QuadratureConfig(
            self.nodes_per_panel or defaults.nodes_per_panel,
            self.panels or defaults.panels,
            self.abs_tol or defaults.abs_tol,
        )


class ToleranceSettings(_Section):
    laplacian_h: Optional[float] = Field(default=None, gt=0)
    partial_h: Optional[float] = Field(default=None, gt=0)
    harmonic_tol: Optional[float] = Field(default=None, gt=0)
    mismatch_tol: Optional[float] = Field(default=None, gt=0)

    def resolved(self) -> Dict[str, float]:
        return {
            "laplacian_h": self.laplacian_h or toolkit_config.get_laplacian_h(),
            "partial_h": self.partial_h or toolkit_config.get_partial_h(),
            "harmonic_tol": self.harmonic_tol or toolkit_config.get_harmonic_tol(),
            "mismatch_tol": self.mismatch_tol or toolkit_config.get_mismatch_tol(),
        }


class ExpressionsConfig(_Section):
    """f1, f2 are holomorphic in z; u1, u2 are real in x, y."""

    f1: Optional[str] = None
    f2: Optional[str] = None
    u1: Optional[str] = None
    u2: Optional[str] = None
    part: Literal["re", "im"] = "re"

    def has_holomorphic(self) -> bool:
        return self.f1 is not None and self.f2 is not None

    def has_hyperbolic(self) -> bool:
        return self.u1 is not None and self.u2 is not None


class RunConfig(_Section):
    command: Command
    expressions: ExpressionsConfig = Field(default_factory=ExpressionsConfig)
    zeta: Optional[str] = None
    region: RegionConfig = Field(default_factory=RegionConfig)
    grid: Optional[GridConfig] = None
    boundary: Optional[BoundaryConfig] = None
    quadrature: QuadratureSettings = Field(default_factory=QuadratureSettings)
    tolerances: ToleranceSettings = Field(default_factory=ToleranceSettings)
    basepoint1: Optional[Tuple[float, float]] = None
    basepoint2: Optional[Tuple[float, float]] = None
    path: Literal["vertical-first", "horizontal-first"] = "vertical-first"
    require_harmonic: bool = False
    output: Optional[str] = None
    format: Literal["csv", "json"] = "csv"

    @model_validator(mode="after")
    def _command_inputs(self) -> "RunConfig":
        if self.command == "eval":
            if not self.expressions.has_holomorphic():
                raise ValueError("eval needs expressions f1 and f2")
            if self.zeta is None:
                raise ValueError("eval needs zeta")
        if self.command in ("poisson", "certify", "conjugate", "grid-info") and self.grid is None:
            raise ValueError(f"{self.command} needs a grid")
        if self.command == "poisson" and self.boundary is None:
            raise ValueError("poisson needs boundary data")
        if self.command == "certify" and not (self.expressions.has_holomorphic() or self.expressions.has_hyperbolic()):
            raise ValueError("certify needs f1, f2 or u1, u2")
        if self.command == "conjugate" and not self.expressions.has_hyperbolic():
            raise ValueError("conjugate needs u1 and u2")
        return self

    def basepoints(self, region: Region) -> Tuple[Tuple[float, float], Tuple[float, float]]:
        first = self.basepoint1 or region.omega1.center()
        second = self.basepoint2 or (self.basepoint1 if self.basepoint1 is not None else region.omega2.center())
        return tuple(first), tuple(second)


def load_run_config(path: str) -> Dict[str, Any]:
    """Read a JSON or YAML run document; YAML parsing covers both."""
    config_path = Path(path)
    if not config_path.is_file():
        raise ConfigError(f"config file not found: {path}")
    try:
        document = yaml.safe_load(config_path.read_text(encoding="utf-8"))
    except yaml.YAMLError as e:
        raise ConfigError(f"cannot parse config {path}: {e}") from e
    if document is None:
        return {}
    if not isinstance(document, dict):
        raise ConfigError(f"config {path} must hold a mapping at the top level")
    return document


def merge_overrides(document: Dict[str, Any], overrides: Dict[str, Any]) -> Dict[str, Any]:
    """Deep-merge `overrides` into `document`; None values leave the document untouched."""
    merged = dict(document)
    for key, value in overrides.items():
        if value is None:
            continue
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = merge_overrides(merged[key], value)
        elif isinstance(value, dict):
            pruned = merge_overrides({}, value)
            if pruned:
                merged[key] = pruned
        else:
            merged[key] = value
    return merged


def build_run_config(document: Dict[str, Any]) -> RunConfig:
    try:
        return RunConfig.model_validate(document)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in error['loc']) or 'config'}: {error['msg']}" for error in e.errors()
        )
        raise ConfigError(f"invalid run configuration: {problems}") from e
