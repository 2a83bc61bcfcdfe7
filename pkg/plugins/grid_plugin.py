"""
Grid Plugin
Describes the configured grid pair without computing anything on it.
"""

from typing import Any, Dict

from config.run_config import RunConfig
from models.errors import OutOfDomain
from models.region import PlanarGrid, Rectangle
from utils.logger import console_info


class GridPlugin:
    """Runs the `grid-info` command."""

    def __init__(self, debug: bool = False):
        self.debug = debug
        self.agent_name = "GridPlugin"

    def _describe(self, grid: PlanarGrid, rectangle: Rectangle, index: int) -> Dict[str, Any]:
        dx, dy = grid.spacing()
        try:
            grid.require_inside(rectangle, label=f"component-{index} grid")
            inside = True
        except OutOfDomain:
            inside = False
        return {
            "x_range": list(grid.x_range),
            "y_range": list(grid.y_range),
            "nx": grid.nx,
            "ny": grid.ny,
            "points": grid.size,
            "dx": dx,
            "dy": dy,
            "y_min": grid.y_range[0],
            "inside_region": inside,
            "poisson_ready": grid.y_range[0] > 0,
        }

    def describe(self, config: RunConfig) -> Dict[str, Any]:
        """
        Returns:
            per-component sizes, spacings and readiness flags, plus whether rows can be paired
        """
        region = config.region.to_region()
        spec = config.grid.to_grid_spec()
        info = {
            "component1": self._describe(spec.component1, region.omega1, 1),
            "component2": self._describe(spec.component2, region.omega2, 2),
            "diagonal": spec.is_diagonal(),
            "paired": (spec.component1.nx, spec.component1.ny) == (spec.component2.nx, spec.component2.ny),
        }
        info["poisson_ready"] = info["component1"]["poisson_ready"] and info["component2"]["poisson_ready"]
        if self.debug:
            console_info(f"grid info: {info}", self.agent_name)
        return info


grid_plugin = GridPlugin()
