"""
Poisson Plugin
Extends bicomplex boundary data over a pair of grids and exports the paired rows.
"""

from typing import Any, Dict

from config.run_config import RunConfig
from models.errors import BicomplexToolkitError
from operations.poisson_operations import poisson_operations
from utils.export import POISSON_COLUMNS, default_name, resolve_output_path, write_table
from utils.logger import console_error, console_info, timed_event


class PoissonPlugin:
    """Runs the `poisson` command."""

    def __init__(self, debug: bool = False):
        self.debug = debug
        self.agent_name = "PoissonPlugin"

    def _log_function_call(self, function_name: str, **kwargs):
        if self.debug:
            console_info(f"[{self.agent_name}] Function: {function_name}, Params: {kwargs}", self.agent_name)

    def extend(self, config: RunConfig) -> Dict[str, Any]:
        """
        Compute u1, u2 at every paired grid point and write them out.

        Returns:
            dict with the output path, row count and the meta block written with the rows
        """
        self._log_function_call("extend", grid=config.grid, boundary=config.boundary)
        try:
            data = config.boundary.to_boundary_data()
            grid = config.grid.to_grid_spec()
            quadrature = config.quadrature.to_quadrature()
            with timed_event("poisson_extension", {"points": grid.component1.size}, self.agent_name):
                columns = poisson_operations.extend_on_grid(data, grid, quadrature)
        except BicomplexToolkitError as e:
            console_error(f"poisson failed: {e}", self.agent_name)
            raise

        meta = {
            "command": "poisson",
            "diagonal": grid.is_diagonal(),
            "points": int(columns["u1"].size),
            "boundary": data.describe(),
            "quadrature": {
                "nodes_per_panel": quadrature.nodes_per_panel,
                "panels": quadrature.panels,
                "abs_tol": quadrature.abs_tol,
            },
        }
        path = resolve_output_path(config.output, default_name("poisson", config.format))
        write_table(columns, POISSON_COLUMNS, path, config.format, meta)
        return {"output": str(path), "rows": meta["points"], "meta": meta}


poisson_plugin = PoissonPlugin()
