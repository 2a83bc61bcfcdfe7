"""
Conjugate Plugin
Builds the hyperbolic harmonic conjugate of u over the grids and exports u and u*
together with the Cauchy-Riemann residual.
"""

from typing import Any, Dict

from config.run_config import RunConfig
from models.errors import BicomplexToolkitError
from operations.harmonic_operations import harmonic_operations
from plugins.function_inputs import hyperbolic_input
from utils.export import CONJUGATE_COLUMNS, default_name, resolve_output_path, write_table
from utils.logger import console_error, console_info, timed_event


class ConjugatePlugin:
    """Runs the `conjugate` command."""

    def __init__(self, debug: bool = False):
        self.debug = debug
        self.agent_name = "ConjugatePlugin"

    def _log_function_call(self, function_name: str, **kwargs):
        if self.debug:
            console_info(f"[{self.agent_name}] Function: {function_name}, Params: {kwargs}", self.agent_name)

    def conjugate(self, config: RunConfig) -> Dict[str, Any]:
        """
        Args:
            config: validated run document with u1, u2 and a grid

        Returns:
            dict with the output path and the meta block, which carries the CR residual
        """
        self._log_function_call("conjugate", expressions=config.expressions, path=config.path)
        tolerances = config.tolerances.resolved()
        try:
            region = config.region.to_region()
            u = hyperbolic_input(config, region)
            grid = config.grid.to_grid_spec()
            grid.require_paired()
            basepoints = config.basepoints(region)
            conjugate = harmonic_operations.harmonic_conjugate(
                u,
                basepoints,
                partial_h=tolerances["partial_h"],
                path=config.path,
                certify_grid=grid if config.require_harmonic else None,
                h=tolerances["laplacian_h"],
                tol=tolerances["harmonic_tol"],
            )
            with timed_event("conjugate_grid", {"points": grid.component1.size}, self.agent_name):
                x1, y1 = grid.component1.points()
                x2, y2 = grid.component2.points()
                columns = {
                    "x1": x1, "y1": y1, "u1": u.evaluate(1, x1, y1), "u1_conj": conjugate.evaluate(1, x1, y1),
                    "x2": x2, "y2": y2, "u2": u.evaluate(2, x2, y2), "u2_conj": conjugate.evaluate(2, x2, y2),
                }
                residual = harmonic_operations.cauchy_riemann_residual(u, conjugate, grid, tolerances["partial_h"])
        except BicomplexToolkitError as e:
            console_error(f"conjugate failed: {e}", self.agent_name)
            raise

        meta = {
            "command": "conjugate",
            "function": u.label,
            "basepoint1": list(conjugate.basepoint1),
            "basepoint2": list(conjugate.basepoint2),
            "path": conjugate.path,
            "cr_residual1": residual.eta1,
            "cr_residual2": residual.eta2,
        }
        path = resolve_output_path(config.output, default_name("conjugate", config.format))
        write_table(columns, CONJUGATE_COLUMNS, path, config.format, meta)
        return {"output": str(path), "rows": int(x1.size), "meta": meta}


conjugate_plugin = ConjugatePlugin()
