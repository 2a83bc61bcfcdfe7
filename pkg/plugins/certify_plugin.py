"""
Certify Plugin
Laplacian certification of a hyperbolic function (or H-Re / H-Im of a holomorphic pair)
over the configured grids, written as a JSON report.
"""

from typing import Any, Dict

from config.run_config import RunConfig
from models.errors import BicomplexToolkitError
from operations.harmonic_operations import harmonic_operations
from plugins.function_inputs import hyperbolic_input
from utils.export import resolve_output_path, write_document
from utils.logger import console_error, console_info


class CertifyPlugin:
    """Runs the `certify` command."""

    def __init__(self, debug: bool = False):
        self.debug = debug
        self.agent_name = "CertifyPlugin"

    def _log_function_call(self, function_name: str, **kwargs):
        if self.debug:
            console_info(f"[{self.agent_name}] Function: {function_name}, Params: {kwargs}", self.agent_name)

    def certify(self, config: RunConfig) -> Dict[str, Any]:
        """
        Check both Laplacian components on the grids and record the h-refinement ratio.

        Returns:
            the report document; a failed verdict is data here, not an error
        """
        self._log_function_call("certify", expressions=config.expressions)
        tolerances = config.tolerances.resolved()
        try:
            region = config.region.to_region()
            u = hyperbolic_input(config, region)
            grid = config.grid.to_grid_spec()
            report = harmonic_operations.is_bc_harmonic(
                u, grid, tolerances["laplacian_h"], tolerances["harmonic_tol"], with_refinement=True
            )
        except BicomplexToolkitError as e:
            console_error(f"certify failed: {e}", self.agent_name)
            raise

        document = {"command": "certify", "function": u.label, **report.to_dict()}
        path = resolve_output_path(config.output, "certify.json")
        write_document(document, path)
        console_info(f"verdict {'pass' if report.verdict else 'fail'} for {u.label}", self.agent_name)
        return {"output": str(path), "report": document}


certify_plugin = CertifyPlugin()
