"""
Eval Plugin
Evaluates a BC-holomorphic function, its derivative and its hyperbolic parts at one point.
"""

from typing import Any, Dict

from config.run_config import RunConfig
from models.bicomplex import Bicomplex, near_noninvertible, render_idempotent, render_standard
from models.errors import BicomplexToolkitError
from operations.expression_operations import parse_bicomplex
from operations.holomorphic_operations import holomorphic_operations
from plugins.function_inputs import holomorphic_input
from config import toolkit_config
from utils.logger import console_error, console_info, console_warning


def _rendered(value: Bicomplex) -> Dict[str, str]:
    return {"standard": render_standard(value), "idempotent": render_idempotent(value)}


class EvalPlugin:
    """Runs the `eval` command."""

    def __init__(self, debug: bool = False):
        self.debug = debug
        self.agent_name = "EvalPlugin"

    def _log_function_call(self, function_name: str, **kwargs):
        if self.debug:
            console_info(f"[{self.agent_name}] Function: {function_name}, Params: {kwargs}", self.agent_name)

    def evaluate(self, config: RunConfig) -> Dict[str, Any]:
        """
        Evaluate F, F', H-Re[F] and H-Im[F] at config.zeta.

        Returns:
            dict of rendered values, each in standard and idempotent notation
        """
        self._log_function_call("evaluate", f1=config.expressions.f1, f2=config.expressions.f2, zeta=config.zeta)
        try:
            zeta = parse_bicomplex(config.zeta)
            F = holomorphic_input(config, config.region.to_region())
            value = holomorphic_operations.eval_holo(F, zeta)
            derivative = holomorphic_operations.derivative(F, zeta)
            real_part, imag_part = holomorphic_operations.hyperbolic_decompose(F, zeta)
        except BicomplexToolkitError as e:
            console_error(f"eval failed: {e}", self.agent_name)
            raise

        if near_noninvertible(value, toolkit_config.get_noninvertible_eps()):
            console_warning(f"F(zeta) = {render_idempotent(value)} is (nearly) a zero divisor", self.agent_name)

        return {
            "zeta": _rendered(zeta),
            "F": _rendered(value),
            "F'": _rendered(derivative),
            "H-Re": _rendered(real_part.to_bicomplex()),
            "H-Im": _rendered(imag_part.to_bicomplex()),
        }


eval_plugin = EvalPlugin()
