"""
Builders shared by the command plugins: turn the expression section of a RunConfig
into function objects over the configured region.
"""

from config.run_config import RunConfig
from models.region import Region
from operations.holomorphic_operations import BCHoloFn, HyperbolicFnPair, Part, holomorphic_operations


def holomorphic_input(config: RunConfig, region: Region) -> BCHoloFn:
    expressions = config.expressions
    return BCHoloFn.from_text(expressions.f1, expressions.f2, region)


def hyperbolic_input(config: RunConfig, region: Region) -> HyperbolicFnPair:
    """u1, u2 when given, otherwise H-Re or H-Im of the holomorphic pair."""
    expressions = config.expressions
    if expressions.has_hyperbolic():
        return HyperbolicFnPair.from_text(expressions.u1, expressions.u2, region)
    part = Part.RE if expressions.part == "re" else Part.IM
    return holomorphic_operations.as_hyperbolic_fn(holomorphic_input(config, region), part)
