"""

Bicomplex Harmonic Toolkit - Command Line Front End

Evaluates BC-holomorphic functions, certifies bicomplex harmonicity, builds hyperbolic
harmonic conjugates and computes bicomplex Poisson extensions over grids.

"""

import argparse
import json
import logging
import os
import sys
from datetime import datetime
from typing import Any, Dict, List, Optional

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

from config import toolkit_config
from config.run_config import RunConfig, build_run_config, load_run_config, merge_overrides
from models.errors import BicomplexToolkitError, ConfigError
from plugins.certify_plugin import certify_plugin
from plugins.conjugate_plugin import conjugate_plugin
from plugins.eval_plugin import eval_plugin
from plugins.grid_plugin import grid_plugin
from plugins.poisson_plugin import poisson_plugin
from utils.logger import console_error, console_info

logger = logging.getLogger(__name__)


def configure_logging(level: Optional[str] = None, log_dir: Optional[str] = None):
    """stderr always; a fresh timestamped file per run when a log directory is configured."""
    level = (level or toolkit_config.get_log_level()).upper()
    log_dir = toolkit_config.get_log_dir() if log_dir is None else log_dir
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
        log_filename = os.path.join(log_dir, f"bicomplex_toolkit_{datetime.now().strftime('%Y%m%d_%H%M%S')}.log")
        handlers.append(logging.FileHandler(log_filename, mode='w', encoding='utf-8'))

    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True  # Force reconfiguration
    )


def _float_list(text: Optional[str]) -> Optional[List[float]]:
    if text is None:
        return None
    if not text.strip():
        return []
    return [float(part) for part in text.split(",")]


def _pieces(text: Optional[str]) -> Optional[List[str]]:
    if text is None:
        return None
    return [part.strip() for part in text.split(";")]


EXPRESSION_FLAGS = frozenset(
    ["--f1", "--f2", "--u1", "--u2", "--zeta"]
    + [f"--{component}-{kind}" for component in ("b1", "b2") for kind in ("breakpoints", "pieces")]
)


def attach_expression_values(argv: List[str]) -> List[str]:
    """Join `--f1 -z` into `--f1=-z`; expression values may start with '-'."""
    joined: List[str] = []
    index = 0
    while index < len(argv):
        token = argv[index]
        if token in EXPRESSION_FLAGS and index + 1 < len(argv):
            joined.append(f"{token}={argv[index + 1]}")
            index += 2
            continue
        joined.append(token)
        index += 1
    return joined


def _pair(values) -> Optional[List[float]]:
    return list(values) if values is not None else None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON or YAML run document; flags override it")
    common.add_argument("--output", help="result file; bare names go to BICOMPLEX_OUTPUT_DIR")
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--log-level", help="overrides BICOMPLEX_LOG_LEVEL")
    common.add_argument("--debug", action="store_true", help="log plugin calls")

    functions = argparse.ArgumentParser(add_help=False)
    functions.add_argument("--f1", help="holomorphic component 1 in z")
    functions.add_argument("--f2", help="holomorphic component 2 in z")
    functions.add_argument("--u1", help="real component 1 in x, y")
    functions.add_argument("--u2", help="real component 2 in x, y")
    functions.add_argument("--part", choices=("re", "im"), help="H-Re or H-Im of (f1, f2) when u1, u2 are absent")

    region = argparse.ArgumentParser(add_help=False)
    for name in ("omega1-x", "omega1-y", "omega2-x", "omega2-y"):
        region.add_argument(f"--{name}", nargs=2, type=float, metavar=("LO", "HI"))

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--grid-x", nargs=2, type=float, metavar=("LO", "HI"))
    grid.add_argument("--grid-y", nargs=2, type=float, metavar=("LO", "HI"))
    grid.add_argument("--nx", type=int)
    grid.add_argument("--ny", type=int)
    grid.add_argument("--grid2-x", nargs=2, type=float, metavar=("LO", "HI"))
    grid.add_argument("--grid2-y", nargs=2, type=float, metavar=("LO", "HI"))
    grid.add_argument("--grid2-nx", type=int)
    grid.add_argument("--grid2-ny", type=int)
    grid.add_argument("--diagonal", action="store_true", default=None, help="use grid 1 for both components")

    tolerances = argparse.ArgumentParser(add_help=False)
    tolerances.add_argument("--laplacian-h", type=float)
    tolerances.add_argument("--partial-h", type=float)
    tolerances.add_argument("--harmonic-tol", type=float)

    parser = argparse.ArgumentParser(
        prog="bicomplex-toolkit",
        description="Bicomplex harmonic functions: evaluation, certification, conjugates and Poisson extension.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    eval_parser = subparsers.add_parser("eval", parents=[common, functions, region], help="evaluate F, F', H-Re, H-Im")
    eval_parser.add_argument("--zeta", help="'a + bi + cj + dij' or '[z1 | z2]'")

    poisson_parser = subparsers.add_parser("poisson", parents=[common, grid], help="Poisson extension over a grid")
    poisson_parser.add_argument("--preset", choices=("step",), help="unit step data in both components")
    for component in ("b1", "b2"):
        poisson_parser.add_argument(f"--{component}-breakpoints", help="comma separated, increasing")
        poisson_parser.add_argument(f"--{component}-pieces", help="semicolon separated expressions in t")
        poisson_parser.add_argument(f"--{component}-bound", type=float)
    poisson_parser.add_argument("--nodes", type=int, help="Gauss-Legendre nodes per panel")
    poisson_parser.add_argument("--panels", type=int)
    poisson_parser.add_argument("--abs-tol", type=float)

    subparsers.add_parser(
        "certify", parents=[common, functions, region, grid, tolerances], help="Laplacian certification"
    )

    conjugate_parser = subparsers.add_parser(
        "conjugate", parents=[common, functions, region, grid, tolerances], help="hyperbolic harmonic conjugate"
    )
    conjugate_parser.add_argument("--basepoint1", nargs=2, type=float, metavar=("X", "Y"))
    conjugate_parser.add_argument("--basepoint2", nargs=2, type=float, metavar=("X", "Y"))
    conjugate_parser.add_argument("--path", choices=("vertical-first", "horizontal-first"))
    conjugate_parser.add_argument("--require-harmonic", action="store_true", default=None)

    subparsers.add_parser("grid-info", parents=[common, region, grid], help="describe a grid pair")
    return parser


def overrides_from_args(args: argparse.Namespace) -> Dict[str, Any]:
    """Flags as a partial run document; unset flags are None and leave the config file alone."""
    def get(name: str):
        return getattr(args, name, None)

    def rectangle(prefix: str) -> Dict[str, Any]:
        x, y = get(f"{prefix}_x"), get(f"{prefix}_y")
        return {
            "x_lo": x[0] if x else None, "x_hi": x[1] if x else None,
            "y_lo": y[0] if y else None, "y_hi": y[1] if y else None,
        }

    second_grid = None
    if any(get(name) is not None for name in ("grid2_x", "grid2_y", "grid2_nx", "grid2_ny")):
        second_grid = {
            "x": _pair(get("grid2_x") or get("grid_x")),
            "y": _pair(get("grid2_y") or get("grid_y")),
            "nx": get("grid2_nx") or get("nx"),
            "ny": get("grid2_ny") or get("ny"),
        }

    def boundary(component: str) -> Dict[str, Any]:
        return {
            "breakpoints": _float_list(get(f"{component}_breakpoints")),
            "pieces": _pieces(get(f"{component}_pieces")),
            "bound": get(f"{component}_bound"),
        }

    return {
        "command": args.command,
        "expressions": {"f1": get("f1"), "f2": get("f2"), "u1": get("u1"), "u2": get("u2"), "part": get("part")},
        "zeta": get("zeta"),
        "region": {"omega1": rectangle("omega1"), "omega2": rectangle("omega2")},
        "grid": {
            "component1": {"x": _pair(get("grid_x")), "y": _pair(get("grid_y")), "nx": get("nx"), "ny": get("ny")},
            "component2": second_grid,
            "diagonal": get("diagonal"),
        },
        "boundary": {"preset": get("preset"), "b1": boundary("b1"), "b2": boundary("b2")},
        "quadrature": {"nodes_per_panel": get("nodes"), "panels": get("panels"), "abs_tol": get("abs_tol")},
        "tolerances": {
            "laplacian_h": get("laplacian_h"),
            "partial_h": get("partial_h"),
            "harmonic_tol": get("harmonic_tol"),
        },
        "basepoint1": _pair(get("basepoint1")),
        "basepoint2": _pair(get("basepoint2")),
        "path": get("path"),
        "require_harmonic": get("require_harmonic"),
        "output": get("output"),
        "format": get("format"),
    }


def resolve_run_config(args: argparse.Namespace) -> RunConfig:
    invalid = [name for name, ok in toolkit_config.validate_configuration().items() if not ok]
    if invalid:
        raise ConfigError(f"invalid BICOMPLEX_* environment setting(s): {', '.join(invalid)}")
    document = load_run_config(args.config) if args.config else {}
    try:
        overrides = overrides_from_args(args)
    except ValueError as e:
        raise ConfigError(f"invalid flag value: {e}") from e
    return build_run_config(merge_overrides(document, overrides))


def _print_eval(result: Dict[str, Any], fmt: str):
    if fmt == "json":
        print(json.dumps(result, indent=2))
        return
    for label, rendered in result.items():
        print(f"{label:<6} = {rendered['standard']}    {rendered['idempotent']}")


def run_command(config: RunConfig, debug: bool = False) -> int:
    """Dispatch to the command plugin; returns the exit code for a completed run."""
    for plugin in (eval_plugin, poisson_plugin, certify_plugin, conjugate_plugin, grid_plugin):
        plugin.debug = debug

    if config.command == "eval":
        _print_eval(eval_plugin.evaluate(config), config.format)
        return 0
    if config.command == "poisson":
        print(poisson_plugin.extend(config)["output"])
        return 0
    if config.command == "certify":
        result = certify_plugin.certify(config)
        report = result["report"]
        print(f"{'PASS' if report['verdict'] else 'FAIL'} residual1={report['residual1']:.3g} "
              f"residual2={report['residual2']:.3g} -> {result['output']}")
        return 0 if report["verdict"] else 4
    if config.command == "conjugate":
        result = conjugate_plugin.conjugate(config)
        meta = result["meta"]
        print(f"{result['output']} (CR residual {meta['cr_residual1']:.3g}, {meta['cr_residual2']:.3g})")
        return 0
    print(json.dumps(grid_plugin.describe(config), indent=2))
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(attach_expression_values(sys.argv[1:] if argv is None else list(argv)))
    configure_logging(args.log_level)
    console_info(f"🚀 {args.command} starting", "Main")
    if args.debug:
        console_info(toolkit_config.get_configuration_summary(), "Main")

    try:
        config = resolve_run_config(args)
        code = run_command(config, args.debug)
    except BicomplexToolkitError as e:
        console_error(f"{type(e).__name__}: {e}", "Main")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logger.exception(f"❌ Unexpected error: {e}")
        print(f"error: unexpected failure: {e}", file=sys.stderr)
        return 1

    console_info(f"✅ {args.command} finished with exit code {code}", "Main")
    return code


if __name__ == "__main__":
    sys.exit(main())
