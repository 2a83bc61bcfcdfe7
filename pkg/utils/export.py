"""
Result Export
Grid results go to CSV through pandas or to a single JSON document with `meta` and `rows`.
Floats keep 17 significant digits so every value round-trips exactly.
"""
import json
import os
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Sequence

import numpy as np
import pandas as pd

from config import toolkit_config
from utils.logger import console_info

POISSON_COLUMNS = ("x1", "y1", "x2", "y2", "u1", "u2")
CONJUGATE_COLUMNS = ("x1", "y1", "u1", "u1_conj", "x2", "y2", "u2", "u2_conj")

CSV_FLOAT_FORMAT = "%.17g"


def resolve_output_path(output: Optional[str], default_name: str) -> Path:
    """Bare file names (and a missing --output) land in BICOMPLEX_OUTPUT_DIR."""
    name = output or default_name
    path = Path(name)
    if path.parent == Path("."):
        path = Path(toolkit_config.get_output_dir()) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def _to_builtin(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, Mapping):
        return {key: _to_builtin(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_to_builtin(item) for item in value]
    return value


def build_frame(columns: Mapping[str, np.ndarray], order: Sequence[str]) -> pd.DataFrame:
    missing = [name for name in order if name not in columns]
    if missing:
        raise KeyError(f"result is missing column(s) {missing}")
    return pd.DataFrame({name: np.asarray(columns[name], dtype=float) for name in order})


def render_csv(frame: pd.DataFrame, meta: Optional[Mapping[str, Any]] = None) -> str:
    """CSV text; `meta` entries become leading `# key=value` comment lines."""
    header = ""
    if meta:
        header = "".join(f"# {key}={json.dumps(_to_builtin(value))}\n" for key, value in meta.items())
    return header + frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")


def render_json(frame: pd.DataFrame, meta: Optional[Mapping[str, Any]] = None) -> str:
    rows = [{name: float(value) for name, value in row.items()} for row in frame.to_dict(orient="records")]
    return json.dumps({"meta": _to_builtin(dict(meta or {})), "rows": rows}, indent=2) + "\n"


def write_table(columns: Mapping[str, np.ndarray], order: Sequence[str], path: Path, fmt: str,
                meta: Optional[Mapping[str, Any]] = None) -> Path:
    frame = build_frame(columns, order)
    text = render_csv(frame, meta) if fmt == "csv" else render_json(frame, meta)
    path.write_text(text, encoding="utf-8", newline="")
    console_info(f"wrote {len(frame)} rows to {path}", "Export")
    return path


def write_document(document: Dict[str, Any], path: Path) -> Path:
    path.write_text(json.dumps(_to_builtin(document), indent=2) + "\n", encoding="utf-8", newline="")
    console_info(f"wrote report to {path}", "Export")
    return path


def default_name(command: str, fmt: str) -> str:
    return f"{command.replace('-', '_')}{os.extsep}{fmt}"
