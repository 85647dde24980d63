"""CSV emission and the per-run manifest."""

from __future__ import annotations

import datetime as _dt
import json
import math
from pathlib import Path

import numpy as np


def _fmt(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return str(int(v))
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        v = float(v)
        if math.isnan(v):
            return "nan"
        return "%.17g" % v
    return str(v)


def emit_csv(path, header, rows) -> int:
    """Write ``rows`` under ``header``; reals get 17 significant digits. Returns the row count."""
    path = Path(path)
    header = list(header)
    lines = [",".join(header)]
    for i, row in enumerate(rows):
        row = list(row)
        if len(row) != len(header):
            raise ValueError(f"{path}: row {i} has {len(row)} fields, header has {len(header)}")
        lines.append(",".join(_fmt(v) for v in row))
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text("\n".join(lines) + "\n")
    except OSError as exc:
        raise OSError(f"could not write {path}: {exc}") from exc
    return len(lines) - 1


def read_csv(path) -> tuple[list[str], np.ndarray]:
    with open(path) as fh:
        header = fh.readline().strip().split(",")
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    return header, data


class RunWriter:
    """Collects every file a run emits so the manifest can list them.

    With ``out_dir=None`` nothing touches the disk.
    """

    def __init__(self, out_dir, config: dict, version: str):
        self.out_dir = Path(out_dir) if out_dir is not None else None
        self.config = config
        self.version = version
        self.files: list[dict] = []

    @property
    def enabled(self) -> bool:
        return self.out_dir is not None

    def csv(self, name, header, rows):
        if not self.enabled:
            return None
        n = emit_csv(self.out_dir / name, header, rows)
        self.files.append({"path": name, "rows": n})
        return self.out_dir / name

    def text(self, name, content: str):
        if not self.enabled:
            return None
        p = self.out_dir / name
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(content)
        self.files.append({"path": name, "rows": content.count("\n")})
        return p

    def finish(self, metrics: dict):
        if not self.enabled:
            return None
        self.text("config.json", json.dumps(self.config, indent=2, sort_keys=True) + "\n")
        self.text("metrics.json", json.dumps(_jsonable(metrics), indent=2, sort_keys=True) + "\n")
        manifest = {
            "config": self.config,
            "seed": self.config.get("seed"),
            "version": self.version,
            "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
            "files": self.files,
        }
        p = self.out_dir / "manifest.json"
        p.write_text(json.dumps(manifest, indent=2) + "\n")
        return p


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    return obj
