"""
CableQSim - Output Manager

Writes run artifacts: CSV tables with a comment header, JSON reports and the
run manifest. Every float goes through the same 9-significant-digit
formatting so that repeated runs give identical bytes.
"""

from __future__ import annotations

import csv
import hashlib
import json
import logging
import math
from pathlib import Path
from threading import Lock

import numpy as np
import qutip
import scipy

from config import APP_NAME, CSV_DIGITS, VERSION
from errors import ConfigError

log = logging.getLogger(__name__)

# Resolved-config keys that must not change output bytes
VOLATILE_KEYS = ("out", "threads", "verbose")


def format_float(value: float) -> str:
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    text = format(value, f".{CSV_DIGITS}g")
    return "0" if text == "-0" else text


def format_cell(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_float(value)
    return str(value)


def round_floats(data):
    """Round every float in a JSON-like structure to CSV_DIGITS significant digits."""
    if isinstance(data, dict):
        return {str(k): round_floats(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [round_floats(v) for v in data]
    if isinstance(data, (bool, np.bool_)):
        return bool(data)
    if isinstance(data, (int, np.integer)):
        return int(data)
    if isinstance(data, (float, np.floating)):
        value = float(data)
        if not math.isfinite(value):
            return None
        return float(format_float(value))
    if isinstance(data, Path):
        return str(data)
    return data


def config_hash(config: dict) -> str:
    """First 16 hex digits of the SHA-256 of the canonical resolved configuration."""
    stable = {k: v for k, v in config.items() if k not in VOLATILE_KEYS}
    text = json.dumps(round_floats(stable), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


class OutputManager:
    """Owns the output directory of one run."""

    def __init__(self, out_dir, command: str, config: dict):
        self.out_dir = Path(out_dir)
        self.command = command
        self.config = config
        self.hash = config_hash(config)
        self.lock = Lock()
        self.written = []
        try:
            self.out_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise ConfigError(f"cannot create output directory {self.out_dir}: {e}") from e

    def artifact_path(self, name: str) -> Path:
        """Path for an output file written by someone else; it is listed in the manifest."""
        path = self.out_dir / name
        with self.lock:
            self.written.append(name)
        return path

    def write_csv(self, name: str, columns: list[str], rows) -> Path:
        """CSV with `# command`, `# config_hash` and `# columns` comment lines before the header."""
        path = self.artifact_path(name)
        with open(path, "w", newline="", encoding="utf-8") as f:
            f.write(f"# command: {self.command}\n")
            f.write(f"# config_hash: {self.hash}\n")
            f.write(f"# columns: {','.join(columns)}\n")
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(columns)
            count = 0
            for row in rows:
                writer.writerow([format_cell(v) for v in row])
                count += 1
        log.info("wrote %s (%d rows)", path, count)
        return path

    def write_json(self, name: str, data: dict) -> Path:
        path = self.artifact_path(name)
        payload = {"command": self.command, "config_hash": self.hash, **round_floats(data)}
        with open(path, "w", encoding="utf-8") as f:
            json.dump(payload, f, indent=2, sort_keys=True)
            f.write("\n")
        log.info("wrote %s", path)
        return path

    def write_manifest(self) -> Path:
        stable = {k: v for k, v in self.config.items() if k not in VOLATILE_KEYS}
        manifest = {
            "app": APP_NAME,
            "version": VERSION,
            "command": self.command,
            "config": round_floats(stable),
            "config_hash": self.hash,
            "outputs": sorted(self.written),
            "libraries": {
                "numpy": np.__version__,
                "scipy": scipy.__version__,
                "qutip": qutip.__version__,
            },
        }
        path = self.out_dir / "manifest.json"
        with open(path, "w", encoding="utf-8") as f:
            json.dump(manifest, f, indent=2, sort_keys=True)
            f.write("\n")
        return path

