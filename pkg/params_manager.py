"""
CableQSim - Params Manager

Loads circuit parameters from JSON, merged over the built-in defaults.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from threading import Lock

from circuit import CircuitParams, scale_cable
from errors import CableSimError, ConfigError

log = logging.getLogger(__name__)


# Default parameters (0.25 m cable, 440 MHz FSR)
DEFAULT_PARAMS = CircuitParams().to_dict()


def load_params(path=None) -> CircuitParams:
    """
    Read a parameter file. Missing keys fall back to DEFAULT_PARAMS; unknown
    keys and invalid values are config errors.
    """
    merged = DEFAULT_PARAMS.copy()
    if path is not None:
        path = Path(path)
        try:
            with open(path, "r", encoding="utf-8") as f:
                saved = json.load(f)
        except (json.JSONDecodeError, OSError) as e:
            raise ConfigError(f"cannot read parameter file {path}: {e}") from e
        if not isinstance(saved, dict):
            raise ConfigError(f"parameter file {path} must hold a JSON object")
        unknown = sorted(set(saved) - set(DEFAULT_PARAMS))
        if unknown:
            raise ConfigError(f"unknown parameter keys in {path}: {', '.join(unknown)}")
        for key, value in saved.items():
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ConfigError(f"parameter {key} must be a number, got {value!r}")
        merged.update(saved)
    try:
        params = CircuitParams(**{key: float(value) for key, value in merged.items()})
    except CableSimError as e:
        raise ConfigError(str(e)) from e
    log.debug("loaded parameters from %s", path or "defaults")
    return params


class ParamsManager:
    """Holds the parameter set of the current run."""

    def __init__(self, path=None):
        self.lock = Lock()
        self.path = Path(path) if path else None
        self._params = load_params(self.path)

    @property
    def params(self) -> CircuitParams:
        return self._params

    def get_all(self) -> dict:
        """Get all parameters."""
        return self._params.to_dict()

    def load(self, path=None):
        """Replace the parameter set; None restores the defaults."""
        with self.lock:
            self._params = load_params(path)
            self.path = Path(path) if path else None

    def apply_cable_length(self, length_ratio: float):
        """Rescale the cable of the current set to `length_ratio` times its length."""
        with self.lock:
            try:
                self._params = scale_cable(self._params, length_ratio)
            except CableSimError as e:
                raise ConfigError(str(e)) from e

    def save(self, path):
        """Write the full parameter set, so the file reproduces the run without defaults."""
        try:
            with open(path, "w", encoding="utf-8") as f:
                json.dump(self.get_all(), f, indent=2, sort_keys=True)
                f.write("\n")
        except OSError as e:
            raise ConfigError(f"cannot write parameter file {path}: {e}") from e


# Global instance
_params_manager = None


def get_params_manager(path=None) -> ParamsManager:
    """Get the global params manager instance, loading `path` when given."""
    global _params_manager
    if _params_manager is None:
        _params_manager = ParamsManager(path)
    elif path is not None:
        _params_manager.load(path)
    return _params_manager
