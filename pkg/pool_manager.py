"""
CableQSim - Pool Manager

Thread pool shared by every scan. Results always come back in input order,
so outputs do not depend on the number of workers.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from threading import Lock

from config import THREADS_ENV
from errors import ConfigError


def resolve_threads(threads: int | None = None) -> int:
    """0 or None means: environment variable, then the CPU count."""
    if not threads:
        env = os.environ.get(THREADS_ENV, "").strip()
        try:
            threads = int(env) if env else 0
        except ValueError:
            raise ConfigError(f"${THREADS_ENV} must be an integer, got {env!r}") from None
    if threads < 0:
        raise ConfigError(f"thread count must be non-negative, got {threads}")
    return threads or (os.cpu_count() or 1)


class PoolManager:
    """Owns the worker threads used by the compute modules."""

    def __init__(self, threads: int | None = None):
        self.lock = Lock()
        self.threads = resolve_threads(threads)
        self._executor = None

    def set_threads(self, threads: int | None):
        with self.lock:
            self.threads = resolve_threads(threads)
            if self._executor is not None:
                self._executor.shutdown(wait=True)
                self._executor = None

    def map(self, fn, items) -> list:
        items = list(items)
        if self.threads == 1 or len(items) <= 1:
            return [fn(item) for item in items]
        with self.lock:
            if self._executor is None:
                self._executor = ThreadPoolExecutor(max_workers=self.threads, thread_name_prefix="scan")
            executor = self._executor
        return list(executor.map(fn, items))

    def shutdown(self):
        with self.lock:
            if self._executor is not None:
                self._executor.shutdown(wait=True)
                self._executor = None


# Global instance
_pool_manager = None


def get_pool_manager() -> PoolManager:
    """Get the global pool manager instance."""
    global _pool_manager
    if _pool_manager is None:
        _pool_manager = PoolManager()
    return _pool_manager
