"""Named wall-clock timers for long computations.

Usage:
    from eisenflat.timer_manager import timers
    with timers.timeblock("hecke.basis"):
        ...
    timers.report("hecke.basis", logger)

Also provides a `wrap(name)` decorator. Timings are only ever logged; they never
enter JSON output, which must stay deterministic.
"""
from __future__ import annotations

import functools
import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass
from threading import Lock
from typing import Callable, Dict, Iterator, Optional, TypeVar

T = TypeVar("T")


@dataclass
class TimerRecord:
    start: Optional[float] = None
    elapsed: float = 0.0
    laps: int = 0

    @property
    def running(self) -> bool:
        return self.start is not None


class TimerManager:
    def __init__(self) -> None:
        self._timers: Dict[str, TimerRecord] = {}
        self._lock = Lock()

    def start(self, name: str) -> None:
        with self._lock:
            rec = self._timers.setdefault(name, TimerRecord())
            if not rec.running:
                rec.start = time.perf_counter()

    def stop(self, name: str) -> Optional[float]:
        """Stop the named timer and return its accumulated milliseconds, or None if not running."""
        with self._lock:
            rec = self._timers.get(name)
            if rec is None or rec.start is None:
                return None
            rec.elapsed += time.perf_counter() - rec.start
            rec.start = None
            rec.laps += 1
            return rec.elapsed * 1000.0

    def reset(self, name: str) -> None:
        with self._lock:
            self._timers[name] = TimerRecord()

    def get_elapsed_ms(self, name: str) -> Optional[float]:
        with self._lock:
            rec = self._timers.get(name)
            if rec is None:
                return None
            total = rec.elapsed
            if rec.start is not None:
                total += time.perf_counter() - rec.start
            return total * 1000.0

    def report(self, name: str, logger: logging.Logger) -> Optional[float]:
        """Stop `name`, log its total at INFO, and clear it for the next run."""
        self.stop(name)
        elapsed = self.get_elapsed_ms(name)
        if elapsed is not None:
            logger.info("%s completed in %.2f ms", name, elapsed)
        self.reset(name)
        return elapsed

    @contextmanager
    def timeblock(self, name: str) -> Iterator[None]:
        try:
            self.start(name)
            yield
        finally:
            self.stop(name)

    def wrap(self, name: str) -> Callable[[Callable[..., T]], Callable[..., T]]:
        """Decorator to time every call of a function into one named timer."""
        def decorator(func: Callable[..., T]) -> Callable[..., T]:
            @functools.wraps(func)
            def wrapper(*args, **kwargs):
                self.start(name)
                try:
                    return func(*args, **kwargs)
                finally:
                    self.stop(name)
            return wrapper
        return decorator


# module-level singleton for convenience
timers = TimerManager()

__all__ = ["TimerManager", "TimerRecord", "timers"]
