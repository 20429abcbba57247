import threading
from dataclasses import dataclass, field, fields


@dataclass
class Metrics:
    cache_hits: int = 0
    cache_misses: int = 0
    cache_evicted: int = 0
    fallback_enumerations: int = 0
    genericity_retries: int = 0
    samples_drawn: int = 0
    stability_checks: int = 0
    graphs_generated: int = 0
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def _counters(self) -> list[str]:
        return [f.name for f in fields(self) if not f.name.startswith("_")]

    def bump(self, name: str, amount: int = 1) -> None:
        with self._lock:
            setattr(self, name, getattr(self, name) + amount)

    def snapshot(self) -> dict:
        # Return a safe, read-only view
        with self._lock:
            return {name: getattr(self, name) for name in self._counters()}

    def reset(self) -> None:
        with self._lock:
            for name in self._counters():
                setattr(self, name, 0)


METRICS = Metrics()
