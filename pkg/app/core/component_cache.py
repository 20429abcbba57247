"""
Memo of per-component data.

Generic values on a component (its conormal fiber, epsilon_i, the
e_max image, stability verdicts) are expensive exact computations and get
requested many times while a crystal graph is generated. They are kept
here, keyed by (namespace, sampler fingerprint, multisegment key, extra),
with LRU eviction once MAX_CACHE_SIZE entries are held.

Global State:
    cache_entries: OrderedDict mapping key to the cached value, in LRU order.
"""

import threading
from collections import OrderedDict
from typing import Any, Callable, Hashable

from app.observability.events import emit
from app.types.metrics import METRICS

MAX_CACHE_SIZE = 50_000

cache_entries: OrderedDict = OrderedDict()
_lock = threading.RLock()

_MISSING = object()


def mru_update(key: Hashable) -> None:
    cache_entries.move_to_end(key)


def _lookup(key: Hashable) -> Any:
    with _lock:
        value = cache_entries.get(key, _MISSING)
        if value is _MISSING:
            METRICS.bump("cache_misses")
            return _MISSING
        mru_update(key)
        METRICS.bump("cache_hits")
        return value


def get_from_cache(key: Hashable) -> Any:
    """
    Look up a cached value and mark it most recently used.

    Returns:
        The value, or None when absent.
    """
    value = _lookup(key)
    return None if value is _MISSING else value


def set_in_cache(key: Hashable, value: Any) -> None:
    """Store a value and enforce the capacity limit."""
    with _lock:
        cache_entries[key] = value
        mru_update(key)
        if len(cache_entries) > MAX_CACHE_SIZE:
            oldest = next(iter(cache_entries))
            evict_entry(oldest)
            METRICS.bump("cache_evicted")
            emit("COMPONENT_CACHE_EVICT", {"key": repr(oldest), "reason": "capacity"})


def evict_entry(key: Hashable) -> None:
    cache_entries.pop(key, None)


def memoize(key: Hashable, compute: Callable[[], Any]) -> Any:
    """
    Return the cached value for key, computing and storing it on a miss.

    The computation runs outside the lock; two threads racing on one key
    compute the same deterministic value.
    """
    value = _lookup(key)
    if value is not _MISSING:
        return value
    value = compute()
    set_in_cache(key, value)
    return value


def clear() -> None:
    with _lock:
        cache_entries.clear()
