"""Thread-safe memoization that can be switched off globally.

Cached and uncached evaluation must produce identical values; ``disabled()``
exists so the test suite can check exactly that.
"""
from __future__ import annotations

import functools
import threading
from contextlib import contextmanager

_enabled = True
_registry: list = []


def memo(fn):
    cache: dict = {}
    lock = threading.Lock()

    @functools.wraps(fn)
    def wrapper(*args):
        if not _enabled:
            return fn(*args)
        try:
            return cache[args]
        except KeyError:
            pass
        # computed outside the lock: duplicate work is fine, torn state is not
        value = fn(*args)
        with lock:
            cache.setdefault(args, value)
            return cache[args]

    wrapper.cache = cache
    _registry.append(cache)
    return wrapper


def clear_caches() -> None:
    for cache in _registry:
        cache.clear()


@contextmanager
def disabled():
    global _enabled
    previous = _enabled
    _enabled = False
    try:
        yield
    finally:
        _enabled = previous
