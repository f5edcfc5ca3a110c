# wall-clock timing utilities
# measures individual calls / blocks, the experiment runner reads the elapsed time back

import time
from dataclasses import dataclass
from functools import wraps
from contextlib import contextmanager
from typing import Callable, Iterator
from common.logger import logger

@dataclass
class Stopwatch:
    label: str
    elapsed_ms: float = 0.0

    @property
    def elapsed_s(self) -> float:
        return self.elapsed_ms / 1000.0

def timed(label: str | None = None) -> Callable:
    """
    Decorator that measures and logs the wall-clock execution time of a function.
    Usage:
        @timed("lambda_exact")
        def lambda_exact(...): ...

        @timed()  # uses function's qualified name as label
        def my_func(...): ...
    """
    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args, **kwargs):
            name = label or func.__qualname__
            start = time.perf_counter()
            result = func(*args, **kwargs)
            elapsed_ms = (time.perf_counter() - start) * 1000
            logger.debug(f"[timer] {name}: {elapsed_ms:.2f}ms")
            return result
        return wrapper
    return decorator

@contextmanager
def timer(label: str, log: bool = True) -> Iterator[Stopwatch]:
    """
    Context manager that measures wall-clock time of a block.
    Usage:
        with timer("bibfs n=4096") as sw:
            run(...)
        row.wall_time = sw.elapsed_s
    """
    sw = Stopwatch(label)
    start = time.perf_counter()
    try:
        yield sw
    finally:
        sw.elapsed_ms = (time.perf_counter() - start) * 1000
        if log:
            logger.info(f"[timer] {label}: {sw.elapsed_ms:.2f}ms")
