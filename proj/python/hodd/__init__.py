"""Higher-order directional derivatives, subdifferentials and point classification."""

from __future__ import annotations

import json
from typing import Any, Mapping, Sequence

from . import _hodd
from ._hodd import (
    ArithmeticError,
    CapacityError,
    DomainError,
    EvalError,
    HoddError,
    ParseError,
    UndefinedError,
)

__all__ = [
    "ArithmeticError",
    "CapacityError",
    "DomainError",
    "EvalError",
    "HoddError",
    "ParseError",
    "UndefinedError",
    "analyze_point",
    "check_invex_order",
    "condition_table",
    "corpus_listing",
    "corpus_names",
    "default_schedule",
    "demyanov",
    "evaluate",
    "hadamard",
    "run_cli",
    "set_threads",
    "studniarski",
    "subdiff_interval_1d",
    "zero_in_subdiff",
]

DEFAULT_SPHERE_SAMPLES = 64


def _dim(func: str, dim: int | None, x: Sequence[float]) -> int:
    if dim is not None:
        return dim
    return 0 if func.startswith("corpus:") else len(x)


def _sched(schedule: Mapping[str, Any] | None) -> str:
    if schedule is None:
        return ""
    merged = default_schedule()
    merged.update(schedule)
    return json.dumps(merged)


def corpus_names() -> list[str]:
    return _hodd.corpus_names()


def corpus_listing() -> str:
    return _hodd.corpus_listing()


def default_schedule() -> dict:
    return json.loads(_hodd.default_schedule())


def set_threads(n: int) -> None:
    _hodd.set_threads(n)


def evaluate(func: str, x: Sequence[float], dim: int | None = None) -> float:
    """f(x); +inf outside the domain."""
    return float(json.loads(_hodd.evaluate(func, _dim(func, dim, x), list(x))))


def hadamard(func, x, n, u, dim=None, schedule=None) -> dict:
    """Zero-chain order-n derivative estimate."""
    return json.loads(_hodd.hadamard_zero_chain(func, _dim(func, dim, x), list(x), n, list(u), _sched(schedule)))


def studniarski(func, x, n, u, dim=None, schedule=None) -> dict:
    return json.loads(_hodd.studniarski(func, _dim(func, dim, x), list(x), n, list(u), _sched(schedule)))


def demyanov(func, x, n, dim=None, schedule=None) -> dict:
    return json.loads(_hodd.demyanov(func, _dim(func, dim, x), list(x), n, _sched(schedule)))


def zero_in_subdiff(func, x, n, dim=None, schedule=None, sphere_samples=DEFAULT_SPHERE_SAMPLES) -> dict:
    return json.loads(_hodd.zero_in_subdiff(func, _dim(func, dim, x), list(x), n, _sched(schedule), sphere_samples))


def subdiff_interval_1d(func, x, n, schedule=None) -> dict:
    return json.loads(_hodd.subdiff_interval_1d(func, list(x), n, _sched(schedule)))


def analyze_point(func, x, max_n, dim=None, schedule=None, sphere_samples=DEFAULT_SPHERE_SAMPLES) -> dict:
    return json.loads(_hodd.analyze_point(func, _dim(func, dim, x), list(x), max_n, _sched(schedule), sphere_samples))


def condition_table(func, x, max_n, dim=None, schedule=None, sphere_samples=DEFAULT_SPHERE_SAMPLES) -> dict:
    return json.loads(
        _hodd.condition_table(func, _dim(func, dim, x), list(x), max_n, _sched(schedule), sphere_samples)
    )


def check_invex_order(func, n, box, grid=41, dim=None, schedule=None, sphere_samples=DEFAULT_SPHERE_SAMPLES) -> dict:
    """box is a flat sequence lo1, hi1, lo2, hi2, ..."""
    box = list(box)
    d = dim if dim is not None else (0 if func.startswith("corpus:") else len(box) // 2)
    text = ",".join(repr(float(b)) for b in box)
    return json.loads(_hodd.check_invex_order(func, d, n, text, grid, _sched(schedule), sphere_samples))


def run_cli(args: Sequence[str]) -> tuple[int, str, str]:
    """Runs the command-line front end in-process: (exit code, stdout, stderr)."""
    return _hodd.run_cli(list(args))
