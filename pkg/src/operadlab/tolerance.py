"""Numerical tolerances, overridable per call or per context."""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, replace
from typing import Iterator


@dataclass(frozen=True)
class Tolerances:
    tol_norm: float = 1e-12  # normal-form constraints
    tol_geo: float = 1e-9  # containment, disjointness, symmetry predicates


_current: ContextVar[Tolerances] = ContextVar("operadlab_tolerances", default=Tolerances())


def current() -> Tolerances:
    return _current.get()


def geo(tol: float | None = None) -> float:
    return current().tol_geo if tol is None else tol


def norm(tol: float | None = None) -> float:
    return current().tol_norm if tol is None else tol


@contextmanager
def using(**overrides: float) -> Iterator[Tolerances]:
    """Temporarily override tolerances, e.g. ``with using(tol_geo=1e-7): ...``."""
    tol = replace(current(), **{k: v for k, v in overrides.items() if v is not None})
    token = _current.set(tol)
    try:
        yield tol
    finally:
        _current.reset(token)
