"""Resource budgets for the search routines.

Three knobs, all process-wide:

  max_vertices   hard cap on graph size accepted by constructors (default 64,
                 which also matches the one-word bitset layout of the kernels)
  max_aut        automorphism-search budget: abort once more than this many
                 group elements have been found
  max_colorings  node budget for the distinguishing-coloring search

Defaults can be overridden at import time through SYMBREAK_MAX_VERTICES,
SYMBREAK_MAX_AUT and SYMBREAK_MAX_COLORINGS, and at runtime via configure()
(the CLI maps --max-aut/--max-colorings onto it) or the scoped() context
manager, which tests use to provoke budget errors cheaply.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass

DEFAULT_MAX_VERTICES = 64
DEFAULT_MAX_AUT = 10_000_000
DEFAULT_MAX_COLORINGS = 10_000_000


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


@dataclass
class Limits:
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_aut: int = DEFAULT_MAX_AUT
    max_colorings: int = DEFAULT_MAX_COLORINGS


_active = Limits(
    max_vertices=_env_int("SYMBREAK_MAX_VERTICES", DEFAULT_MAX_VERTICES),
    max_aut=_env_int("SYMBREAK_MAX_AUT", DEFAULT_MAX_AUT),
    max_colorings=_env_int("SYMBREAK_MAX_COLORINGS", DEFAULT_MAX_COLORINGS),
)


def vertex_cap() -> int:
    return _active.max_vertices


def aut_cap() -> int:
    return _active.max_aut


def coloring_cap() -> int:
    return _active.max_colorings


def configure(max_vertices: int | None = None,
              max_aut: int | None = None,
              max_colorings: int | None = None) -> None:
    """Override one or more budgets for the rest of the process."""
    if max_vertices is not None:
        if max_vertices < 1:
            raise ValueError("max_vertices must be positive")
        _active.max_vertices = max_vertices
    if max_aut is not None:
        if max_aut < 1:
            raise ValueError("max_aut must be positive")
        _active.max_aut = max_aut
    if max_colorings is not None:
        if max_colorings < 1:
            raise ValueError("max_colorings must be positive")
        _active.max_colorings = max_colorings


@contextmanager
def scoped(max_vertices: int | None = None,
           max_aut: int | None = None,
           max_colorings: int | None = None):
    """Temporarily override budgets; restores the previous values on exit."""
    saved = Limits(_active.max_vertices, _active.max_aut, _active.max_colorings)
    try:
        configure(max_vertices, max_aut, max_colorings)
        yield
    finally:
        _active.max_vertices = saved.max_vertices
        _active.max_aut = saved.max_aut
        _active.max_colorings = saved.max_colorings
