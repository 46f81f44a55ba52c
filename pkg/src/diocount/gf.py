"""Exact counting for the general k-equation system by coefficient extraction.

The count for right-hand side ``rhs`` is the coefficient of
``x1**rhs[0] * ... * xk**rhs[k-1]`` in ``prod_{i <= j} 1 / (1 - x_i x_j)``.
It is read off a dense table over all budget vectors ``<= rhs``, to which the
variables are folded in one at a time with the in-place unbounded-knapsack
recurrence.  Diagonal variables go first, then off-diagonal ones in
lexicographic order.

Cells are stored as ``int64`` when a product bound proves no cell can
overflow, and as Python ``int`` objects otherwise.
"""
from __future__ import annotations

import math
import os
from typing import Sequence

import numpy as np

from .errors import CapacityError, NegativeRHS, WrongArity

DEFAULT_MAX_CELLS = 10**8
ENV_MAX_CELLS = "DIO_MAX_CELLS"

_INT64_SAFE = 2**62


def default_max_cells() -> int:
    raw = os.environ.get(ENV_MAX_CELLS)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_CELLS
    return int(raw)


def _cell_bound(rhs: Sequence[int]) -> int:
    # every cell counts tuples with a[i][j] <= min(rhs[i], rhs[j]) and a[i][i] <= rhs[i] // 2
    k = len(rhs)
    bound = 1
    for i in range(k):
        bound *= rhs[i] // 2 + 1
        for j in range(i + 1, k):
            bound *= min(rhs[i], rhs[j]) + 1
    return bound


def _checked(rhs: Sequence[int]) -> list[int]:
    rhs = [int(x) for x in rhs]
    if len(rhs) < 1:
        raise WrongArity("need at least one equation")
    if any(x < 0 for x in rhs):
        raise NegativeRHS(f"right-hand sides must be nonnegative: {rhs}")
    return rhs


def budget_table(rhs: Sequence[int], max_cells: int | None = None) -> np.ndarray:
    """Coefficients of every monomial ``x**b`` with ``b <= rhs`` (elementwise)."""
    rhs = _checked(rhs)
    if max_cells is None:
        max_cells = default_max_cells()
    dims = tuple(x + 1 for x in rhs)
    cells = math.prod(dims)
    if cells > max_cells:
        raise CapacityError(f"table needs {cells} cells, cap is {max_cells}")

    dtype = np.int64 if _cell_bound(rhs) < _INT64_SAFE else object
    table = np.zeros(dims, dtype=dtype)
    if dtype is object:
        table.fill(0)
    table[(0,) * len(rhs)] = 1

    k = len(rhs)
    for i in range(k):
        t = np.moveaxis(table, i, 0)
        for a in range(2, dims[i]):
            t[a] += t[a - 2]
    for i in range(k):
        for j in range(i + 1, k):
            t = np.moveaxis(table, (i, j), (0, 1))
            for a in range(1, dims[i]):
                t[a, 1:] += t[a - 1, :-1]
    return table


def count_general(rhs: Sequence[int], max_cells: int | None = None) -> int:
    """Number of nonnegative solutions of ``2*a[i][i] + sum_{j != i} a[i][j] = rhs[i]``."""
    rhs = _checked(rhs)
    if sum(rhs) % 2:
        return 0
    table = budget_table(rhs, max_cells)
    return int(table[tuple(rhs)])


def count_general_table(k: int, lmax: int, max_cells: int | None = None) -> list[int]:
    """Counts for the uniform right-hand sides ``[l] * k``, ``l = 0 .. lmax``."""
    if k < 1:
        raise WrongArity("k must be positive")
    if lmax < 0:
        raise ValueError(f"lmax must be nonnegative, got {lmax}")
    return [count_general([l] * k, max_cells) for l in range(lmax + 1)]
