"""Brute-force reference engine.

Solutions are found by depth-first search over the upper-triangle entries in
row-major order.  Each entry is bounded by the smaller of the two row budgets
it draws from; the last entry touching a row is forced to use up that row's
budget.  Nothing is cached, so the search stays easy to audit.  It handles
``l`` up to about 16 at k=4 comfortably.
"""
from __future__ import annotations

from itertools import islice
from typing import Iterator, Sequence

from .system import (
    DeltaClass,
    ReducedRHS,
    SolutionMatrix,
    SystemSpec,
    ValidatedSpec,
    classify_delta,
    validate,
)

Variable = tuple[int, int]


def _plan(k: int, diagonal: bool) -> tuple[list[Variable], list[list[int]]]:
    """Variables in row-major order and, per variable, the rows it closes."""
    variables = [(i, j) for i in range(k) for j in range(i if diagonal else i + 1, k)]
    last = {}
    for n, (i, j) in enumerate(variables):
        last[i] = n
        last[j] = n
    closes = [[] for _ in variables]
    for row, n in last.items():
        closes[n].append(row)
    return variables, closes


def _choices(budgets: list[int], var: Variable, closes: list[int]) -> range:
    i, j = var
    if i == j:
        if i in closes:
            b = budgets[i]
            return range(b // 2, b // 2 + 1) if b % 2 == 0 else range(0)
        return range(budgets[i] // 2 + 1)
    hi = min(budgets[i], budgets[j])
    forced = [budgets[r] for r in closes]
    if forced:
        v = forced[0]
        if any(f != v for f in forced) or v > hi:
            return range(0)
        return range(v, v + 1)
    return range(hi + 1)


def _search(budgets: list[int], variables, closes, n: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
    if n == len(variables):
        yield tuple(prefix)
        return
    var = variables[n]
    i, j = var
    for v in _choices(budgets, var, closes[n]):
        budgets[i] -= v
        budgets[j] -= v
        prefix.append(v)
        yield from _search(budgets, variables, closes, n + 1, prefix)
        prefix.pop()
        budgets[i] += v
        budgets[j] += v


def _count(budgets: list[int], variables, closes, n: int) -> int:
    if n == len(variables):
        return 1
    var = variables[n]
    i, j = var
    total = 0
    # a diagonal entry hits the same budget twice, which is exactly its weight 2
    for v in _choices(budgets, var, closes[n]):
        budgets[i] -= v
        budgets[j] -= v
        total += _count(budgets, variables, closes, n + 1)
        budgets[i] += v
        budgets[j] += v
    return total


def _as_valid(spec: SystemSpec | ValidatedSpec) -> ValidatedSpec:
    return validate(spec)


def enumerate_solutions(spec: SystemSpec | ValidatedSpec, limit: int | None = None) -> Iterator[SolutionMatrix]:
    """Yield every solution in lexicographic order of its upper triangle."""
    vs = _as_valid(spec)
    if limit is not None and limit < 1:
        raise ValueError("limit must be a positive integer")
    if not vs.sum_even:
        return iter(())
    variables, closes = _plan(vs.k, diagonal=True)
    stream = (
        SolutionMatrix.from_upper(vs.k, upper)
        for upper in _search(list(vs.rhs), variables, closes, 0, [])
    )
    return islice(stream, limit) if limit is not None else stream


def count_bruteforce(spec: SystemSpec | ValidatedSpec) -> int:
    vs = _as_valid(spec)
    if not vs.sum_even:
        return 0
    variables, closes = _plan(vs.k, diagonal=True)
    return _count(list(vs.rhs), variables, closes, 0)


def count_offdiagonal(budgets: Sequence[int]) -> int:
    """Number of symmetric zero-diagonal matrices with the given row sums."""
    variables, closes = _plan(len(budgets), diagonal=False)
    if not variables:
        return int(all(b == 0 for b in budgets))
    return _count(list(budgets), variables, closes, 0)


def count_fixed_diagonal(l: int, r: ReducedRHS) -> int:
    """Solutions of the k=4 system with every diagonal entry held fixed.

    ``r`` holds the budgets ``l - 2*a[i][i]``; the result counts the six
    off-diagonal entries.
    """
    r.check(l)
    return count_offdiagonal(tuple(r))


def count_fixed_diagonal_by_delta(l: int, l11: int, l22: int, dc: DeltaClass) -> int:
    """Sum of :func:`count_fixed_diagonal` over all admissible ``(l33, l44)`` of class ``dc``."""
    ReducedRHS(l11, l22, l % 2, l % 2).check(l)
    total = 0
    for l33 in range(l % 2, l + 1, 2):
        for l44 in range(l % 2, l + 1, 2):
            r = ReducedRHS(l11, l22, l33, l44)
            if classify_delta(r) is dc:
                total += count_offdiagonal(tuple(r))
    return total
