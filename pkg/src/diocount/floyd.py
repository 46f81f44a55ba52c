"""The uniform 3-equation system and its link to the magic constant.

With budgets ``l_ii = l - 2*a[i][i]`` the off-diagonal entries are uniquely
determined, ``2*a[i][j] = l_ii + l_jj - l_kk``.  So counting solutions
reduces to counting admissible budget triples.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .closed_forms import exact_div
from .errors import DiophantineError, NoSolution, OddInput
from .system import SolutionMatrix

# A006003, a(n) = n(n^2 + 1)/2, terms n = 1..20 (a(0) = 0 omitted).
# Row sums of Floyd's triangle / magic constants of order n.
A006003 = (
    1, 5, 15, 34, 65, 111, 175, 260, 369, 505,
    671, 870, 1105, 1379, 1695, 2056, 2465, 2925, 3439, 4010,
)


@dataclass(frozen=True)
class FloydTriple:
    l11: int
    l22: int
    l33: int

    def __post_init__(self):
        if min(self.l11, self.l22, self.l33) < 0:
            raise DiophantineError(f"budgets must be nonnegative: {self}")

    def __iter__(self):
        return iter((self.l11, self.l22, self.l33))


def floyd_exists(t: FloydTriple) -> bool:
    """Triangle inequality on the budgets plus an even total."""
    a, b, c = t
    return abs(b - a) <= c <= a + b and (a + b + c) % 2 == 0


def floyd_solution(t: FloydTriple) -> tuple[int, int, int]:
    """The unique off-diagonal triple ``(a12, a13, a23)`` for ``t``."""
    if not floyd_exists(t):
        raise NoSolution(f"no nonnegative solution for budgets {tuple(t)}")
    a, b, c = t
    return exact_div(a + b - c, 2), exact_div(a + c - b, 2), exact_div(b + c - a, 2)


def floyd_matrix(l: int, t: FloydTriple) -> SolutionMatrix:
    a12, a13, a23 = floyd_solution(t)
    diag = [exact_div(l - x, 2) for x in t]
    return SolutionMatrix.from_upper(3, (diag[0], a12, a13, diag[1], a23, diag[2]))


def floyd_enumerate(l: int) -> Iterator[tuple[FloydTriple, tuple[int, int, int]]]:
    """Admissible triples in lexicographic order, each with its solution."""
    for a in range(l % 2, l + 1, 2):
        for b in range(l % 2, l + 1, 2):
            for c in range(l % 2, l + 1, 2):
                t = FloydTriple(a, b, c)
                if floyd_exists(t):
                    yield t, floyd_solution(t)


def _cases_div4(l: int) -> tuple[int, int, int, int]:
    f1 = sum(a + 1 for a in range(0, l // 2 + 1, 2))
    f2 = (l // 2 + 1) * (l // 4)
    f3 = sum((a + 1) * (l // 2 - a) for a in range(0, l // 2 + 1, 2))
    f4 = sum(
        exact_div(l - (b - a), 2) + 1
        for b in range(l // 2 + 2, l + 1, 2)
        for a in range(l - b + 2, b - 1, 2)
    )
    return f1, f2, f3, f4


def _cases_div4_minus2(l: int) -> tuple[int, int, int, int]:
    # l/2 is odd here, so every boundary is pulled to the nearest even point
    f1 = sum(a + 1 for a in range(0, l // 2, 2))
    f2 = exact_div((l // 2 + 1) * (l // 2 + 1), 2)
    f3 = sum((a + 1) * (l // 2 - a) for a in range(0, l // 2, 2))
    f4 = sum(
        exact_div(l - (b - a), 2) + 1
        for b in range(l // 2 + 3, l + 1, 2)
        for a in range(l - b + 2, b - 1, 2)
    )
    return f1, f2, f3, f4


def floyd_case_parts(l: int) -> tuple[int, int, int, int]:
    """``(f1, f2, f3, f4)`` for the residue branch of ``l``."""
    if l < 0 or l % 2:
        raise OddInput(f"case sums need even nonnegative l, got {l}")
    return _cases_div4(l) if l % 4 == 0 else _cases_div4_minus2(l)


def floyd_count_cases(l: int) -> int:
    f1, f2, f3, f4 = floyd_case_parts(l)
    return f1 + f2 + 2 * f3 + 2 * f4
