"""Constant-time closed-form counts.

Each formula is evaluated as an integer numerator over a fixed denominator.
The division must be exact; a remainder means the polynomial was mistyped
and raises :class:`~diocount.errors.TranscriptionError`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DomainError, EvenInput, OddInput, TranscriptionError


class Formula(enum.Enum):
    EVEN_MAIN = "even_main"
    ODD_MAIN = "odd_main"
    EVEN_REMAP = "even_remap"
    ODD_REMAP = "odd_remap"
    FLOYD = "floyd"
    MAGIC_CONSTANT = "magic_constant"


def exact_div(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise TranscriptionError(f"{num} is not divisible by {den}")
    return q


# Numerators, kept separate so the divisibility sweep can inspect them.

def e_even_numerator(l: int) -> int:
    return (l + 2) * (l + 4) * (l * (l + 5) * (l * (l + 4) + 12) + 72)


def d_odd_numerator(l: int) -> int:
    return (l + 1) * (l + 3) * (l * (l + 5) * (l * (l + 6) + 17) + 72)


def e_remap_numerator(l: int) -> int:
    return l * (l + 1) * (3 + 2 * l + l**2 + l**3 + 2 * l**4)


def d_remap_numerator(l: int) -> int:
    return l * (l - 1) * (3 - 2 * l + l**2 - l**3 + 2 * l**4)


def floyd_numerator(l: int) -> int:
    return (l + 2) * (l**2 + 4 * l + 8)


def magic_numerator(n: int) -> int:
    return n * (1 + n * n)


DENOMINATORS = {
    Formula.EVEN_MAIN: 576,
    Formula.ODD_MAIN: 576,
    Formula.EVEN_REMAP: 18,
    Formula.ODD_REMAP: 18,
    Formula.FLOYD: 16,
    Formula.MAGIC_CONSTANT: 2,
}

NUMERATORS = {
    Formula.EVEN_MAIN: e_even_numerator,
    Formula.ODD_MAIN: d_odd_numerator,
    Formula.EVEN_REMAP: e_remap_numerator,
    Formula.ODD_REMAP: d_remap_numerator,
    Formula.FLOYD: floyd_numerator,
    Formula.MAGIC_CONSTANT: magic_numerator,
}


def _nonneg(l: int) -> None:
    if l < 0:
        raise DomainError(f"argument must be nonnegative, got {l}")


def e_even(l: int) -> int:
    """Solution count of the uniform 4-equation system for even ``l``."""
    _nonneg(l)
    if l % 2:
        raise OddInput(f"e_even needs even l, got {l}")
    return exact_div(e_even_numerator(l), 576)


def d_odd(l: int) -> int:
    """Solution count of the uniform 4-equation system for odd ``l``."""
    _nonneg(l)
    if l % 2 == 0:
        raise EvenInput(f"d_odd needs odd l, got {l}")
    return exact_div(d_odd_numerator(l), 576)


def e_remap(l: int) -> int:
    """``e_even`` reparametrised; equals ``e_even(2*l - 2)``.

    The identity is checked on every call.
    """
    if l < 1:
        raise DomainError(f"e_remap is defined for l >= 1, got {l}")
    value = exact_div(e_remap_numerator(l), 18)
    if value != e_even(2 * l - 2):
        raise TranscriptionError(f"e_remap({l}) != e_even({2 * l - 2})")
    return value


def d_remap(l: int) -> int:
    """``d_odd`` reparametrised; equals ``d_odd(2*l - 3)``."""
    if l < 2:
        raise DomainError(f"d_remap is defined for l >= 2, got {l}")
    value = exact_div(d_remap_numerator(l), 18)
    if value != d_odd(2 * l - 3):
        raise TranscriptionError(f"d_remap({l}) != d_odd({2 * l - 3})")
    return value


def floyd_f(l: int) -> int:
    """Solution count of the uniform 3-equation system (zero for odd ``l``)."""
    _nonneg(l)
    if l % 2:
        return 0
    return exact_div(floyd_numerator(l), 16)


def magic_constant(n: int) -> int:
    if n < 1:
        raise DomainError(f"magic constant needs n >= 1, got {n}")
    return exact_div(magic_numerator(n), 2)


def triangle(n: int) -> int:
    _nonneg(n)
    return n * (n + 1) // 2


def count_theorem(l: int) -> int:
    return e_even(l) if l % 2 == 0 else d_odd(l)


@dataclass(frozen=True)
class ClosedFormResult:
    l: int
    count: int
    formula: Formula


_EVALUATORS = {
    Formula.EVEN_MAIN: e_even,
    Formula.ODD_MAIN: d_odd,
    Formula.EVEN_REMAP: e_remap,
    Formula.ODD_REMAP: d_remap,
    Formula.FLOYD: floyd_f,
    Formula.MAGIC_CONSTANT: magic_constant,
}


def evaluate(formula: Formula, l: int) -> ClosedFormResult:
    return ClosedFormResult(l, _EVALUATORS[formula](l), formula)
