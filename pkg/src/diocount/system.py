"""Structured Diophantine systems and the shared vocabulary of the engines.

Every system handled here has the form

    2*a[i][i] + sum(a[i][j] for j != i) == rhs[i]    for i in range(k)

over a symmetric matrix of nonnegative integers.  ``Full4`` is the k=4 case,
``Floyd3`` the k=3 case (the 4-equation system with every ``a[i][3]`` forced
to zero) and ``GeneralK`` any k >= 1.

Counts are plain Python ``int`` values, which are arbitrary precision.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Sequence

from .errors import DiophantineError, NegativeRHS, WrongArity


class SystemKind(enum.Enum):
    FULL4 = "full4"
    FLOYD3 = "floyd3"
    GENERAL = "general"


_FIXED_ARITY = {SystemKind.FULL4: 4, SystemKind.FLOYD3: 3}


class DeltaClass(enum.Enum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    def flipped(self) -> "DeltaClass":
        return DeltaClass(-self.value)


@dataclass(frozen=True)
class SystemSpec:
    kind: SystemKind
    rhs: tuple[int, ...]
    k: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "rhs", tuple(int(x) for x in self.rhs))
        if self.k is None:
            object.__setattr__(self, "k", _FIXED_ARITY.get(self.kind, len(self.rhs)))

    @classmethod
    def full4(cls, rhs: Sequence[int]) -> "SystemSpec":
        return cls(SystemKind.FULL4, tuple(rhs))

    @classmethod
    def floyd3(cls, rhs: Sequence[int]) -> "SystemSpec":
        return cls(SystemKind.FLOYD3, tuple(rhs))

    @classmethod
    def general(cls, rhs: Sequence[int]) -> "SystemSpec":
        return cls(SystemKind.GENERAL, tuple(rhs))

    @classmethod
    def uniform(cls, kind: SystemKind, l: int, k: int | None = None) -> "SystemSpec":
        if k is None:
            k = _FIXED_ARITY[kind]
        return cls(kind, (l,) * k, k)

    @property
    def is_uniform(self) -> bool:
        return len(set(self.rhs)) <= 1


@dataclass(frozen=True)
class ValidatedSpec:
    """A structurally valid :class:`SystemSpec` plus its parity flag."""

    spec: SystemSpec
    sum_even: bool

    @property
    def kind(self) -> SystemKind:
        return self.spec.kind

    @property
    def k(self) -> int:
        return self.spec.k

    @property
    def rhs(self) -> tuple[int, ...]:
        return self.spec.rhs


def validate(spec: SystemSpec | ValidatedSpec) -> ValidatedSpec:
    """Check arity and sign of the right-hand side.

    An odd ``sum(rhs)`` is accepted: such systems are valid and simply have no
    solutions.
    """
    if isinstance(spec, ValidatedSpec):
        return spec
    expected = _FIXED_ARITY.get(spec.kind)
    if expected is not None and spec.k != expected:
        raise WrongArity(f"{spec.kind.value} needs k={expected}, got k={spec.k}")
    if spec.k < 1:
        raise WrongArity("k must be positive")
    if len(spec.rhs) != spec.k:
        raise WrongArity(f"expected {spec.k} right-hand sides, got {len(spec.rhs)}")
    if any(x < 0 for x in spec.rhs):
        raise NegativeRHS(f"right-hand sides must be nonnegative: {spec.rhs}")
    return ValidatedSpec(spec, sum(spec.rhs) % 2 == 0)


@dataclass(frozen=True)
class SolutionMatrix:
    """Full symmetric k x k solution matrix, stored as nested tuples."""

    alpha: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.alpha)

    @classmethod
    def from_upper(cls, k: int, upper: Sequence[int]) -> "SolutionMatrix":
        """Build from the row-major upper triangle ``(a11, a12, ..., akk)``."""
        if len(upper) != k * (k + 1) // 2:
            raise WrongArity(f"upper triangle of a {k}x{k} matrix has {k * (k + 1) // 2} entries")
        rows = [[0] * k for _ in range(k)]
        it = iter(upper)
        for i in range(k):
            for j in range(i, k):
                rows[i][j] = rows[j][i] = int(next(it))
        return cls(tuple(tuple(r) for r in rows))

    def upper(self) -> tuple[int, ...]:
        k = self.k
        return tuple(self.alpha[i][j] for i in range(k) for j in range(i, k))

    def row_sums(self) -> tuple[int, ...]:
        return tuple(2 * row[i] + sum(row) - row[i] for i, row in enumerate(self.alpha))

    def satisfies(self, rhs: Sequence[int]) -> bool:
        if any(x < 0 for row in self.alpha for x in row):
            return False
        if any(self.alpha[i][j] != self.alpha[j][i] for i in range(self.k) for j in range(i)):
            return False
        return self.row_sums() == tuple(rhs)

    def to_json_obj(self) -> dict:
        k = self.k
        return {"k": k, "alpha": [list(self.alpha[i][i:]) for i in range(k)]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str | dict) -> "SolutionMatrix":
        obj = json.loads(text) if isinstance(text, str) else text
        k = obj["k"]
        rows = obj["alpha"]
        if len(rows) != k or any(len(r) != k - i for i, r in enumerate(rows)):
            raise WrongArity("alpha must be the row-major upper triangle")
        return cls.from_upper(k, [x for r in rows for x in r])


@dataclass(frozen=True)
class ReducedRHS:
    """Per-row budgets ``l - 2*a[i][i]`` left for off-diagonal entries (k=4)."""

    l11: int
    l22: int
    l33: int
    l44: int

    def __iter__(self):
        return iter((self.l11, self.l22, self.l33, self.l44))

    @property
    def delta(self) -> int:
        return -self.l11 - self.l22 + self.l33 + self.l44

    def check(self, l: int) -> None:
        for x in self:
            if not 0 <= x <= l:
                raise DiophantineError(f"reduced right-hand side {x} outside [0, {l}]")
            if (x - l) % 2:
                raise DiophantineError(f"reduced right-hand side {x} has the wrong parity for l={l}")

    @classmethod
    def of(cls, l: int, m: SolutionMatrix) -> "ReducedRHS":
        return cls(*(l - 2 * m.alpha[i][i] for i in range(4)))


def classify_delta(r: ReducedRHS) -> DeltaClass:
    d = r.delta
    return DeltaClass((d > 0) - (d < 0))


def residue_class(l: int) -> int:
    return l % 4
