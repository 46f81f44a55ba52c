"""Geometric counting of the uniform 4-equation system.

Fix the two budgets ``l11 <= l22``.  The remaining pairs ``(l33, l44)`` are
grouped by the sign of ``delta = l33 + l44 - l11 - l22``.  For each
(parity of ``l``, delta class, regime, ``<``/``=``) there is one expression,
a finite sum over triangle-number weights.  The expressions are written out
term by term with their original summation bounds.  They are deliberately
not simplified: simplifying could hide a transcription error.

Positive delta mirrors negative delta (swap rows 1,2 with rows 3,4), and
``l11 > l22`` mirrors ``l11 < l22`` (swap rows 1 and 2).  That gives the
aggregation weights 4, 2, 2, 1 used by :func:`aggregate`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Callable

from .closed_forms import exact_div
from .errors import InconsistentTag, ResidueError, TranscriptionError
from .system import DeltaClass


class Parity(enum.Enum):
    EVEN = 0
    ODD = 1


class Relation(enum.Enum):
    LESS = "<"
    EQUAL = "="


# regime 1 holds when l >= l11 + l22 - offset
_REGIME_OFFSET = {
    (Parity.EVEN, DeltaClass.NEGATIVE): 2,
    (Parity.EVEN, DeltaClass.ZERO): 0,
    (Parity.ODD, DeltaClass.NEGATIVE): 3,
    (Parity.ODD, DeltaClass.ZERO): 1,
}


@dataclass(frozen=True)
class CaseTag:
    parity: Parity
    delta: DeltaClass
    regime: int
    relation: Relation

    def __post_init__(self):
        if self.delta is DeltaClass.POSITIVE:
            raise InconsistentTag("positive delta is counted through its negative mirror")
        if self.regime not in (1, 2):
            raise InconsistentTag(f"regime must be 1 or 2, got {self.regime}")

    def __str__(self):
        letter = "E" if self.parity is Parity.EVEN else "D"
        d = "-" if self.delta is DeltaClass.NEGATIVE else "0"
        return f"{letter}^{{{self.regime},D{d}}}_{self.relation.value}"


@dataclass(frozen=True)
class CaseValue:
    tag: CaseTag
    l: int
    l11: int
    l22: int
    value: int
    strip_part: int
    region_part: int
    cutoff_part: int


def _h(x: int) -> int:
    return exact_div(x, 2)


def _sum(hi: int, f: Callable[[int], int]) -> int:
    return sum(f(t) for t in range(1, hi + 1))


def case_tag(l: int, l11: int, l22: int, delta: DeltaClass) -> CaseTag:
    """Tag of the expression that applies at ``(l, min, max)`` of the pair."""
    a, b = min(l11, l22), max(l11, l22)
    parity = Parity(l % 2)
    regime = 1 if l >= a + b - _REGIME_OFFSET[parity, delta] else 2
    return CaseTag(parity, delta, regime, Relation.LESS if a < b else Relation.EQUAL)


def _check(tag: CaseTag, l: int, a: int, b: int) -> None:
    if l < 0 or not 0 <= a <= b <= l:
        raise InconsistentTag(f"need 0 <= l11 <= l22 <= l, got l={l}, l11={a}, l22={b}")
    if {l % 2, a % 2, b % 2} != {tag.parity.value}:
        raise InconsistentTag(f"{tag} needs l, l11, l22 all of parity {tag.parity.name.lower()}")
    if case_tag(l, a, b, tag.delta) != tag:
        raise InconsistentTag(f"{tag} does not apply at l={l}, l11={a}, l22={b}")


def _even_parts(tag: CaseTag, l: int, a: int, b: int) -> tuple[int, int, int]:
    eq = tag.relation is Relation.EQUAL
    if tag.delta is DeltaClass.NEGATIVE:
        if eq:
            strip = -_sum(a // 2, lambda t: _h(2 * t * (2 * t - 1)))
        else:
            strip = _sum(a // 2, lambda t: _h(2 * t * (2 * t - 1)) * (_h(b - a) - 1)) + _sum(
                a // 2, lambda t: _h((2 * t + 1) * 2 * t) * _h(b - a)
            )
        region = 2 * _sum(a // 2, lambda t: _h(2 * t * (2 * t - 1)) * (a - (2 * t - 2)))
        cutoff = 0
        if tag.regime == 2:
            c = _h(a + b - l)
            cutoff = 2 * _sum(c - 1, lambda t: _h(2 * t * (2 * t - 1)) * (c - t))
        return strip, region, cutoff

    if eq:
        strip = -_h((a + 1) * (a + 2))
    else:
        strip = _h((a + 1) * (a + 2)) * (_h(b - a) - 1)
    if tag.regime == 1:
        region = 2 * _sum(a // 2 + 1, lambda t: _h(2 * t * (2 * t - 1)))
    else:
        c = a + b - l
        region = 2 * _sum(_h(l - b) + 1, lambda t: _h((c + 2 * t - 1) * (c + 2 * t)))
    return strip, region, 0


def _odd_parts(tag: CaseTag, l: int, a: int, b: int) -> tuple[int, int, int]:
    eq = tag.relation is Relation.EQUAL
    if tag.delta is DeltaClass.NEGATIVE:
        if eq:
            strip = -_sum(_h(a - 1), lambda t: _h(2 * t * (2 * t + 1)))
        else:
            strip = _sum(_h(a - 1), lambda t: _h(2 * t * (2 * t + 1)) * (_h(b - a) - 1)) + _sum(
                _h(a + 1), lambda t: _h((2 * t - 1) * 2 * t) * _h(b - a)
            )
        region = 2 * _sum(_h(a - 1), lambda t: _h(2 * t * (2 * t + 1)) * (a - (2 * t - 2) - 1))
        cutoff = 0
        if tag.regime == 2:
            s = a + b - l
            cutoff = 2 * _sum(_h(s - 3), lambda t: _h(2 * t * (2 * t + 1)) * (_h(s - 1) - t))
        return strip, region, cutoff

    if eq:
        strip = -_h((a + 1) * (a + 2))
    else:
        strip = _h((a + 1) * (a + 2)) * (_h(b - a) - 1)
    if tag.regime == 1:
        region = 2 * _sum(_h(a + 1), lambda t: _h(2 * t * (2 * t + 1)))
    else:
        c = a + b - l
        region = 2 * _sum(_h(l - b) + 1, lambda t: _h((c + 2 * t - 1) * (c + 2 * t)))
    return strip, region, 0


def case_value(tag: CaseTag, l: int, l11: int, l22: int) -> CaseValue:
    """Evaluate the case expression selected by ``tag`` (requires ``l11 <= l22``)."""
    _check(tag, l, l11, l22)
    parts = _even_parts if tag.parity is Parity.EVEN else _odd_parts
    strip, region, cutoff = parts(tag, l, l11, l22)
    return CaseValue(tag, l, l11, l22, strip + region - cutoff, strip, region, cutoff)


def case_value_even(tag: CaseTag, l: int, l11: int, l22: int) -> CaseValue:
    if tag.parity is not Parity.EVEN:
        raise InconsistentTag(f"{tag} is not an even-l case")
    return case_value(tag, l, l11, l22)


def case_value_odd(tag: CaseTag, l: int, l11: int, l22: int) -> CaseValue:
    if tag.parity is not Parity.ODD:
        raise InconsistentTag(f"{tag} is not an odd-l case")
    return case_value(tag, l, l11, l22)


def mirror_count(tag: CaseTag, l: int, l11: int, l22: int) -> CaseValue:
    """Count for ``l11 > l22`` by swapping rows 1 and 2, which keeps delta."""
    if not l11 > l22:
        raise InconsistentTag(f"mirror_count needs l11 > l22, got {l11}, {l22}")
    cv = case_value(tag, l, l22, l11)
    return replace(cv, l11=l11, l22=l22)


def region_nonempty(l: int, l11: int, l22: int, delta: DeltaClass) -> bool:
    """Whether any admissible ``(l33, l44)`` of class ``delta`` exists.

    For negative delta the coordinate sum ``l33 + l44`` ranges over
    ``[max(l22 - l11, 2*m), l11 + l22 - 2]``, where ``m`` is the smallest
    lattice coordinate (0 for even ``l``, 1 for odd).  Every even sum in that
    window is realisable.  For zero delta, ``(l33, l44) = (l11, l22)`` always
    works.
    """
    a, b = min(l11, l22), max(l11, l22)
    if delta is DeltaClass.ZERO:
        return True
    lo = max(b - a, 2 * (l % 2))
    hi = min(a + b - 2, 2 * l)
    return lo <= hi


_WEIGHTS = {
    (DeltaClass.NEGATIVE, Relation.LESS): 4,
    (DeltaClass.NEGATIVE, Relation.EQUAL): 2,
    (DeltaClass.ZERO, Relation.LESS): 2,
    (DeltaClass.ZERO, Relation.EQUAL): 1,
}


def pairs(l: int):
    """Admissible ``(l11, l22)`` with ``l11 <= l22``, in lexicographic order."""
    for a in range(l % 2, l + 1, 2):
        for b in range(a, l + 1, 2):
            yield a, b


def aggregate_parts(l: int) -> dict[tuple[DeltaClass, Relation], int]:
    """Totals of the four case families over all pairs with ``l11 <= l22``.

    Pairs whose region is empty are skipped, not evaluated.
    """
    if l < 0:
        raise ValueError(f"l must be nonnegative, got {l}")
    totals = dict.fromkeys(_WEIGHTS, 0)
    for a, b in pairs(l):
        for delta in (DeltaClass.NEGATIVE, DeltaClass.ZERO):
            if not region_nonempty(l, a, b, delta):
                continue
            tag = case_tag(l, a, b, delta)
            totals[delta, tag.relation] += case_value(tag, l, a, b).value
    return totals


def aggregate(l: int) -> int:
    parts = aggregate_parts(l)
    return sum(_WEIGHTS[key] * v for key, v in parts.items())


# Proof blocks: the partial double sums of the aggregation for l = 0 and
# l = 1 (mod 4), each paired with the polynomial it should equal.

def _rng(lo: int, hi: int) -> range:
    return range(lo, hi + 1, 2)


def _cv(delta: DeltaClass, regime: int, l: int, a: int, b: int) -> int:
    parity = Parity(l % 2)
    rel = Relation.LESS if a < b else Relation.EQUAL
    return case_value(CaseTag(parity, delta, regime, rel), l, a, b).value


_N, _Z = DeltaClass.NEGATIVE, DeltaClass.ZERO


def _even_neg_lt_1(l):
    # l11 = 0 contributes nothing but is kept as displayed
    first = sum(_cv(_N, 1, l, 0, b) for b in _rng(2, l))
    return first + sum(_cv(_N, 1, l, a, b) for a in _rng(2, l // 2) for b in _rng(a + 2, l - a + 2))


def _even_neg_lt_2(l):
    return sum(_cv(_N, 2, l, a, b) for a in _rng(l // 2 + 2, l - 2) for b in _rng(a + 2, l)) + sum(
        _cv(_N, 2, l, a, b) for a in _rng(4, l // 2) for b in _rng(l - a + 4, l)
    )


def _even_neg_eq_1(l):
    return sum(_cv(_N, 1, l, a, a) for a in _rng(2, l // 2))


def _even_neg_eq_2(l):
    # beyond l11 = l/2 + 1 only the regime-2 expression applies
    return sum(_cv(_N, 2, l, a, a) for a in _rng(l // 2 + 2, l))


def _even_zero_lt_1(l):
    return sum(_cv(_Z, 1, l, a, b) for a in _rng(0, l // 2 - 2) for b in _rng(a + 2, l - a))


def _even_zero_lt_2(l):
    return sum(_cv(_Z, 2, l, a, b) for a in _rng(l // 2, l - 2) for b in _rng(a + 2, l)) + sum(
        _cv(_Z, 2, l, a, b) for a in _rng(2, l // 2 - 2) for b in _rng(l - a + 2, l)
    )


def _even_zero_eq_1(l):
    return sum(_cv(_Z, 1, l, a, a) for a in _rng(0, l // 2))


def _even_zero_eq_2(l):
    return sum(_cv(_Z, 2, l, a, a) for a in _rng(l // 2 + 2, l))


def _odd_neg_lt_1(l):
    h = (l + 1) // 2
    first = sum(_cv(_N, 1, l, 1, b) for b in _rng(3, l))
    return first + sum(_cv(_N, 1, l, a, b) for a in _rng(3, h) for b in _rng(a + 2, l - a + 3))


def _odd_neg_lt_2(l):
    h = (l + 1) // 2
    return sum(_cv(_N, 2, l, a, b) for a in _rng(h + 2, l - 2) for b in _rng(a + 2, l)) + sum(
        _cv(_N, 2, l, a, b) for a in _rng(5, h) for b in _rng(l - a + 5, l)
    )


def _odd_neg_eq_1(l):
    return sum(_cv(_N, 1, l, a, a) for a in _rng(3, (l + 1) // 2))


def _odd_neg_eq_2(l):
    return sum(_cv(_N, 2, l, a, a) for a in _rng((l + 1) // 2 + 2, l))


def _odd_zero_lt_1(l):
    h = (l + 1) // 2
    return sum(_cv(_Z, 1, l, a, b) for a in _rng(1, h - 2) for b in _rng(a + 2, l - a + 1))


def _odd_zero_lt_2(l):
    h = (l + 1) // 2
    return sum(_cv(_Z, 2, l, a, b) for a in _rng(h, l - 2) for b in _rng(a + 2, l)) + sum(
        _cv(_Z, 2, l, a, b) for a in _rng(3, h - 2) for b in _rng(l - a + 3, l)
    )


def _odd_zero_eq_1(l):
    return sum(_cv(_Z, 1, l, a, a) for a in _rng(1, (l + 1) // 2))


def _odd_zero_eq_2(l):
    return sum(_cv(_Z, 2, l, a, a) for a in _rng((l + 1) // 2 + 2, l))


@dataclass(frozen=True)
class ProofBlock:
    block_id: str
    residue: int
    programmed: Callable[[int], int]
    numerator: Callable[[int], int]
    denominator: int

    def polynomial(self, l: int) -> int:
        return exact_div(self.numerator(l), self.denominator)


def _combine(*fs):
    return lambda l: sum(f(l) for f in fs)


_BLOCK_TABLE = [
    # 4 | l
    ("even.neg.lt.1", 0, _even_neg_lt_1,
     lambda l: l * (l + 4) * (l + 8) * (l**3 + 15 * l**2 + 83 * l + 204), 46080),
    ("even.neg.lt.2", 0, _even_neg_lt_2,
     lambda l: (l - 4) * l * (l + 4) * (19 * l**3 + 153 * l**2 + 509 * l + 528), 46080),
    ("even.neg.lt", 0, _combine(_even_neg_lt_1, _even_neg_lt_2),
     lambda l: l * (l + 4) * (l**4 + 5 * l**3 + 5 * l**2 - 32 * l - 24), 2304),
    ("even.neg.eq.1", 0, _even_neg_eq_1,
     lambda l: l * (l + 2) * (l + 4) * (l + 6) * (l + 8), 7680),
    ("even.neg.eq.2", 0, _even_neg_eq_2,
     lambda l: l * (l + 4) * (23 * l**3 + 148 * l**2 + 388 * l + 128), 7680),
    ("even.neg.eq", 0, _combine(_even_neg_eq_1, _even_neg_eq_2),
     lambda l: l * (l + 4) * (6 * l**3 + 41 * l**2 + 116 * l + 56), 1920),
    ("even.zero.lt.1", 0, _even_zero_lt_1,
     lambda l: l * (l + 4) * (l + 8) * (2 * l**2 + 11 * l + 24), 7680),
    ("even.zero.lt.2", 0, _even_zero_lt_2,
     lambda l: l * (l + 4) * (14 * l**3 + 69 * l**2 + 224 * l - 16), 7680),
    ("even.zero.lt", 0, _combine(_even_zero_lt_1, _even_zero_lt_2),
     lambda l: l * (l + 4) * (l**3 + 6 * l**2 + 21 * l + 11), 480),
    ("even.zero.eq.1", 0, _even_zero_eq_1,
     lambda l: (l + 4) * (l + 8) * (l**2 + 8 * l + 24), 768),
    ("even.zero.eq.2", 0, _even_zero_eq_2,
     lambda l: l * (l + 4) * (7 * l**2 + 32 * l + 120), 768),
    ("even.zero.eq", 0, _combine(_even_zero_eq_1, _even_zero_eq_2),
     lambda l: (l + 4) * (l**3 + 6 * l**2 + 26 * l + 24), 96),
    # 4 | l - 1
    ("odd.neg.lt.1", 1, _odd_neg_lt_1,
     lambda l: (l - 1) * (l**5 + 34 * l**4 + 479 * l**3 + 3509 * l**2 + 14268 * l + 10125), 46080),
    ("odd.neg.lt.2", 1, _odd_neg_lt_2,
     lambda l: (l - 5) * (l - 1) * (19 * l**4 + 261 * l**3 + 1526 * l**2 + 4221 * l + 2997), 46080),
    ("odd.neg.lt", 1, _combine(_odd_neg_lt_1, _odd_neg_lt_2),
     lambda l: (l - 1) * (l + 3) * (l**4 + 7 * l**3 + 14 * l**2 - 37 * l - 81), 2304),
    ("odd.neg.eq.1", 1, _odd_neg_eq_1,
     lambda l: (l - 1) * (l + 3) * (l + 7) * (l**2 + 16 * l + 75), 7680),
    ("odd.neg.eq.2", 1, _odd_neg_eq_2,
     lambda l: (l - 1) * (23 * l**4 + 258 * l**3 + 1148 * l**2 + 2038 * l + 885), 7680),
    ("odd.neg.eq", 1, _combine(_odd_neg_eq_1, _odd_neg_eq_2),
     lambda l: (l - 1) * (l + 3) * (6 * l**3 + 53 * l**2 + 192 * l + 205), 1920),
    ("odd.zero.lt.1", 1, _odd_zero_lt_1,
     lambda l: (l - 1) * (l + 3) * (2 * l**3 + 41 * l**2 + 304 * l + 805), 7680),
    ("odd.zero.lt.2", 1, _odd_zero_lt_2,
     lambda l: (l - 1) * (l + 3) * (14 * l**3 + 87 * l**2 + 208 * l - 165), 7680),
    ("odd.zero.lt", 1, _combine(_odd_zero_lt_1, _odd_zero_lt_2),
     lambda l: (l - 1) * (l + 2) * (l + 3) * (l**2 + 6 * l + 20), 480),
    ("odd.zero.eq.1", 1, _odd_zero_eq_1,
     lambda l: (l + 3) * (l + 7) * (l**2 + 14 * l + 57), 768),
    ("odd.zero.eq.2", 1, _odd_zero_eq_2,
     lambda l: 7 * (l - 1) * (l**3 + 9 * l**2 + 35 * l + 51), 768),
    ("odd.zero.eq", 1, _combine(_odd_zero_eq_1, _odd_zero_eq_2),
     lambda l: (l + 3) * (l**3 + 7 * l**2 + 29 * l + 35), 96),
]

PROOF_BLOCKS: dict[str, ProofBlock] = {row[0]: ProofBlock(*row) for row in _BLOCK_TABLE}


def proof_block_value(block_id: str, l: int) -> int:
    """Programmed sum of one aggregation block, checked against its polynomial."""
    block = PROOF_BLOCKS[block_id]
    if l < 0 or l % 4 != block.residue:
        raise ResidueError(f"block {block_id} is derived for l = {block.residue} (mod 4), got l={l}")
    value = block.programmed(l)
    expected = block.polynomial(l)
    if value != expected:
        raise TranscriptionError(f"block {block_id} at l={l}: sum {value} != polynomial {expected}")
    return value
