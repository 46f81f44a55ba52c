import pytest

from diocount.closed_forms import count_theorem, d_odd, e_even
from diocount.errors import InconsistentTag, ResidueError
from diocount.oracle import count_fixed_diagonal_by_delta
from diocount.strip import (
    PROOF_BLOCKS,
    CaseTag,
    Parity,
    Relation,
    aggregate,
    aggregate_parts,
    case_tag,
    case_value,
    case_value_even,
    case_value_odd,
    mirror_count,
    pairs,
    proof_block_value,
    region_nonempty,
)
from diocount.system import DeltaClass

NEG, ZERO = DeltaClass.NEGATIVE, DeltaClass.ZERO


def tag(parity, delta, regime, rel):
    return CaseTag(parity, delta, regime, rel)


def test_first_summand_zero():
    cv = case_value_even(tag(Parity.EVEN, NEG, 1, Relation.LESS), 2, 0, 2)
    assert cv.value == 0


def test_even_zero_equal_at_origin():
    # -1/2 * 1 * 2 + 2 * (1 * 1) = 1
    cv = case_value_even(tag(Parity.EVEN, ZERO, 1, Relation.EQUAL), 0, 0, 0)
    assert (cv.value, cv.strip_part, cv.region_part) == (1, -1, 2)


def test_odd_negative_equal_empty_sums():
    cv = case_value_odd(tag(Parity.ODD, NEG, 1, Relation.EQUAL), 1, 1, 1)
    assert cv.value == 0


def test_odd_zero_equal_smallest():
    # -1/2 * 2 * 3 + 2 * (1 * 3) = 3
    cv = case_value_odd(tag(Parity.ODD, ZERO, 1, Relation.EQUAL), 1, 1, 1)
    assert cv.value == 3


def test_parts_add_up():
    cv = case_value(tag(Parity.EVEN, NEG, 2, Relation.LESS), 8, 6, 8)
    assert cv.cutoff_part > 0
    assert cv.value == cv.strip_part + cv.region_part - cv.cutoff_part


@pytest.mark.parametrize(
    "t, args",
    [
        (tag(Parity.ODD, NEG, 1, Relation.LESS), (4, 2, 4)),
        (tag(Parity.EVEN, NEG, 2, Relation.LESS), (4, 0, 2)),
        (tag(Parity.EVEN, NEG, 1, Relation.EQUAL), (4, 0, 2)),
        (tag(Parity.EVEN, NEG, 1, Relation.LESS), (4, 4, 2)),
        (tag(Parity.EVEN, ZERO, 1, Relation.LESS), (4, 1, 3)),
    ],
)
def test_inconsistent_tags(t, args):
    with pytest.raises(InconsistentTag):
        case_value(t, *args)


def test_wrong_parity_entry_points():
    with pytest.raises(InconsistentTag):
        case_value_even(tag(Parity.ODD, ZERO, 1, Relation.EQUAL), 1, 1, 1)
    with pytest.raises(InconsistentTag):
        case_value_odd(tag(Parity.EVEN, ZERO, 1, Relation.EQUAL), 0, 0, 0)


def test_positive_delta_has_no_tag():
    with pytest.raises(InconsistentTag):
        CaseTag(Parity.EVEN, DeltaClass.POSITIVE, 1, Relation.LESS)


def test_regime_boundary_goes_to_regime_one():
    # l == l11 + l22 - 2 exactly
    assert case_tag(6, 2, 6, NEG).regime == 1
    assert case_tag(6, 4, 6, NEG).regime == 2


@pytest.mark.parametrize("l", range(0, 11))
def test_per_pair_matches_oracle(l):
    for a, b in pairs(l):
        for delta in (NEG, ZERO):
            t = case_tag(l, a, b, delta)
            assert case_value(t, l, a, b).value == count_fixed_diagonal_by_delta(l, a, b, delta), (l, a, b, t)


@pytest.mark.parametrize("l", range(0, 11))
def test_region_predicate_matches_oracle_pattern(l):
    for a, b in pairs(l):
        for delta in (NEG, ZERO):
            oracle = count_fixed_diagonal_by_delta(l, a, b, delta)
            assert region_nonempty(l, a, b, delta) == (oracle > 0)


def test_mirror():
    t = case_tag(4, 2, 4, NEG)
    assert mirror_count(t, 4, 4, 2).value == case_value(t, 4, 2, 4).value
    # from the oracle: both orientations give 7
    assert count_fixed_diagonal_by_delta(4, 4, 2, NEG) == count_fixed_diagonal_by_delta(4, 2, 4, NEG) == 7
    t = case_tag(3, 1, 3, NEG)
    assert mirror_count(t, 3, 3, 1).value == count_fixed_diagonal_by_delta(3, 3, 1, NEG) == 1
    with pytest.raises(InconsistentTag):
        mirror_count(t, 3, 1, 3)


@pytest.mark.parametrize("l", range(0, 9))
def test_mirror_matches_oracle(l):
    for a, b in pairs(l):
        if a == b:
            continue
        for delta in (NEG, ZERO):
            t = case_tag(l, a, b, delta)
            assert mirror_count(t, l, b, a).value == count_fixed_diagonal_by_delta(l, b, a, delta)


def test_aggregate_examples():
    assert aggregate(0) == 1
    assert aggregate(2) == 17 == e_even(2)
    assert aggregate(5) == d_odd(5)


@pytest.mark.parametrize("l", range(0, 41))
def test_aggregate_equals_closed_form(l):
    assert aggregate(l) == count_theorem(l)


def test_aggregate_parts_weights():
    parts = aggregate_parts(8)
    assert parts[NEG, Relation.LESS] == PROOF_BLOCKS["even.neg.lt"].polynomial(8)
    assert parts[ZERO, Relation.EQUAL] == PROOF_BLOCKS["even.zero.eq"].polynomial(8)


def test_proof_block_examples():
    assert proof_block_value("even.neg.lt.1", 4) == 7
    assert proof_block_value("even.zero.eq", 4) == PROOF_BLOCKS["even.zero.eq"].polynomial(4) == 24
    assert proof_block_value("odd.neg.eq", 1) == 0


@pytest.mark.parametrize("block_id", sorted(PROOF_BLOCKS))
def test_proof_blocks_hold(block_id):
    r = PROOF_BLOCKS[block_id].residue
    for l in range(r, 30, 4):
        proof_block_value(block_id, l)


def test_proof_block_residue():
    with pytest.raises(ResidueError):
        proof_block_value("even.neg.lt.1", 6)
    with pytest.raises(ResidueError):
        proof_block_value("odd.zero.eq", 3)
