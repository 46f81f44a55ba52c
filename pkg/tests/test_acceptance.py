"""Exit criteria, one test per criterion, each at its stated budget."""
import random
import time

import pytest

from diocount import closed_forms as cf
from diocount.floyd import A006003, floyd_count_cases, floyd_enumerate
from diocount.gf import count_general
from diocount.oracle import count_bruteforce, count_fixed_diagonal_by_delta
from diocount.strip import PROOF_BLOCKS, aggregate, case_tag, case_value, pairs, proof_block_value
from diocount.system import DeltaClass, SystemKind, SystemSpec

acceptance = pytest.mark.acceptance


class timed:
    def __init__(self, budget):
        self.budget = budget

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.budget, f"took {self.elapsed:.1f}s, budget {self.budget}s"


def full4(l):
    return SystemSpec.uniform(SystemKind.FULL4, l)


@acceptance(1, title="closed form = oracle, l in [0,16] even and [1,15] odd, < 30 s")
def test_closed_form_vs_oracle():
    with timed(30):
        for l in range(0, 17):
            assert cf.count_theorem(l) == count_bruteforce(full4(l)), l


# frozen after re-derivation by the oracle (and by the naive product search in conftest)
SPOT = {("e_even", 0): 1, ("d_odd", 1): 3, ("e_even", 2): 17}


@acceptance(2, title="spot values e(0)=1, d(1)=3, e(2)=17")
def test_spot_values():
    for (name, l), value in SPOT.items():
        assert count_bruteforce(full4(l)) == value
        assert getattr(cf, name)(l) == value


@acceptance(3, title="every case value = oracle delta-restricted count, l <= 12, < 60 s")
def test_strip_per_pair():
    with timed(60):
        n = 0
        for l in range(0, 13):
            for a, b in pairs(l):
                for delta in (DeltaClass.NEGATIVE, DeltaClass.ZERO):
                    tag = case_tag(l, a, b, delta)
                    assert case_value(tag, l, a, b).value == count_fixed_diagonal_by_delta(l, a, b, delta), (l, a, b, tag)
                    n += 1
        assert n == 2 * sum(1 for l in range(13) for _ in pairs(l))


@acceptance(4, title="aggregate(l) = closed form for l in [0,60], < 10 s")
def test_aggregate():
    with timed(10):
        for l in range(0, 61):
            assert aggregate(l) == cf.count_theorem(l), l
        assert {l % 4 for l in range(61)} == {0, 1, 2, 3}


@acceptance(5, title="proof-block sums = displayed polynomials at l in {4,8,12} / {1,5,9,13}")
def test_proof_blocks():
    assert len(PROOF_BLOCKS) == 24
    for block_id, block in PROOF_BLOCKS.items():
        for l in ((4, 8, 12) if block.residue == 0 else (1, 5, 9, 13)):
            assert proof_block_value(block_id, l) == block.polynomial(l)


@acceptance(6, title="floyd_f = case sums = |enumerate| = oracle, even l <= 20; odd -> 0; < 5 s")
def test_floyd():
    with timed(5):
        for l in range(0, 21):
            oracle = count_bruteforce(SystemSpec.uniform(SystemKind.FLOYD3, l))
            if l % 2:
                assert cf.floyd_f(l) == 0 == oracle
                continue
            f = cf.floyd_f(l)
            assert f == floyd_count_cases(l) == sum(1 for _ in floyd_enumerate(l)) == oracle, l


@acceptance(7, title="floyd_f(2n-2) = n(1+n^2)/2 for n in [1,100]; first 20 terms of A006003")
def test_magic_constant():
    for n in range(1, 101):
        assert cf.floyd_f(2 * n - 2) == cf.magic_constant(n) == n * (1 + n * n) // 2
    assert tuple(cf.floyd_f(2 * n - 2) for n in range(1, 21)) == A006003


@acceptance(8, title="GF = oracle on 100 seeded instances, permutation-invariant, odd -> 0, uniform l <= 40, < 60 s")
def test_gf():
    rng = random.Random(20240601)
    with timed(60):
        odd = 0
        for _ in range(100):
            k = rng.choice((3, 4, 5))
            rhs = [rng.randint(0, 8) for _ in range(k)]
            got = count_general(rhs)
            assert got == count_bruteforce(SystemSpec.general(rhs)), rhs
            perm = rhs[:]
            rng.shuffle(perm)
            assert count_general(perm) == got
            if sum(rhs) % 2:
                odd += 1
                assert got == 0
        assert odd > 0
        for l in range(0, 41):
            assert count_general([l] * 4) == cf.count_theorem(l), l


@acceptance(9, title="oracle total over delta > 0 = total over delta < 0, l <= 12")
def test_delta_symmetry():
    for l in range(0, 13):
        diag = range(l % 2, l + 1, 2)
        neg = sum(count_fixed_diagonal_by_delta(l, a, b, DeltaClass.NEGATIVE) for a in diag for b in diag)
        pos = sum(count_fixed_diagonal_by_delta(l, a, b, DeltaClass.POSITIVE) for a in diag for b in diag)
        assert neg == pos, l


@acceptance(10, title="numerators divisible by 576, 576, 16, 2 for all valid l <= 10000")
def test_divisibility():
    for l in range(0, 10001):
        if l % 2 == 0:
            assert cf.e_even_numerator(l) % 576 == 0
            assert cf.floyd_numerator(l) % 16 == 0
        else:
            assert cf.d_odd_numerator(l) % 576 == 0
        if l >= 1:
            assert cf.magic_numerator(l) % 2 == 0
