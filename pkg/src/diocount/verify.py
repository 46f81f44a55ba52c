"""Cross-engine verification sweeps.

Each suite returns a list of :class:`Check` results instead of raising, so
callers can report every failure in one run.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import closed_forms as cf
from .floyd import A006003, floyd_count_cases, floyd_enumerate
from .gf import count_general
from .oracle import count_bruteforce, count_fixed_diagonal_by_delta
from .strip import PROOF_BLOCKS, aggregate, case_tag, case_value, pairs, proof_block_value, region_nonempty
from .system import DeltaClass, SystemKind, SystemSpec


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.suite} {self.name}" + (f": {self.detail}" if self.detail else "")


def _eq(suite: str, name: str, got, want) -> Check:
    return Check(suite, name, got == want, f"{got} == {want}" if got == want else f"{got} != {want}")


def closed_vs_oracle(max_l: int = 12, **_) -> list[Check]:
    out = []
    for l in range(max_l + 1):
        oracle = count_bruteforce(SystemSpec.uniform(SystemKind.FULL4, l))
        out.append(_eq("closed-vs-oracle", f"l={l}", cf.count_theorem(l), oracle))
    return out


def strip_vs_oracle(max_l: int = 8, **_) -> list[Check]:
    out = []
    for l in range(max_l + 1):
        for a, b in pairs(l):
            for delta in (DeltaClass.NEGATIVE, DeltaClass.ZERO):
                oracle = count_fixed_diagonal_by_delta(l, a, b, delta)
                name = f"l={l} l11={a} l22={b} {delta.name.lower()}"
                if not region_nonempty(l, a, b, delta):
                    out.append(_eq("strip-vs-oracle", name + " (empty region)", 0, oracle))
                    continue
                tag = case_tag(l, a, b, delta)
                out.append(_eq("strip-vs-oracle", f"{name} {tag}", case_value(tag, l, a, b).value, oracle))
    return out


def strip_vs_closed(max_l: int = 60, **_) -> list[Check]:
    return [_eq("strip-vs-closed", f"l={l}", aggregate(l), cf.count_theorem(l)) for l in range(max_l + 1)]


def floyd(max_l: int = 20, **_) -> list[Check]:
    out = []
    for l in range(max_l + 1):
        f = cf.floyd_f(l)
        if l % 2:
            out.append(_eq("floyd", f"l={l} odd", f, 0))
            out.append(_eq("floyd", f"l={l} enumerate", sum(1 for _ in floyd_enumerate(l)), 0))
            continue
        out.append(_eq("floyd", f"l={l} cases", floyd_count_cases(l), f))
        out.append(_eq("floyd", f"l={l} enumerate", sum(1 for _ in floyd_enumerate(l)), f))
        if l <= 20:
            out.append(_eq("floyd", f"l={l} oracle", count_bruteforce(SystemSpec.uniform(SystemKind.FLOYD3, l)), f))
    for n in range(1, 101):
        out.append(_eq("floyd", f"magic n={n}", cf.floyd_f(2 * n - 2), cf.magic_constant(n)))
    got = tuple(cf.floyd_f(2 * n - 2) for n in range(1, len(A006003) + 1))
    out.append(_eq("floyd", "A006003", got, A006003))
    return out


def gf(max_l: int = 8, instances: int = 100, seed: int = 20240601, uniform_max: int = 40,
       max_cells: int | None = None, **_) -> list[Check]:
    out = []
    rng = random.Random(seed)
    for n in range(instances):
        k = rng.choice((3, 4, 5))
        rhs = [rng.randint(0, max_l) for _ in range(k)]
        got = count_general(rhs, max_cells)
        out.append(_eq("gf", f"#{n} rhs={rhs} oracle", got, count_bruteforce(SystemSpec.general(rhs))))
        perm = rhs[:]
        rng.shuffle(perm)
        out.append(_eq("gf", f"#{n} rhs={rhs} permuted {perm}", count_general(perm, max_cells), got))
        if sum(rhs) % 2:
            out.append(_eq("gf", f"#{n} rhs={rhs} odd sum", got, 0))
    for l in range(uniform_max + 1):
        out.append(_eq("gf", f"uniform l={l}", count_general([l] * 4, max_cells), cf.count_theorem(l)))
    return out


def proof_blocks(max_l: int = 13, **_) -> list[Check]:
    out = []
    for block_id, block in PROOF_BLOCKS.items():
        for l in range(block.residue, max(max_l, block.residue) + 1, 4):
            try:
                value = proof_block_value(block_id, l)
            except AssertionError as exc:
                out.append(Check("proof-blocks", f"{block_id} l={l}", False, str(exc)))
            else:
                out.append(Check("proof-blocks", f"{block_id} l={l}", True, f"sum = polynomial = {value}"))
    return out


SUITES: dict[str, Callable[..., list[Check]]] = {
    "closed-vs-oracle": closed_vs_oracle,
    "strip-vs-oracle": strip_vs_oracle,
    "strip-vs-closed": strip_vs_closed,
    "floyd": floyd,
    "gf": gf,
    "proof-blocks": proof_blocks,
}


def run_suite(name: str, max_l: int | None = None, max_cells: int | None = None) -> list[Check]:
    names = list(SUITES) if name == "all" else [name]
    out = []
    for n in names:
        kwargs = {"max_cells": max_cells}
        if max_l is not None:
            kwargs["max_l"] = max_l
        out.extend(SUITES[n](**kwargs))
    return out
