"""Exact counting of nonnegative solutions of structured linear Diophantine systems.

Four engines cross-check each other: a brute-force oracle, closed-form
polynomials, a case-by-case strip counter and a generating-function table.
"""
from .closed_forms import (
    count_theorem,
    d_odd,
    d_remap,
    e_even,
    e_remap,
    floyd_f,
    magic_constant,
    triangle,
)
from .floyd import FloydTriple, floyd_count_cases, floyd_enumerate, floyd_exists, floyd_solution
from .gf import count_general, count_general_table
from .oracle import count_bruteforce, count_fixed_diagonal, count_fixed_diagonal_by_delta, enumerate_solutions
from .strip import aggregate, case_tag, case_value, mirror_count, proof_block_value
from .system import (
    DeltaClass,
    ReducedRHS,
    SolutionMatrix,
    SystemKind,
    SystemSpec,
    classify_delta,
    residue_class,
    validate,
)

__version__ = "0.1.0"
