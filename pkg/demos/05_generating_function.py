"""Arbitrary right-hand sides via coefficient extraction.

The table is dense over every budget vector below the target, so memory is
prod(l_i + 1) cells; DIO_MAX_CELLS (or max_cells=) caps it.
"""
import time

from diocount.errors import CapacityError
from diocount.closed_forms import count_theorem
from diocount.gf import count_general, count_general_table

print(count_general([3, 5, 2, 6]), count_general([6, 2, 5, 3]))
print(count_general([1, 2, 2]))  # odd total

print(count_general_table(5, 8))

t = time.perf_counter()
print(count_general([40] * 4) == count_theorem(40), f"{time.perf_counter() - t:.2f}s")

try:
    count_general([30] * 6, max_cells=10**6)
except CapacityError as exc:
    print("refused:", exc)
