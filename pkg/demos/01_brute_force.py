"""Walk through the smallest cases by brute force.

For l = 1 there are three solutions of the four-equation system; we print
them as upper triangles and check each row sum by hand.
"""
from diocount import SystemKind, SystemSpec, count_bruteforce, enumerate_solutions

spec = SystemSpec.uniform(SystemKind.FULL4, 1)
for m in enumerate_solutions(spec):
    print(m.to_json(), "row sums", m.row_sums())

# the count grows quickly; the oracle stays usable up to the mid teens
for l in range(9):
    print(l, count_bruteforce(SystemSpec.uniform(SystemKind.FULL4, l)))

# an uneven right-hand side, and one whose sum is odd (never solvable)
print(count_bruteforce(SystemSpec.general([2, 3, 1])))
print(count_bruteforce(SystemSpec.general([2, 3, 2])))
