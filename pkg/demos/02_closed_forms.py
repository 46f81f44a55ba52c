"""The two quartic-over-576 polynomials and their remapped variants."""
from diocount import closed_forms as cf

for l in range(0, 12):
    value = cf.count_theorem(l)
    form = "e" if l % 2 == 0 else "d"
    print(f"l={l:2d}  {form}(l) = {value}")

# The remapped forms take any l >= 1 (resp. >= 2) and land on the even / odd
# originals at 2l-2 and 2l-3.
for l in range(2, 7):
    print(l, cf.e_remap(l), cf.e_even(2 * l - 2), cf.d_remap(l), cf.d_odd(2 * l - 3))

# exact integers, no float anywhere
print(cf.count_theorem(10**6))
