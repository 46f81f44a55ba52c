"""Count one diagonal slice at a time, then add the slices back up.

Fixing a11 and a22 fixes the reduced budgets l11 and l22.  For each pair the
case machinery picks an expression by the sign of the difference
(l33 + l44) - (l11 + l22), by whether l11 < l22 or l11 = l22, and by which
side of the regime cutoff we are on.
"""
from diocount import DeltaClass
from diocount.closed_forms import count_theorem
from diocount.oracle import count_fixed_diagonal_by_delta
from diocount.strip import PROOF_BLOCKS, aggregate, aggregate_parts, case_tag, case_value, pairs, proof_block_value

l = 6
for a, b in pairs(l):
    for delta in (DeltaClass.NEGATIVE, DeltaClass.ZERO):
        tag = case_tag(l, a, b, delta)
        cv = case_value(tag, l, a, b)
        print(f"l11={a} l22={b} {tag}: {cv.value} (oracle {count_fixed_diagonal_by_delta(l, a, b, delta)})")

for (delta, rel), v in aggregate_parts(l).items():
    print(delta.name.lower(), rel.value, v)
print(aggregate(l), count_theorem(l))

# each partial double sum collapses to a polynomial on its residue class
for block_id in ("even.neg.lt.1", "even.neg.eq.2", "odd.zero.lt"):
    block = PROOF_BLOCKS[block_id]
    l = 8 if block.residue == 0 else 9
    print(block_id, proof_block_value(block_id, l), block.polynomial(l))
