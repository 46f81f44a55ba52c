"""Three equations, and the magic constant hiding in them.

With three rows the off-diagonal part is forced by the budgets, so a
solution is just a triangle-inequality triple with an even sum.  At l = 2n-2
the count is n(n^2+1)/2, the magic constant of an order-n magic square.
"""
from diocount import closed_forms as cf
from diocount.floyd import A006003, floyd_case_parts, floyd_enumerate, floyd_matrix

for t, off in floyd_enumerate(4):
    print(tuple(t), off, floyd_matrix(4, t).to_json())

for l in (8, 10):
    print(l, floyd_case_parts(l), cf.floyd_f(l))

print([cf.floyd_f(2 * n - 2) for n in range(1, 11)])
print(list(A006003[:10]))
