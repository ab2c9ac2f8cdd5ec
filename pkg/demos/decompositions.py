"""Break mobility into pieces.

Scenario 1c swaps the richest person to the bottom while the others double.
We split S1 into upward and downward movers, then split the absolute
gamma = 1 index into structural change, exchange and growth.

Run: python3 demos/decompositions.py
"""

from mobility import MovementProfile
from mobility.class1 import decompose_s1_subgroups, updown_partition
from mobility.io import format_number as fmt
from mobility.measures import MeasureSpec, decompose

p = MovementProfile([10, 20, 40], [20, 40, 10])
print("profile u =", p.u.tolist(), " v =", p.v.tolist())

for alpha in (0.0, 0.5, 1.0):
    res = decompose_s1_subgroups(p, alpha, updown_partition(p))
    parts = ", ".join(f"{k}: weight {fmt(c.weight)} value {fmt(c.value, 4)}" for k, c in res.components.items())
    print(f"\nS1 alpha={alpha}: total {res.total:.4f}")
    print("   ", parts)
    print(f"    between {fmt(res.between, 4)}, residual {res.residual:.1e}")
print("\nEveryone in a group moves by the same factor, so only the between term is left.")
print("Raising alpha shifts weight from the upward group to the downward one.")

res = decompose(MeasureSpec("A2", gamma=1), p, method="seg")
print("\nA2 (gamma=1) split into structural / exchange / growth:")
for k, c in res.components.items():
    print(f"    {k:10s} {fmt(c.value, 4)}")
print(f"    total      {res.total:.4f}  (residual {res.residual:.1e})")
print("The destination incomes are the origin incomes reshuffled, so it is all exchange.")
