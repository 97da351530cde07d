"""
Burst errors and their reach
============================

A (t, s)-burst deletes t consecutive bits and drops s arbitrary bits
in their place.  This walkthrough applies one, enumerates everything a
burst can produce, and checks the closed-form counts.
"""

from burstcodes import (
    BurstSpec,
    apply_burst,
    ball,
    ball_size_formula,
    refined_ball,
    refined_ball_size,
    sphere_packing_bound,
)

x = "101000111"
print("word       ", x)

# delete 4 bits starting at position 3 (1-based), insert a single 0
y = apply_burst(x, BurstSpec(t=4, s=1, start=3, inserted="0"))
print("after burst", y)

# the ball is every word reachable by some (4,1)-burst on x
b = ball(x, 4, 1)
print(f"\n(4,1)-ball of {x}: {b.size} words")
for member in b.members:
    print(" ", member)

# the count never depends on the center, only on (n, t, s)
assert b.size == ball_size_formula(len(x), 4, 1) == (9 - 4 + 2) * 1
print("size matches (n-t+2)*2^(s-1) =", ball_size_formula(len(x), 4, 1))

# every burst has a canonical form where the inserted block disagrees
# with the deleted block at both ends; sorting outcomes by canonical
# shape splits the ball into disjoint refined balls
z = "101011100100"
part_a = refined_ball(z, 3, 0)  # pure 3-deletion outcomes
part_b = refined_ball(z, 4, 1)  # genuine (4,1) outcomes
whole = ball(z, 4, 1)
print(f"\n(4,1)-ball of {z}: {whole.size} words")
print(f"  = {part_a.size} canonical (3,0) + {part_b.size} canonical (4,1)")
assert part_a.member_set() | part_b.member_set() == whole.member_set()
assert part_a.size == refined_ball_size(z, 3, 0)

# ball sizes floor how many codewords can coexist without collisions
for n in (9, 12, 16):
    print(f"packing ceiling for (4,1) at n={n}:", sphere_packing_bound(n, 4, 1))
