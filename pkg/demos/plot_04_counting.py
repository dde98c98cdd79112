"""
Counting over one period
========================

Per period 2L(p_j) every count is an exact rational: how many odd numbers
have parent p, how many the supergroup covers, and what is left over.
"""

import random

from cousin_sieve import counting

for p_j in (5, 7, 11, 13, 17):
    st = counting.stats(p_j)
    print(p_j, "S =", st.S, "R0 =", st.R0, "Q + x =", st.Q + st.x)

# A window of 2L integers anywhere above p_j sees the same counts
rng = random.Random(0)
for _ in range(3):
    lo = rng.randrange(7, 10**6)
    c = counting.window_census(11, lo)
    print(lo, c.parent_counts, c.supergroup, c.remnants, c.matches)
