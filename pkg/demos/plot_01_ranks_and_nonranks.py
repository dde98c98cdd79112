"""
Twin-4 ranks and non-ranks
==========================

An odd m is a twin-4 rank when 3m-2 and 3m+2 are both prime, so every
cousin pair (q, q+4) with q >= 7 has the form (3m-2, 3m+2).
"""

import numpy as np

from cousin_sieve import nonrank, sieve

# The first few ranks and the pairs they stand for
ranks = sieve.twin4_ranks_upto(60)
for m in ranks:
    print(m, (3 * m - 2, 3 * m + 2))

# Everything else is a non-rank, and has a parent prime
for m in (9, 11, 17, 19, 121):
    c = nonrank.classify(m)
    print(m, c, nonrank.decompose(m))

###############################################################################
# Each prime p >= 5 owns two progressions of step 2p. Their members are
# exactly the non-ranks that p certifies.

plus, minus = nonrank.progressions_for_prime(7)
print("7+:", list(plus.members(100)))
print("7-:", list(minus.members(100)))

###############################################################################
# Striking both progressions of every prime up to sqrt(3x+2) leaves the
# ranks. The bitmap is one bool per odd number.

w = sieve.sieve_window(0, 200)
print(w.values()[~w.struck])

x = 10**6
ranks = np.array(sieve.twin4_ranks_upto(x))
print(f"{len(ranks)} ranks up to {x}, so {len(ranks)} cousin pairs below {3 * x + 2}")
