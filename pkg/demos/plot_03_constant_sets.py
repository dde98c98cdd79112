"""
Offsets that survive the small primes
=====================================

Past L = 5 * 7 * ... * p_j every twin-4 rank lies in a progression
L(2n+1) + c with c from a finite set C. The set is built one prime at a
time and shrinks in density by (p-2)/p at each step.
"""

from cousin_sieve import sieve
from cousin_sieve.oracle import twin_ranks_naive

for p_j in (5, 7, 11, 13):
    cs = sieve.constants_C(p_j)
    print(p_j, cs.L, len(cs), f"{len(cs) / cs.L:.4f}")

print(sieve.constants_C(7).constants)

# every rank above 35 is admitted by C_7
cs = sieve.constants_C(7)
print(all(cs.admits(t) for t in twin_ranks_naive(10**5) if t >= 35))

###############################################################################
# Below M = (p_{j+1}^2 - 4)/3 the numbers missed by the supergroup are
# precisely the ranks; above it the next prime starts to bite.

view = sieve.supergroup_view(7)
print("boundary", view.boundary)
print(view.remnants(view.boundary))
print([m for m in view.remnants(120) if m not in twin_ranks_naive(120)])
