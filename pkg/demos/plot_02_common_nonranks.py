"""
Common non-ranks of several primes
==================================

The progressions of distinct primes meet in 2^m residue classes modulo
2 p_1 ... p_m, one per choice of sign.
"""

from cousin_sieve import multirank

sol = multirank.common_double(5, 11)
for pr in sol:
    r, rp = pr.r_pair
    print(pr.signs, "residue", pr.residue, "mod", pr.modulus, "r =", r, "r' =", rp)

###############################################################################
# Adding a third prime splits each class in two. The witnesses (nu, mu)
# record how the odd factor 2n+1 was refined.

sol = multirank.mfold([5, 7, 11])
for pr in sol:
    step = pr.steps[-1]
    print(pr.residue, [str(s) for s in pr.signs], (step.nu, step.mu), list(pr.members(3000))[:3])

###############################################################################
# For ordinary twin primes p, p+2 the four classes have a closed form.

p, q = 17, 19
N = (p + 1) // 6
mod = 2 * p * q
closed = sorted(
    {(p * q + 4 * N) % mod, (p * q - 4 * N) % mod, (p * (q + 4 * N) + 4 * N) % mod, (p * (q - 4 * N) - 4 * N) % mod}
)
print(closed, multirank.common_double(p, q).residues())
