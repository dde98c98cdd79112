"""
The Legendre-type count against reality
=======================================

Inclusion-exclusion over squarefree n built from primes above p_j gives
a candidate count R of twin-4 ranks up to L. Next to it sit the split
R = R_M + R_E, the product form, the asymptotic form and the true count.
"""

from cousin_sieve import counting

print(f"{'p_j':>4} {'R':>12} {'R_M':>12} {'product':>10} {'asym':>10} {'oracle':>7}")
for p_j in (7, 11, 13, 17, 19):
    rep = counting.legendre_report(p_j)
    print(
        f"{p_j:>4} {float(rep.R):>12.1f} {float(rep.R_M):>12.2f} {rep.R_M_product:>10.2f}"
        f" {rep.R_asym:>10.2f} {rep.oracle_twin_count:>7}"
    )

###############################################################################
# R drops far below zero from p_j = 11 on. At p_j = 11 every n <= A/2 is a
# single prime, so each bracket is subtracted with weight 2 and nothing is
# added back. The product form and the asymptotic form stay positive but
# fall well short of the oracle count.
