"""Counting non-ranks, remnants and twin-4 ranks over one primorial period.

Per-period quantities are exact ``Fraction``s. The Legendre-type sum is
exact too, and its main/error split is exact up to ``EXACT_CAP``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .arith import (
    boundary_M,
    constants,
    next_prime,
    primes_from_5,
    primes_in,
    primorial_L,
    squarefree_products,
)
from .oracle import Oracle

__all__ = [
    "LEGENDRE_CAP",
    "EXACT_CAP",
    "CENSUS_CAP",
    "count_G",
    "count_q",
    "level_count",
    "SupergroupStats",
    "stats",
    "LegendreTerms",
    "legendre_terms",
    "legendre_R",
    "split_main_error",
    "main_term_product",
    "asymptotic_main",
    "LegendreReport",
    "legendre_report",
    "Census",
    "window_census",
]

LEGENDRE_CAP = 19
EXACT_CAP = 17
CENSUS_CAP = 19


def count_G(p: int) -> Fraction:
    """Parent-p non-ranks per period L(p): product of (p'-2) over primes 5 <= p' < p."""
    return Fraction(math.prod(q - 2 for q in primes_from_5(p) if q < p))


def count_q(p: int) -> Fraction:
    """G(p)/L(p), the density of parent-p non-ranks among all integers."""
    return count_G(p) / primorial_L(p)


def level_count(p: int, p_j: int) -> Fraction:
    """Parent-p non-ranks per period L(p_j), for p <= p_j."""
    return count_q(p) * primorial_L(p_j)


@dataclass(frozen=True)
class SupergroupStats:
    p_j: int
    L: int
    M_next: int
    G: dict[int, Fraction]
    q: dict[int, Fraction]
    S: Fraction
    Q: Fraction
    R0: Fraction
    x: Fraction

    @property
    def level_G(self) -> dict[int, Fraction]:
        """Per-prime parent counts over one period L(p_j)."""
        return {p: qp * self.L for p, qp in self.q.items()}

    def identities(self) -> dict[str, bool]:
        prod = Fraction(math.prod(p - 2 for p in self.q)) / self.L
        return {
            "Q+x=1/2": self.Q + self.x == Fraction(1, 2),
            "S=L*Q": self.S == self.L * self.Q,
            "R0=L/2-S": self.R0 == Fraction(self.L, 2) - self.S,
            "R0=prod(p-2)/2": self.R0 == Fraction(math.prod(p - 2 for p in self.q), 2),
            "sum q telescopes": sum(self.q.values()) == (1 - prod) / 2,
        }


def stats(p_j: int) -> SupergroupStats:
    L = primorial_L(p_j)
    ps = primes_from_5(p_j)
    G = {p: count_G(p) for p in ps}
    q = {p: G[p] / primorial_L(p) for p in ps}
    Q = sum(q.values(), Fraction(0))
    S = L * Q
    R0 = Fraction(L, 2) - S
    return SupergroupStats(
        p_j=p_j,
        L=L,
        M_next=boundary_M(next_prime(p_j)),
        G=G,
        q=q,
        S=S,
        Q=Q,
        R0=R0,
        x=R0 / L,
    )


@dataclass(frozen=True)
class LegendreTerms:
    """Index set of the Legendre-type sum at level p_j.

    ``A`` is L - M(j+1) - 1; the bracket of n is floor(A / 2n). Only squarefree
    n built from primes in (p_j, (6L+1)/4] with n <= A/2 contribute, and none
    do when A <= 0.
    """

    p_j: int
    L: int
    M_next: int
    R0: Fraction
    A: int
    prime_cutoff: int
    n: np.ndarray  # squarefree products
    weight: np.ndarray  # mu(n) 2^nu(n)


def legendre_terms(p_j: int) -> LegendreTerms:
    if p_j > LEGENDRE_CAP:
        raise ValueError(f"Legendre sum is capped at p_j <= {LEGENDRE_CAP}")
    if p_j < 7:
        raise ValueError("Legendre sum needs p_j >= 7")
    st = stats(p_j)
    A = st.L - st.M_next - 1
    cutoff = (6 * st.L + 1) // 4
    ns: list[int] = []
    ws: list[int] = []
    if A > 0:
        for n, k, mu in squarefree_products(p_j, cutoff, A // 2):
            ns.append(n)
            ws.append(mu << k)
    return LegendreTerms(
        p_j, st.L, st.M_next, st.R0, A, cutoff, np.array(ns, dtype=np.int64), np.array(ws, dtype=np.int64)
    )


def legendre_R(p_j: int) -> Fraction:
    t = legendre_terms(p_j)
    if not len(t.n):
        return t.R0
    brackets = t.A // (2 * t.n)
    return t.R0 + int(np.dot(t.weight, brackets))


def _tree_sum(xs: list[Fraction]) -> Fraction:
    if not xs:
        return Fraction(0)
    while len(xs) > 1:
        nxt = [xs[i] + xs[i + 1] for i in range(0, len(xs) - 1, 2)]
        if len(xs) % 2:
            nxt.append(xs[-1])
        xs = nxt
    return xs[0]


def split_main_error(p_j: int, exact: bool | None = None):
    """(R_M, R_E) with the floor in each bracket split as y - {y}.

    Exact ``Fraction``s when ``exact`` (default for p_j <= EXACT_CAP),
    floats otherwise.
    """
    t = legendre_terms(p_j)
    if exact is None:
        exact = p_j <= EXACT_CAP
    if exact:
        ratios = [Fraction(int(w) * t.A, 2 * int(n)) for n, w in zip(t.n, t.weight)]
        fracs = [Fraction(int(w) * (t.A % (2 * int(n))), 2 * int(n)) for n, w in zip(t.n, t.weight)]
        return t.R0 + _tree_sum(ratios), -_tree_sum(fracs)
    ratios = t.weight * (t.A / (2.0 * t.n))
    fracs = t.weight * ((t.A % (2 * t.n)) / (2.0 * t.n))
    return float(t.R0) + math.fsum(ratios.tolist()), -math.fsum(fracs.tolist())


def main_term_product(p_j: int) -> float:
    """Product form of the main term over primes up to (6L+1)/4."""
    if p_j > LEGENDRE_CAP:
        raise ValueError(f"product form is capped at p_j <= {LEGENDRE_CAP}")
    L = primorial_L(p_j)
    M = boundary_M(next_prime(p_j))
    ps = np.array(primes_in(4, (6 * L + 1) // 4), dtype=np.float64)
    logs = np.log1p(-2.0 / ps)
    full = math.exp(math.fsum(logs.tolist()))
    upper = math.exp(math.fsum(logs[ps > p_j].tolist()))
    return 0.5 * L * full + 0.5 * M * (1.0 - upper)


def asymptotic_main(p_j: int) -> float:
    """2 c2 e^{-2 gamma} 3L / log^2((3L + 0.5)/2)."""
    if p_j < 7:
        raise ValueError("asymptotic form needs p_j >= 7")
    L = primorial_L(p_j)
    coeff = constants().hl_coefficient / 2
    return coeff * 3 * L / math.log((3 * L + 0.5) / 2) ** 2


@dataclass
class LegendreReport:
    p_j: int
    R: Fraction
    R_M: Fraction | float
    R_E: Fraction | float
    R_M_product: float
    R_asym: float
    oracle_twin_count: int
    discrepancies: dict[str, float] = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return isinstance(self.R_M, Fraction)

    def decomposition_holds(self, rel_tol: float = 1e-9) -> bool:
        if self.exact:
            return self.R == self.R_M + self.R_E
        return math.isclose(float(self.R), self.R_M + self.R_E, rel_tol=rel_tol, abs_tol=rel_tol)


def legendre_report(p_j: int, oracle: Oracle | None = None) -> LegendreReport:
    """Every form of the twin-rank count at level p_j, next to the oracle count of ranks <= L."""
    L = primorial_L(p_j)
    oracle = oracle or Oracle.for_ranks(L)
    count = len(oracle.twin_ranks(L))
    R = legendre_R(p_j)
    R_M, R_E = split_main_error(p_j)
    prod = main_term_product(p_j)
    asym = asymptotic_main(p_j)
    disc = {
        "R-oracle": float(R) - count,
        "R_M-oracle": float(R_M) - count,
        "R_M_product-oracle": prod - count,
        "R_M_product-R_M": prod - float(R_M),
        "R_asym-oracle": asym - count,
        "R_asym/oracle": asym / count if count else math.nan,
    }
    return LegendreReport(p_j, R, R_M, R_E, prod, asym, count, disc)


@dataclass(frozen=True)
class Census:
    p_j: int
    lo: int
    hi: int
    parent_counts: dict[int, int]
    supergroup: int
    remnants: int
    expected_parent: dict[int, Fraction]
    expected_supergroup: Fraction
    expected_remnants: Fraction

    @property
    def matches(self) -> bool:
        return (
            all(self.parent_counts[p] == self.expected_parent[p] for p in self.expected_parent)
            and self.supergroup == self.expected_supergroup
            and self.remnants == self.expected_remnants
        )


def window_census(p_j: int, lo: int, hi: int | None = None) -> Census:
    """Count parent non-ranks, supergroup members and remnants among odd m in (lo, hi].

    The window must hold exactly 2 L(p_j) integers and start above p_j.
    Parents are found by dividing 3m -+ 2 directly, not by progression lookup.
    """
    if p_j > CENSUS_CAP:
        raise ValueError(f"window census is capped at p_j <= {CENSUS_CAP}")
    L = primorial_L(p_j)
    if hi is None:
        hi = lo + 2 * L
    if hi - lo != 2 * L:
        raise ValueError(f"window must span 2L = {2 * L} integers, got {hi - lo}")
    if lo < p_j:
        raise ValueError("window must lie above p_j")
    first = lo + 1 if lo % 2 == 0 else lo + 2
    m = np.arange(first, hi + 1, 2, dtype=np.int64)
    lo3, hi3 = 3 * m - 2, 3 * m + 2
    free = np.ones(len(m), dtype=bool)
    counts = {}
    for p in primes_from_5(p_j):
        hit = free & ((lo3 % p == 0) | (hi3 % p == 0))
        counts[p] = int(hit.sum())
        free &= ~hit
    st = stats(p_j)
    return Census(
        p_j=p_j,
        lo=lo,
        hi=hi,
        parent_counts=counts,
        supergroup=sum(counts.values()),
        remnants=int(free.sum()),
        expected_parent={p: 2 * g for p, g in st.level_G.items()},
        expected_supergroup=2 * st.S,
        expected_remnants=2 * st.R0,
    )
