"""The cousin-prime sieve.

Odd numbers are stored one per slot (slot i holds m = 2i+1). Every prime
p <= sqrt(3X+2) strikes its two non-rank progressions with stride p in slot
space. The unstruck slots are then exactly the twin-4 ranks.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .arith import next_prime, primes_from_5, primes_in, primorial_L
from .nonrank import Progression, progressions_for_prime

__all__ = [
    "DEFAULT_SEGMENT",
    "SieveWindow",
    "sieve_window",
    "twin4_ranks_upto",
    "cousin_pairs_upto",
    "ConstantSet",
    "constants_C",
    "constants_C_direct",
    "parent_offsets",
    "parent_nonranks",
    "SupergroupView",
    "supergroup_view",
]

DEFAULT_SEGMENT = 2_000_000
CONSTANTS_CAP = 17


def _striking_primes(x: int) -> list[int]:
    return primes_in(4, math.isqrt(3 * x + 2))


@dataclass
class SieveWindow:
    """Odd m in (lo, hi]; ``struck[k]`` is set when m = first + 2k is a non-rank."""

    lo: int
    hi: int
    struck: np.ndarray

    @property
    def first(self) -> int:
        return self.lo + 1 if self.lo % 2 == 0 else self.lo + 2

    def values(self) -> np.ndarray:
        return self.first + 2 * np.arange(len(self.struck), dtype=np.int64)

    def ranks(self) -> list[int]:
        return (self.first + 2 * np.flatnonzero(~self.struck)).tolist()


def sieve_window(lo: int, hi: int, primes: list[int] | None = None) -> SieveWindow:
    """Strike the progression members of ``primes`` among odd m in (lo, hi].

    With ``primes`` covering every prime up to sqrt(3 hi + 2) the unstruck
    entries m >= 3 are the twin-4 ranks. Numbers below 3 are always struck.
    """
    if primes is None:
        primes = _striking_primes(hi)
    first = lo + 1 if lo % 2 == 0 else lo + 2
    size = max(0, (hi - first) // 2 + 1)
    struck = np.zeros(size, dtype=bool)
    if size == 0:
        return SieveWindow(lo, hi, struck)
    if first < 3:
        struck[: (3 - first + 1) // 2] = True
    for p in primes:
        for prog in progressions_for_prime(p):
            m0 = prog.first
            if m0 < first:
                m0 += -(-(first - m0) // prog.modulus) * prog.modulus
            if m0 > hi:
                continue
            struck[(m0 - first) // 2 :: p] = True
    return SieveWindow(lo, hi, struck)


def twin4_ranks_upto(x: int, segment_size: int = DEFAULT_SEGMENT, workers: int = 1) -> list[int]:
    """All twin-4 ranks m <= x, sieved in windows of ``segment_size`` odd slots."""
    if x < 3:
        return []
    if segment_size < 1:
        raise ValueError("segment_size must be positive")
    primes = _striking_primes(x)
    span = 2 * segment_size
    bounds = [(lo, min(lo + span, x)) for lo in range(0, x, span)]

    def run(b):
        return sieve_window(b[0], b[1], primes).ranks()

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(run, bounds))
    else:
        parts = [run(b) for b in bounds]
    return [m for part in parts for m in part]


def cousin_pairs_upto(y: int) -> list[tuple[int, int]]:
    """Prime pairs (q, q+4) with q >= 7 and q+4 <= y."""
    if y < 11:
        return []
    return [(3 * t - 2, 3 * t + 2) for t in twin4_ranks_upto((y - 2) // 3)]


def _in_classes(values: np.ndarray, p: int) -> np.ndarray:
    plus, minus = progressions_for_prime(p)
    r = values % (2 * p)
    return (r == plus.residue) | (r == minus.residue)


@dataclass(frozen=True)
class ConstantSet:
    """Even offsets c in [0, 2L) such that L(2n+1) + c can hold twin-4 ranks."""

    p_j: int
    L: int
    constants: tuple[int, ...]

    def __len__(self):
        return len(self.constants)

    def __contains__(self, c: int) -> bool:
        return c in set(self.constants)

    def admits(self, t: int) -> bool:
        """Whether t lies in one of the progressions L(2n+1) + c."""
        return (t - self.L) % (2 * self.L) in set(self.constants)


def constants_C(p_j: int) -> ConstantSet:
    """Offsets of the progressions that survive every prime up to ``p_j``.

    Each level lifts the previous offsets by 2n+1 -> p(2n+1) + 2k with
    0 <= k < p, i.e. c -> 2kL + c, then drops the lifted offsets that land
    in one of the two non-rank classes of the new prime p. Starting from
    L = 1, C = {0} the first level yields {0, 2, 8} for p = 5.
    """
    if p_j > CONSTANTS_CAP:
        raise ValueError(f"constant sets are capped at p_j <= {CONSTANTS_CAP}")
    L, cs = 1, np.array([0], dtype=np.int64)
    for p in primes_from_5(p_j):
        lifted = (2 * L * np.arange(p, dtype=np.int64)[:, None] + cs[None, :]).ravel()
        L *= p
        cs = np.sort(lifted[~_in_classes(L + lifted, p)])
    return ConstantSet(p_j, L, tuple(cs.tolist()))


def constants_C_direct(p_j: int) -> ConstantSet:
    """Same set by filtering every even offset against all primes at once."""
    if p_j > CONSTANTS_CAP:
        raise ValueError(f"constant sets are capped at p_j <= {CONSTANTS_CAP}")
    L = primorial_L(p_j)
    cs = np.arange(0, 2 * L, 2, dtype=np.int64)
    keep = np.ones(len(cs), dtype=bool)
    for p in primes_from_5(p_j):
        keep &= ~_in_classes(L + cs, p)
    return ConstantSet(p_j, L, tuple(cs[keep].tolist()))


def parent_offsets(p_j: int) -> list[int]:
    """Even a in [0, 2L) with L(2n+1) + a a non-rank whose parent prime is p_j."""
    L = primorial_L(p_j)
    a = np.arange(0, 2 * L, 2, dtype=np.int64)
    mine = _in_classes(L + a, p_j)
    for p in primes_from_5(p_j)[:-1]:
        mine &= ~_in_classes(L + a, p)
    return a[mine].tolist()


def parent_nonranks(p_j: int, lo: int, hi: int) -> set[int]:
    """Non-ranks in [lo, hi] that sit in progressions of p_j but of no smaller prime."""
    own = {m for prog in progressions_for_prime(p_j) for m in prog.members(hi, lo)}
    for p in primes_from_5(p_j)[:-1]:
        for prog in progressions_for_prime(p):
            own.difference_update(prog.members(hi, lo))
    return own


@dataclass(frozen=True)
class SupergroupView:
    """Union of the non-rank progressions of all primes 5 <= p <= p_j."""

    p_j: int
    progressions: tuple[Progression, ...]

    @property
    def boundary(self) -> int:
        """M(j+1): below it, remnants are exactly the twin-4 ranks."""
        q = next_prime(self.p_j)
        return (q * q - 4) // 3

    def member(self, m: int) -> bool:
        return m % 2 == 1 and any(m in prog for prog in self.progressions)

    def remnant(self, m: int) -> bool:
        return m % 2 == 1 and not self.member(m)

    def parent(self, m: int) -> int | None:
        """Smallest prime of the supergroup whose progressions contain m."""
        for prog in self.progressions:
            if m in prog:
                return prog.prime
        return None

    def remnants(self, hi: int, lo: int = 3) -> list[int]:
        """Odd remnants m with lo <= m <= hi."""
        start = lo if lo % 2 else lo + 1
        w = sieve_window(start - 1, hi, primes_from_5(self.p_j))
        return w.ranks()


def supergroup_view(p_j: int) -> SupergroupView:
    progs = tuple(prog for p in primes_from_5(p_j) for prog in progressions_for_prime(p))
    return SupergroupView(p_j, progs)
