"""Non-rank progressions, parent-prime decomposition and classification.

An odd m >= 3 is a twin-4 rank when 3m-2 and 3m+2 are both prime and a
non-rank otherwise. Every prime p >= 5 owns two progressions of step 2p,

    (2n+1) p + 4 N(p/6),  n >= 0        (Plus)
    (2n+1) p - 4 N(p/6),  n >= 1        (Minus)

each member of which has p dividing one of 3m-2, 3m+2 with cofactor > 1.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from .arith import PrimeClass, is_prime, nearest_int, prime_class

__all__ = [
    "Sign",
    "Progression",
    "Classification",
    "ParentDecomposition",
    "GeneratedPair",
    "progressions_for_prime",
    "excluded_candidate",
    "generated_pair",
    "parent_prime",
    "decompose",
    "classify",
    "twin_rank_from_prime",
    "gap_from_classes",
]


class Sign(enum.IntEnum):
    Plus = 1
    Minus = -1

    def __str__(self):
        return "+" if self is Sign.Plus else "-"


@dataclass(frozen=True)
class Progression:
    """Non-ranks (2n+1)p + sign*4N(p/6) of a single prime, n >= n_start."""

    prime: int
    sign: Sign

    @property
    def n_start(self) -> int:
        return 0 if self.sign is Sign.Plus else 1

    @property
    def modulus(self) -> int:
        return 2 * self.prime

    @property
    def offset(self) -> int:
        return int(self.sign) * 4 * nearest_int(self.prime)

    @property
    def residue(self) -> int:
        return (self.prime + self.offset) % self.modulus

    @property
    def first(self) -> int:
        return self.member(self.n_start)

    def member(self, n: int) -> int:
        if n < self.n_start:
            raise ValueError(f"n={n} below start index {self.n_start} for {self}")
        return (2 * n + 1) * self.prime + self.offset

    def members(self, hi: int, lo: int = 0) -> range:
        """Members m with lo <= m <= hi."""
        first = self.first
        if lo > first:
            first += -(-(lo - first) // self.modulus) * self.modulus
        return range(first, hi + 1, self.modulus)

    def __contains__(self, m: int) -> bool:
        return m >= self.first and (m - self.first) % self.modulus == 0


def progressions_for_prime(p: int) -> tuple[Progression, Progression]:
    """The Plus and Minus non-rank progressions of ``p``."""
    prime_class(p)
    return Progression(p, Sign.Plus), Progression(p, Sign.Minus)


def excluded_candidate(p: int) -> int:
    """The Minus n=0 value (p +- 2)/3, left out of the Minus progression.

    3m +- 2 then contains p itself, so m may be a twin-4 rank.
    """
    return p - 4 * nearest_int(p)


class GeneratedPair(NamedTuple):
    low: int
    high: int
    multiple: int  # the entry divisible by the prime, with cofactor > 1


def generated_pair(p: int, sign: Sign, n: int) -> GeneratedPair:
    """(3m-2, 3m+2) for the progression member m, and its multiple of p.

    With k = 3(2n+1) the multiple is (k+2)p on the Plus side and (k-2)p on
    the Minus side; the other entry sits 4 away from it.
    """
    prog = Progression(p, Sign(sign))
    m = prog.member(n)
    k = 3 * (2 * n + 1)
    if prog.sign is Sign.Plus:
        mult = (k + 2) * p
    else:
        mult = (k - 2) * p
    low, high = 3 * m - 2, 3 * m + 2
    assert mult in (low, high), (p, sign, n)
    return GeneratedPair(low, high, mult)


@dataclass(frozen=True)
class Classification:
    m: int
    parent: int | None = None

    @property
    def is_twin_rank(self) -> bool:
        return self.parent is None

    @property
    def pair(self) -> tuple[int, int]:
        return 3 * self.m - 2, 3 * self.m + 2

    def __str__(self):
        return "twin-4 rank" if self.is_twin_rank else f"non-rank (parent {self.parent})"


@dataclass(frozen=True)
class ParentDecomposition:
    """m = (2 kappa - 1) p + 4N (Plus) or (2 kappa + 1) p - 4N (Minus)."""

    prime: int
    kappa: int
    sign: Sign

    @property
    def n(self) -> int:
        """Index of m in the progression of the given sign."""
        return self.kappa - 1 if self.sign is Sign.Plus else self.kappa

    @property
    def odd_factor(self) -> int:
        return 2 * self.kappa - 1 if self.sign is Sign.Plus else 2 * self.kappa + 1

    def value(self) -> int:
        return self.odd_factor * self.prime + int(self.sign) * 4 * nearest_int(self.prime)

    def __str__(self):
        return f"{self.value()} = {self.odd_factor}*{self.prime} {self.sign} {4 * nearest_int(self.prime)}"


def _check_odd(m: int, least: int) -> None:
    if m % 2 == 0 or m < least:
        raise ValueError(f"expected an odd integer >= {least}, got {m}")


def parent_prime(m: int) -> int | None:
    """Smallest prime p >= 5 dividing 3m-2 or 3m+2 with cofactor > 1."""
    lo, hi = 3 * m - 2, 3 * m + 2
    # 3m+-2 are odd and prime to 3, so only 6k+-1 divisors matter; the first
    # hit is the least factor of lo or hi and hence prime.
    for d in range(5, math.isqrt(hi) + 1, 6):
        for q in (d, d + 2):
            if lo % q == 0 or hi % q == 0:
                return q
    return None


def classify(m: int) -> Classification:
    _check_odd(m, 3)
    return Classification(m, parent_prime(m))


def decompose(m: int) -> ParentDecomposition:
    """Write a non-rank as a member of its parent prime's progression."""
    _check_odd(m, 3)
    p = parent_prime(m)
    if p is None:
        raise ValueError(f"{m} is a twin-4 rank and has no parent prime")
    N = nearest_int(p)
    if (m - p - 4 * N) % (2 * p) == 0:
        sign, odd = Sign.Plus, (m - 4 * N) // p
        kappa = (odd + 1) // 2
    else:
        sign, odd = Sign.Minus, (m + 4 * N) // p
        kappa = (odd - 1) // 2
    dec = ParentDecomposition(p, kappa, sign)
    assert dec.value() == m and kappa >= 1, (m, dec)
    return dec


def twin_rank_from_prime(p: int) -> int | None:
    """The twin-4 rank whose pair contains ``p`` as its upper or lower entry, if any.

    p = -1 (mod 6) with p-4 prime gives (p+1)/3 - 1; p = 1 (mod 6) with
    p+4 prime gives (p-1)/3 + 1.
    """
    if prime_class(p) is PrimeClass.MinusOne:
        return (p + 1) // 3 - 1 if is_prime(p - 4) else None
    return (p - 1) // 3 + 1 if is_prime(p + 4) else None


_GAP_TABLE = {
    (PrimeClass.PlusOne, PrimeClass.MinusOne): 4,
    (PrimeClass.PlusOne, PrimeClass.PlusOne): 6,
    (PrimeClass.MinusOne, PrimeClass.MinusOne): 6,
    (PrimeClass.MinusOne, PrimeClass.PlusOne): 8,
}


def gap_from_classes(p: int, p_prime: int) -> int | None:
    """Gap p' - p implied by N(p'/6) = 1 + N(p/6) and the classes of p, p'."""
    if not p_prime > p:
        raise ValueError("need p' > p")
    if nearest_int(p_prime) != 1 + nearest_int(p):
        return None
    gap = _GAP_TABLE[prime_class(p), prime_class(p_prime)]
    if p_prime - p != gap:
        raise AssertionError(f"class table gives {gap} but {p_prime} - {p} = {p_prime - p}")
    return gap
