"""Brute-force ground truth for twin-4 ranks.

Nothing here imports the rest of the package: the oracle checks the sieve,
so it must not share code with it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

__all__ = [
    "OracleConfig",
    "Oracle",
    "is_prime",
    "is_prime_plain",
    "twin_ranks_naive",
    "nonranks_naive",
]


def is_prime(n: int) -> bool:
    """Trial division over 6k+-1 candidates."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    k = 5
    while k * k <= n:
        if n % k == 0 or n % (k + 2) == 0:
            return False
        k += 6
    return True


def is_prime_plain(n: int) -> bool:
    """Trial division by every integer 2..sqrt(n); second opinion for is_prime."""
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class OracleConfig:
    limit: int

    def __post_init__(self):
        if self.limit < 0:
            raise ValueError("limit must be non-negative")


@dataclass
class Oracle:
    """Primality table up to ``config.limit``, trial division beyond it."""

    config: OracleConfig
    _table: bytearray = field(init=False, repr=False)

    def __post_init__(self):
        n = self.config.limit
        table = bytearray([1]) * (n + 1)
        table[0:2] = b"\x00\x00"[: min(2, n + 1)]
        for i in range(2, math.isqrt(n) + 1):
            if table[i]:
                table[i * i :: i] = bytes(len(range(i * i, n + 1, i)))
        self._table = table

    @classmethod
    def for_ranks(cls, x: int) -> "Oracle":
        """Table large enough to classify every odd m <= x."""
        return cls(OracleConfig(limit=3 * max(x, 1) + 2))

    def is_prime(self, n: int) -> bool:
        if 0 <= n <= self.config.limit:
            return bool(self._table[n])
        return is_prime(n)

    def is_twin_rank(self, m: int) -> bool:
        return m % 2 == 1 and m >= 3 and self.is_prime(3 * m - 2) and self.is_prime(3 * m + 2)

    def twin_ranks(self, x: int) -> list[int]:
        return [m for m in range(3, x + 1, 2) if self.is_twin_rank(m)]

    def nonranks(self, x: int) -> list[int]:
        return [m for m in range(3, x + 1, 2) if not self.is_twin_rank(m)]


def twin_ranks_naive(x: int) -> list[int]:
    """All odd m in [3, x] with 3m-2 and 3m+2 both prime."""
    return Oracle.for_ranks(x).twin_ranks(x)


def nonranks_naive(x: int) -> list[int]:
    """Odd m in [3, x] that are not twin-4 ranks."""
    return Oracle.for_ranks(x).nonranks(x)
