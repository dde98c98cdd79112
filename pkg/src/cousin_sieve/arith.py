"""Integer arithmetic underlying the cousin-prime sieve.

Primes are always taken from 5 upward; 2 and 3 never generate non-ranks.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

__all__ = [
    "PrimeClass",
    "Constants",
    "constants",
    "is_prime",
    "nearest_int",
    "prime_class",
    "primes_in",
    "next_prime",
    "primes_from_5",
    "primorial_L",
    "mobius",
    "nu",
    "boundary_M",
    "squarefree_products",
]

EULER_GAMMA = 0.577215664901532860606512


class PrimeClass(enum.Enum):
    """Residue class of a prime p >= 5 modulo 6."""

    PlusOne = 1
    MinusOne = -1


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def _require_prime5(p: int) -> None:
    if p < 5 or not is_prime(p):
        raise ValueError(f"expected a prime >= 5, got {p}")


def prime_class(p: int) -> PrimeClass:
    """Return whether ``p`` is 6m+1 or 6m-1."""
    if p % 2 == 0 or p % 3 == 0:
        raise ValueError(f"{p} is divisible by 2 or 3")
    _require_prime5(p)
    return PrimeClass.PlusOne if p % 6 == 1 else PrimeClass.MinusOne


def nearest_int(p: int) -> int:
    """Nearest integer to p/6 for a prime p >= 5.

    Only primes are accepted, so p/6 is never a half-integer:
    (p-1)/6 when p = 1 (mod 6) and (p+1)/6 when p = -1 (mod 6).
    """
    _require_prime5(p)
    return (p - 1) // 6 if p % 6 == 1 else (p + 1) // 6


def _sieve_bool(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for i in range(3, math.isqrt(limit) + 1, 2):
        if flags[i]:
            flags[i * i :: 2 * i] = False
    return flags


def primes_in(lo: int, hi: int) -> list[int]:
    """All primes p with lo < p <= hi, ascending."""
    if hi < 2 or hi <= lo:
        return []
    flags = _sieve_bool(hi)
    start = max(lo + 1, 0)
    return (np.flatnonzero(flags[start:]) + start).tolist()


def next_prime(p: int) -> int:
    q = p + 1
    while not is_prime(q):
        q += 1
    return q


def primes_from_5(p_j: int) -> list[int]:
    """Primes 5 <= p <= p_j."""
    return primes_in(4, p_j)


def primorial_L(p_j: int) -> int:
    """Product of all primes 5 <= p <= p_j."""
    _require_prime5(p_j)
    return math.prod(primes_from_5(p_j))


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    f = _factor(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def nu(n: int) -> int:
    """Number of distinct prime divisors."""
    if n < 1:
        raise ValueError("nu is defined for n >= 1")
    return len(_factor(n))


def boundary_M(p: int) -> int:
    """(p^2 - 4)/3, the boundary below which remnants are twin-4 ranks."""
    if (p * p - 4) % 3:
        raise ValueError(f"p^2 - 4 is not divisible by 3 for p={p}")
    return (p * p - 4) // 3


def squarefree_products(lo: int, hi: int, cap: int) -> Iterator[tuple[int, int, int]]:
    """Yield (n, nu(n), mobius(n)) for squarefree n <= cap built from primes in (lo, hi].

    The empty product n = 1 is not included; ascending order.
    """
    ps = primes_in(lo, min(hi, cap))
    found: list[tuple[int, int]] = []

    def walk(start: int, prod: int, depth: int) -> None:
        for i in range(start, len(ps)):
            n = prod * ps[i]
            if n > cap:
                break
            found.append((n, depth + 1))
            walk(i + 1, n, depth + 1)

    walk(0, 1, 0)
    found.sort()
    for n, k in found:
        yield n, k, -1 if k % 2 else 1


@dataclass(frozen=True)
class Constants:
    euler_gamma: float
    twin_constant: float
    hl_coefficient: float


def _twin_constant(tol: float = 1e-9, max_log2: int = 24) -> float:
    # Partial Euler product over odd primes, read off at P = 2^k with the
    # prime-sum tail -1/(P ln P)(1 - 1/ln P + 2/ln^2 P) added to log c2.
    # Stops when successive checkpoints agree to tol.
    flags = _sieve_bool(1 << max_log2)
    ps = np.flatnonzero(flags)[1:].astype(np.float64)
    logs = np.cumsum(np.log1p(-1.0 / (ps - 1.0) ** 2))
    prev = None
    for k in range(10, max_log2 + 1):
        P = float(1 << k)
        idx = int(np.searchsorted(ps, P, side="right")) - 1
        lp = math.log(P)
        tail = -(1.0 - 1.0 / lp + 2.0 / lp**2) / (P * lp)
        est = math.exp(float(logs[idx]) + tail)
        if prev is not None and abs(est - prev) < tol:
            return est
        prev = est
    raise ArithmeticError("twin constant did not stabilise")


@lru_cache(maxsize=1)
def constants() -> Constants:
    c2 = _twin_constant()
    return Constants(
        euler_gamma=EULER_GAMMA,
        twin_constant=c2,
        hl_coefficient=4.0 * c2 * math.exp(-2.0 * EULER_GAMMA),
    )
