"""Common non-ranks of several primes.

For distinct primes p_1 < ... < p_m every choice of sign per prime gives one
residue class modulo 2 p_1 ... p_m whose members are non-ranks of all of
them, so there are 2^m such progressions.

Each class is found by the Chinese remainder theorem. The witnesses come from
growing the progression one prime at a time. Write the current progression
as P(2n+1) + c and substitute 2n+1 -> p(2n+1) + 2 nu for the new prime p:

    2 P nu + c = 2 p mu + s 4N(p/6),

where nu in [0, p) is unique and mu follows. For two primes (nu, mu) is the
pair (r', r) of

    p[p'(2n+1) + 2r'] + s 4N(p/6) = p'[p(2n+1) + 2r] + s' 4N(p'/6).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import PrimeClass, nearest_int, prime_class
from .nonrank import Progression, Sign

__all__ = [
    "ExtensionStep",
    "MultiRankProgression",
    "MultiRankSolution",
    "single",
    "common_double",
    "extend_common",
    "mfold",
    "pair_relation_case",
]


@dataclass(frozen=True)
class ExtensionStep:
    """Witness for adding ``prime`` with ``sign`` to a progression."""

    prime: int
    sign: Sign
    nu: int
    mu: int


@dataclass(frozen=True)
class MultiRankProgression:
    primes: tuple[int, ...]
    signs: tuple[Sign, ...]
    offset: int  # c in P(2n+1) + c, as built by the witness chain
    steps: tuple[ExtensionStep, ...]

    @property
    def period(self) -> int:
        return math.prod(self.primes)

    @property
    def modulus(self) -> int:
        return 2 * self.period

    @property
    def residue(self) -> int:
        """Least positive representative, in [1, modulus]."""
        r = (self.period + self.offset) % self.modulus
        return r or self.modulus

    @property
    def first(self) -> int:
        """Smallest member, past the first valid member of every prime."""
        floor = max(Progression(p, s).first for p, s in zip(self.primes, self.signs))
        r = self.residue
        if r < floor:
            r += -(-(floor - r) // self.modulus) * self.modulus
        return r

    @property
    def r_pair(self) -> tuple[int, int]:
        """(r, r') for a two-prime progression."""
        if len(self.primes) != 2:
            raise ValueError("r, r' are defined for two primes")
        step = self.steps[0]
        return step.mu, step.nu

    def members(self, hi: int) -> range:
        return range(self.first, hi + 1, self.modulus)

    def __contains__(self, m: int) -> bool:
        return m >= self.first and (m - self.residue) % self.modulus == 0


@dataclass(frozen=True)
class MultiRankSolution:
    primes: tuple[int, ...]
    progressions: tuple[MultiRankProgression, ...]

    @property
    def modulus(self) -> int:
        return 2 * math.prod(self.primes)

    def residues(self) -> list[int]:
        return sorted(pr.residue for pr in self.progressions)

    def by_signs(self, *signs: Sign) -> MultiRankProgression:
        want = tuple(Sign(s) for s in signs)
        for pr in self.progressions:
            if pr.signs == want:
                return pr
        raise KeyError(signs)

    def __len__(self):
        return len(self.progressions)

    def __iter__(self):
        return iter(self.progressions)


def _extend_one(base: MultiRankProgression, p: int, sign: Sign) -> MultiRankProgression:
    P = base.period
    s4N = int(sign) * 4 * nearest_int(p)
    # 2 P nu = s4N - c (mod 2p); c and s4N are even, so nu = (s4N - c)/2 * P^-1 (mod p)
    half = (s4N - base.offset) // 2
    nu = half * pow(P, -1, p) % p
    mu, rem = divmod(2 * P * nu + base.offset - s4N, 2 * p)
    assert rem == 0
    return MultiRankProgression(
        primes=base.primes + (p,),
        signs=base.signs + (sign,),
        offset=2 * P * nu + base.offset,
        steps=base.steps + (ExtensionStep(p, sign, nu, mu),),
    )


def _check_primes(primes) -> tuple[int, ...]:
    ps = tuple(primes)
    if not ps:
        raise ValueError("need at least one prime")
    for p in ps:
        prime_class(p)
    if len(set(ps)) != len(ps):
        raise ValueError(f"duplicate primes in {ps}")
    return ps


def single(p: int) -> MultiRankSolution:
    """The two progressions of one prime."""
    (p,) = _check_primes([p])
    progs = tuple(
        MultiRankProgression((p,), (s,), int(s) * 4 * nearest_int(p), ()) for s in (Sign.Plus, Sign.Minus)
    )
    return MultiRankSolution((p,), progs)


def extend_common(base: MultiRankSolution, p_new: int) -> MultiRankSolution:
    """Split every progression of ``base`` in two by the sign used for ``p_new``."""
    _check_primes(base.primes + (p_new,))
    progs = tuple(_extend_one(pr, p_new, s) for pr in base.progressions for s in (Sign.Plus, Sign.Minus))
    return MultiRankSolution(base.primes + (p_new,), progs)


def common_double(p: int, p_prime: int) -> MultiRankSolution:
    """The four progressions of common non-ranks of two primes."""
    if p == p_prime:
        raise ValueError("primes must differ")
    lo, hi = sorted((p, p_prime))
    return extend_common(single(lo), hi)


def mfold(primes) -> MultiRankSolution:
    """2^m progressions of m-fold non-ranks; primes are sorted first."""
    ps = sorted(_check_primes(primes))
    sol = single(ps[0])
    for p in ps[1:]:
        sol = extend_common(sol, p)
    return sol


def pair_relation_case(p: int, p_prime: int, s: Sign, s_prime: Sign, r: int, r_prime: int) -> str | None:
    """Name the case relation between r and r' that the witness satisfies.

    Same signs use (r'-r)p = 2l(3r +- 1) when p = p' (mod 6),
    2r(3l+1) +- 2l for p' = p + 6l + 2 and 2r(3l-1) +- 2l for p' = p + 6l - 2.
    Opposite signs use the companion relations with 2N(p/6) = (p +- 1)/3 added
    to l. Returns None when no relation holds.
    """
    cp, cq = prime_class(p), prime_class(p_prime)
    lhs = (r_prime - r) * p
    e = int(s)
    two_n = 2 * nearest_int(p)
    same = s == s_prime
    if cp is cq:
        l = (p_prime - p) // 6
        rhs = 2 * l * (3 * r + e) if same else 6 * l * r - 2 * e * (l + two_n)
        case = "i" if cp is PrimeClass.MinusOne else "ii"
    elif cp is PrimeClass.MinusOne:
        l = (p_prime - p - 2) // 6
        rhs = 2 * r * (3 * l + 1) + (2 * e * l if same else -2 * e * (l + two_n))
        case = "iii"
    else:
        l = (p_prime - p + 2) // 6
        rhs = 2 * r * (3 * l - 1) + (2 * e * l if same else -2 * e * (l + two_n))
        case = "iv"
    if lhs != rhs:
        return None
    return case + ("" if same else "'")
