import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cousin_sieve.arith import (
    PrimeClass,
    boundary_M,
    constants,
    is_prime,
    mobius,
    nearest_int,
    next_prime,
    nu,
    prime_class,
    primes_in,
    primorial_L,
    squarefree_products,
)


@pytest.mark.parametrize("p, expected", [(7, 1), (5, 1), (13, 2), (11, 2), (23, 4), (31, 5)])
def test_nearest_int(p, expected):
    assert nearest_int(p) == expected


@pytest.mark.parametrize("bad", [1, 2, 3, 4, 9, 25, 49])
def test_nearest_int_rejects(bad):
    with pytest.raises(ValueError):
        nearest_int(bad)


def test_nearest_int_matches_rational_rounding():
    for p in primes_in(4, 10**6):
        r = Fraction(p, 6)
        assert nearest_int(p) == int(r + Fraction(1, 2))  # p/6 is never a half-integer


@pytest.mark.parametrize("p, cls", [(7, PrimeClass.PlusOne), (11, PrimeClass.MinusOne), (5, PrimeClass.MinusOne)])
def test_prime_class(p, cls):
    assert prime_class(p) is cls


@pytest.mark.parametrize("bad", [6, 9, 12, 3, 2])
def test_prime_class_rejects(bad):
    with pytest.raises(ValueError):
        prime_class(bad)


@pytest.mark.parametrize(
    "lo, hi, expected",
    [(4, 14, [5, 7, 11, 13]), (1, 1, []), (11, 31, [13, 17, 19, 23, 29, 31]), (0, 2, [2]), (7, 7, [])],
)
def test_primes_in(lo, hi, expected):
    assert primes_in(lo, hi) == expected


def test_primes_in_matches_trial_division():
    assert primes_in(0, 5000) == [n for n in range(5001) if is_prime(n)]


@pytest.mark.parametrize("p, L", [(5, 5), (7, 35), (13, 5005), (31, 33426748355)])
def test_primorial(p, L):
    assert primorial_L(p) == L


def test_primorial_multiplicative_chain():
    ps = primes_in(4, 200)
    for a, b in zip(ps, ps[1:]):
        assert primorial_L(b) == primorial_L(a) * b


def test_primorial_rejects_small():
    with pytest.raises(ValueError):
        primorial_L(3)


@pytest.mark.parametrize("n, mu", [(1, 1), (13, -1), (4, 0), (35, 1), (385, -1), (12, 0)])
def test_mobius(n, mu):
    assert mobius(n) == mu


@pytest.mark.parametrize("n, k", [(35, 2), (1, 0), (385, 3), (64, 1)])
def test_nu(n, k):
    assert nu(n) == k


def test_mobius_nu_against_factor_table(factor_table):
    spf = factor_table
    for n in range(1, len(spf)):
        ps = []
        m = n
        while m > 1:
            ps.append(spf[m])
            m //= spf[m]
        distinct = set(ps)
        assert nu(n) == len(distinct)
        expected_mu = 0 if len(ps) != len(distinct) else (-1) ** len(ps)
        assert mobius(n) == expected_mu
        assert (mobius(n) != 0) == (len(ps) == len(distinct))


@pytest.mark.parametrize("p, M", [(7, 15), (11, 39), (13, 55), (5, 7)])
def test_boundary_M(p, M):
    assert boundary_M(p) == M
    assert 3 * M + 4 == p * p


def test_boundary_M_rejects():
    with pytest.raises(ValueError):
        boundary_M(3)


def _subset_products(ps, cap):
    out = []
    for k in range(1, len(ps) + 1):
        for combo in itertools.combinations(ps, k):
            n = 1
            for q in combo:
                n *= q
            if n <= cap:
                out.append((n, k, (-1) ** k))
    return sorted(out)


def test_squarefree_products_examples():
    got = list(squarefree_products(11, 20, 300))
    assert {(13, 1, -1), (17, 1, -1), (19, 1, -1), (221, 2, 1)} <= set(got)
    assert list(squarefree_products(11, 20, 100)) == [(13, 1, -1), (17, 1, -1), (19, 1, -1)]
    assert list(squarefree_products(3, 4, 10)) == []


@pytest.mark.parametrize("lo, hi, cap", [(11, 20, 300), (4, 40, 10**6), (7, 60, 5000), (13, 30, 10**9)])
def test_squarefree_products_exhaustive(lo, hi, cap):
    ps = [p for p in range(lo + 1, hi + 1) if is_prime(p)]
    assert list(squarefree_products(lo, hi, cap)) == _subset_products(ps, cap)


@given(st.integers(min_value=5, max_value=10**5))
def test_next_prime(n):
    q = next_prime(n)
    assert q > n and is_prime(q)
    assert not any(is_prime(k) for k in range(n + 1, q))


def test_constants_ranges():
    c = constants()
    assert 0.6601618 < c.twin_constant < 0.6601619
    assert 0.83242 < c.hl_coefficient < 0.83244
    assert c.euler_gamma == pytest.approx(0.5772156649015329, abs=1e-15)
