import numpy as np
import pytest
from hypothesis import given, strategies as st

from cousin_sieve.arith import PrimeClass, nearest_int, prime_class, primes_in
from cousin_sieve.nonrank import (
    Progression,
    Sign,
    classify,
    decompose,
    excluded_candidate,
    gap_from_classes,
    generated_pair,
    parent_prime,
    progressions_for_prime,
    twin_rank_from_prime,
)
from cousin_sieve.oracle import twin_ranks_naive

X = 10**5


def test_progression_examples():
    plus, minus = progressions_for_prime(7)
    assert list(plus.members(60)) == [11, 25, 39, 53]
    assert list(minus.members(60)) == [17, 31, 45, 59]
    plus, minus = progressions_for_prime(5)
    assert list(plus.members(40)) == [9, 19, 29, 39]
    assert list(minus.members(40)) == [11, 21, 31]
    assert excluded_candidate(5) == 1
    assert excluded_candidate(7) == 3
    assert excluded_candidate(11) == 3


def test_progression_member_below_start():
    with pytest.raises(ValueError):
        Progression(7, Sign.Minus).member(0)


def test_members_window():
    prog = Progression(11, Sign.Plus)
    assert list(prog.members(200, lo=50)) == [m for m in range(50, 201) if m in prog]
    assert all(m in prog for m in prog.members(10**4))
    assert 11 - 8 not in Progression(11, Sign.Minus)


@pytest.mark.parametrize(
    "p, sign, n, expected",
    [(7, Sign.Plus, 0, (31, 35, 35)), (5, Sign.Plus, 0, (25, 29, 25)), (5, Sign.Minus, 1, (31, 35, 35))],
)
def test_generated_pair(p, sign, n, expected):
    assert tuple(generated_pair(p, sign, n)) == expected


def test_membership_soundness(oracle_1e6):
    # every member of every progression up to X is a non-rank certified by p
    for p in primes_in(4, X):
        for prog in progressions_for_prime(p):
            for n, m in enumerate(prog.members(X), start=prog.n_start):
                lo, hi, mult = generated_pair(p, prog.sign, n)
                assert mult % p == 0 and mult // p > 1
                assert not oracle_1e6.is_twin_rank(m)


def test_completeness():
    # every odd non-rank in [3, X] belongs to some progression of a prime dividing 3m+-2
    m = np.arange(3, X + 1, 2)
    covered = np.zeros(len(m), dtype=bool)
    for p in primes_in(4, int((3 * X + 2) ** 0.5)):
        for prog in progressions_for_prime(p):
            members = np.fromiter(prog.members(X), dtype=np.int64)
            covered[(members - 3) // 2] = True
    ranks = {int(v) for v in m[~covered]}
    assert ranks == set(twin_ranks_naive(X))


def test_decompose_examples():
    d = decompose(9)
    assert (d.prime, d.sign, d.kappa) == (5, Sign.Plus, 1)
    d = decompose(17)
    assert (d.prime, d.sign, d.kappa) == (7, Sign.Minus, 1)
    assert str(d) == "17 = 3*7 - 4"
    d = decompose(121)
    assert (d.prime, d.sign) == (5, Sign.Minus)
    assert d.value() == 121


def test_decompose_round_trip(oracle_1e6):
    for m in range(3, X + 1, 2):
        if oracle_1e6.is_twin_rank(m):
            with pytest.raises(ValueError):
                decompose(m)
            continue
        d = decompose(m)
        assert d.value() == m
        assert m in Progression(d.prime, d.sign)
        # parent is the least prime >= 5 dividing either entry
        small = [q for q in primes_in(4, d.prime - 1) if (3 * m - 2) % q == 0 or (3 * m + 2) % q == 0]
        assert not small


def test_classify(oracle_1e6):
    assert classify(17).parent == 7
    assert classify(15).is_twin_rank
    assert classify(15).pair == (43, 47)
    assert classify(3).is_twin_rank
    for m in range(3, 20001, 2):
        assert classify(m).is_twin_rank == oracle_1e6.is_twin_rank(m)


@pytest.mark.parametrize("bad", [1, 2, 8, -3])
def test_classify_rejects(bad):
    with pytest.raises(ValueError):
        classify(bad)


@given(st.integers(min_value=2, max_value=10**7).map(lambda k: 2 * k + 1))
def test_parent_is_least_prime_factor(m):
    p = parent_prime(m)
    if p is not None:
        assert (3 * m - 2) % p == 0 or (3 * m + 2) % p == 0
        assert all((3 * m - 2) % q and (3 * m + 2) % q for q in primes_in(4, p - 1))


def test_plus_minus_symmetry():
    # the two residues are p + 4N and p - 4N, mirror images mod 2p
    for p in primes_in(4, 500):
        plus, minus = progressions_for_prime(p)
        assert (plus.residue + minus.residue) % (2 * p) == 0


@pytest.mark.parametrize("p, m", [(7, 3), (11, 3), (13, 5), (5, None), (29, None), (31, None), (43, 15), (47, 15)])
def test_twin_rank_from_prime(p, m):
    assert twin_rank_from_prime(p) == m


def test_twin_rank_from_prime_consistent(oracle_1e6):
    for p in primes_in(4, 3 * 10**5):
        m = twin_rank_from_prime(p)
        if m is not None:
            assert p in (3 * m - 2, 3 * m + 2)
            assert oracle_1e6.is_twin_rank(m)


def test_gap_table():
    ps = primes_in(4, X)
    seen = set()
    for p, q in zip(ps, ps[1:]):
        g = gap_from_classes(p, q)
        if g is None:
            assert nearest_int(q) != nearest_int(p) + 1
            continue
        assert g == q - p
        seen.add((prime_class(p), prime_class(q), g))
    assert seen == {
        (PrimeClass.PlusOne, PrimeClass.MinusOne, 4),
        (PrimeClass.PlusOne, PrimeClass.PlusOne, 6),
        (PrimeClass.MinusOne, PrimeClass.MinusOne, 6),
        (PrimeClass.MinusOne, PrimeClass.PlusOne, 8),
    }


def test_gap_requires_order():
    with pytest.raises(ValueError):
        gap_from_classes(11, 7)
