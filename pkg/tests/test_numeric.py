import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cdgraph.numeric import (
    factorize,
    gcd,
    is_pi_number,
    is_prime,
    is_prime_power,
    pi_part,
    pi_set,
    smallest_prime_not_dividing,
)
from oracles import spf_sieve


@pytest.mark.parametrize("a,b,d", [(24, 28, 4), (7, 24, 1), (168, 168, 168)])
def test_gcd(a, b, d):
    assert gcd(a, b) == d


def test_gcd_rejects_nonpositive():
    with pytest.raises(ValueError):
        gcd(0, 5)


@pytest.mark.parametrize(
    "n,f", [(168, {2: 3, 3: 1, 7: 1}), (1, {}), (97, {97: 1}), (2**20, {2: 20})]
)
def test_factorize(n, f):
    assert factorize(n) == f
    assert list(factorize(n)) == sorted(f)


@pytest.mark.parametrize("n,s", [(168, {2, 3, 7}), (28, {2, 7}), (1, set())])
def test_pi_set(n, s):
    assert pi_set(n) == s


@pytest.mark.parametrize("n,pi,part", [(168, {2}, 8), (168, {2, 3}, 24), (7, {2}, 1)])
def test_pi_part(n, pi, part):
    assert pi_part(n, pi) == part


def test_pi_part_rejects_composite():
    with pytest.raises(ValueError):
        pi_part(12, {2, 6})


def test_misc_predicates():
    assert is_pi_number(24, {2, 3}) and not is_pi_number(28, {2, 3})
    assert is_prime_power(8) and is_prime_power(7) and not is_prime_power(1)
    assert not is_prime_power(12)
    assert smallest_prime_not_dividing(168) == 5
    assert smallest_prime_not_dividing(1) == 2
    assert [q for q in range(30) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.slow
def test_factorize_round_trip_up_to_a_million():
    limit = 10**6
    spf = spf_sieve(limit)
    for n in range(1, limit + 1):
        f = factorize(n)
        assert math.prod(q**e for q, e in f.items()) == n
        if n > 1:
            assert next(iter(f)) == spf[n]


@given(st.integers(1, 10**9), st.sets(st.sampled_from([2, 3, 5, 7, 11, 13])))
def test_pi_part_splits_n(n, pi):
    rest = pi_set(n) - pi
    assert pi_part(n, pi) * pi_part(n, rest) == n
    assert n % pi_part(n, pi) == 0
    assert pi_set(pi_part(n, pi)) <= pi


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_gcd_adjacency_rule(a, b):
    assert (gcd(a, b) > 1) == bool(pi_set(a) & pi_set(b))
