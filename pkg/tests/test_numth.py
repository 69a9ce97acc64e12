import math

import pytest
from hypothesis import given, strategies as st

from pcg.numth import (
    divisors,
    euler_phi,
    factorize,
    gcd,
    is_composite,
    is_prime,
    semiprime_divisors,
)

from oracles import divisor_scan, omega_mult, phi_count, prime_by_scan, trial_factor


@pytest.mark.parametrize("n, pairs", [(12, ((2, 2), (3, 1))), (1, ()), (900, ((2, 2), (3, 2), (5, 2)))])
def test_factorize_examples(n, pairs):
    assert factorize(n).pairs == pairs


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        euler_phi(0)
    with pytest.raises(ValueError):
        divisors(0)


def test_factorize_matches_trial_division():
    for n in range(1, 3000):
        assert list(factorize(n).pairs) == trial_factor(n)


@given(st.integers(min_value=1, max_value=10**5))
def test_factorize_round_trip(n):
    fac = factorize(n)
    assert fac.value() == n
    assert fac.primes == sorted(set(fac.primes))
    assert all(is_prime(p) for p in fac.primes)
    assert all(k >= 1 for k in fac.exponents)


@pytest.mark.parametrize("n, expected", [(1, 1), (12, 4), (900, 240)])
def test_euler_phi_examples(n, expected):
    assert euler_phi(n) == expected
    assert phi_count(n) == expected


def test_euler_phi_against_enumeration():
    for n in range(1, 600):
        assert euler_phi(n) == phi_count(n)


@given(st.integers(1, 10**4), st.integers(1, 10**4))
def test_phi_multiplicative(a, b):
    if math.gcd(a, b) == 1 and a * b <= 2**32:
        assert euler_phi(a * b) == euler_phi(a) * euler_phi(b)


@given(st.integers(1, 10**4))
def test_gauss_identity(n):
    assert sum(euler_phi(d) for d in divisors(n)) == n


@pytest.mark.parametrize("n, expected", [(1, [1]), (12, [1, 2, 3, 4, 6, 12]), (30, [1, 2, 3, 5, 6, 10, 15, 30])])
def test_divisors_examples(n, expected):
    assert divisors(n) == expected


def test_divisors_against_scan():
    for n in range(1, 800):
        assert divisors(n) == divisor_scan(n)


@pytest.mark.parametrize("n, expected", [(12, [4, 6]), (900, [4, 6, 9, 10, 15, 25]), (7, []), (1, [])])
def test_semiprime_divisors_examples(n, expected):
    assert semiprime_divisors(n) == expected


@given(st.integers(1, 5000))
def test_semiprime_divisors_are_semiprime_divisors(n):
    sp = semiprime_divisors(n)
    assert set(sp) <= set(divisors(n))
    assert sp == [d for d in divisor_scan(n) if omega_mult(d) == 2]


def test_gcd_prime_composite():
    assert gcd(4, 6) == 2
    assert gcd(0, 5) == 5
    with pytest.raises(ValueError):
        gcd(0, 0)
    assert not is_prime(1)
    assert is_composite(125)
    assert not is_composite(1)
    for n in range(0, 500):
        assert is_prime(n) == prime_by_scan(n)
