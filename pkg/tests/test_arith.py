"""Integer arithmetic helpers: primality, factoring, CRT, primitive roots."""

import math
import random

import pytest

from locfields.arith import (crt_pair, euler_phi_from_factors, factorize,
                             is_prime, is_squarefree, least_primitive_root,
                             mobius_from_factors, primes_in_progression)
from locfields.errors import SearchExhaustedError, ValidationError


def test_is_prime_small_and_tricky():
    primes = {2, 3, 5, 7, 11, 13, 97, 7919}
    for n in range(2, 100):
        assert is_prime(n) == all(n % d for d in range(2, n))
    assert not is_prime(561)  # Carmichael
    assert not is_prime(1)
    assert not is_prime(0)
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(2 ** 67 - 1)
    assert primes <= {n for n in range(8000) if is_prime(n)} | {2 ** 61 - 1}


def test_factorize_roundtrip_random():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randrange(2, 10 ** 9)
        factors = factorize(n)
        prod = 1
        for p, e in factors.items():
            assert is_prime(p)
            prod *= p ** e
        assert prod == n


def test_factorize_large_semiprime():
    p, q = 1_000_003, 1_000_033
    assert factorize(p * q) == {p: 1, q: 1}


def test_is_squarefree():
    assert is_squarefree(1)
    assert is_squarefree(30)
    assert not is_squarefree(12)
    assert not is_squarefree(49)
    with pytest.raises(ValidationError):
        is_squarefree(0)


def test_euler_phi_matches_gcd_count():
    for n in range(1, 200):
        phi = euler_phi_from_factors(factorize(n)) if n > 1 else 1
        assert phi == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_mobius_values():
    values = {1: 1, 2: -1, 3: -1, 4: 0, 6: 1, 30: -1, 210: 1, 12: 0}
    for n, mu in values.items():
        assert mobius_from_factors(factorize(n) if n > 1 else {}) == mu


def test_least_primitive_root_generates():
    for p in (3, 5, 7, 11, 13, 23, 41):
        for a in (1, 2):
            q = p ** a
            g = least_primitive_root(p, a)
            phi = q - q // p
            seen = set()
            x = 1
            for _ in range(phi):
                x = x * g % q
                seen.add(x)
            assert len(seen) == phi
    with pytest.raises(ValidationError):
        least_primitive_root(2, 3)


def test_crt_pair_random():
    rng = random.Random(5)
    for _ in range(300):
        m = rng.randrange(2, 10 ** 6)
        n = rng.randrange(2, 10 ** 6)
        if math.gcd(m, n) != 1:
            continue
        a, b = rng.randrange(m), rng.randrange(n)
        x = crt_pair(a, m, b, n)
        assert 0 <= x < m * n and x % m == a and x % n == b


def test_primes_in_progression():
    take = lambda *a, **kw: tuple(primes_in_progression(*a, **kw))
    assert take(1, 4, bound=100, count=4) == (5, 13, 17, 29)
    assert take(1, 4, bound=100, count=3, skip={5}) == (13, 17, 29)
    assert take(1, 2, bound=100, count=3) == (3, 5, 7)
    with pytest.raises(SearchExhaustedError):
        take(1, 5, bound=10, count=2)
