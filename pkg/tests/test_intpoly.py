"""Exact integer polynomial arithmetic, resultants, discriminants."""

import math
import random

import pytest

from locfields.errors import ValidationError
from locfields.intpoly import (IntPolynomial, cyclotomic_polynomial,
                               discriminant, eisenstein_cubic, int_poly,
                               is_eisenstein, monic_divmod, resultant)


def _rand_poly(rng, max_deg=6, bound=9):
    coeffs = [rng.randrange(-bound, bound + 1)
              for _ in range(rng.randrange(1, max_deg + 2))]
    return int_poly(coeffs)


def test_construction_and_eval():
    f = int_poly([1, 2, 0])
    assert f.coefficients == (1, 2) and f.degree == 1
    assert int_poly([0]).degree == -1
    assert int_poly([5]).degree == 0
    g = int_poly([-8, -2, -1, 1])
    assert g(0) == -8 and g(2) == -8 and g(3) == 4
    assert g.is_monic
    assert g.derivative().coefficients == (-2, -2, 3)


def test_ring_operations_random():
    rng = random.Random(2)
    for _ in range(200):
        f, g, h = (_rand_poly(rng) for _ in range(3))
        assert (f + g) + h == f + (g + h)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        x = rng.randrange(-5, 6)
        assert (f * g)(x) == f(x) * g(x)


def test_monic_divmod_roundtrip():
    rng = random.Random(6)
    for _ in range(150):
        g = _rand_poly(rng, 4)
        if g.degree < 0:
            continue
        g = int_poly(list(g.coefficients[:-1]) + [1])  # force monic
        f = _rand_poly(rng, 6)
        q, r = monic_divmod(f, g)
        assert q * g + r == f
        assert r.degree < g.degree


def test_resultant_properties():
    rng = random.Random(10)
    for _ in range(100):
        f, g = _rand_poly(rng, 4), _rand_poly(rng, 4)
        if f.degree < 1 or g.degree < 1:
            continue
        sign = (-1) ** (f.degree * g.degree)
        assert resultant(f, g) == sign * resultant(g, f)
        # Res(x - a, g) == g(a)
        a = rng.randrange(-6, 7)
        assert resultant(int_poly([-a, 1]), g) == g(a)
    # multiplicativity in the first argument
    for _ in range(60):
        f1, f2, g = (_rand_poly(rng, 3) for _ in range(3))
        if min(f1.degree, f2.degree, g.degree) < 1:
            continue
        assert resultant(f1 * f2, g) == resultant(f1, g) * resultant(f2, g)


def test_discriminant_formulas():
    rng = random.Random(14)
    for _ in range(100):
        b, c = rng.randrange(-20, 21), rng.randrange(-20, 21)
        assert discriminant(int_poly([c, b, 1])) == b * b - 4 * c
        p, q = rng.randrange(-15, 16), rng.randrange(-15, 16)
        assert discriminant(int_poly([q, p, 0, 1])) == \
            -4 * p ** 3 - 27 * q ** 2
    assert discriminant(int_poly([-8, -2, -1, 1])) == -2012
    assert discriminant(int_poly([3, 1])) == 1
    with pytest.raises(ValidationError):
        discriminant(int_poly([7]))


def test_cyclotomic_discriminants():
    # disc of the m-th cyclotomic polynomial for odd primes
    for p in (3, 5, 7, 11, 13):
        sign = -1 if p % 4 == 3 else 1
        assert discriminant(cyclotomic_polynomial(p)) == \
            sign * p ** (p - 2)


def test_eisenstein():
    for p in (2, 3, 5, 7, 11, 13):
        f = eisenstein_cubic(p)
        assert f.coefficients == (p, -2 * p, 0, 1)
        assert is_eisenstein(f, p)
        assert discriminant(f) == p * p * (32 * p - 27)
    assert is_eisenstein(int_poly([2, 4, 1]), 2)
    assert not is_eisenstein(int_poly([4, 2, 1]), 2)   # p^2 divides c0
    assert not is_eisenstein(int_poly([3, 4, 1]), 2)   # p misses c0


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1).coefficients == (-1, 1)
    assert cyclotomic_polynomial(6).coefficients == (1, -1, 1)
    assert cyclotomic_polynomial(8).coefficients == (1, 0, 0, 0, 1)
    # first index with a coefficient outside {-1, 0, 1}
    assert -2 in cyclotomic_polynomial(105).coefficients
    for n in range(1, 31):
        prod = int_poly([1])
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic_polynomial(d)
        expect = [0] * (n + 1)
        expect[0], expect[n] = -1, 1
        assert prod == int_poly(expect)
        phi = sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
        assert cyclotomic_polynomial(n).degree == phi


def test_validation():
    with pytest.raises(ValidationError):
        monic_divmod(int_poly([1, 1]), int_poly([1, 2]))  # non-monic divisor
    with pytest.raises(ValidationError):
        is_eisenstein(int_poly([2, 4, 3]), 2)  # non-monic
