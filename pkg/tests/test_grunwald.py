"""Cyclic constructor: prescribed degree, split primes, disjointness."""

import pytest

from locfields.config import DEFAULT_CONFIG
from locfields.errors import SearchExhaustedError, ValidationError
from locfields.fields import (cyclotomic_field, fixed_field, intersection,
                              local_degree, totally_split)
from locfields.grunwald import CyclicFieldRequest, construct_cyclic

CFG = DEFAULT_CONFIG


def test_cubic_no_constraints():
    field, trace = construct_cyclic(CyclicFieldRequest(3, ()), CFG)
    assert trace.chosen_primes == (7,)
    assert field == fixed_field(7, [6], CFG)
    assert field.degree == 3


def test_quadratic_avoiding_conductor_three():
    avoid = cyclotomic_field(3, CFG)
    field, trace = construct_cyclic(CyclicFieldRequest(2, (), avoid), CFG)
    assert trace.chosen_primes == (5,)
    assert field == fixed_field(5, [4], CFG)
    assert intersection(field, avoid, CFG).degree == 1


def test_quintic_splitting_two_and_three():
    field, trace = construct_cyclic(CyclicFieldRequest(5, (2, 3)), CFG)
    assert trace.chosen_primes == (11, 31, 41)
    assert field.degree == 5
    assert local_degree(field, 2, CFG) == 1
    assert local_degree(field, 3, CFG) == 1
    # the character kills both Frobenius vectors mod 5
    for p, vec in trace.frobenius_vectors:
        assert sum(c * w for c, w in zip(trace.character, vec)) % 5 == 0


def test_trace_fields_are_consistent():
    field, trace = construct_cyclic(CyclicFieldRequest(2, (2, 3)), CFG)
    # parity of discrete logs: 2 = g^1 mod 5, g^2 mod 7, g^1 mod 11
    # and 3 = g^3 mod 5, g^1 mod 7, g^8 mod 11
    assert trace.chosen_primes == (5, 7, 11)
    assert trace.frobenius_vectors == ((2, (1, 0, 1)), (3, (1, 1, 0)))
    assert trace.character == (1, 1, 1)
    assert trace.modulus == 5 * 7 * 11
    assert trace.conductor == field.modulus == 385
    assert trace.modulus % trace.conductor == 0
    assert all(ell % 2 == 1 for ell in trace.chosen_primes)


def test_staged_trace_with_avoid():
    # same request but avoiding the quadratic field of conductor 15
    # pushes the auxiliary primes up to 7, 11, 13
    avoid = fixed_field(15, [2], CFG)
    field, trace = construct_cyclic(CyclicFieldRequest(2, (2, 3), avoid), CFG)
    assert trace.chosen_primes == (7, 11, 13)
    assert trace.frobenius_vectors == ((2, (0, 1, 1)), (3, (1, 0, 0)))
    assert trace.character == (0, 1, 1)
    assert trace.conductor == field.modulus == 143
    assert intersection(field, avoid, CFG).degree == 1


def test_invariants_over_small_grid():
    for q in (2, 3, 5):
        for split in ((), (2,), (3,), (2, 5)):
            field, trace = construct_cyclic(
                CyclicFieldRequest(q, split), CFG)
            assert field.degree == q
            assert len(trace.chosen_primes) == len(split) + 1
            assert len(set(trace.chosen_primes)) == len(trace.chosen_primes)
            for ell in trace.chosen_primes:
                assert ell % q == 1 and ell not in split
            for p in split:
                assert totally_split(field, p, CFG)


def test_avoid_with_overlapping_split_primes():
    avoid = cyclotomic_field(105, CFG)   # conductor 3 * 5 * 7
    field, trace = construct_cyclic(
        CyclicFieldRequest(2, (3, 7), avoid), CFG)
    assert field.degree == 2
    for ell in trace.chosen_primes:
        assert 105 % ell != 0
    assert intersection(field, avoid, CFG).degree == 1
    assert totally_split(field, 3, CFG) and totally_split(field, 7, CFG)


def test_deterministic():
    a = construct_cyclic(CyclicFieldRequest(3, (2, 7)), CFG)
    b = construct_cyclic(CyclicFieldRequest(3, (2, 7)), CFG)
    assert a[0] == b[0] and a[1] == b[1]


def test_validation_and_exhaustion():
    with pytest.raises(ValidationError):
        construct_cyclic(CyclicFieldRequest(4, ()), CFG)
    with pytest.raises(ValidationError):
        construct_cyclic(CyclicFieldRequest(3, (6,)), CFG)
    with pytest.raises(SearchExhaustedError):
        construct_cyclic(CyclicFieldRequest(5, (2, 3), None, 12), CFG)
