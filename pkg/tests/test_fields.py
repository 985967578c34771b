"""Abelian fields as conductor-subgroup pairs: canonical form, splitting,
lattice operations on fields, torsion, serialization."""

import math
import random

import pytest

from locfields.config import DEFAULT_CONFIG, Config
from locfields.errors import CapExceededError, ValidationError
from locfields.fields import (compositum, contains, cyclotomic_field,
                              field_from_document, field_from_lattice,
                              fixed_field, intersection, local_degree,
                              rational_field, roots_of_unity, splitting_data,
                              to_document, totally_split)
from locfields.zmodstar import element_order, unit_group

CFG = DEFAULT_CONFIG


def _random_field(rng, max_mod=60):
    m = rng.randrange(1, max_mod)
    units = [x for x in range(1, m + 1) if math.gcd(x, m) == 1]
    gens = [rng.choice(units) for _ in range(rng.randrange(0, 3))]
    return fixed_field(m, gens or [1], CFG)


def test_canonical_conductor():
    assert fixed_field(12, [5], CFG).modulus == 4
    assert cyclotomic_field(6, CFG).modulus == 3
    assert cyclotomic_field(2, CFG).modulus == 1
    # subgroup {1,8} mod 21 is exactly the kernel of reduction to mod 7
    f = fixed_field(21, [8], CFG)
    assert f.modulus == 7 and f.degree == 6
    # {1,5} mod 8 fixes the imaginary quadratic field of conductor 4
    f = fixed_field(8, [5], CFG)
    assert f.modulus == 4 and f.degree == 2
    # quadratic field of conductor 15 stays put
    f = fixed_field(15, [2], CFG)
    assert f.modulus == 15 and f.degree == 2
    assert rational_field(CFG).modulus == 1
    assert rational_field(CFG).degree == 1


def test_canonical_never_two_mod_four():
    rng = random.Random(31)
    for _ in range(80):
        f = _random_field(rng)
        assert f.modulus % 4 != 2
        assert f.canonical
        # canonicalization is idempotent: rebuilding from the subgroup
        # generators at the same conductor changes nothing
        gens = f.subgroup.generators or (1,)
        again = fixed_field(f.modulus, list(gens), CFG)
        assert again == f


def test_degree_multiplicativity():
    rng = random.Random(37)
    for _ in range(50):
        a = _random_field(rng, 40)
        b = _random_field(rng, 40)
        comp = compositum(a, b, CFG)
        inter = intersection(a, b, CFG)
        assert comp.degree * inter.degree == a.degree * b.degree
        assert contains(comp, a, CFG) and contains(comp, b, CFG)
        assert contains(a, inter, CFG) and contains(b, inter, CFG)


def test_compositum_intersection_examples():
    gauss = fixed_field(4, [1], CFG)          # conductor 4 quadratic
    omega = cyclotomic_field(3, CFG)
    comp = compositum(gauss, omega, CFG)
    assert comp.modulus == 12 and comp.degree == 4
    inter = intersection(cyclotomic_field(12, CFG),
                         cyclotomic_field(21, CFG), CFG)
    assert inter.modulus == 3 and inter.degree == 2
    assert intersection(gauss, omega, CFG).degree == 1
    assert compositum(rational_field(CFG), gauss, CFG) == gauss


def test_splitting_data_examples():
    z7 = cyclotomic_field(7, CFG)
    d = splitting_data(z7, 2, CFG)
    assert (d.e, d.f, d.g) == (1, 3, 2)
    assert d.local_degree == 3
    d = splitting_data(z7, 7, CFG)
    assert (d.e, d.f, d.g) == (6, 1, 1)
    gauss = fixed_field(4, [1], CFG)
    assert splitting_data(gauss, 5, CFG).g == 2      # 5 == 1 mod 4 splits
    assert splitting_data(gauss, 3, CFG).f == 2      # 3 == 3 mod 4 is inert
    assert splitting_data(gauss, 2, CFG).e == 2      # 2 ramifies


def test_splitting_invariants_random():
    rng = random.Random(41)
    primes = [2, 3, 5, 7, 11, 13, 17]
    for _ in range(60):
        f = _random_field(rng)
        p = rng.choice(primes)
        d = splitting_data(f, p, CFG)
        assert d.e * d.f * d.g == f.degree
        assert d.local_degree == d.e * d.f
        # ramified exactly at the primes dividing the canonical conductor
        assert (d.e > 1) == (f.modulus % p == 0)
        assert totally_split(f, p, CFG) == (d.local_degree == 1)
        if f.modulus % p:
            # residue degree is the order of Frobenius in the quotient
            ordp = element_order(f.group, p)
            assert d.f <= ordp and ordp % d.f == 0


def test_frobenius_order_in_cyclotomic():
    # in the full cyclotomic field the residue degree is the order of p
    for m in (5, 7, 9, 11, 16, 15, 21):
        z = cyclotomic_field(m, CFG)
        for p in (2, 3, 5, 7, 11, 13):
            if z.modulus % p == 0:
                continue
            d = splitting_data(z, p, CFG)
            assert d.f == element_order(unit_group(z.modulus, CFG), p)
            assert d.e == 1


def test_totally_split_fast_path():
    f = fixed_field(15, [2], CFG)
    # members of the fixing subgroup {1,2,4,8} split, non-members do not
    assert totally_split(f, 2, CFG)
    assert not totally_split(f, 7, CFG)
    d = splitting_data(f, 61, CFG)   # 61 == 1 mod 15
    assert d.local_degree == 1 and totally_split(f, 61, CFG)


def test_roots_of_unity_values():
    assert roots_of_unity(rational_field(CFG), CFG) == 2
    for m in range(3, 21):
        z = cyclotomic_field(m, CFG)
        expect = m if m % 2 == 0 else 2 * m
        if m % 4 == 2:
            expect = m  # conductor drops to m/2 but zeta_m survives
        assert roots_of_unity(z, CFG) == expect
    assert roots_of_unity(fixed_field(4, [1], CFG), CFG) == 4
    assert roots_of_unity(cyclotomic_field(3, CFG), CFG) == 6
    assert roots_of_unity(fixed_field(5, [4], CFG), CFG) == 2  # real field
    assert roots_of_unity(fixed_field(15, [2], CFG), CFG) == 2


def test_document_roundtrip():
    rng = random.Random(43)
    for _ in range(40):
        f = _random_field(rng)
        doc = to_document(f)
        back = field_from_document(doc, CFG)
        assert back == f
        assert doc["degree"] == f.degree
        assert doc["canonical"] is True


def test_document_validation():
    with pytest.raises(ValidationError):
        field_from_document({"conductor": 7}, CFG)
    with pytest.raises(ValidationError):
        field_from_document({"conductor": 7, "subgroup_generators": [],
                             "degree": 5, "canonical": True}, CFG)
    with pytest.raises(ValidationError):
        field_from_document({"conductor": 7, "subgroup_generators": [7],
                             "degree": 6, "canonical": True}, CFG)


def test_caps():
    with pytest.raises(CapExceededError):
        cyclotomic_field(10 ** 8, CFG)
    tight = Config(modulus_cap=50)
    with pytest.raises(CapExceededError):
        fixed_field(97, [1], tight)


def test_field_from_lattice_full_group():
    g = unit_group(20, CFG)
    f = field_from_lattice(g, [[1, 0], [0, 1]], CFG)
    assert f.degree == 1 and f.modulus == 1
