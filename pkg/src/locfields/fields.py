"""Abelian extensions of Q as conductor-subgroup pairs.

A field is the subfield of the cyclotomic field of conductor m fixed by a
subgroup H of (Z/m)*. All instances are kept canonical: m is the true
conductor (in particular never 2 mod 4), so equality of fields is equality
of data. Composita, intersections and containments are computed by lifting
the subgroups to the lcm modulus; since lifted moduli arrive with known
factorizations these operations work far beyond the factoring cap, with a
fixed bit-length ceiling as the safety stop.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import lattices
from .arith import crt_pair, is_prime
from .config import DEFAULT_CONFIG, Config
from .errors import CapExceededError, ValidationError
from .zmodstar import (Subgroup, UnitGroup, subgroup_closure,
                       subgroup_from_lattice, unit_group,
                       unit_group_from_factors)

# Merged-modulus operations (compositum, intersection, containment) accept
# any modulus below this many bits; beyond it the construction is refused
# rather than allowed to grow without bound.
MODULUS_BIT_LIMIT = 256


class AbelianField:
    """Finite abelian extension of Q, presented by (conductor, subgroup)."""

    __slots__ = ("subgroup", "canonical")

    def __init__(self, subgroup: Subgroup, canonical: bool = True):
        self.subgroup = subgroup
        self.canonical = canonical

    @property
    def modulus(self) -> int:
        return self.subgroup.parent.modulus

    @property
    def degree(self) -> int:
        return self.subgroup.index

    @property
    def group(self) -> UnitGroup:
        return self.subgroup.parent

    def __repr__(self) -> str:
        return (f"AbelianField(conductor {self.modulus}, "
                f"degree {self.degree})")

    def __eq__(self, other) -> bool:
        return (isinstance(other, AbelianField)
                and other.modulus == self.modulus
                and other.subgroup.lattice == self.subgroup.lattice)

    def __hash__(self) -> int:
        return hash((self.modulus, self.subgroup.lattice))


@dataclass(frozen=True)
class SplittingData:
    """Ramification index, residue degree and block count of a prime."""

    prime: int
    e: int
    f: int
    g: int
    local_degree: int


def _factors_dict(group: UnitGroup) -> dict[int, int]:
    return dict(group.prime_power_factors)


def _canonicalize(group: UnitGroup, basis: list[list[int]],
                  config: Config) -> tuple[UnitGroup, list[list[int]]]:
    """Shrink the modulus until H contains no reduction kernel."""
    while group.modulus > 1:
        reduced = False
        for p, _ in group.prime_power_factors:
            factors2 = _factors_dict(group)
            factors2[p] -= 1
            if factors2[p] == 0:
                del factors2[p]
            m2 = group.modulus // p
            group2 = unit_group_from_factors(m2, factors2)
            red = group.reduction_matrix(group2)
            ker_rows = lattices.preimage(red, group2.trivial_lattice(),
                                         group.rank)
            ker_basis = lattices.hnf(ker_rows + group.trivial_lattice(),
                                     group.rank)
            if all(lattices.in_lattice(basis, row) for row in ker_basis):
                image_rows = [group2.dlog(group.element(row) % m2)
                              for row in basis]
                basis = lattices.hnf(image_rows + group2.trivial_lattice(),
                                     group2.rank)
                group = group2
                reduced = True
                break
        if not reduced:
            break
    return group, basis


def field_from_lattice(group: UnitGroup, rows: list[list[int]],
                       config: Config | None = None) -> AbelianField:
    """Canonical field fixed by the subgroup spanned by exponent rows."""
    cfg = config or DEFAULT_CONFIG
    basis = lattices.hnf([list(r) for r in rows] + group.trivial_lattice(),
                         group.rank)
    group, basis = _canonicalize(group, basis, cfg)
    return AbelianField(subgroup_from_lattice(group, basis, cfg))


def rational_field(config: Config | None = None) -> AbelianField:
    """Q, as the degenerate conductor-1 field."""
    group = unit_group_from_factors(1, {})
    return AbelianField(subgroup_from_lattice(group, [], config))


def cyclotomic_field(m: int, config: Config | None = None) -> AbelianField:
    """The full cyclotomic field of the given modulus (conductor form)."""
    group = unit_group(m, config)
    return field_from_lattice(group, [], config)


def fixed_field(m: int, generators, config: Config | None = None
                ) -> AbelianField:
    """Subfield of the m-th cyclotomic field fixed by given generators.

    `generators` is an iterable of unit residues, or an existing Subgroup
    of (Z/m)*.
    """
    if isinstance(generators, Subgroup):
        if generators.parent.modulus != m:
            raise ValidationError("subgroup does not live modulo m")
        group = generators.parent
        rows = [list(r) for r in generators.lattice]
        return field_from_lattice(group, rows, config)
    group = unit_group(m, config)
    sub = subgroup_closure(group, generators, config)
    return field_from_lattice(group, [list(r) for r in sub.lattice], config)


def _merged_modulus(a: AbelianField, b: AbelianField) -> tuple[int, dict]:
    fa = _factors_dict(a.group)
    fb = _factors_dict(b.group)
    merged = dict(fa)
    for p, e in fb.items():
        merged[p] = max(merged.get(p, 0), e)
    m = 1
    for p, e in merged.items():
        m *= p ** e
    if m.bit_length() > MODULUS_BIT_LIMIT:
        raise CapExceededError(
            f"merged modulus needs {m.bit_length()} bits, "
            f"limit is {MODULUS_BIT_LIMIT}")
    return m, merged


def _lifted_basis(big: UnitGroup, field: AbelianField) -> list[list[int]]:
    """HNF basis of the preimage of the field's subgroup modulo big."""
    red = big.reduction_matrix(field.group)
    rows = lattices.preimage(red, [list(r) for r in field.subgroup.lattice],
                             big.rank)
    return lattices.hnf(rows + big.trivial_lattice(), big.rank)


def compositum(a: AbelianField, b: AbelianField,
               config: Config | None = None) -> AbelianField:
    """Smallest abelian field containing both inputs."""
    if a.modulus == 1:
        return b
    if b.modulus == 1:
        return a
    m, merged = _merged_modulus(a, b)
    group = unit_group_from_factors(m, merged)
    la = _lifted_basis(group, a)
    lb = _lifted_basis(group, b)
    meet = lattices.intersect(la, lb, group.rank)
    return field_from_lattice(group, meet, config)


def intersection(a: AbelianField, b: AbelianField,
                 config: Config | None = None) -> AbelianField:
    """Largest field contained in both inputs."""
    if a.modulus == 1 or b.modulus == 1:
        return rational_field(config)
    m, merged = _merged_modulus(a, b)
    group = unit_group_from_factors(m, merged)
    la = _lifted_basis(group, a)
    lb = _lifted_basis(group, b)
    join = lattices.stack_hnf(la, lb, group.rank)
    return field_from_lattice(group, join, config)


def contains(a: AbelianField, b: AbelianField,
             config: Config | None = None) -> bool:
    """True when a contains b (b is a subfield of a)."""
    if b.modulus == 1:
        return True
    if a.modulus == 1:
        return b.degree == 1
    m, merged = _merged_modulus(a, b)
    group = unit_group_from_factors(m, merged)
    la = _lifted_basis(group, a)
    lb = _lifted_basis(group, b)
    return all(lattices.in_lattice(lb, row) for row in la)


def splitting_data(field: AbelianField, p: int,
                   config: Config | None = None) -> SplittingData:
    """How the rational prime p decomposes in the field.

    e is the index of the inertia join over H, e*f the index of the
    decomposition join (inertia plus the CRT lift of Frobenius), and g the
    remaining block count.
    """
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    group = field.group
    m = group.modulus
    degree = field.degree
    if m == 1:
        return SplittingData(p, 1, 1, 1, 1)
    basis = [list(r) for r in field.subgroup.lattice]
    det_h = lattices.det_from_hnf(basis)
    a = dict(group.prime_power_factors).get(p, 0)
    if a == 0:
        with_inertia = basis
        det_i = det_h
        frob = p % m
    else:
        pp = p ** a
        m2 = m // pp
        factors2 = _factors_dict(group)
        del factors2[p]
        group2 = unit_group_from_factors(m2, factors2)
        red = group.reduction_matrix(group2)
        inertia = lattices.preimage(red, group2.trivial_lattice(), group.rank)
        with_inertia = lattices.hnf(basis + inertia + group.trivial_lattice(),
                                    group.rank)
        det_i = lattices.det_from_hnf(with_inertia)
        frob = crt_pair(p % m2, m2, 1, pp) if m2 > 1 else 1 % m
    e = det_h // det_i
    decomp = lattices.stack_hnf(with_inertia, [group.dlog(frob)], group.rank)
    ef = det_h // lattices.det_from_hnf(decomp)
    f = ef // e
    return SplittingData(p, e, f, degree // ef, e * f)


def local_degree(field: AbelianField, p: int,
                 config: Config | None = None) -> int:
    """Degree of the completion of the field at any prime above p."""
    return splitting_data(field, p, config).local_degree


def totally_split(field: AbelianField, p: int,
                  config: Config | None = None) -> bool:
    """True when p splits into [field:Q] distinct degree-1 primes."""
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    if field.modulus == 1:
        return True
    if field.modulus % p:
        return field.subgroup.contains(p)
    return splitting_data(field, p, config).local_degree == 1


def roots_of_unity(field: AbelianField, config: Config | None = None) -> int:
    """Largest n such that the field contains a primitive n-th root of unity.

    Candidates divide twice the conductor and are pruned by the requirement
    that phi(n) divide the degree; survivors are checked by containment of
    the corresponding cyclotomic field. The answer is always even.
    """
    m = field.modulus
    degree = field.degree
    factors = _factors_dict(field.group)
    factors[2] = factors.get(2, 0) + 1
    primes = sorted(factors)

    candidates: list[int] = []

    def extend(idx: int, n: int, phi: int) -> None:
        if idx == len(primes):
            candidates.append(n)
            return
        p = primes[idx]
        extend(idx + 1, n, phi)
        contrib = p - 1
        power = p
        for _ in range(factors[p]):
            if degree % (phi * contrib):
                break
            extend(idx + 1, n * power, phi * contrib)
            contrib *= p
            power *= p

    extend(0, 1, 1)
    for n in sorted(candidates, reverse=True):
        target = n // 2 if n % 4 == 2 else n
        group = unit_group_from_factors(target,
                                        factorize_known(target, factors))
        cyc = AbelianField(subgroup_from_lattice(group, [], config))
        if contains(field, cyc, config):
            return n
    return 2


def factorize_known(n: int, superset: dict[int, int]) -> dict[int, int]:
    """Factorization of n given a factor superset containing all its primes."""
    out = {}
    for p in superset:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n != 1:
        raise ArithmeticError("superset did not cover all prime factors")
    return out


def to_document(field: AbelianField) -> dict:
    """JSON-ready canonical description of the field."""
    return {
        "conductor": field.modulus,
        "subgroup_generators": [int(g) for g in field.subgroup.generators],
        "degree": field.degree,
        "canonical": True,
    }


def field_from_document(doc: dict, config: Config | None = None
                        ) -> AbelianField:
    """Rebuild a field from its document form, validating shape and degree."""
    if not isinstance(doc, dict):
        raise ValidationError("field document must be a JSON object")
    try:
        conductor = doc["conductor"]
        generators = doc["subgroup_generators"]
    except KeyError as missing:
        raise ValidationError(
            f"field document is missing key {missing}") from None
    if not isinstance(conductor, int) or conductor < 1:
        raise ValidationError("conductor must be a positive integer")
    if not isinstance(generators, list) \
            or not all(isinstance(g, int) for g in generators):
        raise ValidationError("subgroup_generators must be a list of ints")
    field = fixed_field(conductor, generators, config)
    stated = doc.get("degree")
    if stated is not None and stated != field.degree:
        raise ValidationError(
            f"document states degree {stated}, data gives {field.degree}")
    return field
