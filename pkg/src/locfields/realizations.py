"""Two ways to realize products of cyclic groups C_{q-1} as Galois groups.

Both constructions run over the primes q whose shifted value q-1 is
squarefree. The unbounded route takes composita of prime cyclotomic
fields, which forces local degrees to grow with the depth. The bounded
route assembles each C_{q-1} from cyclic pieces of prime order that are
made to split completely at a fixed auxiliary list of primes, keeping the
local degree at the n-th auxiliary prime below a bound independent of the
depth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import factorize, is_prime
from .config import DEFAULT_CONFIG, Config
from .errors import SearchExhaustedError, ValidationError
from .fields import (AbelianField, compositum, cyclotomic_field,
                     intersection, local_degree, rational_field,
                     roots_of_unity)
from .grunwald import ConstructionTrace, CyclicFieldRequest, construct_cyclic


@dataclass(frozen=True)
class SquarefreePrime:
    """A prime q with q-1 squarefree, plus the prime factors of q-1."""

    prime: int
    shift_factors: tuple[int, ...]


@dataclass(frozen=True)
class ComponentRecord:
    """One cyclic building block of a realization."""

    stage: int
    group_prime: int
    cyclic_order: int
    field: AbelianField
    trace: ConstructionTrace | None


@dataclass(frozen=True)
class RealizationReport:
    """Everything a realization produced, with its verification verdicts."""

    kind: str
    depth: int
    group_primes: tuple[int, ...]
    split_primes: tuple[int, ...]
    components: tuple[ComponentRecord, ...]
    compositum: AbelianField
    degree: int
    local_degrees: tuple[tuple[int, int], ...]
    claimed_bounds: tuple[tuple[int, int], ...]
    torsion_order: int
    verdicts: tuple[tuple[str, bool], ...]


def squarefree_primes(count: int, bound: int | None = None
                      ) -> list[SquarefreePrime]:
    """First primes q, in order, for which q-1 is squarefree."""
    if count < 0:
        raise ValidationError("count must be nonnegative")
    limit = bound or 1_000_000
    found: list[SquarefreePrime] = []
    n = 2
    while len(found) < count:
        if n > limit:
            raise SearchExhaustedError(
                f"fewer than {count} admissible primes below {limit}")
        if is_prime(n):
            shift = factorize(n - 1)
            if all(e == 1 for e in shift.values()):
                found.append(SquarefreePrime(n, tuple(sorted(shift))))
        n += 1
    return found


def _group_primes(depth: int) -> list[SquarefreePrime]:
    """First depth admissible primes >= 3, so every factor C_{q-1} is
    nontrivial."""
    return [sq for sq in squarefree_primes(depth + 1) if sq.prime >= 3][:depth]


def local_degree_bound(stage: int, orders: tuple[int, ...] | list[int]) -> int:
    """Depth-independent cap on the local degree at the stage-th split
    prime."""
    if stage < 1:
        raise ValidationError("stage index starts at 1")
    if len(orders) < stage - 1:
        raise ValidationError("not enough cyclic orders for this stage")
    return 1 if stage == 1 else math.prod(orders[:stage - 1])


def _validated_probes(probe_primes) -> tuple[int, ...]:
    probes = tuple(sorted(set(probe_primes)))
    for p in probes:
        if not is_prime(p):
            raise ValidationError(f"probe {p} is not prime")
    return probes


def unbounded_realization(depth: int, probe_primes=(),
                          config: Config | None = None) -> RealizationReport:
    """Compositum of the cyclotomic fields of the first depth admissible
    primes.

    Realizes the product of the C_{q-1} with every local degree at an
    unramified prime equal to the lcm of the orders of that prime in the
    component groups, which is unbounded in the depth.
    """
    cfg = config or DEFAULT_CONFIG
    if depth < 0:
        raise ValidationError("depth must be nonnegative")
    probes = _validated_probes(probe_primes)
    group_primes = _group_primes(depth)

    components = []
    modulus = 1
    expected = 1
    field = rational_field(cfg)
    for i, sq in enumerate(group_primes, start=1):
        piece = cyclotomic_field(sq.prime, cfg)
        components.append(ComponentRecord(i, sq.prime, sq.prime - 1,
                                          piece, None))
        field = compositum(field, piece, cfg)
        modulus *= sq.prime
        expected *= sq.prime - 1

    degrees = tuple((p, local_degree(field, p, cfg)) for p in probes)
    torsion = roots_of_unity(field, cfg)
    verdicts = (
        ("degree_matches", field.degree == expected),
        ("conductor_matches", field.modulus == modulus),
        ("torsion_matches", torsion == 2 * modulus),
    )
    return RealizationReport(
        kind="unbounded", depth=depth,
        group_primes=tuple(sq.prime for sq in group_primes),
        split_primes=(), components=tuple(components), compositum=field,
        degree=field.degree, local_degrees=degrees, claimed_bounds=(),
        torsion_order=torsion, verdicts=verdicts)


def bounded_realization(depth: int, split_primes=None, probe_primes=(),
                        config: Config | None = None) -> RealizationReport:
    """Realize the same product so that local degrees at the split primes
    stay bounded.

    Stage i assembles C_{q_i - 1} from one cyclic piece per prime factor
    of q_i - 1, each built to split the first i auxiliary primes
    completely and to be linearly disjoint from everything before it.
    """
    cfg = config or DEFAULT_CONFIG
    if depth < 0:
        raise ValidationError("depth must be nonnegative")
    probes = _validated_probes(probe_primes)
    group_primes = _group_primes(depth)

    if split_primes is None:
        split: list[int] = []
        n = 2
        while len(split) < depth:
            if is_prime(n):
                split.append(n)
            n += 1
    else:
        split = list(split_primes)
        if len(split) < depth:
            raise ValidationError("need at least depth split primes")
        if len(set(split)) != len(split):
            raise ValidationError("split primes must be distinct")
        for p in split:
            if not is_prime(p):
                raise ValidationError(f"split prime {p} is not prime")

    components = []
    field = rational_field(cfg)
    expected = 1
    for i, sq in enumerate(group_primes, start=1):
        want = tuple(split[:i])
        for gamma in sq.shift_factors:
            piece, trace = construct_cyclic(
                CyclicFieldRequest(gamma, want, field), cfg)
            components.append(ComponentRecord(i, sq.prime, gamma,
                                              piece, trace))
            field = compositum(field, piece, cfg)
        expected *= sq.prime - 1

    orders = tuple(sq.prime - 1 for sq in group_primes)
    bounds = tuple((p, local_degree_bound(n, orders))
                   for n, p in enumerate(split[:depth], start=1))
    degrees = tuple((p, local_degree(field, p, cfg))
                    for p in sorted(set(split[:depth]) | set(probes)))
    degree_at = dict(degrees)

    pairwise = all(
        intersection(a.field, b.field, cfg).degree == 1
        for idx, a in enumerate(components)
        for b in components[idx + 1:])
    torsion = roots_of_unity(field, cfg)
    verdicts = (
        ("degree_matches", field.degree == expected),
        ("components_disjoint", pairwise),
        ("bounds_hold", all(degree_at[p] <= cap for p, cap in bounds)),
        ("first_prime_splits",
         depth == 0 or degree_at[split[0]] == 1),
    )
    return RealizationReport(
        kind="bounded", depth=depth,
        group_primes=tuple(sq.prime for sq in group_primes),
        split_primes=tuple(split[:depth]), components=tuple(components),
        compositum=field, degree=field.degree, local_degrees=degrees,
        claimed_bounds=bounds, torsion_order=torsion, verdicts=verdicts)
