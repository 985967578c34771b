"""Cyclic extensions of Q of prime degree with prescribed split primes.

Given a prime q, a finite set T of primes that must split completely, and
a field F to stay linearly disjoint from, pick |T|+1 auxiliary primes
ell == 1 (mod q) avoiding T and the conductor of F, and cut the degree-q
subfield of the cyclotomic field of their product by a character chosen in
the null space of the Frobenius vectors of T. Everything is deterministic:
the auxiliary primes are the smallest admissible ones and the character is
the canonical null-space basis vector with the earliest free coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_prime, primes_in_progression
from .config import DEFAULT_CONFIG, Config
from .errors import ValidationError
from .fields import (AbelianField, field_from_lattice, intersection,
                     rational_field, totally_split)
from .zmodstar import discrete_log_mod_q, unit_group_from_factors


@dataclass(frozen=True)
class CyclicFieldRequest:
    """What to build: degree, primes to split, field to stay disjoint from."""

    order: int
    split_primes: tuple[int, ...]
    avoid: AbelianField | None = None
    search_bound: int | None = None


@dataclass(frozen=True)
class ConstructionTrace:
    """Full audit record of one cyclic construction."""

    order: int
    split_primes: tuple[int, ...]
    avoid_conductor: int
    chosen_primes: tuple[int, ...]
    modulus: int
    frobenius_vectors: tuple[tuple[int, tuple[int, ...]], ...]
    character: tuple[int, ...]
    conductor: int


def _nullspace_mod_q(rows: list[list[int]], ncols: int,
                     q: int) -> list[list[int]]:
    """Basis of the solution space of rows * v == 0 over GF(q).

    Reduced row echelon form with pivot columns chosen left to right; one
    basis vector per free column, ordered by free column index.
    """
    mat = [[x % q for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][c], -1, q)
        mat[r] = [x * inv % q for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                coef = mat[i][c]
                mat[i] = [(x - coef * y) % q
                          for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for ri, pc in enumerate(pivots):
            vec[pc] = -mat[ri][free] % q
        basis.append(vec)
    return basis


def construct_cyclic(request: CyclicFieldRequest,
                     config: Config | None = None
                     ) -> tuple[AbelianField, ConstructionTrace]:
    """Build the cyclic field described by the request.

    Returns the field together with a trace recording the auxiliary
    primes, the Frobenius vectors and the character that was cut out.
    Raises SearchExhaustedError when the prime search bound is too small.
    """
    cfg = config or DEFAULT_CONFIG
    q = request.order
    if not is_prime(q):
        raise ValidationError(f"requested degree {q} is not prime")
    split = tuple(sorted(set(request.split_primes)))
    for p in split:
        if not is_prime(p):
            raise ValidationError(f"split prime {p} is not prime")
    avoid = request.avoid if request.avoid is not None else rational_field(cfg)
    bound = request.search_bound or cfg.prime_search_bound

    count = len(split) + 1
    avoid_conductor = avoid.modulus
    chosen = tuple(primes_in_progression(
        1, q, bound=bound, count=count,
        skip=set(split) | {p for p, _ in
                           avoid.group.prime_power_factors}))

    modulus = 1
    for ell in chosen:
        modulus *= ell
    group = unit_group_from_factors(modulus, {ell: 1 for ell in chosen})
    locals_ = [unit_group_from_factors(ell, {ell: 1}) for ell in chosen]

    frobenius = []
    for p in split:
        frobenius.append((p, tuple(discrete_log_mod_q(u, p, q)
                                   for u in locals_)))
    basis = _nullspace_mod_q([list(vec) for _, vec in frobenius],
                             count, q)
    character = tuple(basis[0])

    lead = next(i for i, x in enumerate(character) if x)
    inv = pow(character[lead], -1, q)
    rows = [[q if j == lead else 0 for j in range(count)]]
    for j in range(count):
        if j == lead:
            continue
        row = [0] * count
        row[j] = 1
        row[lead] = -character[j] * inv % q
        rows.append(row)
    field = field_from_lattice(group, rows, cfg)

    if field.degree != q:
        raise ArithmeticError("construction produced the wrong degree")
    for p in split:
        if not totally_split(field, p, cfg):
            raise ArithmeticError(f"{p} failed to split in the construction")
    if avoid.modulus > 1 and intersection(field, avoid, cfg).degree != 1:
        raise ArithmeticError("construction is not disjoint from the avoided "
                              "field")
    trace = ConstructionTrace(q, split, avoid_conductor, chosen, modulus,
                              tuple(frobenius), character, field.modulus)
    return field, trace
