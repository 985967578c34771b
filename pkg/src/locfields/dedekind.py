"""Index divisibility at a prime via the classical lift-and-gcd criterion.

For a monic irreducible f and a prime p: factor f mod p, lift the product
of the distinct irreducible factors to g and the complementary product to
h, form F = (g*h - f)/p, and test gcd(F, g, h) mod p. The gcd is trivial
exactly when p does not divide the index [O_K : Z[x]/(f)], in which case
the mod-p factorization is the true splitting of p.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import factorize, is_prime
from .config import DEFAULT_CONFIG, Config
from .errors import ValidationError
from .fppoly import (FpPolynomial, fp_derivative, fp_factor,
                     fp_factor_degrees, fp_from_int_poly, fp_gcd, fp_mul)
from .intpoly import (IntPolynomial, discriminant, eisenstein_cubic,
                      int_poly, is_eisenstein)

__all__ = [
    "DedekindReport", "IndexScanReport", "ScanEntry",
    "dedekind_index_test", "monogenic_degree_bound", "monogenic_index_scan",
    "discriminant", "is_eisenstein", "eisenstein_cubic", "int_poly",
]

_PROBE_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43)
_MAX_GOOD_PROBES = 4
_ROOT_SCAN_LIMIT = 10 ** 12


@dataclass(frozen=True)
class DedekindReport:
    polynomial: IntPolynomial
    prime: int
    factors: tuple[tuple[FpPolynomial, int], ...]
    index_divisible: bool
    splitting: tuple[tuple[int, int], ...] | None
    irreducibility: str  # "proved" or "probed"


@dataclass(frozen=True)
class ScanEntry:
    label: str
    degree: int
    index_divisible: bool
    splitting: tuple[tuple[int, int], ...] | None


@dataclass(frozen=True)
class IndexScanReport:
    prime: int
    degree_parameter: int
    degree_bound: int
    entries: tuple[ScanEntry, ...]
    witnesses: tuple[str, ...]


def _divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p ** k for d in out for k in range(e + 1)]
    return sorted(out)


def _subset_degree_mask(degrees: list[int]) -> int:
    mask = 1
    for d in degrees:
        mask |= mask << d
    return mask


def _check_irreducible(f: IntPolynomial) -> str:
    """Reducibility screen: returns "proved" or "probed", raises when
    a certificate of reducibility turns up."""
    d = f.degree
    if d == 1:
        return "proved"
    a0 = f.coefficients[0]
    if a0 == 0:
        raise ValidationError("polynomial is divisible by x")
    if abs(a0) <= _ROOT_SCAN_LIMIT:
        for r in _divisors(abs(a0)):
            if f(r) == 0 or f(-r) == 0:
                raise ValidationError(
                    f"polynomial has the rational root {r if f(r) == 0 else -r}")
    interior = ((1 << d) - 1) & ~1  # bits 1..d-1
    possible = (1 << (d + 1)) - 1
    good_probes = 0
    for q in _PROBE_PRIMES:
        fq = fp_from_int_poly(f, q)
        if fq.degree != d:
            continue
        if fp_gcd(fq, fp_derivative(fq)).degree != 0:
            continue
        possible &= _subset_degree_mask(fp_factor_degrees(fq))
        good_probes += 1
        if possible & interior == 0:
            return "proved"
        if good_probes >= _MAX_GOOD_PROBES:
            break
    if good_probes == 0 and d <= 64 and discriminant(f) == 0:
        raise ValidationError("polynomial has a repeated factor")
    return "probed"


def dedekind_index_test(f: IntPolynomial, p: int, seed: int = 0,
                        config: Config | None = None) -> DedekindReport:
    """Does p divide the index of Z[alpha] in the maximal order?

    f must be monic of degree >= 1; irreducibility over Q is screened by a
    rational-root check and factorization patterns modulo auxiliary primes,
    with the report recording "proved" or "probed". When the index is not
    divisible by p the mod-p factor shapes are the genuine (e_i, f_i) data
    of p in the number field.
    """
    del config
    if f.is_zero or f.degree < 1:
        raise ValidationError("polynomial must have degree at least 1")
    if not f.is_monic:
        raise ValidationError("polynomial must be monic")
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    irreducibility = _check_irreducible(f)

    fbar = fp_from_int_poly(f, p)
    factors = tuple(fp_factor(fbar, seed))

    radical = FpPolynomial(p, (1,))
    cofactor = FpPolynomial(p, (1,))
    for g, mult in factors:
        radical = fp_mul(radical, g)
        for _ in range(mult - 1):
            cofactor = fp_mul(cofactor, g)
    g_lift = _centered_lift(radical)
    h_lift = _centered_lift(cofactor)
    product = g_lift * h_lift
    diff = product - f
    witness_coeffs = []
    for c in diff.coefficients:
        q, r = divmod(c, p)
        if r:
            raise ArithmeticError("lift difference not divisible by p")
        witness_coeffs.append(q)
    witness = fp_poly_from_ints(witness_coeffs, p)
    common = fp_gcd(witness, fp_gcd(radical, cofactor))
    index_divisible = common.degree != 0
    splitting = None
    if not index_divisible:
        splitting = tuple(sorted((mult, g.degree) for g, mult in factors))
    return DedekindReport(f, p, factors, index_divisible, splitting,
                          irreducibility)


def fp_poly_from_ints(coeffs: list[int], p: int) -> FpPolynomial:
    return FpPolynomial(p, tuple(c % p for c in coeffs))


def _centered_lift(g: FpPolynomial) -> IntPolynomial:
    """Lift to Z with coefficients in (-p/2, p/2]."""
    p = g.prime
    half = p // 2
    return IntPolynomial(tuple(c - p if c > half else c
                               for c in g.coefficients))


def monogenic_degree_bound(p: int, B: int) -> int:
    """Largest degree forced on new roots of unity under bounded local data.

    If every local degree above p is at most B, any root of unity in the
    field has degree at most p**(B*B + 1) * B*B over Q.
    """
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    if B < 1:
        raise ValidationError("the local degree bound must be at least 1")
    return p ** (B * B + 1) * B * B


def monogenic_index_scan(family, p: int, B: int, seed: int = 0,
                         config: Config | None = None) -> IndexScanReport:
    """Run the index test over a labeled family and flag bound violations.

    `family` is an iterable of (label, IntPolynomial). A witness is an
    element whose index is divisible by p while its degree exceeds
    monogenic_degree_bound(p, B).
    """
    bound = monogenic_degree_bound(p, B)
    entries = []
    witnesses = []
    for label, poly in family:
        report = dedekind_index_test(poly, p, seed, config)
        entries.append(ScanEntry(str(label), poly.degree,
                                 report.index_divisible, report.splitting))
        if report.index_divisible and poly.degree > bound:
            witnesses.append(str(label))
    return IndexScanReport(p, B, bound, tuple(entries), tuple(witnesses))
