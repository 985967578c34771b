"""Polynomials over prime fields GF(p): arithmetic and full factorization.

Coefficients are stored low degree first, reduced mod p. The inner loops
(multiplication, remainder) run on int64 arrays through the selected
kernel backend, which bounds p below 2**31; everything this package
factors lives far below that.

Factorization is squarefree decomposition, then distinct-degree splitting,
then seeded equal-degree splitting. The output is sorted canonically, so
it does not depend on the seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .arith import is_prime
from .errors import ValidationError
from .intpoly import IntPolynomial


@dataclass(frozen=True)
class FpPolynomial:
    """Polynomial over GF(prime); coefficients[i] multiplies x**i."""

    prime: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) % self.prime for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def is_one(self) -> bool:
        return self.coefficients == (1,)

    @property
    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mag = "" if c == 1 else f"{c}*"
                parts.append(f"{mag}x" if i == 1 else f"{mag}x^{i}")
        return " + ".join(parts)


def fp_poly(coefficients, p: int) -> FpPolynomial:
    """Validated constructor."""
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    if p >= _kernels.INT64_PRIME_LIMIT:
        raise ValidationError(
            f"prime {p} exceeds the kernel limit {_kernels.INT64_PRIME_LIMIT}")
    return FpPolynomial(p, tuple(coefficients))


def fp_from_int_poly(f: IntPolynomial, p: int) -> FpPolynomial:
    return fp_poly(f.coefficients, p)


def _make(p: int, coeffs: tuple) -> FpPolynomial:
    """Trusted constructor; coefficients must already be reduced mod p."""
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    if n != len(coeffs):
        coeffs = coeffs[:n]
    poly = object.__new__(FpPolynomial)
    object.__setattr__(poly, "prime", p)
    object.__setattr__(poly, "coefficients", coeffs)
    return poly


def _arr(f: FpPolynomial) -> np.ndarray:
    return np.array(f.coefficients, dtype=np.int64)


def _wrap(a: np.ndarray, p: int) -> FpPolynomial:
    return _make(p, tuple(a.tolist()))


def _same_field(a: FpPolynomial, b: FpPolynomial) -> int:
    if a.prime != b.prime:
        raise ValidationError("polynomials live over different prime fields")
    return a.prime


def fp_add(a: FpPolynomial, b: FpPolynomial) -> FpPolynomial:
    p = _same_field(a, b)
    n = max(len(a.coefficients), len(b.coefficients))
    ca = a.coefficients + (0,) * (n - len(a.coefficients))
    cb = b.coefficients + (0,) * (n - len(b.coefficients))
    return _make(p, tuple((x + y) % p for x, y in zip(ca, cb)))


def fp_sub(a: FpPolynomial, b: FpPolynomial) -> FpPolynomial:
    p = _same_field(a, b)
    n = max(len(a.coefficients), len(b.coefficients))
    ca = a.coefficients + (0,) * (n - len(a.coefficients))
    cb = b.coefficients + (0,) * (n - len(b.coefficients))
    return _make(p, tuple((x - y) % p for x, y in zip(ca, cb)))


def fp_mul(a: FpPolynomial, b: FpPolynomial) -> FpPolynomial:
    p = _same_field(a, b)
    if a.is_zero or b.is_zero:
        return FpPolynomial(p, ())
    return _wrap(_kernels.fp_mul(_arr(a), _arr(b), p), p)


def fp_scale(a: FpPolynomial, k: int) -> FpPolynomial:
    return _make(a.prime, tuple(c * k % a.prime for c in a.coefficients))


def fp_monic(a: FpPolynomial) -> FpPolynomial:
    if a.is_zero or a.is_monic:
        return a
    inv = pow(a.coefficients[-1], -1, a.prime)
    return fp_scale(a, inv)


def fp_divmod(a: FpPolynomial, b: FpPolynomial
              ) -> tuple[FpPolynomial, FpPolynomial]:
    """Quotient and remainder; b may be any nonzero polynomial."""
    p = _same_field(a, b)
    if b.is_zero:
        raise ValidationError("division by the zero polynomial")
    if a.degree < b.degree:
        return FpPolynomial(p, ()), a
    lead_inv = pow(b.coefficients[-1], -1, p)
    bm = fp_scale(b, lead_inv)
    rem = _kernels.fp_rem(_arr(a), _arr(bm), p)
    r = _wrap(rem, p) if rem.shape[0] else FpPolynomial(p, ())
    num = fp_sub(a, r)
    # exact division of num by b, synthetically on the monic form
    quo_arr = _div_exact(_arr(num), _arr(bm), p)
    return fp_scale(_wrap(quo_arr, p), lead_inv), r


def _div_exact(a: np.ndarray, f: np.ndarray, p: int) -> np.ndarray:
    df = f.shape[0] - 1
    r = a % p
    quo = np.zeros(max(r.shape[0] - df, 1), dtype=np.int64)
    for i in range(r.shape[0] - 1, df - 1, -1):
        c = r[i]
        if c:
            quo[i - df] = c
            r[i - df:i] = (r[i - df:i] - c * f[:df]) % p
            r[i] = 0
    return quo


def fp_rem(a: FpPolynomial, b: FpPolynomial) -> FpPolynomial:
    p = _same_field(a, b)
    if b.is_zero:
        raise ValidationError("division by the zero polynomial")
    if a.degree < b.degree:
        return a
    bm = fp_monic(b)
    rem = _kernels.fp_rem(_arr(a), _arr(bm), p)
    return _wrap(rem, p) if rem.shape[0] else FpPolynomial(p, ())


def fp_gcd(a: FpPolynomial, b: FpPolynomial) -> FpPolynomial:
    """Monic greatest common divisor."""
    p = _same_field(a, b)
    aa, bb = _arr(a), _arr(b)
    while bb.shape[0]:
        if aa.shape[0] >= bb.shape[0]:
            lead = int(bb[-1])
            if lead != 1:
                bb = bb * pow(lead, -1, p) % p
                bb[-1] = 1
            r = np.trim_zeros(_kernels.fp_rem(aa, bb, p), "b")
        else:
            r = aa
        aa, bb = bb, r
    if not aa.shape[0]:
        return FpPolynomial(p, ())
    lead = int(aa[-1])
    if lead != 1:
        aa = aa * pow(lead, -1, p) % p
        aa[-1] = 1
    return _wrap(aa, p)


def _arr_mulrem(a: np.ndarray, b: np.ndarray, m: np.ndarray,
                p: int) -> np.ndarray:
    prod = _kernels.fp_mul(a, b, p)
    if prod.shape[0] >= m.shape[0]:
        prod = _kernels.fp_rem(prod, m, p)
    return np.trim_zeros(prod, "b")


def fp_powmod(base: FpPolynomial, exponent: int,
              mod: FpPolynomial) -> FpPolynomial:
    """base**exponent reduced modulo mod."""
    p = _same_field(base, mod)
    if exponent < 0:
        raise ValidationError("exponent must be nonnegative")
    base = fp_rem(base, mod)
    if not exponent:
        return FpPolynomial(p, (1,))
    if base.is_zero:
        return FpPolynomial(p, ())
    marr = _arr(fp_monic(mod))
    barr = _arr(base)
    rarr = np.ones(1, dtype=np.int64)
    while True:
        if exponent & 1:
            rarr = _arr_mulrem(rarr, barr, marr, p)
            if not rarr.shape[0]:
                break
        exponent >>= 1
        if not exponent:
            break
        barr = _arr_mulrem(barr, barr, marr, p)
        if not barr.shape[0]:
            # remaining one-bits would multiply the result by zero
            rarr = barr
            break
    return _wrap(rarr, p)


def fp_derivative(a: FpPolynomial) -> FpPolynomial:
    return _make(a.prime, tuple(i * c % a.prime for i, c in
                                enumerate(a.coefficients) if i))


def _pth_root(f: FpPolynomial) -> FpPolynomial:
    """Inverse of Frobenius on a polynomial in x**p (prime field case)."""
    p = f.prime
    return _make(p, f.coefficients[::p])


def _squarefree_decomposition(f: FpPolynomial) -> list[tuple[FpPolynomial, int]]:
    """Monic f as a product of pairwise-coprime squarefree parts."""
    p = f.prime
    out: list[tuple[FpPolynomial, int]] = []
    c = fp_gcd(f, fp_derivative(f))
    w, _ = fp_divmod(f, c)
    i = 1
    while not w.is_one:
        y = fp_gcd(w, c)
        z, _ = fp_divmod(w, y)
        if not z.is_one:
            out.append((z, i))
        w = y
        c, _ = fp_divmod(c, y)
        i += 1
    if not c.is_one:
        out.extend((g, p * mult)
                   for g, mult in _squarefree_decomposition(_pth_root(c)))
    return out


def _distinct_degree(f: FpPolynomial) -> list[tuple[FpPolynomial, int]]:
    """Split monic squarefree f into products of same-degree irreducibles."""
    p = f.prime
    x = FpPolynomial(p, (0, 1))
    out = []
    h = x
    g = f
    k = 1
    while g.degree >= 2 * k:
        h = fp_powmod(h, p, g)
        d = fp_gcd(fp_sub(h, x), g)
        if not d.is_one:
            out.append((d, k))
            g, _ = fp_divmod(g, d)
            h = fp_rem(h, g)
        k += 1
    if g.degree > 0:
        out.append((g, g.degree))
    return out


def _equal_degree(f: FpPolynomial, k: int,
                  rng: random.Random) -> list[FpPolynomial]:
    """Split a product of degree-k irreducibles into its factors."""
    p = f.prime
    if f.degree == k:
        return [fp_monic(f)]
    n = f.degree
    while True:
        r = _make(p, tuple(rng.randrange(p) for _ in range(n)))
        if r.degree < 1:
            continue
        g = fp_gcd(r, f)
        if 0 < g.degree < n:
            break
        if p == 2:
            farr = _arr(f)
            warr = np.zeros(0, dtype=np.int64)
            tarr = _arr(r)
            for _ in range(k):
                if warr.shape[0] < tarr.shape[0]:
                    grown = tarr.copy()
                    grown[:warr.shape[0]] ^= warr
                    warr = grown
                elif tarr.shape[0]:
                    warr[:tarr.shape[0]] ^= tarr
                tarr = _arr_mulrem(tarr, tarr, farr, 2)
            g = fp_gcd(_wrap(np.trim_zeros(warr, "b"), 2), f)
        else:
            w = fp_powmod(r, (p ** k - 1) // 2, f)
            g = fp_gcd(fp_sub(w, FpPolynomial(p, (1,))), f)
        if 0 < g.degree < n:
            break
    cof, _ = fp_divmod(f, g)
    return _equal_degree(g, k, rng) + _equal_degree(cof, k, rng)


def fp_factor(f: FpPolynomial,
              seed: int = 0) -> list[tuple[FpPolynomial, int]]:
    """Factor the monic normalization of f into monic irreducibles.

    Returns (factor, multiplicity) pairs sorted by degree then by
    coefficient tuple; the randomized splitting stage is seeded, and the
    sorted output is identical for every seed.
    """
    if f.is_zero:
        raise ValidationError("cannot factor the zero polynomial")
    if f.degree < 1:
        return []
    rng = random.Random(seed)
    out: list[tuple[FpPolynomial, int]] = []
    for part, mult in _squarefree_decomposition(fp_monic(f)):
        for prod, k in _distinct_degree(part):
            for irr in _equal_degree(prod, k, rng):
                out.append((irr, mult))
    out.sort(key=lambda t: (t[0].degree, t[0].coefficients))
    return out


def fp_is_irreducible(f: FpPolynomial, seed: int = 0) -> bool:
    """Irreducibility over GF(p) for a polynomial of degree >= 1."""
    if f.degree < 1:
        return False
    factors = fp_factor(f, seed)
    return len(factors) == 1 and factors[0][1] == 1


def fp_factor_degrees(f: FpPolynomial) -> list[int]:
    """Degrees of the irreducible factors of a squarefree polynomial.

    Stops after the distinct-degree stage, which already pins down the
    degree multiset, so no randomized splitting is involved.
    """
    if f.degree < 1:
        raise ValidationError("polynomial must have degree at least 1")
    out: list[int] = []
    for prod, k in _distinct_degree(fp_monic(f)):
        out.extend([k] * (prod.degree // k))
    return sorted(out)
