"""Exact integer arithmetic: primality, factorization, primitive roots, CRT."""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import SearchExhaustedError, ValidationError

# Witness set proving primality for every n < 3.3 * 10**24, far past any
# modulus this package handles.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

TRIAL_DIVISION_BOUND = 10_000


@lru_cache(maxsize=None)
def _trial_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * (TRIAL_DIVISION_BOUND + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(TRIAL_DIVISION_BOUND ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i:: i] = b"\x00" * len(sieve[i * i:: i])
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = ((d & -d).bit_length()) - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Find a nontrivial factor of an odd composite n (Brent's variant).

    The polynomial constant increases deterministically, so results do not
    depend on any global random state.
    """
    for c in range(1, 100):
        y = 2
        r = q = 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r <<= 1
        if g == n:
            g = 1
            y = ys
            while g == 1:
                y = (y * y + c) % n
                g = math.gcd(abs(x - y), n)
        if g != n:
            return g
    raise ArithmeticError(f"failed to split {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {p: exponent}; trial division, then Pollard rho."""
    if n < 1:
        raise ValidationError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for p in _trial_primes():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(out.items()))


def is_squarefree(n: int) -> bool:
    """True when no prime square divides n."""
    if n < 1:
        raise ValidationError("is_squarefree expects a positive integer")
    return all(e == 1 for e in factorize(n).values())


def euler_phi_from_factors(factors: dict[int, int]) -> int:
    phi = 1
    for p, a in factors.items():
        phi *= p ** (a - 1) * (p - 1)
    return phi


def mobius_from_factors(factors: dict[int, int]) -> int:
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


@lru_cache(maxsize=4096)
def least_primitive_root(p: int, a: int) -> int:
    """Least primitive root modulo p**a for an odd prime p."""
    if p == 2:
        raise ValidationError("the 2-part is generated by -1 and 5, not a root")
    pp = p ** a
    order = pp // p * (p - 1)
    exponents = [order // r for r in factorize(order)]
    g = 2
    while True:
        if g % p and all(pow(g, e, pp) != 1 for e in exponents):
            return g
        g += 1


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    """Residue mod m1*m2 matching r1 mod m1 and r2 mod m2 (coprime moduli)."""
    g, u, _ = _xgcd(m1, m2)
    if g != 1:
        raise ValidationError("crt moduli must be coprime")
    return (r1 + (r2 - r1) * u % m2 * m1) % (m1 * m2)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def primes_in_progression(residue: int, modulus: int, *, bound: int,
                          skip=(), count: int | None = None):
    """Yield primes == residue (mod modulus) in increasing order up to bound.

    Raises SearchExhaustedError if `count` primes were requested but fewer
    exist below the bound.
    """
    found = 0
    n = residue if residue > 1 else residue + modulus
    while n <= bound:
        if n not in skip and is_prime(n):
            yield n
            found += 1
            if count is not None and found == count:
                return
        n += modulus
    if count is not None and found < count:
        raise SearchExhaustedError(
            f"needed {count} primes == {residue} (mod {modulus}) below "
            f"{bound}, found {found}")
