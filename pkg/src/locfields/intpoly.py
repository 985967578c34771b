"""Exact integer polynomials, resultants and discriminants.

Coefficients are stored low degree first. Resultants go through the
Sylvester matrix with Bareiss fraction-free elimination, so every
intermediate value is an exact integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ValidationError


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial over Z; coefficients[i] multiplies x**i."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def leading_coefficient(self) -> int:
        if self.is_zero:
            raise ValidationError("zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def __call__(self, x: int) -> int:
        out = 0
        for c in reversed(self.coefficients):
            out = out * x + c
        return out

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in
                                   enumerate(self.coefficients) if i))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(tuple(x + y for x, y in
                                   zip(a, b + (0,) * (len(a) - len(b)))))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + IntPolynomial(tuple(-c for c in other.coefficients))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial(())
        a, b = self.coefficients, other.coefficients
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    def scale(self, k: int) -> "IntPolynomial":
        return IntPolynomial(tuple(k * c for c in self.coefficients))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if not c:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}x" if i == 1 else f"{mag}x^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def int_poly(coefficients) -> IntPolynomial:
    return IntPolynomial(tuple(int(c) for c in coefficients))


def monic_divmod(f: IntPolynomial, g: IntPolynomial
                 ) -> tuple[IntPolynomial, IntPolynomial]:
    """Quotient and remainder of f by a monic g."""
    if not g.is_monic:
        raise ValidationError("divisor must be monic")
    rem = list(f.coefficients)
    dg = g.degree
    quo = [0] * max(len(rem) - dg, 0)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if c:
            quo[i - dg] = c
            for j in range(dg + 1):
                rem[i - dg + j] -= c * g.coefficients[j]
    return IntPolynomial(tuple(quo)), IntPolynomial(tuple(rem[:dg]))


def _bareiss_determinant(mat: list[list[int]]) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Resultant of two nonzero polynomials via the Sylvester determinant."""
    if f.is_zero or g.is_zero:
        raise ValidationError("resultant needs nonzero polynomials")
    df, dg = f.degree, g.degree
    if df == 0:
        return f.coefficients[0] ** dg
    if dg == 0:
        return g.coefficients[0] ** df
    n = df + dg
    rows = []
    fc = list(reversed(f.coefficients))
    gc = list(reversed(g.coefficients))
    for i in range(dg):
        rows.append([0] * i + fc + [0] * (n - df - 1 - i))
    for i in range(df):
        rows.append([0] * i + gc + [0] * (n - dg - 1 - i))
    return _bareiss_determinant(rows)


def discriminant(f: IntPolynomial) -> int:
    """Discriminant of a nonzero polynomial of degree >= 1."""
    d = f.degree
    if d < 1:
        raise ValidationError("discriminant needs degree at least 1")
    if d == 1:
        return 1
    res = resultant(f, f.derivative())
    lead = f.leading_coefficient()
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    value, rem = divmod(sign * res, lead)
    if rem:
        raise ArithmeticError("resultant not divisible by leading coefficient")
    return value


def is_eisenstein(f: IntPolynomial, p: int) -> bool:
    """Eisenstein criterion at p: p | a_i for i < deg, p^2 does not divide a_0."""
    if f.is_zero or f.degree < 1:
        raise ValidationError("Eisenstein test needs degree at least 1")
    if not f.is_monic:
        raise ValidationError("Eisenstein test expects a monic polynomial")
    if any(c % p for c in f.coefficients[:-1]):
        return False
    return f.coefficients[0] % (p * p) != 0


def eisenstein_cubic(p: int) -> IntPolynomial:
    """The cubic x^3 - 2px + p, Eisenstein at p."""
    return IntPolynomial((p, -2 * p, 0, 1))


@lru_cache(maxsize=512)
def cyclotomic_polynomial(m: int) -> IntPolynomial:
    """Minimal polynomial of a primitive m-th root of unity."""
    if m < 1:
        raise ValidationError("cyclotomic index must be positive")
    if m == 1:
        return IntPolynomial((-1, 1))
    # x^m - 1 divided by the cyclotomic polynomials of the proper divisors
    num = IntPolynomial((-1,) + (0,) * (m - 1) + (1,))
    for d in range(1, m):
        if m % d == 0:
            num, rem = monic_divmod(num, cyclotomic_polynomial(d))
            if not rem.is_zero:
                raise ArithmeticError("cyclotomic division left a remainder")
    return num
