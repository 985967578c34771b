"""Minimal polynomials of Gaussian periods.

The period of a conductor-subgroup field is the sum of the m-th roots of
unity over the fixing subgroup H; its conjugates are indexed by the
quotient (Z/m)*/H. The polynomial with those roots has integer
coefficients, computed here by high-precision complex evaluation and
certified rounding (absolute residual at most 0.25 per coefficient).

Two evaluation routes produce the same conjugate values: a direct coset
sum, linear in phi(m), and a route through Gauss sums of the characters
trivial on H, which only touches the prime power parts of the conductor
and therefore handles conductors far too large to sum over directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from . import lattices
from .arith import least_primitive_root, mobius_from_factors
from .config import DEFAULT_CONFIG, Config
from .errors import (CapExceededError, DegeneratePeriodError, PrecisionError,
                     ValidationError)
from .fields import AbelianField, factorize_known
from .intpoly import IntPolynomial
from .zmodstar import UnitGroup, enumerate_subgroup

_DIRECT_PHI_LIMIT = 150_000
_CHARACTER_WORK_LIMIT = 3_000_000
_MAX_RETRIES = 3


@dataclass(frozen=True)
class QuotientStructure:
    """Cyclic presentation of (Z/m)* modulo the fixing subgroup."""

    field: AbelianField
    moduli: tuple[int, ...]  # nontrivial cyclic orders, each dividing the next
    _q: tuple[tuple[int, ...], ...]
    _qinv: tuple[tuple[int, ...], ...]
    _kept: tuple[int, ...]

    @property
    def order(self) -> int:
        out = 1
        for s in self.moduli:
            out *= s
        return out

    def labels(self) -> list[tuple[int, ...]]:
        """All quotient classes in a fixed deterministic order."""
        return list(itertools.product(*[range(s) for s in self.moduli]))

    def project(self, x: int) -> tuple[int, ...]:
        """Class label of a unit residue."""
        group = self.field.group
        v = group.dlog(x)
        out = []
        for pos, i in enumerate(self._kept):
            acc = sum(v[k] * self._q[k][i] for k in range(group.rank))
            out.append(acc % self.moduli[pos])
        return tuple(out)

    def representative(self, label: tuple[int, ...]) -> int:
        """A unit residue projecting onto the given label."""
        group = self.field.group
        r = group.rank
        full = [0] * r
        for pos, i in enumerate(self._kept):
            full[i] = label[pos]
        vec = [sum(full[i] * self._qinv[i][k] for i in range(r))
               for k in range(r)]
        return group.element(vec)


def quotient_structure(field: AbelianField) -> QuotientStructure:
    """Smith-form presentation of the Galois group (Z/m)*/H."""
    group = field.group
    basis = [list(row) for row in field.subgroup.lattice]
    s, _, q, qinv = lattices.snf_with_transforms(basis)
    kept = tuple(i for i in range(group.rank) if s[i][i] > 1)
    moduli = tuple(s[i][i] for i in kept)
    return QuotientStructure(field, moduli,
                             tuple(tuple(r) for r in q),
                             tuple(tuple(r) for r in qinv), kept)


def _e_frac(x: Fraction):
    """e^(2 pi i x) for an exact rational x."""
    x %= 1
    return mp.expjpi(mp.mpf(2 * x.numerator) / x.denominator)


def _period_values_direct(field: AbelianField, qs: QuotientStructure) -> list:
    """Conjugate periods by explicit coset sums (needs phi(m) enumerable)."""
    group = field.group
    m = group.modulus
    sub = field.subgroup
    h_elements = sub.elements
    if h_elements is None:
        h_elements = enumerate_subgroup(group,
                                        [list(r) for r in sub.lattice],
                                        sub.order)
    labels = qs.labels()
    reps = [qs.representative(y) for y in labels]
    pairs = sorted((c * h % m, idx) for idx, c in enumerate(reps)
                   for h in h_elements)
    sums = [mp.mpc(0)] * len(reps)
    gap_powers: dict[int, object] = {}
    cur = None
    cur_k = None
    for k, idx in pairs:
        if cur is None:
            cur = _e_frac(Fraction(k, m))
        elif k != cur_k:
            gap = k - cur_k
            power = gap_powers.get(gap)
            if power is None:
                power = _e_frac(Fraction(gap, m))
                gap_powers[gap] = power
            cur = cur * power
        cur_k = k
        sums[idx] += cur
    return sums


def _character_exponents(qs: QuotientStructure,
                         label: tuple[int, ...]) -> list[Fraction]:
    """Per-component exponents a_j/d_j of the character attached to a label."""
    group = qs.field.group
    out = []
    for j in range(group.rank):
        alpha = Fraction(0)
        for pos, i in enumerate(qs._kept):
            alpha += Fraction(label[pos] * qs._q[j][i], qs.moduli[pos])
        alpha %= 1
        if (alpha * group.component_orders[j]).denominator != 1:
            raise ArithmeticError("character exponent not integral")
        out.append(alpha)
    return out


class _GaussSummer:
    """Gauss sums of characters of (Z/m)* given by component exponents."""

    def __init__(self, group: UnitGroup):
        self.group = group
        self.m_factors = dict(group.prime_power_factors)
        # components grouped by prime
        self.blocks: list[tuple[int, int, list[int]]] = []
        for p, a in group.prime_power_factors:
            idx = [j for j, c in enumerate(group.components) if c.prime == p]
            if idx:
                self.blocks.append((p, a, idx))
        self._tables: dict[int, list] = {}

    def _zeta_table(self, n: int) -> list:
        table = self._tables.get(n)
        if table is None:
            step = _e_frac(Fraction(1, n))
            table = [mp.mpc(1)]
            for _ in range(n - 1):
                table.append(table[-1] * step)
            self._tables[n] = table
        return table

    def _block_conductor(self, p: int, a: int, idx: list[int],
                         alphas: list[Fraction]) -> int:
        if p == 2:
            minus_alpha = alphas[idx[0]]
            five_alpha = alphas[idx[1]] if len(idx) > 1 else Fraction(0)
            if five_alpha:
                return 4 * five_alpha.denominator
            return 4 if minus_alpha else 1
        order = alphas[idx[0]].denominator
        if order == 1:
            return 1
        t = 0
        while order % p == 0:
            order //= p
            t += 1
        return p ** (t + 1)

    def _block_value(self, idx: list[int], alphas: list[Fraction], u: int):
        """Value at an integer u coprime to the block prime."""
        phase = Fraction(0)
        for j in idx:
            if alphas[j]:
                comp = self.group.components[j]
                k = self.group._component_dlog(comp, u % comp.prime_power)
                phase += alphas[j] * k
        return _e_frac(phase)

    def _block_gauss(self, p: int, b: int, idx: list[int],
                     alphas: list[Fraction]):
        """Gauss sum of the primitive restriction, modulo f_P = p**b."""
        fp = p ** b
        table = self._zeta_table(fp)
        if p == 2:
            minus_alpha = alphas[idx[0]]
            five_alpha = alphas[idx[1]] if len(idx) > 1 else Fraction(0)
            if b == 2:
                return table[1] + _e_frac(minus_alpha) * table[3]
            sign = _e_frac(minus_alpha)
            omega = _e_frac(five_alpha)
            total = mp.mpc(0)
            x = 1
            chi = mp.mpc(1)
            for _ in range(fp // 4):
                total += chi * (table[x] + sign * table[fp - x])
                x = x * 5 % fp
                chi = chi * omega
            return total
        g = least_primitive_root(p, b)
        omega = self._block_value(idx, alphas, g)
        total = mp.mpc(0)
        x = 1
        chi = mp.mpc(1)
        for _ in range(fp // p * (p - 1)):
            total += chi * table[x]
            x = x * g % fp
            chi = chi * omega
        return total

    def gauss_sum(self, alphas: list[Fraction]):
        """Gauss sum over (Z/m)* of the character with given exponents."""
        m = self.group.modulus
        locals_: list[tuple[int, int, list[int], int]] = []
        f = 1
        for p, a, idx in self.blocks:
            fp = self._block_conductor(p, a, idx, alphas)
            if fp > 1:
                b = 0
                n = fp
                while n > 1:
                    n //= p
                    b += 1
                locals_.append((p, b, idx, fp))
                f *= fp
        cof = m // f
        mu = mobius_from_factors(factorize_known(cof, self.m_factors))
        if mu == 0:
            return mp.mpc(0)
        result = mp.mpc(mu)
        for p, b, idx, fp in locals_:
            if cof % p == 0:
                return mp.mpc(0)  # induced character vanishes on m/f
            result *= self._block_value(idx, alphas, cof % fp)
            cross = (f // fp) % fp
            result *= self._block_value(idx, alphas, cross)
            result *= self._block_gauss(p, b, idx, alphas)
        return result


def _period_values_character(field: AbelianField,
                             qs: QuotientStructure) -> list:
    """Conjugate periods through the Gauss sums of the quotient characters."""
    labels = qs.labels()
    summer = _GaussSummer(field.group)
    gauss = [summer.gauss_sum(_character_exponents(qs, t)) for t in labels]
    d = field.degree
    out = []
    for y in labels:
        total = mp.mpc(0)
        for t, g_val in zip(labels, gauss):
            phase = Fraction(0)
            for ti, yi, si in zip(t, y, qs.moduli):
                phase -= Fraction(ti * yi, si)
            total += _e_frac(phase) * g_val
        out.append(total / d)
    return out


def _character_workload(group: UnitGroup, degree: int) -> int:
    return degree * sum(p ** a for p, a in group.prime_power_factors)


def _period_values(field: AbelianField, qs: QuotientStructure) -> list:
    group = field.group
    if group.phi <= _DIRECT_PHI_LIMIT:
        return _period_values_direct(field, qs)
    work = _character_workload(group, field.degree)
    if work > _CHARACTER_WORK_LIMIT:
        raise CapExceededError(
            f"period evaluation workload {work} exceeds "
            f"{_CHARACTER_WORK_LIMIT}")
    return _period_values_character(field, qs)


def _round_to_poly(values: list, bits: int) -> IntPolynomial | None:
    """Expand prod(x - value) and round; None when rounding is uncertified."""
    eps = mp.mpf(2) ** -(bits // 3)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if abs(values[i] - values[j]) < eps:
                raise DegeneratePeriodError(
                    "two conjugate periods coincide; the fixing subgroup "
                    "is not primitive for this conductor")
    coeffs = [mp.mpc(1)]
    for value in values:
        nxt = [mp.mpc(0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] += c
            nxt[k] -= c * value
        coeffs = nxt
    rounded = []
    worst = mp.mpf(0)
    for c in coeffs:
        r = int(mp.nint(c.real))
        worst = max(worst, abs(c.real - r), abs(c.imag))
        rounded.append(r)
    if worst > mp.mpf("0.25"):
        return None
    return IntPolynomial(tuple(rounded))


def period_minimal_polynomial(field: AbelianField,
                              config: Config | None = None) -> IntPolynomial:
    """Minimal polynomial over Q of the field's Gaussian period.

    Working precision starts at 64 bits per unit of degree and doubles on
    any uncertified rounding, at most three times.
    """
    cfg = config or DEFAULT_CONFIG
    degree = field.degree
    if degree > cfg.period_degree_cap:
        raise CapExceededError(
            f"degree {degree} exceeds period_degree_cap "
            f"{cfg.period_degree_cap}")
    if field.modulus == 1:
        return IntPolynomial((-1, 1))
    qs = quotient_structure(field)
    if qs.order != degree:
        raise ValidationError("quotient order does not match the degree")
    bits = 64 * degree
    for _ in range(_MAX_RETRIES + 1):
        with mp.workprec(bits):
            values = _period_values(field, qs)
            poly = _round_to_poly(values, bits)
        if poly is not None:
            return poly
        bits *= 2
    raise PrecisionError(
        f"period coefficients failed to round at {bits // 2} bits")
