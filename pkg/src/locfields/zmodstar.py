"""Structure of the unit groups (Z/m)* and exact subgroup arithmetic.

(Z/m)* is split by CRT into cyclic components: one per odd prime power,
generated by the least primitive root, plus the classes of -1 and 5 for a
2-part 2**a with a >= 3 (a single order-2 component for a == 2). A
subgroup is stored as the lattice of exponent vectors of its generators
(always containing order_i * e_i), so order, membership, join, preimage
and quotients reduce to exact integer linear algebra and never require
enumerating residues. Element sets are materialized only for small
subgroups.
"""

from __future__ import annotations

import math
from functools import lru_cache

from . import lattices
from .arith import (crt_pair, euler_phi_from_factors, factorize, is_prime,
                    least_primitive_root)
from .config import DEFAULT_CONFIG, Config
from .errors import CapExceededError, ValidationError


class CyclicComponent:
    """One CRT factor of (Z/m)*: a cyclic group with a fixed generator."""

    __slots__ = ("prime", "exponent", "prime_power", "generator", "order",
                 "embedded_generator", "order_factors")

    def __init__(self, prime: int, exponent: int, generator: int, order: int,
                 embedded_generator: int, order_factors: dict[int, int]):
        self.prime = prime
        self.exponent = exponent
        self.prime_power = prime ** exponent
        self.generator = generator
        self.order = order
        self.embedded_generator = embedded_generator
        self.order_factors = order_factors

    def __repr__(self) -> str:
        return (f"CyclicComponent(mod {self.prime_power}, "
                f"gen {self.generator}, order {self.order})")


class UnitGroup:
    """(Z/m)* with a fixed CRT decomposition into cyclic components."""

    def __init__(self, modulus: int, factors: dict[int, int]):
        self.modulus = modulus
        self.prime_power_factors = tuple(sorted(factors.items()))
        self.components: tuple[CyclicComponent, ...] = \
            _build_components(modulus, self.prime_power_factors)
        self.component_orders = tuple(c.order for c in self.components)
        self.component_generators = tuple(c.generator for c in self.components)
        self.phi = euler_phi_from_factors(factors)
        self.rank = len(self.components)
        self._bsgs_tables: dict = {}
        self._phi_factors: dict[int, int] | None = None

    def __repr__(self) -> str:
        return f"UnitGroup({self.modulus})"

    def __eq__(self, other) -> bool:
        return isinstance(other, UnitGroup) and other.modulus == self.modulus

    def __hash__(self) -> int:
        return hash(("UnitGroup", self.modulus))

    @property
    def phi_factors(self) -> dict[int, int]:
        """Prime factorization of phi(m)."""
        if self._phi_factors is None:
            out: dict[int, int] = {}
            for comp in self.components:
                for r, e in comp.order_factors.items():
                    out[r] = out.get(r, 0) + e
            self._phi_factors = dict(sorted(out.items()))
        return self._phi_factors

    def trivial_lattice(self) -> list[list[int]]:
        """Exponent lattice of the subgroup {1}."""
        return [[self.component_orders[i] if j == i else 0
                 for j in range(self.rank)] for i in range(self.rank)]

    def dlog(self, x: int) -> list[int]:
        """Exponent vector of x on the component generators."""
        x %= self.modulus
        if math.gcd(x, self.modulus) != 1:
            raise ValidationError(
                f"{x} is not a unit modulo {self.modulus}")
        return [self._component_dlog(comp, x % comp.prime_power)
                for comp in self.components]

    def element(self, vec) -> int:
        """Residue with the given exponent vector."""
        out = 1 % self.modulus
        for comp, e in zip(self.components, vec):
            e %= comp.order
            if e:
                out = out * pow(comp.embedded_generator, e, self.modulus) \
                    % self.modulus
        return out

    def elements(self):
        """All units, as an unsorted list (small moduli only)."""
        out = [1 % self.modulus]
        for comp in self.components:
            block = [1]
            for _ in range(comp.order - 1):
                block.append(block[-1] * comp.embedded_generator
                             % self.modulus)
            out = [a * b % self.modulus for a in out for b in block]
        return out

    def reduction_matrix(self, small: "UnitGroup") -> list[list[int]]:
        """Matrix of the reduction map onto (Z/m')* in exponent coordinates.

        Row j is the exponent vector, in `small`, of the j-th component
        generator reduced modulo small.modulus. Requires m' | m.
        """
        if small.modulus == 0 or self.modulus % small.modulus:
            raise ValidationError("reduction target must divide the modulus")
        return [small.dlog(comp.embedded_generator % small.modulus)
                for comp in self.components]

    # -- discrete logarithms ------------------------------------------------

    def _component_dlog(self, comp: CyclicComponent, x: int) -> int:
        if comp.prime == 2:
            return self._two_part_dlog(comp, x)
        return self._cyclic_dlog(comp.generator, x, comp.order,
                                 comp.prime_power, comp.order_factors)
    def _two_part_dlog(self, comp: CyclicComponent, x: int) -> int:
        pp = comp.prime_power
        if comp.generator == pp - 1:
            return 0 if x % 4 == 1 or pp == 4 and x == 1 else 1
        if x % 4 == 3:
            x = pp - x
        return self._cyclic_dlog(5, x, comp.order, pp, comp.order_factors)

    def _cyclic_dlog(self, g: int, h: int, n: int, mod: int,
                     n_factors: dict[int, int]) -> int:
        residues = []
        moduli = []
        for r, e in n_factors.items():
            re = r ** e
            g_r = pow(g, n // re, mod)
            h_r = pow(h, n // re, mod)
            residues.append(self._prime_power_dlog(g_r, h_r, r, e, mod))
            moduli.append(re)
        x, mm = 0, 1
        for res, mo in zip(residues, moduli):
            x = crt_pair(x, mm, res, mo)
            mm *= mo
        return x

    def _prime_power_dlog(self, g: int, h: int, r: int, e: int,
                          mod: int) -> int:
        gamma = pow(g, r ** (e - 1), mod)
        order = r ** e
        x = 0
        for k in range(e):
            hk = h * pow(g, (order - x) % order, mod) % mod
            hk = pow(hk, r ** (e - 1 - k), mod)
            x += self._bsgs(gamma, hk, r, mod) * r ** k
        return x

    def _bsgs(self, g: int, h: int, r: int, mod: int) -> int:
        key = (g, mod)
        entry = self._bsgs_tables.get(key)
        if entry is None:
            mm = math.isqrt(r - 1) + 1
            table = {}
            e = 1 % mod
            for j in range(mm):
                if e not in table:
                    table[e] = j
                e = e * g % mod
            entry = (mm, table, pow(e, -1, mod) if mm else 1)
            self._bsgs_tables[key] = entry
        mm, table, giant = entry
        y = h
        for i in range(mm):
            j = table.get(y)
            if j is not None:
                return i * mm + j
            y = y * giant % mod
        raise ArithmeticError("element outside the cyclic subgroup")


def _build_components(modulus: int, factors) -> tuple[CyclicComponent, ...]:
    comps: list[CyclicComponent] = []
    for p, a in factors:
        pp = p ** a
        rest = modulus // pp
        if p == 2:
            if a == 1:
                continue
            minus_one = crt_pair(pp - 1, pp, 1, rest) if rest > 1 else pp - 1
            comps.append(CyclicComponent(2, a, pp - 1, 2, minus_one, {2: 1}))
            if a >= 3:
                order = pp // 4
                five = crt_pair(5 % pp, pp, 1, rest) if rest > 1 else 5 % pp
                comps.append(CyclicComponent(2, a, 5 % pp, order, five,
                                             {2: a - 2}))
        else:
            g = least_primitive_root(p, a)
            order = pp // p * (p - 1)
            emb = crt_pair(g, pp, 1, rest) if rest > 1 else g
            order_factors = dict(factorize(p - 1))
            if a > 1:
                order_factors[p] = a - 1
            comps.append(CyclicComponent(p, a, g, order, emb,
                                         dict(sorted(order_factors.items()))))
    return tuple(comps)


_UNIT_GROUP_CACHE: dict[int, UnitGroup] = {}


def unit_group(m: int, config: Config | None = None) -> UnitGroup:
    """The unit group (Z/m)* with its cyclic decomposition.

    The modulus cap applies here because m must be factored from scratch;
    internal constructions with already-known factorizations go through
    unit_group_from_factors.
    """
    cfg = config or DEFAULT_CONFIG
    if m < 1:
        raise ValidationError("modulus must be a positive integer")
    if m > cfg.modulus_cap:
        raise CapExceededError(
            f"modulus {m} exceeds modulus_cap {cfg.modulus_cap}")
    return unit_group_from_factors(m, None)


def unit_group_from_factors(m: int,
                            factors: dict[int, int] | None) -> UnitGroup:
    """Unit group for a modulus whose factorization is already known."""
    cached = _UNIT_GROUP_CACHE.get(m)
    if cached is not None:
        return cached
    if factors is None:
        factors = factorize(m)
    group = UnitGroup(m, factors)
    _UNIT_GROUP_CACHE[m] = group
    return group


class Subgroup:
    """Subgroup of a UnitGroup, held as an exponent-vector lattice."""

    __slots__ = ("parent", "generators", "lattice", "order", "elements")

    def __init__(self, parent: UnitGroup, generators: tuple[int, ...],
                 lattice: tuple[tuple[int, ...], ...], order: int,
                 elements: frozenset[int] | None):
        self.parent = parent
        self.generators = generators
        self.lattice = lattice
        self.order = order
        self.elements = elements

    def __repr__(self) -> str:
        return (f"Subgroup(mod {self.parent.modulus}, order {self.order}, "
                f"generators {list(self.generators)})")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subgroup) and other.parent == self.parent
                and other.lattice == self.lattice)

    def __hash__(self) -> int:
        return hash((self.parent.modulus, self.lattice))

    @property
    def index(self) -> int:
        return self.parent.phi // self.order

    def contains(self, x: int) -> bool:
        """Membership test; non-units are simply not members."""
        m = self.parent.modulus
        x %= m
        if math.gcd(x, m) != 1:
            return False
        if self.elements is not None:
            return x in self.elements
        return lattices.in_lattice([list(r) for r in self.lattice],
                                   self.parent.dlog(x))


def _derived_generators(parent: UnitGroup, basis) -> tuple[int, ...]:
    gens = {parent.element(row) for row in basis}
    gens.discard(1 % parent.modulus)
    return tuple(sorted(gens))


def subgroup_from_lattice(parent: UnitGroup, rows,
                          config: Config | None = None,
                          generators: tuple[int, ...] | None = None
                          ) -> Subgroup:
    """Build a Subgroup from exponent-lattice generators (rows)."""
    cfg = config or DEFAULT_CONFIG
    basis = lattices.hnf([list(r) for r in rows] + parent.trivial_lattice(),
                         parent.rank)
    det = lattices.det_from_hnf(basis)
    order = parent.phi // det
    if generators is None:
        generators = _derived_generators(parent, basis)
    elements = None
    if order <= cfg.subgroup_enumeration_cap:
        elements = frozenset(enumerate_subgroup(parent, basis, order))
    return Subgroup(parent, generators, tuple(tuple(r) for r in basis),
                    order, elements)


def subgroup_closure(parent: UnitGroup, generators,
                     config: Config | None = None) -> Subgroup:
    """Smallest subgroup containing the given unit residues."""
    m = parent.modulus
    gens = []
    for g in generators:
        g = int(g) % m
        if math.gcd(g, m) != 1:
            raise ValidationError(f"generator {g} is not coprime to {m}")
        gens.append(g)
    rows = [parent.dlog(g) for g in gens]
    return subgroup_from_lattice(parent, rows, config,
                                 generators=tuple(sorted(set(gens))))


def cyclic_decomposition(parent: UnitGroup,
                         basis) -> list[tuple[int, int]]:
    """Direct-sum decomposition of a subgroup: (residue, order) pairs.

    The subgroup is the internal direct product of the cyclic groups
    generated by the returned residues.
    """
    r = parent.rank
    if r == 0:
        return []
    b = [list(row) for row in basis]
    relation = [lattices.solve_triangular(
        b, [parent.component_orders[i] if j == i else 0 for j in range(r)])
        for i in range(r)]
    s, _, _, qinv = lattices.snf_with_transforms(relation)
    out = []
    for j in range(r):
        t = s[j][j]
        if t <= 1:
            continue
        vec = [sum(qinv[j][i] * b[i][k] for i in range(r)) for k in range(r)]
        out.append((parent.element(vec), t))
    return out


def enumerate_subgroup(parent: UnitGroup, basis, order: int) -> list[int]:
    """All residues of the subgroup with the given lattice basis."""
    m = parent.modulus
    gens = cyclic_decomposition(parent, basis)
    total = 1
    for _, t in gens:
        total *= t
    if total != order:
        raise ArithmeticError("cyclic decomposition does not match order")
    if m <= 3_037_000_499 and order > 64:
        from . import _kernels
        import numpy as np

        elems = np.array([1 % m], dtype=np.int64)
        for g, t in gens:
            elems = _kernels.mod_outer(elems, _kernels.pow_block(g, t, m), m)
        return elems.tolist()
    out = [1 % m]
    for g, t in gens:
        block = [1 % m]
        for _ in range(t - 1):
            block.append(block[-1] * g % m)
        out = [a * b % m for a in out for b in block]
    return out


def membership(subgroup: Subgroup, x: int) -> bool:
    return subgroup.contains(x)


def subgroup_join(a: Subgroup, b: Subgroup,
                  config: Config | None = None) -> Subgroup:
    """Smallest subgroup containing both inputs."""
    if a.parent != b.parent:
        raise ValidationError("subgroup join requires a common parent group")
    rows = [list(r) for r in a.lattice] + [list(r) for r in b.lattice]
    gens = tuple(sorted(set(a.generators) | set(b.generators)))
    return subgroup_from_lattice(a.parent, rows, config, generators=gens)


def projection_preimage(big: UnitGroup, small_subgroup: Subgroup,
                        config: Config | None = None) -> Subgroup:
    """Preimage of a subgroup under reduction (Z/M)* -> (Z/m)*, m | M."""
    phi_map = big.reduction_matrix(small_subgroup.parent)
    rows = lattices.preimage(phi_map,
                             [list(r) for r in small_subgroup.lattice],
                             big.rank)
    return subgroup_from_lattice(big, rows, config)


def element_order(parent: UnitGroup, x: int) -> int:
    """Multiplicative order of a unit, via the factorization of phi(m)."""
    m = parent.modulus
    x %= m
    if math.gcd(x, m) != 1:
        raise ValidationError(f"{x} is not a unit modulo {m}")
    order = parent.phi
    for r in parent.phi_factors:
        while order % r == 0 and pow(x, order // r, m) == 1 % m:
            order //= r
    return order


def discrete_log_mod_q(parent: UnitGroup, x: int, q: int) -> int:
    """Discrete log of x modulo a prime q, for a prime modulus ell.

    The base is the least primitive root mod ell; only the residue of the
    log modulo q is computed (via the order-q quotient), so this stays fast
    for large ell.
    """
    if len(parent.prime_power_factors) != 1 \
            or parent.prime_power_factors[0][1] != 1:
        raise ValidationError("modulus must be prime")
    ell = parent.modulus
    if not is_prime(q):
        raise ValidationError(f"{q} is not prime")
    if (ell - 1) % q:
        raise ValidationError(f"{q} does not divide {ell - 1}")
    x %= ell
    if x == 0:
        raise ValidationError("x must be a unit")
    g = parent.components[0].generator
    h = pow(x, (ell - 1) // q, ell)
    zeta = pow(g, (ell - 1) // q, ell)
    return parent._bsgs(zeta, h, q, ell)
