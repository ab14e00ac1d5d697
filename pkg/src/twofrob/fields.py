"""Finite fields GF(p^n) in a polynomial basis, and the affine 2-Frobenius family

    K = GF(p_1^n_1) x ... x GF(p_k^n_k),   G = K ⋊ (C_d ⋊ C_e)

where C_d acts by multiplication with a fixed element zeta_i of order d in
each component and C_e by the Galois map x -> x^(p_i^(n_i/e)). The complement
element (a, j) acts on v by v -> zeta^a * sigma^j(v), sigma applied first.

Field elements are ints: the coefficient of x^i is the i-th base-p digit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from itertools import product

import numpy as np

from .perm import Permutation
from .primes import is_prime, prime_factors


class InvalidFamily(ValueError):
    pass


def _digits(a: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        a, r = divmod(a, p)
        out.append(r)
    return out


def _from_digits(ds, p: int) -> int:
    return sum(int(c) * p**i for i, c in enumerate(ds))


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num / den over GF(p); den monic, coefficients low to high."""
    num = list(num)
    dd = len(den) - 1
    for shift in range(len(num) - 1 - dd, -1, -1):
        c = num[shift + dd] % p
        if c:
            for i, dc in enumerate(den):
                num[shift + i] = (num[shift + i] - c * dc) % p
    return [c % p for c in num[:dd]] if dd else []


def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..n//2."""
    n = len(modulus) - 1
    for k in range(1, n // 2 + 1):
        for low in range(p**k):
            div = _digits(low, p, k) + [1]
            if not any(_poly_mod(list(modulus), div, p)):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    p: int
    n: int
    modulus: tuple[int, ...]  # monic, low degree first, length n + 1

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise InvalidFamily(f"characteristic {self.p} is not prime")
        if len(self.modulus) != self.n + 1 or self.modulus[-1] != 1:
            raise InvalidFamily("modulus must be monic of degree n")
        if self.n <= 20 and not is_irreducible(self.modulus, self.p):
            raise InvalidFamily(f"modulus {self.modulus} is reducible over GF({self.p})")

    @property
    def order(self) -> int:
        return self.p**self.n

    # -- scalar arithmetic ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p, n = self.p, self.n
        return _from_digits([(x + y) % p for x, y in zip(_digits(a, p, n), _digits(b, p, n))], p)

    def neg(self, a: int) -> int:
        p, n = self.p, self.n
        return _from_digits([(-x) % p for x in _digits(a, p, n)], p)

    def mul(self, a: int, b: int) -> int:
        p, n = self.p, self.n
        if p == 2:
            mod = _from_digits(self.modulus, 2)
            out = 0
            while b:
                if b & 1:
                    out ^= a
                b >>= 1
                a <<= 1
                if a >> n & 1:
                    a ^= mod
            return out
        da, db = _digits(a, p, n), _digits(b, p, n)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return _from_digits(_poly_mod(prod, list(self.modulus), p), p)

    def pow(self, a: int, k: int) -> int:
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        m = self.order - 1
        t = m
        for r in prime_factors(m):
            while t % r == 0 and self.pow(a, t // r) == 1:
                t //= r
        return t

    # -- tables ----------------------------------------------------------------

    @cached_property
    def primitive_element(self) -> int:
        """Least element (in integer order) generating the multiplicative group."""
        m = self.order - 1
        for g in range(1, self.order):
            if all(self.pow(g, m // r) != 1 for r in prime_factors(m)):
                return g
        raise AssertionError("multiplicative group not cyclic")

    @cached_property
    def exp_table(self) -> np.ndarray:
        m = self.order - 1
        g = self.primitive_element
        out = np.empty(m, dtype=np.int64)
        x = 1
        for k in range(m):
            out[k] = x
            x = self.mul(x, g)
        return out

    @cached_property
    def log_table(self) -> np.ndarray:
        """log_table[0] is -1."""
        out = np.full(self.order, -1, dtype=np.int64)
        out[self.exp_table] = np.arange(self.order - 1)
        return out

    def mul_map(self, c: int) -> np.ndarray:
        """x -> c*x over all field elements."""
        if c == 0:
            return np.zeros(self.order, dtype=np.int64)
        log, exp, m = self.log_table, self.exp_table, self.order - 1
        out = exp[(log + log[c]) % m]
        out[0] = 0
        return out

    def power_map(self, k: int) -> np.ndarray:
        """x -> x^k over all field elements, k >= 1."""
        log, exp, m = self.log_table, self.exp_table, self.order - 1
        out = exp[(log * k) % m]
        out[0] = 0
        return out

    def add_map(self, c: int) -> np.ndarray:
        """x -> x + c over all field elements."""
        xs = np.arange(self.order, dtype=np.int64)
        if self.p == 2:
            return xs ^ c
        p = self.p
        out = np.zeros_like(xs)
        weight = 1
        rest_x, rest_c = xs, c
        for _ in range(self.n):
            out += ((rest_x % p + rest_c % p) % p) * weight
            rest_x, rest_c = rest_x // p, rest_c // p
            weight *= p
        return out


def field_add(x: int, y: int, F: FieldSpec) -> int:
    return F.add(x, y)


def field_mul(x: int, y: int, F: FieldSpec) -> int:
    return F.mul(x, y)


def field_pow(x: int, k: int, F: FieldSpec) -> int:
    return F.pow(x, k)


def frobenius(x: int, F: FieldSpec) -> int:
    return F.frobenius(x)


def make_field(p: int, n: int) -> FieldSpec:
    """GF(p^n) modulo the monic irreducible with least integer encoding."""
    if not is_prime(p):
        raise InvalidFamily(f"{p} is not prime")
    if not 1 <= n <= 20:
        raise InvalidFamily(f"degree {n} outside 1..20")
    for low in range(p**n):
        modulus = tuple(_digits(low, p, n)) + (1,)
        if is_irreducible(modulus, p):
            return FieldSpec(p, n, modulus)
    raise AssertionError(f"no irreducible polynomial of degree {n} over GF({p})")


def element_of_order(F: FieldSpec, d: int) -> int:
    m = F.order - 1
    if d < 1 or m % d:
        raise InvalidFamily(f"{d} does not divide {m}")
    return F.pow(F.primitive_element, m // d)


@dataclass(frozen=True)
class AffineComponent:
    field: FieldSpec
    zeta: int
    sigma_exponent: int

    @property
    def galois_power(self) -> int:
        """sigma(x) = x ** galois_power."""
        return self.field.p**self.sigma_exponent


@dataclass(frozen=True)
class AffineGroupSpec:
    components: tuple[AffineComponent, ...]
    d: int
    e: int

    @property
    def K_order(self) -> int:
        return math.prod(c.field.order for c in self.components)

    @property
    def group_order(self) -> int:
        return self.K_order * self.d * self.e

    @property
    def characteristics(self) -> list[int]:
        return sorted({c.field.p for c in self.components})

    @property
    def twist(self) -> int:
        """r with sigma zeta sigma^-1 = zeta^r (common to all components)."""
        return self.components[0].galois_power % self.d

    def complement_mul(self, x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        """Complement product: apply x, then y."""
        (a, j), (b, k) = x, y
        return ((b + a * pow(self.twist, k, self.d)) % self.d, (j + k) % self.e)

    def describe(self) -> str:
        parts = " x ".join(f"GF({c.field.p}^{c.field.n})" for c in self.components)
        return f"{parts} ⋊ (C{self.d} ⋊ C{self.e})"


def build_affine_spec(fields: list[tuple[int, int]], d: int, e: int) -> AffineGroupSpec:
    if not fields:
        raise InvalidFamily("at least one field component required")
    if d <= 1:
        raise InvalidFamily("d must exceed 1")
    if e <= 1:
        raise InvalidFamily("e must exceed 1")
    comps = []
    for p, n in fields:
        F = make_field(p, n)
        if (F.order - 1) % d:
            raise InvalidFamily(f"d={d} does not divide {p}^{n} - 1")
        if n % e:
            raise InvalidFamily(f"e={e} does not divide n={n} for GF({p}^{n})")
        s = n // e
        for j in range(1, e):
            if math.gcd(p ** (j * s) - 1, d) != 1:
                raise InvalidFamily(
                    f"fixed-point-free twist fails for GF({p}^{n}): gcd({p}^{j * s} - 1, {d}) != 1"
                )
        comps.append(AffineComponent(F, element_of_order(F, d), s))
    twists = {c.galois_power % d for c in comps}
    if len(twists) > 1:
        raise InvalidFamily(f"Galois maps twist zeta inconsistently across components: {sorted(twists)}")
    return AffineGroupSpec(tuple(comps), d, e)


# -- permutation realization ---------------------------------------------------


def _strides(spec: AffineGroupSpec) -> list[int]:
    out, s = [], 1
    for c in spec.components:
        out.append(s)
        s *= c.field.order
    return out


def point_digits(spec: AffineGroupSpec) -> list[np.ndarray]:
    """Per-component coordinates of every point of K (point index order)."""
    idx = np.arange(spec.K_order, dtype=np.int64)
    return [(idx // s) % c.field.order for c, s in zip(spec.components, _strides(spec))]


def _diagonal(spec: AffineGroupSpec, maps: list[np.ndarray]) -> Permutation:
    digits = point_digits(spec)
    image = sum(m[v] * s for m, v, s in zip(maps, digits, _strides(spec)))
    return Permutation(tuple(image.tolist()))


def to_permutation_group(spec: AffineGroupSpec, degree_cap: int = 1 << 16) -> list[Permutation]:
    """Generators of G acting on the points of K (degree |K|)."""
    from .group import CapExceeded

    if spec.K_order > degree_cap:
        raise CapExceeded(degree_cap, "points")
    ident = [np.arange(c.field.order, dtype=np.int64) for c in spec.components]
    gens = []
    for i, c in enumerate(spec.components):
        for k in range(c.field.n):
            maps = list(ident)
            maps[i] = c.field.add_map(c.field.p**k)
            gens.append(_diagonal(spec, maps))
    gens.append(_diagonal(spec, [c.field.mul_map(c.zeta) for c in spec.components]))
    gens.append(_diagonal(spec, [c.field.power_map(c.galois_power) for c in spec.components]))
    return gens


# -- structured counts -----------------------------------------------------------


class StructuredPreconditionError(ValueError):
    pass


def _structured_char(spec: AffineGroupSpec) -> int:
    chars = spec.characteristics
    if len(chars) != 1:
        raise StructuredPreconditionError("components have different characteristics")
    p = chars[0]
    if (spec.d * spec.e) % p == 0:
        raise StructuredPreconditionError(f"p={p} divides d*e={spec.d * spec.e}")
    return p


def _component_action(c: AffineComponent, a: int, j: int) -> np.ndarray:
    F = c.field
    sigma_j = F.power_map(pow(c.galois_power, j, F.order - 1)) if j else np.arange(F.order)
    return F.mul_map(F.pow(c.zeta, a))[sigma_j]


def stabilizer_sizes(spec: AffineGroupSpec) -> np.ndarray:
    """|Stab(v)| in C_d ⋊ C_e for every point v of K."""
    digits = point_digits(spec)
    sizes = np.zeros(spec.K_order, dtype=np.int64)
    for a in range(spec.d):
        for j in range(spec.e):
            fixed = np.ones(spec.K_order, dtype=bool)
            for c, v in zip(spec.components, digits):
                act = _component_action(c, a, j)
                fixed &= (act == np.arange(c.field.order))[v]
            sizes += fixed
    return sizes


def stabilizer(spec: AffineGroupSpec, v: int) -> list[tuple[int, int]]:
    digits = [int(x[v]) for x in point_digits(spec)]
    out = []
    for a in range(spec.d):
        for j in range(spec.e):
            if all(_component_action(c, a, j)[x] == x for c, x in zip(spec.components, digits)):
                out.append((a, j))
    return out


def structured_m_p_star(spec: AffineGroupSpec) -> int:
    """Order-p subgroups of K whose complement stabilizer is trivial."""
    p = _structured_char(spec)
    sizes = stabilizer_sizes(spec)[1:]
    free = int((sizes == 1).sum())
    if free % (p - 1):
        raise AssertionError("free vectors do not split into order-p subgroups")
    return free // (p - 1)


def structured_fixed_involution_breakdown(spec: AffineGroupSpec) -> dict[int, int]:
    """Count of nonzero v of K by stabilizer order.

    Stabilizers meet C_d trivially, so each is cyclic of order dividing e and
    stabilizer order t > 1 means "fixed by an element of order t, by nothing
    larger". For p = 2 the nonzero vectors are exactly the involutions of G.
    """
    _structured_char(spec)
    sizes = stabilizer_sizes(spec)[1:]
    values, counts = np.unique(sizes, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


@dataclass
class StructuredCounts:
    K_order: int
    H_order: int
    index_G_L: int
    group_order: int
    case_label: str
    p: int | None = None
    m_p_star: int | None = None
    delta_component_count: int | None = None
    notes: list[str] = field(default_factory=list)


def case_label_for(K_order: int, index_G_L: int) -> tuple[str, int | None]:
    ps = prime_factors(K_order)
    if len(ps) >= 2:
        return "A", None
    (p,) = ps
    rest = index_G_L
    while rest % p == 0:
        rest //= p
    return ("B" if rest == 1 else "C"), p


def structured_counts(spec: AffineGroupSpec) -> StructuredCounts:
    label, p = case_label_for(spec.K_order, spec.e)
    out = StructuredCounts(spec.K_order, spec.d, spec.e, spec.group_order, label, p)
    if label == "A":
        out.delta_component_count = spec.K_order + 1
    elif label == "C":
        try:
            out.m_p_star = structured_m_p_star(spec)
            out.delta_component_count = spec.K_order + spec.d + out.m_p_star
        except StructuredPreconditionError as exc:
            out.notes.append(f"structured m_p* unavailable: {exc}")
    else:
        out.notes.append("case B needs m_p(G) from enumeration")
    return out
