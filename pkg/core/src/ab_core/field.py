"""Exact Galois fields with a canonical, reproducible construction.

A field GF(p^m) is always built on the least monic irreducible polynomial of
degree m (ordered by integer code, coefficient c_i weighted by p^i), and its
canonical generator is the least-coded element of full multiplicative order.
Element codes follow the same convention, so the integer representation used
by ``galois`` is exactly the serialized code.
"""

from __future__ import annotations

import dataclasses
import functools
import math
from typing import Literal

import galois
import numpy as np
from loguru import logger

from ab_core.context import get_field_size_cap
from ab_core.errors import (
    DivisionByZero,
    FieldMismatch,
    NonPrimeCharacteristic,
    OrderUnavailable,
    SemisimplicityViolation,
    SizeCapExceeded,
)
from ab_core.orbits import multiplicative_order

FieldElement = galois.FieldArray

ArithOp = Literal["add", "sub", "mul", "div", "neg", "inv", "pow"]


@dataclasses.dataclass(frozen=True)
class Field:
    """The canonical GF(p^m)."""

    p: int
    m: int
    modulus: tuple[int, ...]
    gf: type[galois.FieldArray] = dataclasses.field(compare=False, repr=False)

    @property
    def order(self) -> int:
        return self.p**self.m

    @property
    def name(self) -> str:
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __call__(self, codes) -> FieldElement:
        """Elements (scalar or array) from integer codes."""
        return self.gf(np.asarray(codes, dtype=np.int64) if not np.isscalar(codes) else int(codes))

    def zeros(self, shape) -> FieldElement:
        return self.gf.Zeros(shape)

    def elements(self) -> FieldElement:
        return self.gf.elements

    def record(self) -> str:
        coeffs = ",".join(str(c) for c in self.modulus)
        return f"p={self.p} m={self.m} modulus=[{coeffs}]"


def codes_of(x: FieldElement) -> np.ndarray:
    """Integer codes of a field array, as a plain int64 ndarray."""
    return np.asarray(x.view(np.ndarray), dtype=np.int64)


def coefficients_of(x: FieldElement, field: Field) -> tuple[int, ...]:
    """Coefficient vector (c_0, ..., c_{m-1}) of a scalar element, ascending."""
    code = int(x)
    coeffs = []
    for _ in range(field.m):
        code, c = divmod(code, field.p)
        coeffs.append(c)
    return tuple(coeffs)


def _poly_from_code(code: int, p: int) -> galois.Poly:
    return galois.Poly.Int(code, field=galois.GF(p))


def canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    """Least monic irreducible polynomial of degree m over GF(p), ascending coefficients."""
    if m == 1:
        return (0, 1)
    for code in range(p**m, 2 * p**m):
        poly = _poly_from_code(code, p)
        if poly.is_irreducible():
            return tuple(int(c) for c in poly.coeffs[::-1])
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


def is_irreducible_by_trial_division(modulus: tuple[int, ...], p: int) -> bool:
    """Check irreducibility by dividing by every monic polynomial of degree 1..m//2."""
    gf_p = galois.GF(p)
    poly = galois.Poly(list(modulus[::-1]), field=gf_p)
    m = poly.degree
    for degree in range(1, m // 2 + 1):
        for code in range(p**degree, 2 * p**degree):
            divisor = galois.Poly.Int(code, field=gf_p)
            if poly % divisor == 0:
                return False
    return True


def make_field(p: int, m: int) -> Field:
    """Construct the canonical GF(p^m).

    Raises:
        NonPrimeCharacteristic: p is not prime
        SizeCapExceeded: p^m exceeds the configured field size cap
    """
    if p < 2 or not galois.is_prime(p):
        raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
    if m < 1:
        raise NonPrimeCharacteristic(f"extension degree {m} must be positive")
    _check_field_size(p, m)
    return _make_field(p, m)


def _check_field_size(p: int, m: int) -> None:
    order = p**m
    cap = get_field_size_cap()
    if order > cap:
        raise SizeCapExceeded(f"GF({p}^{m}) has order {order} > cap {cap}", order=order, cap=cap)


@functools.lru_cache(maxsize=None)
def _make_field(p: int, m: int) -> Field:
    order = p**m
    modulus = canonical_modulus(p, m)
    if m == 1:
        gf = galois.GF(p)
    else:
        poly = galois.Poly(list(modulus[::-1]), field=galois.GF(p))
        gf = galois.GF(order, irreducible_poly=poly)
    logger.debug(f"Constructed GF({p}^{m}) with modulus {modulus}")
    return Field(p=p, m=m, modulus=modulus, gf=gf)


def field_of_order(q: int) -> Field:
    """The canonical field with q elements (q a prime power)."""
    if q < 2 or not galois.is_prime_power(q):
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    primes, exponents = galois.factors(q)
    return make_field(primes[0], exponents[0])


def arith(a: FieldElement, b: FieldElement | int | None, op: ArithOp) -> FieldElement:
    """Apply one field operation; ``b`` is the exponent for ``pow`` and unused for ``neg``/``inv``.

    Raises:
        FieldMismatch: a and b live in different fields
        DivisionByZero: inverse or division by zero
    """
    if op in ("neg", "inv"):
        if op == "neg":
            return -a
        if int(a) == 0:
            raise DivisionByZero("zero has no inverse")
        return a**-1
    if op == "pow":
        k = int(b)
        if int(a) == 0:
            if k < 0:
                raise DivisionByZero("zero cannot be raised to a negative power")
            return type(a)(1) if k == 0 else type(a)(0)
        return a ** (k % (type(a).order - 1))
    if type(a) is not type(b):
        raise FieldMismatch(f"operands from {type(a).name} and {type(b).name}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if int(b) == 0:
            raise DivisionByZero("division by zero")
        return a / b
    raise ValueError(f"unknown field operation '{op}'")


@functools.lru_cache(maxsize=None)
def _canonical_generator_code(field: Field) -> int:
    n = field.order - 1
    if n == 1:
        return 1
    primes = galois.factors(n)[0]
    for code in range(1, field.order):
        x = field.gf(code)
        if all(x ** (n // f) != 1 for f in primes):
            return code
    raise AssertionError(f"{field.name} has no generator")


def canonical_generator(field: Field) -> FieldElement:
    """The nonzero element of least code whose multiplicative order is p^m - 1."""
    return field.gf(_canonical_generator_code(field))


def root_of_unity(field: Field, r: int) -> FieldElement:
    """The canonical primitive r-th root of unity: xi^((|L|-1)/r) for the canonical generator xi.

    Raises:
        OrderUnavailable: r does not divide |L| - 1
    """
    if r < 1 or (field.order - 1) % r != 0:
        raise OrderUnavailable(f"{field.name} has no element of order {r}")
    return canonical_generator(field) ** ((field.order - 1) // r)


@dataclasses.dataclass(frozen=True)
class Embedding:
    """The canonical ring embedding GF(q) -> L.

    The generator X of GF(q) = GF(p)[X]/(modulus) is sent to the least-coded
    root of the modulus in L; ``table[c]`` is the image code of element code c.
    """

    source: Field
    target: Field
    table: np.ndarray = dataclasses.field(compare=False, repr=False)

    def __call__(self, x: FieldElement) -> FieldElement:
        if type(x) is not self.source.gf:
            raise FieldMismatch(f"cannot embed an element of {type(x).name} from {self.source.name}")
        return self.target(self.table[codes_of(x)])

    @functools.cached_property
    def _inverse(self) -> dict[int, int]:
        return {int(image): code for code, image in enumerate(self.table)}

    def in_image(self, y: FieldElement) -> np.ndarray:
        """Boolean mask of entries lying in the embedded subfield (y^q = y)."""
        return np.asarray(y**self.source.order == y)

    def preimage(self, y: FieldElement) -> FieldElement:
        """Pull elements of the embedded subfield back to the source field.

        Raises:
            FieldMismatch: some entry is not fixed by the q-Frobenius
        """
        if type(y) is not self.target.gf:
            raise FieldMismatch(f"expected elements of {self.target.name}")
        if not np.all(self.in_image(y)):
            raise FieldMismatch(f"element outside the subfield {self.source.name} of {self.target.name}")
        inverse = self._inverse
        codes = codes_of(y)
        flat = np.fromiter((inverse[int(c)] for c in codes.ravel()), dtype=np.int64, count=codes.size)
        return self.source(flat.reshape(codes.shape))


def _embedding_table(source: Field, target: Field) -> np.ndarray:
    if source == target or source.m == 1:
        return np.arange(source.order, dtype=np.int64)
    q = source.order
    step = (target.order - 1) // (q - 1)
    subfield_units = canonical_generator(target) ** step
    candidates = subfield_units ** np.arange(q - 1)
    value = target.zeros(candidates.shape)
    for c in reversed(source.modulus):
        value = value * candidates + target.gf(c)
    roots = codes_of(candidates)[np.asarray(value == 0)]
    theta = target.gf(int(roots.min()))

    digits = np.zeros((q, source.m), dtype=np.int64)
    remaining = np.arange(q, dtype=np.int64)
    for i in range(source.m):
        remaining, digits[:, i] = np.divmod(remaining, source.p)
    image = target.zeros(q)
    for i in range(source.m):
        image = image + target(digits[:, i]) * theta**i
    return codes_of(image)


def splitting_field(q_field: Field, r1: int, r2: int) -> tuple[Field, Embedding]:
    """The smallest extension L = GF(q^t) holding primitive r1-th and r2-th roots of unity.

    Raises:
        SemisimplicityViolation: gcd(q, r1*r2) != 1
        SizeCapExceeded: |L| exceeds the field size cap
    """
    q = q_field.order
    if math.gcd(q, r1 * r2) != 1:
        raise SemisimplicityViolation(f"gcd({q}, {r1}*{r2}) != 1")
    t = math.lcm(multiplicative_order(q, r1), multiplicative_order(q, r2))
    _check_field_size(q_field.p, q_field.m * t)
    return _splitting_field(q_field, r1, r2)


@functools.lru_cache(maxsize=None)
def _splitting_field(q_field: Field, r1: int, r2: int) -> tuple[Field, Embedding]:
    q = q_field.order
    t = math.lcm(multiplicative_order(q, r1), multiplicative_order(q, r2))
    target = make_field(q_field.p, q_field.m * t)
    logger.debug(f"Splitting field of (q={q}, r=({r1},{r2})) is {target.name} (t={t})")
    embedding = Embedding(source=q_field, target=target, table=_embedding_table(q_field, target))
    return target, embedding
