"""Discrete Fourier transform between F_q(r1, r2) and (L^|I|, pointwise product).

A spectrum is indexed by I and records the multiplier pair (u, v) of the root
pair it was taken with. The multiplier (u, v) designates the roots
(alpha^(u^-1), beta^(v^-1)) where alpha, beta are the canonical primitive r1-th
and r2-th roots of unity of the splitting field; relative to those roots the
spectrum of f at (u*i, v*j) equals the canonical spectrum at (i, j), so the
zero set transforms exactly like ``apply_multiplier``.
"""

from __future__ import annotations

import dataclasses
import functools
import math

import numpy as np

from ab_core.errors import FieldMismatch, NotOrbitClosed, SemisimplicityViolation
from ab_core.field import Embedding, Field, codes_of, root_of_unity, splitting_field
from ab_core.orbits import IndexPair, Moduli, OrbitSet, identity_multiplier, inverse_multiplier

Multiplier = tuple[int, int]


@dataclasses.dataclass(frozen=True, eq=False)
class BivariatePolynomial:
    """An element of K[X, Y]/(X^r1 - 1, Y^r2 - 1) stored as its r1 x r2 coefficient matrix."""

    field: Field
    r: Moduli
    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "r", (int(self.r[0]), int(self.r[1])))
        if type(self.coeffs) is not self.field.gf:
            raise FieldMismatch(f"coefficients are not elements of {self.field.name}")
        if self.coeffs.shape != self.r:
            raise ValueError(f"coefficient matrix has shape {self.coeffs.shape}, expected {self.r}")

    @classmethod
    def zero(cls, field: Field, r: Moduli) -> BivariatePolynomial:
        return cls(field, r, field.zeros(tuple(r)))

    @classmethod
    def one(cls, field: Field, r: Moduli) -> BivariatePolynomial:
        return cls.monomial(field, r, 0, 0)

    @classmethod
    def monomial(cls, field: Field, r: Moduli, a: int, b: int, code: int = 1) -> BivariatePolynomial:
        coeffs = field.zeros(tuple(r))
        coeffs[a % r[0], b % r[1]] = code
        return cls(field, r, coeffs)

    @classmethod
    def from_codes(cls, field: Field, r: Moduli, codes) -> BivariatePolynomial:
        return cls(field, r, field(np.asarray(codes, dtype=np.int64).reshape(tuple(r))))

    def codes(self) -> np.ndarray:
        return codes_of(self.coeffs)

    @property
    def weight(self) -> int:
        return int(np.count_nonzero(self.codes()))

    def is_zero(self) -> bool:
        return self.weight == 0

    def support(self) -> list[IndexPair]:
        return [IndexPair(int(a), int(b)) for a, b in zip(*np.nonzero(self.codes()))]

    def _check_same_ring(self, other: BivariatePolynomial) -> None:
        if self.field != other.field:
            raise FieldMismatch(f"polynomials over {self.field.name} and {other.field.name}")
        if self.r != other.r:
            raise ValueError(f"polynomials over moduli {self.r} and {other.r}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return (
            self.field == other.field
            and self.r == other.r
            and bool(np.array_equal(self.codes(), other.codes()))
        )

    __hash__ = None

    def __add__(self, other: BivariatePolynomial) -> BivariatePolynomial:
        self._check_same_ring(other)
        return BivariatePolynomial(self.field, self.r, self.coeffs + other.coeffs)

    def __sub__(self, other: BivariatePolynomial) -> BivariatePolynomial:
        self._check_same_ring(other)
        return BivariatePolynomial(self.field, self.r, self.coeffs - other.coeffs)

    def __mul__(self, other: BivariatePolynomial) -> BivariatePolynomial:
        """Product in the group algebra (two-dimensional cyclic convolution)."""
        self._check_same_ring(other)
        r1, r2 = self.r
        rows, cols = np.arange(r1), np.arange(r2)
        result = self.field.zeros(self.r)
        for a, b in zip(*np.nonzero(self.codes())):
            shifted = other.coeffs[np.ix_((rows - a) % r1, (cols - b) % r2)]
            result = result + self.coeffs[a, b] * shifted
        return BivariatePolynomial(self.field, self.r, result)

    def shift(self, a: int, b: int) -> BivariatePolynomial:
        """X^a Y^b * self."""
        r1, r2 = self.r
        rows, cols = np.arange(r1), np.arange(r2)
        return BivariatePolynomial(self.field, self.r, self.coeffs[np.ix_((rows - a) % r1, (cols - b) % r2)])

    def scale(self, c) -> BivariatePolynomial:
        return BivariatePolynomial(self.field, self.r, self.coeffs * self.field(int(c)))

    def embed(self, embedding: Embedding) -> BivariatePolynomial:
        """The same polynomial with coefficients mapped into the extension field."""
        return BivariatePolynomial(embedding.target, self.r, embedding(self.coeffs))

    def record(self) -> str:
        codes = ",".join(str(int(c)) for c in self.codes().ravel())
        return f"field={self.field.record()} r=[{self.r[0]},{self.r[1]}] coeffs=[{codes}]"


@dataclasses.dataclass(frozen=True, eq=False)
class Spectrum:
    """DFT image: values over the splitting field L indexed by I, with the multiplier pair used."""

    base: Field
    field: Field
    r: Moduli
    values: np.ndarray
    multiplier: Multiplier

    def __mul__(self, other: Spectrum) -> Spectrum:
        """Pointwise product."""
        if (self.field, self.r, self.multiplier) != (other.field, other.r, other.multiplier):
            raise FieldMismatch("spectra over different fields, moduli or root pairs")
        return dataclasses.replace(self, values=self.values * other.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Spectrum):
            return NotImplemented
        return (
            (self.base, self.field, self.r, self.multiplier)
            == (other.base, other.field, other.r, other.multiplier)
            and bool(np.array_equal(codes_of(self.values), codes_of(other.values)))
        )

    __hash__ = None

    def zero_mask(self) -> np.ndarray:
        return codes_of(self.values) == 0

    def support_mask(self) -> np.ndarray:
        return ~self.zero_mask()


@dataclasses.dataclass(frozen=True)
class _RootTables:
    field: Field
    embedding: Embedding
    forward: tuple[np.ndarray, np.ndarray]
    backward: tuple[np.ndarray, np.ndarray]


def _power_table(root, r: int, sign: int) -> np.ndarray:
    exponents = (sign * np.outer(np.arange(r), np.arange(r))) % r
    return root**exponents


@functools.lru_cache(maxsize=32)
def _root_tables(base: Field, r: Moduli, multiplier: Multiplier) -> _RootTables:
    r1, r2 = r
    L, embedding = splitting_field(base, r1, r2)
    u_inv, v_inv = inverse_multiplier(*multiplier, r)
    alpha = root_of_unity(L, r1) ** (u_inv if r1 > 1 else 0)
    beta = root_of_unity(L, r2) ** (v_inv if r2 > 1 else 0)
    return _RootTables(
        field=L,
        embedding=embedding,
        forward=(_power_table(alpha, r1, 1), _power_table(beta, r2, 1)),
        backward=(_power_table(alpha, r1, -1), _power_table(beta, r2, -1)),
    )


def splitting_data(base: Field, r: Moduli) -> tuple[Field, Embedding]:
    """The splitting field of (base, r) with the embedding of the base field."""
    return splitting_field(base, r[0], r[1])


def _normalize_multiplier(multiplier: Multiplier | None, r: Moduli) -> Multiplier:
    if multiplier is None:
        return identity_multiplier(r)
    return (multiplier[0] % r[0], multiplier[1] % r[1])


def dft(f: BivariatePolynomial, multiplier: Multiplier | None = None, base: Field | None = None) -> Spectrum:
    """Spectrum(i, j) = f(alpha^i, beta^j) for the root pair designated by ``multiplier``.

    ``f`` lives over the base field, or over its splitting field when ``base``
    names the base field explicitly.
    """
    base = base or f.field
    multiplier = _normalize_multiplier(multiplier, f.r)
    tables = _root_tables(base, f.r, multiplier)
    if f.field == base:
        coeffs = tables.embedding(f.coeffs)
    elif f.field == tables.field:
        coeffs = f.coeffs
    else:
        raise FieldMismatch(f"polynomial over {f.field.name} is neither over {base.name} nor its splitting field")
    a_table, b_table = tables.forward
    values = a_table @ coeffs @ b_table.T
    return Spectrum(base=base, field=tables.field, r=f.r, values=values, multiplier=multiplier)


def inverse_dft(S: Spectrum) -> BivariatePolynomial:
    """coefficient(a, b) = (r1 r2)^-1 sum S(i, j) alpha^(-ia) beta^(-jb), over the splitting field.

    Raises:
        SemisimplicityViolation: r1 * r2 is divisible by the characteristic
    """
    n = S.r[0] * S.r[1]
    if n % S.field.p == 0:
        raise SemisimplicityViolation(f"{n} is not invertible in characteristic {S.field.p}")
    tables = _root_tables(S.base, S.r, S.multiplier)
    a_table, b_table = tables.backward
    coeffs = (a_table @ S.values @ b_table.T) * S.field.gf(n % S.field.p) ** -1
    return BivariatePolynomial(S.field, S.r, coeffs)


def restrict_to_base(f: BivariatePolynomial, base: Field) -> BivariatePolynomial:
    """Pull a polynomial over the splitting field back to the base field.

    Raises:
        NotOrbitClosed: some coefficient is not fixed by the q-Frobenius
    """
    _, embedding = splitting_data(base, f.r)
    try:
        return BivariatePolynomial(base, f.r, embedding.preimage(f.coeffs))
    except FieldMismatch as exc:
        raise NotOrbitClosed(f"coefficients leave {base.name}: {exc}") from exc


def indicator_spectrum(base: Field, D: OrbitSet, multiplier: Multiplier | None = None) -> Spectrum:
    """The 0/1 spectrum vanishing exactly on D."""
    multiplier = _normalize_multiplier(multiplier, D.r)
    L, _ = splitting_data(base, D.r)
    values = L((~D.mask).astype(np.int64))
    return Spectrum(base=base, field=L, r=D.r, values=values, multiplier=multiplier)


def idempotent_from_defining_set(
    D: OrbitSet, base: Field, multiplier: Multiplier | None = None
) -> BivariatePolynomial:
    """The idempotent whose spectrum is the indicator of I minus D.

    Raises:
        NotOrbitClosed: D is not a union of q-orbits for q = |base|, so e leaves the base field
    """
    if D.q % _modulus_lcm(D.r) != base.order % _modulus_lcm(D.r):
        raise NotOrbitClosed(f"defining set built for q={D.q}, field has {base.order} elements")
    e = inverse_dft(indicator_spectrum(base, D, multiplier))
    return restrict_to_base(e, base)


def _modulus_lcm(r: Moduli) -> int:
    return math.lcm(r[0], r[1])


def defining_set_of(f: BivariatePolynomial, multiplier: Multiplier | None = None, base: Field | None = None) -> OrbitSet:
    """{(a, b) : f(alpha^a, beta^b) = 0}; orbit-closed whenever f has base-field coefficients."""
    S = dft(f, multiplier, base)
    zeros = np.argwhere(S.zero_mask())
    q = (base or f.field).order
    return OrbitSet(q, f.r, frozenset(IndexPair(int(a), int(b)) for a, b in zeros))
