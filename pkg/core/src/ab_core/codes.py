"""Abelian codes in F_q(r1, r2) = F_q[X, Y]/(X^r1 - 1, Y^r2 - 1).

A code is stored by its defining set D as seen through a multiplier pair
(u, v): D is the zero set relative to the roots (alpha^(u^-1), beta^(v^-1)),
so the canonical defining set is (u^-1, v^-1) . D. Cyclic codes of length r
are the case r1 = 1.
"""

from __future__ import annotations

import dataclasses
import functools
import math
from collections.abc import Iterable, Sequence
from typing import NamedTuple

import numpy as np
from loguru import logger

from ab_core.apparent import (
    CodeApparentDistance,
    SdReport,
    orbit_matrix,
    sd_star_code,
    sd_star_matrix,
)
from ab_core.errors import (
    DesignedDistanceOutOfRange,
    FieldMismatch,
    LengthMismatch,
    NotCoprime,
    ParameterError,
    SemisimplicityViolation,
    TrivialDistance,
    ZeroCode,
)
from ab_core.field import Field, FieldElement, codes_of
from ab_core.fourier import BivariatePolynomial, dft, idempotent_from_defining_set
from ab_core.orbits import (
    IndexPair,
    Moduli,
    OrbitSet,
    apply_multiplier,
    hyperplane,
    identity_multiplier,
    inverse_multiplier,
    multiplicative_order,
    orbit_closure,
    units,
)


@dataclasses.dataclass(frozen=True)
class AbelianCode:
    field: Field
    r: Moduli
    defining_set: OrbitSet
    multiplier: tuple[int, int]

    @property
    def length(self) -> int:
        return self.r[0] * self.r[1]

    @property
    def dimension(self) -> int:
        return self.length - len(self.defining_set)

    @property
    def is_cyclic(self) -> bool:
        return self.r[0] == 1

    def is_zero(self) -> bool:
        return self.defining_set.is_full()

    @functools.cached_property
    def canonical_defining_set(self) -> OrbitSet:
        """The defining set relative to the canonical root pair."""
        return apply_multiplier(self.defining_set, *inverse_multiplier(*self.multiplier, self.r))

    def with_multiplier(self, u: int, v: int) -> AbelianCode:
        """The same code, viewed through the root pair designated by (u, v)."""
        view = apply_multiplier(self.canonical_defining_set, u, v)
        return AbelianCode(self.field, self.r, view, (u % self.r[0], v % self.r[1]))

    @functools.cached_property
    def idempotent(self) -> BivariatePolynomial:
        return idempotent_from_defining_set(self.defining_set, self.field, self.multiplier)

    @functools.cached_property
    def generator_matrix(self) -> FieldElement:
        """Row-reduced basis of the span of all translates X^a Y^b e of the idempotent."""
        e = self.idempotent
        translates = [e.shift(a, b).codes().reshape(-1) for a in range(self.r[0]) for b in range(self.r[1])]
        reduced = self.field(np.stack(translates)).row_reduce()
        G = reduced[np.flatnonzero(codes_of(reduced).any(axis=1))]
        if G.shape[0] != self.dimension:
            raise RuntimeError(f"generator rank {G.shape[0]} differs from dimension {self.dimension}")
        logger.debug(f"Generator matrix of [{self.length},{self.dimension}] code over {self.field.name}")
        return G

    @functools.cached_property
    def sd_star(self) -> CodeApparentDistance:
        """sd*(C) with the optimized multipliers, relative to the canonical roots."""
        return sd_star_code(self.canonical_defining_set)

    def sd_report(self, multiplier: tuple[int, int] | None = None) -> SdReport:
        u, v = multiplier or self.multiplier
        return sd_star_matrix(orbit_matrix(apply_multiplier(self.canonical_defining_set, u, v)))

    def describe(self) -> str:
        return (
            f"[{self.length},{self.dimension}] abelian code over {self.field.name}, "
            f"r=({self.r[0]},{self.r[1]}), |D|={len(self.defining_set)}"
        )


def _check_semisimple(field: Field, r: Moduli) -> None:
    if r[0] < 1 or r[1] < 1:
        raise ParameterError(f"moduli {r} must be positive")
    if math.gcd(field.order, r[0] * r[1]) != 1:
        raise SemisimplicityViolation(f"gcd({field.order}, {r[0]}*{r[1]}) != 1")


def code_from_defining_set(
    field: Field, r: Moduli, D: OrbitSet | Iterable[tuple[int, int]], multiplier: tuple[int, int] | None = None
) -> AbelianCode:
    """The code whose defining set, relative to the root pair of ``multiplier``, is D.

    Raises:
        SemisimplicityViolation: gcd(q, r1 r2) != 1
        NotOrbitClosed: D is not a union of q-orbits
    """
    r = (int(r[0]), int(r[1]))
    _check_semisimple(field, r)
    members = D.members if isinstance(D, OrbitSet) else frozenset(IndexPair(int(a), int(b)) for a, b in D)
    if isinstance(D, OrbitSet) and D.r != r:
        raise ParameterError(f"defining set over {D.r} used for moduli {r}")
    defining_set = OrbitSet(field.order, r, members)
    if multiplier is None:
        multiplier = identity_multiplier(r)
    inverse_multiplier(multiplier[0], multiplier[1], r)
    return AbelianCode(field, r, defining_set, (multiplier[0] % r[0], multiplier[1] % r[1]))


def _check_designed_distance(delta: int, r: int) -> None:
    if not 2 <= delta <= r:
        raise DesignedDistanceOutOfRange(f"designed distance {delta} outside 2..{r}")


def bch_univariate(field: Field, r: int, delta: int, b: int = 0) -> AbelianCode:
    """B_q(r, delta, b): closure of the run {b, ..., b+delta-2} as a cyclic code with r1 = 1."""
    _check_designed_distance(delta, r)
    _check_semisimple(field, (1, r))
    run = [(0, (b + step) % r) for step in range(delta - 1)]
    return code_from_defining_set(field, (1, r), orbit_closure(run, field.order, (1, r)))


@dataclasses.dataclass(frozen=True)
class BchSpec:
    """Axes gamma with their designed distances and offsets, aligned by position."""

    gamma: tuple[int, ...]
    delta: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if not (len(self.gamma) == len(self.delta) == len(self.b)):
            raise ParameterError("gamma, delta and b must have the same length")
        if any(k not in (1, 2) for k in self.gamma) or len(set(self.gamma)) != len(self.gamma):
            raise ParameterError(f"gamma {self.gamma} must be a subset of {{1, 2}}")
        order = sorted(range(len(self.gamma)), key=lambda i: self.gamma[i])
        for name in ("gamma", "delta", "b"):
            value = getattr(self, name)
            object.__setattr__(self, name, tuple(int(value[i]) for i in order))

    def terms(self) -> list[tuple[int, int, int]]:
        return list(zip(self.gamma, self.delta, self.b))

    def validate(self, r: Moduli) -> None:
        for k, delta, _ in self.terms():
            _check_designed_distance(delta, r[k - 1])

    @property
    def designed_product(self) -> int:
        return math.prod(self.delta)


def bch_bivariate(field: Field, r: Moduli, spec: BchSpec) -> AbelianCode:
    """Union over k in gamma and l < delta_k - 1 of the orbits meeting the hyperplane I(k, b_k + l)."""
    spec.validate(r)
    _check_semisimple(field, r)
    points = [
        pair
        for k, delta, b in spec.terms()
        for level in range(b, b + delta - 1)
        for pair in hyperplane(k, level, r)
    ]
    return code_from_defining_set(field, r, orbit_closure(points, field.order, r))


def bch_dimension_lower_bound(r: Moduli, q: int, spec: BchSpec) -> int:
    """r1 r2 - lcm(O_r1(q), O_r2(q)) * sum_k (delta_k - 1) * r_{other}; may be negative."""
    t = math.lcm(multiplicative_order(q, r[0]), multiplicative_order(q, r[1]))
    other = {1: r[1], 2: r[0]}
    return r[0] * r[1] - t * sum((delta - 1) * other[k] for k, delta, _ in spec.terms())


def reed_solomon(field: Field, delta: int, b: int = 0) -> AbelianCode:
    """RS code of length q - 1 with zeros alpha^b, ..., alpha^(b+delta-2)."""
    r = field.order - 1
    if r < 2:
        raise ParameterError(f"Reed-Solomon codes need q >= 3, got q={field.order}")
    return bch_univariate(field, r, delta, b)


def _column_part(D: OrbitSet) -> frozenset[int]:
    return frozenset(b for _, b in D.members)


def multiply_dimension(C: AbelianCode, n: int) -> AbelianCode:
    """C_n in F_q(n, r) with canonical defining set Z_n x D(C).

    The stored multiplier of C is kept when it is optimized, and replaced by
    the first optimized pair otherwise.

    Raises:
        NotCoprime: gcd(n, q) != 1
        ZeroCode: C is the zero code
        TrivialDistance: sd*(C) = 1
    """
    if not C.is_cyclic:
        raise ParameterError(f"dimension multiplication takes a cyclic code, got r={C.r}")
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    if math.gcd(n, C.field.order) != 1:
        raise NotCoprime(f"gcd({n}, {C.field.order}) != 1")
    if C.is_zero():
        raise ZeroCode("the zero code cannot be multiplied")
    sd = C.sd_star
    if sd.value == 1:
        raise TrivialDistance("sd*(C) = 1")
    multiplier = C.multiplier
    if multiplier not in sd.optimized_multipliers:
        multiplier = sd.optimized_multipliers[0]
        logger.warning(f"Multiplier {C.multiplier} is not optimized; using {multiplier} (sd*={sd.value})")

    r = (n, C.r[1])
    columns = _column_part(C.canonical_defining_set)
    canonical = OrbitSet(C.field.order, r, frozenset(IndexPair(a, b) for a in range(n) for b in columns))
    C_n = AbelianCode(C.field, r, canonical, identity_multiplier(r)).with_multiplier(1, multiplier[1])
    logger.info(f"Multiplied {C.describe()} by n={n}: {C_n.describe()}")
    return C_n


def multiplied_family(C: AbelianCode, ns: Iterable[int]) -> dict[int, AbelianCode]:
    return {n: multiply_dimension(C, n) for n in ns}


class BchMatch(NamedTuple):
    delta: int
    b: int
    multiplier: int


def _maximal_runs(residues: frozenset[int], r: int) -> list[tuple[int, int]]:
    """(start, length) of every maximal circular run of consecutive residues."""
    runs = []
    for start in sorted(residues):
        if (start - 1) % r in residues:
            continue
        length = 1
        while (start + length) % r in residues and length < r:
            length += 1
        runs.append((start, length))
    return runs


def detect_bch_parameters(C: AbelianCode) -> list[BchMatch]:
    """Every (delta, b, u) such that a maximal run {b, ..., b+delta-2} of u.D has orbit closure u.D.

    Sorted by delta descending, then multiplier, then offset. An empty list means
    C is not a BCH code for any root choice.
    """
    if not C.is_cyclic:
        raise ParameterError(f"BCH detection takes a cyclic code, got r={C.r}")
    if C.is_zero():
        raise ZeroCode("the zero code has no BCH parameters")
    r = C.r[1]
    matches = []
    for u in units(r):
        view = apply_multiplier(C.canonical_defining_set, 0, u)
        for start, length in _maximal_runs(_column_part(view), r):
            run = [(0, (start + step) % r) for step in range(length)]
            if orbit_closure(run, C.field.order, C.r) == view:
                matches.append(BchMatch(length + 1, start, u))
    matches.sort(key=lambda match: (-match.delta, match.multiplier, match.b))
    return matches


def encode(C: AbelianCode, message: Sequence[int] | FieldElement) -> BivariatePolynomial:
    """message x generator matrix, as a polynomial in F_q(r1, r2).

    Raises:
        LengthMismatch: len(message) != dim(C)
    """
    if len(message) != C.dimension:
        raise LengthMismatch(f"message of length {len(message)} for a code of dimension {C.dimension}")
    if C.dimension == 0:
        return BivariatePolynomial.zero(C.field, C.r)
    m = message if type(message) is C.field.gf else C.field(np.asarray(message, dtype=np.int64))
    word = m @ C.generator_matrix
    return BivariatePolynomial(C.field, C.r, word.reshape(C.r))


def is_codeword(C: AbelianCode, f: BivariatePolynomial) -> bool:
    """f vanishes at every point of the defining set."""
    if f.field != C.field:
        raise FieldMismatch(f"polynomial over {f.field.name}, code over {C.field.name}")
    if f.r != C.r:
        raise LengthMismatch(f"polynomial over moduli {f.r}, code over {C.r}")
    zeros = dft(f, C.multiplier).zero_mask()
    return bool(np.all(zeros[C.defining_set.mask]))


def singleton_defect(C: AbelianCode, d: int) -> int:
    """n - k + 1 - d; zero exactly for MDS codes."""
    return C.length - C.dimension + 1 - d


def count_optimized_multipliers(C: AbelianCode) -> int:
    return len(C.sd_star.optimized_multipliers)
