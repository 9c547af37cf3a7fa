"""Index combinatorics on I = Z_r1 x Z_r2: cyclotomic cosets, q-orbits and multipliers.

Residues are always canonical representatives in 0..r-1. The modulus 1 is the
one-point ring {0}, so a cyclic code of length r is the bivariate case with
r1 = 1.
"""

from __future__ import annotations

import dataclasses
import functools
import math
from collections.abc import Iterable, Iterator
from typing import NamedTuple

import numpy as np

from ab_core.errors import NotAUnit, NotCoprime, NotOrbitClosed


class IndexPair(NamedTuple):
    a: int
    b: int


Moduli = tuple[int, int]


def multiplicative_order(q: int, r: int) -> int:
    """Least t >= 1 with q^t = 1 mod r.

    Raises:
        NotCoprime: gcd(q, r) != 1
    """
    if r < 1:
        raise ValueError(f"modulus {r} must be positive")
    if math.gcd(q, r) != 1:
        raise NotCoprime(f"gcd({q}, {r}) != 1")
    if r == 1:
        return 1
    t, power = 1, q % r
    while power != 1:
        power = power * q % r
        t += 1
    return t


def cyclotomic_coset(a: int, r: int, q: int) -> list[int]:
    """The q-cyclotomic coset {a q^i mod r}, sorted."""
    if math.gcd(q, r) != 1:
        raise NotCoprime(f"gcd({q}, {r}) != 1")
    coset = {a % r}
    x = a * q % r
    while x not in coset:
        coset.add(x)
        x = x * q % r
    return sorted(coset)


def units(r: int) -> list[int]:
    """Units modulo r in ascending order; the one-point ring Z_1 has the single unit 0."""
    if r == 1:
        return [0]
    return [u for u in range(1, r) if math.gcd(u, r) == 1]


def _check_semisimple(q: int, r: Moduli) -> None:
    if math.gcd(q, r[0] * r[1]) != 1:
        raise NotCoprime(f"gcd({q}, {r[0]}*{r[1]}) != 1")


@functools.lru_cache(maxsize=64)
def orbit_partition(q: int, r1: int, r2: int) -> tuple[tuple[IndexPair, ...], ...]:
    """All q-orbits of I, each sorted with its least element first, ordered by representative."""
    _check_semisimple(q, (r1, r2))
    seen = np.zeros((r1, r2), dtype=bool)
    orbits = []
    for a in range(r1):
        for b in range(r2):
            if seen[a, b]:
                continue
            orbit = []
            x, y = a, b
            while not seen[x, y]:
                seen[x, y] = True
                orbit.append(IndexPair(x, y))
                x, y = x * q % r1, y * q % r2
            orbits.append(tuple(sorted(orbit)))
    return tuple(orbits)


@functools.lru_cache(maxsize=64)
def orbit_labels(q: int, r1: int, r2: int) -> np.ndarray:
    """Matrix whose (a, b) entry is the index of the orbit of (a, b) in ``orbit_partition``."""
    labels = np.empty((r1, r2), dtype=np.int64)
    for index, orbit in enumerate(orbit_partition(q, r1, r2)):
        for a, b in orbit:
            labels[a, b] = index
    labels.setflags(write=False)
    return labels


@dataclasses.dataclass(frozen=True)
class OrbitSet:
    """An orbit-closed subset of I = Z_r1 x Z_r2 for the action (a, b) -> (qa, qb)."""

    q: int
    r: Moduli
    members: frozenset[IndexPair]

    def __post_init__(self):
        object.__setattr__(self, "r", (int(self.r[0]), int(self.r[1])))
        _check_semisimple(self.q, self.r)
        r1, r2 = self.r
        for a, b in self.members:
            if not (0 <= a < r1 and 0 <= b < r2):
                raise ValueError(f"({a}, {b}) is not a canonical index of Z_{r1} x Z_{r2}")
            if (a * self.q % r1, b * self.q % r2) not in self.members:
                raise NotOrbitClosed(f"({a}, {b}) is in the set but its q-image is not")

    @classmethod
    def empty(cls, q: int, r: Moduli) -> OrbitSet:
        return cls(q, tuple(r), frozenset())

    @classmethod
    def full(cls, q: int, r: Moduli) -> OrbitSet:
        return cls(q, tuple(r), frozenset(IndexPair(a, b) for a in range(r[0]) for b in range(r[1])))

    @classmethod
    def from_representatives(cls, q: int, r: Moduli, reps: Iterable[tuple[int, int]]) -> OrbitSet:
        return orbit_closure(reps, q, r)

    @property
    def size(self) -> int:
        return self.r[0] * self.r[1]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self.members

    def __iter__(self) -> Iterator[IndexPair]:
        return iter(sorted(self.members))

    def __or__(self, other: OrbitSet) -> OrbitSet:
        self._check_compatible(other)
        return OrbitSet(self.q, self.r, self.members | other.members)

    def __and__(self, other: OrbitSet) -> OrbitSet:
        self._check_compatible(other)
        return OrbitSet(self.q, self.r, self.members & other.members)

    def __le__(self, other: OrbitSet) -> bool:
        self._check_compatible(other)
        return self.members <= other.members

    def _check_compatible(self, other: OrbitSet) -> None:
        if (self.q, self.r) != (other.q, other.r):
            raise ValueError(f"orbit sets over q={self.q}, r={self.r} and q={other.q}, r={other.r}")

    def is_full(self) -> bool:
        return len(self.members) == self.size

    def complement(self) -> OrbitSet:
        return OrbitSet(self.q, self.r, OrbitSet.full(self.q, self.r).members - self.members)

    @functools.cached_property
    def representatives(self) -> tuple[IndexPair, ...]:
        """Lexicographically least element of each orbit, sorted."""
        return tuple(
            orbit[0] for orbit in orbit_partition(self.q, *self.r) if orbit[0] in self.members
        )

    @functools.cached_property
    def mask(self) -> np.ndarray:
        """Dense membership matrix over I."""
        mask = np.zeros(self.r, dtype=bool)
        for a, b in self.members:
            mask[a, b] = True
        mask.setflags(write=False)
        return mask

    def free_orbits(self) -> list[tuple[IndexPair, ...]]:
        """Orbits of I disjoint from this set."""
        return [orbit for orbit in orbit_partition(self.q, *self.r) if orbit[0] not in self.members]

    def record(self) -> str:
        reps = ",".join(f"[{a},{b}]" for a, b in self.representatives)
        return f"q={self.q} r=[{self.r[0]},{self.r[1]}] reps=[{reps}]"


def q_orbit(pair: tuple[int, int], q: int, r: Moduli) -> OrbitSet:
    """The orbit of one index pair under simultaneous multiplication by q."""
    _check_semisimple(q, r)
    r1, r2 = r
    a, b = pair[0] % r1, pair[1] % r2
    orbit = set()
    while (a, b) not in orbit:
        orbit.add(IndexPair(a, b))
        a, b = a * q % r1, b * q % r2
    return OrbitSet(q, tuple(r), frozenset(orbit))


def orbit_closure(points: Iterable[tuple[int, int]], q: int, r: Moduli) -> OrbitSet:
    """Least orbit-closed superset of ``points``."""
    _check_semisimple(q, r)
    r1, r2 = r
    partition = orbit_partition(q, r1, r2)
    labels = orbit_labels(q, r1, r2)
    members: set[IndexPair] = set()
    for a, b in points:
        members.update(partition[labels[a % r1, b % r2]])
    return OrbitSet(q, tuple(r), frozenset(members))


def hyperplane(k: int, level: int, r: Moduli) -> list[IndexPair]:
    """I(k, level): the row (k = 1) or column (k = 2) of I at the given coordinate."""
    r1, r2 = r
    if k == 1:
        return [IndexPair(level % r1, b) for b in range(r2)]
    if k == 2:
        return [IndexPair(a, level % r2) for a in range(r1)]
    raise ValueError(f"axis {k} must be 1 or 2")


def _check_unit(u: int, r: int) -> int:
    if math.gcd(u % r, r) != 1:
        raise NotAUnit(f"{u} is not a unit modulo {r}")
    return u % r


def apply_multiplier(D: OrbitSet, u: int, v: int) -> OrbitSet:
    """{(ua, vb) : (a, b) in D}: the defining set seen through the multiplier pair (u, v).

    Raises:
        NotAUnit: u or v is not invertible modulo its modulus
    """
    r1, r2 = D.r
    u, v = _check_unit(u, r1), _check_unit(v, r2)
    return OrbitSet(D.q, D.r, frozenset(IndexPair(u * a % r1, v * b % r2) for a, b in D.members))


def inverse_multiplier(u: int, v: int, r: Moduli) -> tuple[int, int]:
    """The multiplier pair undoing (u, v)."""
    r1, r2 = r
    u, v = _check_unit(u, r1), _check_unit(v, r2)
    return (pow(u, -1, r1) if r1 > 1 else 0, pow(v, -1, r2) if r2 > 1 else 0)


def identity_multiplier(r: Moduli) -> tuple[int, int]:
    return (1 % r[0], 1 % r[1])


def multiplier_pairs(r: Moduli) -> list[tuple[int, int]]:
    """All unit pairs in lexicographic order."""
    return [(u, v) for u in units(r[0]) for v in units(r[1])]
