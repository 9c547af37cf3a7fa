"""Strong apparent distance of q-orbit matrices and of abelian codes.

Matrices are indexed by I = Z_r1 x Z_r2; H(1, b) is row b and H(2, b) is
column b. Zero runs are circular: a run starting at b continues through
b+1, b+2, ... (mod r_k) until the first nonzero hyperplane.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Literal, NamedTuple

import numpy as np
from loguru import logger

from ab_core.context import get_msd_cap
from ab_core.errors import AllZeroAxis, BudgetExceeded, NotOrbitClosed, ZeroCode
from ab_core.orbits import IndexPair, Moduli, OrbitSet, apply_multiplier, multiplier_pairs

Axis = Literal[1, 2]


@dataclasses.dataclass(frozen=True, eq=False)
class OrbitMatrix:
    """Binary I-matrix; entry (i, j) is 0 exactly on the defining set it was built from."""

    r: Moduli
    entries: np.ndarray
    provenance: OrbitSet | None = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrbitMatrix):
            return NotImplemented
        return self.r == other.r and bool(np.array_equal(self.entries, other.entries))

    __hash__ = None

    def __le__(self, other: OrbitMatrix) -> bool:
        """Support inclusion: M(D) <= M(D') iff D' is contained in D."""
        return bool(np.all(~self.entries | other.entries))

    def hyperplane(self, k: Axis, b: int) -> np.ndarray:
        if k == 1:
            return self.entries[b % self.r[0], :]
        if k == 2:
            return self.entries[:, b % self.r[1]]
        raise ValueError(f"axis {k} must be 1 or 2")

    def is_zero(self) -> bool:
        return not self.entries.any()

    def support(self) -> set[IndexPair]:
        return {IndexPair(int(a), int(b)) for a, b in np.argwhere(self.entries)}

    @property
    def dimension(self) -> int:
        """|supp(M)|, the dimension of the code the matrix describes."""
        return int(self.entries.sum())

    def render(self) -> str:
        return "\n".join("".join("1" if x else "0" for x in row) for row in self.entries)


def orbit_matrix(D: OrbitSet) -> OrbitMatrix:
    """M(D): ones off D, zeros on D."""
    if not isinstance(D, OrbitSet):
        raise NotOrbitClosed("orbit matrices are afforded by orbit sets only")
    return OrbitMatrix(r=D.r, entries=~D.mask, provenance=D)


def binary_matrix(mask: np.ndarray) -> OrbitMatrix:
    """A binary I-matrix without orbit provenance (e.g. the support of a spectrum)."""
    mask = np.asarray(mask, dtype=bool)
    return OrbitMatrix(r=(int(mask.shape[0]), int(mask.shape[1])), entries=mask)


def _zero_runs(nonzero: np.ndarray) -> np.ndarray:
    """omega(b) for every b of one axis, given which hyperplanes are nonzero."""
    n = len(nonzero)
    runs = np.zeros(n, dtype=np.int64)
    start = int(np.flatnonzero(nonzero)[0])
    following = 0
    for step in range(1, n + 1):
        b = (start - step) % n
        following = 0 if nonzero[b] else following + 1
        runs[b] = following
    return runs


def _axis_nonzero(entries: np.ndarray, k: Axis) -> np.ndarray:
    if k not in (1, 2):
        raise ValueError(f"axis {k} must be 1 or 2")
    return entries.any(axis=2 - k)


def zero_run(M: OrbitMatrix | np.ndarray, k: Axis, b: int) -> int:
    """omega_M(k, b): the number of consecutive zero hyperplanes from b up to the first nonzero one.

    A 1-D array is read as a vector (its hyperplanes are its entries; k must be 1).

    Raises:
        AllZeroAxis: every hyperplane of axis k is zero
    """
    if isinstance(M, OrbitMatrix):
        nonzero = _axis_nonzero(M.entries, k)
    else:
        if k != 1:
            raise ValueError("vectors only have axis 1")
        nonzero = np.asarray(M) != 0
    if not nonzero.any():
        raise AllZeroAxis(f"all hyperplanes of axis {k} are zero")
    return int(_zero_runs(nonzero)[b % len(nonzero)])


def sd_star_vector(v) -> int:
    """sd*(v) = max_b omega_v(b) + 1, and sd*(0) = 0."""
    nonzero = np.asarray(v) != 0
    if not nonzero.any():
        return 0
    return int(_zero_runs(nonzero).max()) + 1


class AxisReport(NamedTuple):
    k: int
    epsilon: int
    omega: int
    sd: int


@dataclasses.dataclass(frozen=True)
class SdReport:
    """sd*(M) with the per-axis quantities and the hyperplanes involved in the maximum."""

    value: int
    axes: tuple[AxisReport, ...]
    involved: tuple[tuple[int, int], ...]
    shortcut_applicable: bool

    def render(self) -> str:
        lines = [f"sd*\t{self.value}", "axis\tepsilon\tomega\tsd_k*"]
        lines += [f"{a.k}\t{a.epsilon}\t{a.omega}\t{a.sd}" for a in self.axes]
        involved = " ".join(f"({k},{b})" for k, b in self.involved) or "-"
        lines.append(f"involved\t{involved}")
        lines.append(f"shortcut\t{'yes' if self.shortcut_applicable else 'no'}")
        return "\n".join(lines)


def _hyperplane_sd(entries: np.ndarray, k: Axis) -> list[int]:
    planes = entries if k == 1 else entries.T
    return [sd_star_vector(plane) for plane in planes]


def sd_star_matrix(M: OrbitMatrix) -> SdReport:
    """sd*(M) = max_k epsilon_M(k) * (omega_M(k) + 1)."""
    if M.is_zero():
        return SdReport(
            value=0,
            axes=(AxisReport(1, 0, 0, 0), AxisReport(2, 0, 0, 0)),
            involved=(),
            shortcut_applicable=False,
        )
    axes = []
    plane_sd = {}
    for k in (1, 2):
        plane_sd[k] = _hyperplane_sd(M.entries, k)
        epsilon = max(plane_sd[k])
        omega = int(_zero_runs(_axis_nonzero(M.entries, k)).max())
        axes.append(AxisReport(k, epsilon, omega, epsilon * (omega + 1)))
    value = max(a.sd for a in axes)
    involved = tuple(
        (a.k, b)
        for a in axes
        if a.sd == value
        for b, sd in enumerate(plane_sd[a.k])
        if (a.omega + 1) * sd == value
    )
    shortcut = any(a.sd == value and a.epsilon == 1 for a in axes)
    return SdReport(value=value, axes=tuple(axes), involved=involved, shortcut_applicable=shortcut)


def _sd_star_value(entries: np.ndarray) -> int:
    if not entries.any():
        return 0
    best = 0
    for k in (1, 2):
        epsilon = max(_hyperplane_sd(entries, k))
        omega = int(_zero_runs(_axis_nonzero(entries, k)).max())
        best = max(best, epsilon * (omega + 1))
    return best


def msd(M: OrbitMatrix, cap: int | None = None) -> int:
    """Minimum of sd*(P) over nonzero q-orbit matrices P <= M.

    Returns sd*(M) directly when an involved hyperplane has sd* = 1;
    otherwise enumerates every nonempty union of the orbits in supp(M).

    Raises:
        ZeroCode: M is the zero matrix (no nonzero P exists)
        BudgetExceeded: more free orbits than the cap allows
    """
    if M.provenance is None:
        raise NotOrbitClosed("msd needs a q-orbit matrix")
    report = sd_star_matrix(M)
    if report.value == 0:
        raise ZeroCode("msd of the zero matrix is undefined")
    if report.shortcut_applicable:
        return report.value
    return msd_exhaustive(M, cap)


def msd_exhaustive(M: OrbitMatrix, cap: int | None = None) -> int:
    """msd by enumerating all nonempty unions of free orbits (Gray-code order)."""
    if M.provenance is None:
        raise NotOrbitClosed("msd needs a q-orbit matrix")
    cap = get_msd_cap(cap)
    free = M.provenance.free_orbits()
    if not free:
        raise ZeroCode("msd of the zero matrix is undefined")
    if len(free) > cap:
        raise BudgetExceeded(
            f"msd needs {len(free)} free orbits, cap is {cap}", size=len(free), cap=cap
        )
    logger.debug(f"msd: enumerating {2 ** len(free) - 1} orbit unions over r={M.r}")
    orbit_masks = []
    for orbit in free:
        mask = np.zeros(M.r, dtype=bool)
        for a, b in orbit:
            mask[a, b] = True
        orbit_masks.append(mask)

    entries = np.zeros(M.r, dtype=bool)
    best = None
    for step in range(1, 2 ** len(free)):
        # Gray code: flip the orbit at the lowest set bit of step
        flip = (step & -step).bit_length() - 1
        entries ^= orbit_masks[flip]
        value = _sd_star_value(entries)
        if value and (best is None or value < best):
            best = value
            if best == 1:
                break
    return best


class CodeApparentDistance(NamedTuple):
    value: int
    optimized_multipliers: tuple[tuple[int, int], ...]


def sd_star_code(D: OrbitSet, cap: int | None = None) -> CodeApparentDistance:
    """sd* of the code with defining set D: the max over multiplier pairs of msd(M(u.D)).

    Raises:
        ZeroCode: D = I
        BudgetExceeded: some multiplier image needs more free orbits than the cap
    """
    if D.is_full():
        raise ZeroCode("the zero code has no strong apparent distance")
    pairs = multiplier_pairs(D.r)
    logger.debug(f"sd*: searching {len(pairs)} multiplier pairs over r={D.r}")
    seen: dict[frozenset, int] = {}
    values: dict[tuple[int, int], int] = {}
    for u, v in pairs:
        image = apply_multiplier(D, u, v)
        if image.members not in seen:
            seen[image.members] = msd(orbit_matrix(image), cap)
        values[(u, v)] = seen[image.members]
    best = max(values.values())
    optimized = tuple(pair for pair in pairs if values[pair] == best)
    return CodeApparentDistance(best, optimized)


def sd_star_of_polynomial(f, multiplier=None) -> int:
    """sd* of the support matrix of f's spectrum; a lower bound on the weight of f."""
    from ab_core.fourier import dft

    return _sd_star_value(dft(f, multiplier).support_mask())


def is_column_constant_matrix(M: OrbitMatrix, axis: Axis = 2) -> bool:
    """Every column (axis 2) or row (axis 1) is either zero or constantly 1."""
    planes = M.entries.T if axis == 2 else M.entries
    return all(not plane.any() or plane.all() for plane in planes)


def is_column_constant_set(D: OrbitSet, axis: Axis = 2) -> bool:
    """(i, j) in D iff (x, j) in D for all x (axis 2), or the row-wise mirror (axis 1)."""
    r1, r2 = D.r
    if axis == 2:
        return all(
            all((x, j) in D for x in range(r1)) for i, j in D.members
        )
    return all(all((i, y) in D for y in range(r2)) for i, j in D.members)


def orbit_unions(D: OrbitSet):
    """Every orbit-closed D' containing D with D' != I."""
    free = D.free_orbits()
    for chosen in itertools.product((False, True), repeat=len(free)):
        extra = [pair for keep, orbit in zip(chosen, free) if keep for pair in orbit]
        if len(extra) + len(D) == D.size:
            continue
        yield OrbitSet(D.q, D.r, D.members | frozenset(extra))
