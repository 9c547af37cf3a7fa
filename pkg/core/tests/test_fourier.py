import numpy as np
import pytest

from ab_core.errors import NotOrbitClosed
from ab_core.field import codes_of, field_of_order, root_of_unity
from ab_core.fourier import (
    BivariatePolynomial,
    defining_set_of,
    dft,
    idempotent_from_defining_set,
    indicator_spectrum,
    inverse_dft,
    splitting_data,
)
from ab_core.orbits import OrbitSet, apply_multiplier, multiplier_pairs, orbit_partition

PARAMETER_SETS = [(2, (3, 7)), (4, (7, 9))]


def _random_polynomial(F, r, rng) -> BivariatePolynomial:
    return BivariatePolynomial.from_codes(F, r, rng.integers(0, F.order, size=r))


def _random_orbit_set(q, r, rng) -> OrbitSet:
    chosen = [orbit for orbit in orbit_partition(q, *r) if rng.random() < 0.5]
    return OrbitSet(q, r, frozenset(pair for orbit in chosen for pair in orbit))


@pytest.mark.parametrize("q,r", PARAMETER_SETS)
def test_round_trip(q, r):
    F = field_of_order(q)
    _, embedding = splitting_data(F, r)
    rng = np.random.default_rng(2024)
    for _ in range(500):
        f = _random_polynomial(F, r, rng)
        assert inverse_dft(dft(f)) == f.embed(embedding)


@pytest.mark.parametrize("q,r", PARAMETER_SETS)
def test_convolution_theorem(q, r):
    F = field_of_order(q)
    rng = np.random.default_rng(99)
    for _ in range(500):
        f, g = _random_polynomial(F, r, rng), _random_polynomial(F, r, rng)
        assert dft(f * g) == dft(f) * dft(g)


@pytest.mark.parametrize("q,r", PARAMETER_SETS)
def test_idempotents(q, r):
    F = field_of_order(q)
    rng = np.random.default_rng(5)
    for _ in range(50):
        D = _random_orbit_set(q, r, rng)
        e = idempotent_from_defining_set(D, F)
        assert e.field == F
        assert e * e == e
        assert defining_set_of(e) == D


def test_multiplier_permutes_the_spectrum():
    F = field_of_order(4)
    r = (7, 9)
    rng = np.random.default_rng(11)
    f = _random_polynomial(F, r, rng)
    D = defining_set_of(f)
    for u, v in multiplier_pairs(r)[:6]:
        assert defining_set_of(f, (u, v)) == apply_multiplier(D, u, v)


def test_idempotent_respects_multiplier():
    F = field_of_order(2)
    r = (1, 7)
    D = OrbitSet(2, r, frozenset({(0, 1), (0, 2), (0, 4)}))
    e = idempotent_from_defining_set(D, F, (0, 3))
    assert defining_set_of(e, (0, 3)) == D
    assert defining_set_of(e) == apply_multiplier(D, 0, 5)


def test_indicator_spectrum_vanishes_on_defining_set():
    F = field_of_order(2)
    D = OrbitSet(2, (3, 7), frozenset({(0, 0)}))
    S = indicator_spectrum(F, D)
    assert S.zero_mask().sum() == 1 and S.zero_mask()[0, 0]


def test_idempotent_rejects_mismatched_base():
    F = field_of_order(4)
    D = OrbitSet(2, (1, 7), frozenset({(0, 1), (0, 2), (0, 4)}))
    with pytest.raises(NotOrbitClosed):
        idempotent_from_defining_set(D, F)


def test_polynomial_arithmetic():
    F = field_of_order(2)
    r = (3, 7)
    x = BivariatePolynomial.monomial(F, r, 1, 0)
    y = BivariatePolynomial.monomial(F, r, 0, 1)
    assert x.shift(2, 0) == BivariatePolynomial.one(F, r)
    assert (x * y).support() == [(1, 1)]
    assert (x + x).is_zero()
    assert (x - y).weight == 2
    assert y.shift(0, 6) == BivariatePolynomial.one(F, r)


def test_spectrum_of_x_lists_the_powers_of_alpha():
    F = field_of_order(2)
    S = dft(BivariatePolynomial.monomial(F, (3, 1), 1, 0))
    assert (S.field.p, S.field.m) == (2, 2)
    alpha = root_of_unity(S.field, 3)
    assert [int(c) for c in codes_of(S.values).ravel()] == [1, int(alpha), int(alpha**2)]
