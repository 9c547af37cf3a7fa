import math
import random

import pytest

from ab_core.errors import NotAUnit, NotCoprime, NotOrbitClosed
from ab_core.orbits import (
    IndexPair,
    OrbitSet,
    apply_multiplier,
    cyclotomic_coset,
    hyperplane,
    identity_multiplier,
    inverse_multiplier,
    multiplicative_order,
    multiplier_pairs,
    orbit_closure,
    orbit_partition,
    q_orbit,
    units,
)


def test_multiplicative_order():
    assert multiplicative_order(5, 1) == 1
    assert multiplicative_order(2, 55) == 20
    assert multiplicative_order(4, 9) == 3
    with pytest.raises(NotCoprime):
        multiplicative_order(2, 4)


def test_cyclotomic_cosets():
    assert cyclotomic_coset(0, 9, 2) == [0]
    coset = cyclotomic_coset(1, 55, 2)
    assert coset == [1, 2, 4, 7, 8, 9, 13, 14, 16, 17, 18, 26, 28, 31, 32, 34, 36, 43, 49, 52]
    assert len(coset) == multiplicative_order(2, 55)
    assert cyclotomic_coset(5, 55, 2) == [5, 10, 15, 20, 25, 30, 35, 40, 45, 50]
    with pytest.raises(NotCoprime):
        cyclotomic_coset(1, 6, 3)


def test_q_orbits():
    assert set(q_orbit((0, 0), 4, (7, 9))) == {(0, 0)}
    assert set(q_orbit((1, 0), 4, (7, 9))) == {(1, 0), (4, 0), (2, 0)}
    assert set(q_orbit((0, 1), 4, (7, 9))) == {(0, 1), (0, 4), (0, 7)}
    with pytest.raises(NotCoprime):
        q_orbit((0, 1), 3, (3, 7))


def test_orbit_partition_covers_index_set():
    orbits = orbit_partition(2, 3, 7)
    assert len(orbits) == 6
    assert sorted(pair for orbit in orbits for pair in orbit) == [(a, b) for a in range(3) for b in range(7)]
    assert all(orbit[0] == min(orbit) for orbit in orbits)


def test_orbit_closure():
    assert len(orbit_closure([], 4, (7, 9))) == 0
    assert orbit_closure([(0, 5)], 4, (7, 9)) == q_orbit((0, 5), 4, (7, 9))
    D = orbit_closure([(t, b) for t in range(7) for b in (0, 1)], 4, (7, 9))
    assert len(D) == 28
    assert D.members == frozenset(IndexPair(t, b) for t in range(7) for b in (0, 1, 4, 7))
    assert orbit_closure(D, 4, (7, 9)) == D


def test_orbit_set_rejects_open_sets():
    with pytest.raises(NotOrbitClosed):
        OrbitSet(2, (1, 7), frozenset({IndexPair(0, 1)}))


def test_orbit_set_representatives_and_record():
    D = orbit_closure([(0, 2), (0, 3)], 2, (1, 7))
    assert D.representatives == ((0, 1), (0, 3))
    assert D.record() == "q=2 r=[1,7] reps=[[0,1],[0,3]]"
    assert D.complement().representatives == ((0, 0),)
    assert OrbitSet.full(2, (1, 7)).is_full()
    assert len(D.free_orbits()) == 1


def test_apply_multiplier():
    D = orbit_closure([(0, 1)], 2, (1, 7))
    image = apply_multiplier(D, 0, 3)
    assert set(image) == {(0, 3), (0, 5), (0, 6)}
    assert apply_multiplier(image, *inverse_multiplier(0, 3, (1, 7))) == D
    full = OrbitSet.full(4, (7, 9))
    assert apply_multiplier(full, 3, 2) == full
    with pytest.raises(NotAUnit):
        apply_multiplier(D, 0, 7)


def test_units_and_pairs():
    assert units(1) == [0]
    assert units(9) == [1, 2, 4, 5, 7, 8]
    assert identity_multiplier((1, 7)) == (0, 1)
    pairs = multiplier_pairs((3, 55))
    assert len(pairs) == 80
    assert pairs == sorted(pairs)


def test_hyperplanes():
    assert hyperplane(1, 8, (7, 9)) == [(1, b) for b in range(9)]
    assert hyperplane(2, 10, (7, 9)) == [(a, 1) for a in range(7)]


MODULI = [(2, (1, 7)), (2, (3, 55)), (4, (7, 9)), (3, (16, 5)), (5, (11, 31)), (2, (99, 101))]


@pytest.mark.parametrize("q,r", MODULI)
def test_orbits_partition_index_set(q, r):
    orbits = orbit_partition(q, *r)
    pairs = [pair for orbit in orbits for pair in orbit]
    assert len(pairs) == len(set(pairs)) == r[0] * r[1]
    for orbit in orbits:
        members = set(orbit)
        assert {IndexPair(a * q % r[0], b * q % r[1]) for a, b in orbit} == members


@pytest.mark.parametrize("q,r", MODULI[:4])
def test_orbit_sizes_divide_splitting_degree(q, r):
    t = math.lcm(multiplicative_order(q, r[0]), multiplicative_order(q, r[1]))
    for a in range(r[0]):
        for b in range(r[1]):
            assert t % len(q_orbit((a, b), q, r)) == 0


@pytest.mark.parametrize("q,r", [(2, 7), (2, 55), (4, 9), (3, 16)])
def test_cyclotomic_coset_is_a_one_dimensional_orbit(q, r):
    for a in range(r):
        assert sorted(x for x, _ in q_orbit((a, 0), q, (r, 1))) == cyclotomic_coset(a, r, q)


def test_orbit_closure_is_extensive_and_monotone():
    rng = random.Random(11)
    q, r = 4, (7, 9)
    index = [(a, b) for a in range(r[0]) for b in range(r[1])]
    for _ in range(100):
        small = rng.sample(index, rng.randrange(0, 12))
        large = small + rng.sample(index, rng.randrange(0, 12))
        closed_small, closed_large = orbit_closure(small, q, r), orbit_closure(large, q, r)
        assert all(pair in closed_small for pair in small)
        assert closed_small <= closed_large
        assert orbit_closure(closed_small, q, r) == closed_small
