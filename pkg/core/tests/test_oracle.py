import itertools

import pytest

from ab_core.codes import bch_univariate, code_from_defining_set, multiply_dimension, reed_solomon
from ab_core.context import set_enumeration_cap
from ab_core.errors import BudgetExceeded, NotACodeword, ParameterError, ZeroCode
from ab_core.field import field_of_order
from ab_core.fourier import BivariatePolynomial
from ab_core.oracle import (
    DistanceCertificate,
    certify_distance,
    embedded_witness,
    generator_polynomial,
    lightest_witness,
    minimum_distance_exhaustive,
)
from ab_core.orbits import OrbitSet, apply_multiplier, orbit_closure, orbit_partition

GF2 = field_of_order(2)


@pytest.fixture
def hamming():
    return bch_univariate(GF2, 7, 3, 1)


def test_exhaustive_distances(hamming):
    repetition = code_from_defining_set(GF2, (1, 7), orbit_closure([(0, 1), (0, 3)], 2, (1, 7)))
    assert repetition.dimension == 1
    assert minimum_distance_exhaustive(repetition) == 7
    assert minimum_distance_exhaustive(hamming) == 3
    assert minimum_distance_exhaustive(multiply_dimension(hamming, 3)) == 3


def test_exhaustive_distance_ignores_the_view(hamming):
    C3 = multiply_dimension(hamming, 3)
    assert minimum_distance_exhaustive(C3.with_multiplier(2, 3)) == 3
    image = apply_multiplier(hamming.defining_set, 0, 3)
    assert minimum_distance_exhaustive(code_from_defining_set(GF2, (1, 7), image)) == 3


def test_exhaustive_errors(hamming):
    with pytest.raises(ZeroCode):
        minimum_distance_exhaustive(code_from_defining_set(GF2, (1, 7), OrbitSet.full(2, (1, 7))))
    C3 = multiply_dimension(hamming, 3)
    with pytest.raises(BudgetExceeded) as info:
        minimum_distance_exhaustive(C3, cap=8)
    assert info.value.size == 2**12
    set_enumeration_cap(100)
    try:
        with pytest.raises(BudgetExceeded):
            minimum_distance_exhaustive(C3)
    finally:
        set_enumeration_cap(None)


def test_apparent_distance_never_exceeds_minimum_distance():
    """Every binary abelian code in F_2(3, 7) satisfies sd*(C) <= d(C)."""
    orbits = orbit_partition(2, 3, 7)
    checked = 0
    for chosen in itertools.product((False, True), repeat=len(orbits)):
        members = frozenset(pair for keep, orbit in zip(chosen, orbits) if keep for pair in orbit)
        C = code_from_defining_set(GF2, (3, 7), OrbitSet(2, (3, 7), members))
        if C.is_zero():
            continue
        assert minimum_distance_exhaustive(C) >= C.sd_star.value
        checked += 1
    assert checked == 2 ** len(orbits) - 1


def test_generator_polynomial(hamming):
    g = generator_polynomial(hamming)
    assert g.weight == 3
    assert g.codes()[0, 3] == 1 and g.codes()[0, 0] == 1

    full_space = code_from_defining_set(GF2, (1, 7), [])
    assert generator_polynomial(full_space) == BivariatePolynomial.one(GF2, (1, 7))

    with pytest.raises(ZeroCode):
        generator_polynomial(code_from_defining_set(GF2, (1, 7), OrbitSet.full(2, (1, 7))))
    not_columns = code_from_defining_set(GF2, (3, 7), orbit_closure([(1, 1)], 2, (3, 7)))
    with pytest.raises(ParameterError):
        generator_polynomial(not_columns)


def test_reed_solomon_generator_lifts_to_multiplied_code():
    rs = reed_solomon(field_of_order(256), 33, 0)
    g = generator_polynomial(rs)
    assert g.weight == 33
    C5 = multiply_dimension(rs, 5)
    lift = embedded_witness(rs, C5, g)
    assert lift.weight == 33
    assert lift == generator_polynomial(C5)


def test_embedded_witness_rejects_non_codewords(hamming):
    C3 = multiply_dimension(hamming, 3)
    with pytest.raises(NotACodeword):
        embedded_witness(hamming, C3, BivariatePolynomial.one(GF2, (1, 7)))


def test_lightest_witness(hamming):
    source, word = lightest_witness(hamming)
    assert word.weight == 3
    assert source in ("generator polynomial", "idempotent") or source.startswith("generator row")


def test_certify_hamming(hamming):
    for strategy in ("exhaustive", "witness+sdstar", "both"):
        certificate = certify_distance(hamming, strategy)
        assert certificate.exact
        assert certificate.verdict == "exact d=3"
        assert certificate.witness.weight == 3
    rendered = certify_distance(hamming).render()
    assert "verdict\texact d=3" in rendered
    assert rendered.splitlines()[0].startswith("code\t[7,4]")


def test_certify_multiplied_reed_solomon():
    rs = reed_solomon(field_of_order(16), 5, 0)
    C3 = multiply_dimension(rs, 3)
    certificate = certify_distance(C3, "witness+sdstar")
    assert certificate.verdict == "exact d=5"
    assert certificate.upper_source == "generator polynomial"
    with pytest.raises(BudgetExceeded):
        certify_distance(C3, "both")


def test_certify_multiplied_binary_bch():
    C3 = multiply_dimension(bch_univariate(GF2, 15, 3, 1), 3)
    certificate = certify_distance(C3, "witness+sdstar")
    assert certificate.lower_bound == 3
    assert certificate.verdict == "exact d=3"


def test_certify_errors(hamming):
    with pytest.raises(ParameterError):
        certify_distance(hamming, "guess")
    with pytest.raises(ZeroCode):
        certify_distance(code_from_defining_set(GF2, (1, 7), OrbitSet.full(2, (1, 7))))


def test_certificate_verdicts_and_verify(hamming):
    interval = DistanceCertificate("c", 3, "sd*", 5, "idempotent", None)
    assert interval.verdict == "interval 3<=d<=5"
    assert DistanceCertificate("c", 3, "sd*", None, None, None).verdict == "inconclusive d>=3"
    with pytest.raises(ValueError):
        DistanceCertificate("c", 5, "sd*", 3, "idempotent", None).verify(hamming)
    with pytest.raises(NotACodeword):
        DistanceCertificate("c", 1, "trivial", 1, "x", BivariatePolynomial.one(GF2, (1, 7))).verify(hamming)
