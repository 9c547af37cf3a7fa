"""Golden tables for the three worked examples: a BCH pair over GF(4), a binary
BCH code of length 55 multiplied by 3, and RS(255,223) multiplied by 5.

Each example yields ``Check`` rows comparing a published value with the value
computed from scratch.
"""

from collections.abc import Callable
from typing import NamedTuple

from loguru import logger

from ab_core.apparent import orbit_matrix, sd_star_matrix
from ab_core.codes import (
    BchSpec,
    bch_bivariate,
    bch_dimension_lower_bound,
    bch_univariate,
    detect_bch_parameters,
    multiply_dimension,
    reed_solomon,
    singleton_defect,
)
from ab_core.field import field_of_order
from ab_core.oracle import certify_distance
from ab_core.orbits import multiplier_pairs, orbit_closure, orbit_partition


class Check(NamedTuple):
    example: int
    quantity: str
    expected: str
    computed: str
    passed: bool

    def render(self) -> str:
        return "\t".join([str(self.example), self.quantity, self.expected, self.computed, "PASS" if self.passed else "FAIL"])


def _equal(example: int, quantity: str, expected, computed) -> Check:
    return Check(example, quantity, str(expected), str(computed), expected == computed)


def _at_least(example: int, quantity: str, bound: int, computed: int) -> Check:
    return Check(example, quantity, f">={bound}", str(computed), computed >= bound)


def example_1() -> list[Check]:
    F = field_of_order(4)
    r = (7, 9)
    C1 = bch_bivariate(F, r, BchSpec((2,), (3,), (0,)))
    C2 = bch_bivariate(F, r, BchSpec((1, 2), (2, 3), (0, 0)))
    listed_1 = orbit_closure([(0, 0), (1, 0), (3, 0)] + [(t, 1) for t in range(7)], 4, r)
    listed_2 = listed_1 | orbit_closure([(0, 2), (0, 3), (0, 6)], 4, r)
    report_1 = sd_star_matrix(orbit_matrix(C1.defining_set))
    report_2 = sd_star_matrix(orbit_matrix(C2.defining_set))
    return [
        _equal(1, "D(C1) = listed orbits", True, C1.defining_set == listed_1),
        _equal(1, "|D(C1)|", 28, len(C1.defining_set)),
        _equal(1, "dim(C1)", 35, C1.dimension),
        _at_least(1, "dim(C1) vs lower bound", bch_dimension_lower_bound(r, 4, BchSpec((2,), (3,), (0,))), C1.dimension),
        _equal(1, "sd*(M(D(C1)))", 3, report_1.value),
        _equal(1, "shortcut fires on C1", True, report_1.shortcut_applicable),
        _equal(1, "D(C2) = D(C1) + Q(0,2) + Q(0,3) + Q(0,6)", True, C2.defining_set == listed_2),
        _equal(1, "dim(C2)", 30, C2.dimension),
        _equal(1, "sd*(M(D(C2)))", 6, report_2.value),
        _at_least(1, "sd*(M(D(C2))) vs delta_1*delta_2", 6, report_2.value),
    ]


def example_2() -> list[Check]:
    F = field_of_order(2)
    C = bch_univariate(F, 55, 7, 13)
    expected_D = orbit_closure([(0, 1), (0, 5)], 2, (1, 55))
    matches = detect_bch_parameters(C)
    C3 = multiply_dimension(C, 3)
    sd3 = C3.sd_star
    return [
        _equal(2, "D(C) = C(1) + C(5)", True, C.defining_set == expected_D),
        _equal(2, "dim(C)", 25, C.dimension),
        _equal(2, "detected BCH (delta, b)", (7, 13), (matches[0].delta, matches[0].b) if matches else None),
        _equal(2, "sd*(C)", 7, C.sd_star.value),
        _equal(2, "multiplier pairs for C_3", 80, len(multiplier_pairs(C3.r))),
        _equal(2, "dim(C_3)", 75, C3.dimension),
        _equal(2, "sd*(C_3)", 7, sd3.value),
    ]


def example_3() -> list[Check]:
    F = field_of_order(256)
    C = reed_solomon(F, 33, 0)
    C5 = multiply_dimension(C, 5)
    singletons = all(len(orbit) == 1 for orbit in orbit_partition(256, *C5.r))
    certificate = certify_distance(C5, "witness+sdstar")
    return [
        _equal(3, "dim(RS)", 223, C.dimension),
        _equal(3, "sd*(RS)", 33, C.sd_star.value),
        _equal(3, "singleton defect of RS", 0, singleton_defect(C, 33)),
        _equal(3, "dim(C_5)", 1115, C5.dimension),
        _equal(3, "q-orbits of Z_5 x Z_255 are points", True, singletons),
        _equal(3, "shortcut fires on C_5", True, C5.sd_report().shortcut_applicable),
        _equal(3, "sd*(C_5)", 33, C5.sd_star.value),
        _equal(3, "d(C_5) certificate", "exact d=33", certificate.verdict),
        _equal(3, "singleton defect of C_5", 128, singleton_defect(C5, 33)),
    ]


EXAMPLES: dict[int, Callable[[], list[Check]]] = {1: example_1, 2: example_2, 3: example_3}


def run_examples(numbers: list[int] | None = None) -> list[Check]:
    checks = []
    for number in numbers or sorted(EXAMPLES):
        logger.info(f"Reproducing example {number}")
        checks.extend(EXAMPLES[number]())
    return checks


def render_table(checks: list[Check]) -> str:
    return "\n".join(["example\tquantity\texpected\tcomputed\tstatus"] + [check.render() for check in checks])
