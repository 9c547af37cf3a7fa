import io

import pytest

from ab_core.codes import BchSpec, bch_bivariate, bch_univariate, multiply_dimension
from ab_core.errors import FormatError
from ab_core.field import field_of_order
from ab_core.formats import (
    read_code,
    read_field,
    read_orbit_set,
    read_polynomial,
    read_text,
    write_code,
    write_orbit_set,
    write_polynomial,
    write_text,
)
from ab_core.fourier import BivariatePolynomial
from ab_core.orbits import orbit_closure

HAMMING_RECORD = "p=2 m=1\nr=[1,7]\nmultiplier=[0,1]\ndefining_set_reps=[[0,1]]\n"


def test_write_code_is_canonical():
    hamming = bch_univariate(field_of_order(2), 7, 3, 1)
    assert write_code(hamming) == HAMMING_RECORD


def test_code_record_round_trip():
    F = field_of_order(4)
    C = bch_bivariate(F, (7, 9), BchSpec((1, 2), (2, 3), (0, 0)))
    assert read_code(write_code(C)) == C
    C3 = multiply_dimension(bch_univariate(field_of_order(2), 55, 7, 13), 3).with_multiplier(2, 7)
    parsed = read_code(write_code(C3))
    assert parsed.multiplier == (2, 7)
    assert parsed.canonical_defining_set == C3.canonical_defining_set


def test_read_code_skips_comments():
    text = "# hamming\n\n" + HAMMING_RECORD + "# dimension 4\n"
    assert read_code(text).dimension == 4


@pytest.mark.parametrize(
    "text",
    [
        "p=2 m=1\nr=[1,7]\nmultiplier=[0,1]\n",
        "p=2 m=1\nr=[1,7]\nmultiplier=[0,1]\ndefining_set_reps=[[0,2]]\n",
        "p=2 m=1\nr=[1,7]\nmultiplier=[0,1]\ndefining_set_reps=[[0,3],[0,1]]\n",
        "p=2 m=1\nr=[1,7]\nmultiplier=[0,8]\ndefining_set_reps=[[0,1]]\n",
        "p=2 m=1\nr=[1,7]\nmultiplier=[0,7]\ndefining_set_reps=[[0,1]]\n",
        "p=2 m=1\nr=[2,7]\nmultiplier=[1,1]\ndefining_set_reps=[]\n",
        "p=4 m=1\nr=[1,7]\nmultiplier=[0,1]\ndefining_set_reps=[]\n",
        "p=2 m=1\nr=[1,7]\nmultiplier=[0,1]\ndefining_set_reps=[[0,9]]\n",
        "p=2 m=1\nr=[1,7]\nmultiplier=[0,1]\ndefining_set_reps=[[0,1]]\nbogus\n",
    ],
)
def test_read_code_rejects_malformed_records(text):
    with pytest.raises(FormatError):
        read_code(text)


def test_field_records():
    F = field_of_order(16)
    assert read_field(F.record()) == F
    assert read_field("p=2 m=4") == F
    with pytest.raises(FormatError):
        read_field("p=2 m=4 modulus=[1,0,0,1,1]")
    with pytest.raises(FormatError):
        read_field("q=16")


def test_orbit_set_records():
    D = orbit_closure([(0, 1), (0, 5)], 2, (1, 55))
    assert read_orbit_set(write_orbit_set(D)) == D
    with pytest.raises(FormatError):
        read_orbit_set("q=2 r=[1,7] reps=[[0,2]]")


def test_polynomial_records():
    F = field_of_order(4)
    f = BivariatePolynomial.from_codes(F, (2, 3), [0, 1, 2, 3, 0, 1])
    assert write_polynomial(f) == "field=p=2 m=2 modulus=[1,1,1] r=[2,3] coeffs=[0,1,2,3,0,1]"
    assert read_polynomial(write_polynomial(f)) == f
    with pytest.raises(FormatError):
        read_polynomial("field=p=2 m=2 modulus=[1,1,1] r=[2,3] coeffs=[0,1,2,3,0,4]")
    with pytest.raises(FormatError):
        read_polynomial("field=p=2 m=2 modulus=[1,1,1] r=[2,3] coeffs=[0,1]")


def test_text_io(tmp_path, monkeypatch):
    path = tmp_path / "hamming.code"
    write_text(str(path), HAMMING_RECORD)
    assert read_text(str(path)) == HAMMING_RECORD
    monkeypatch.setattr("sys.stdin", io.StringIO(HAMMING_RECORD))
    assert read_text("-") == HAMMING_RECORD
    with pytest.raises(FormatError):
        read_text(str(tmp_path / "missing.code"))
