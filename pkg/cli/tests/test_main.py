"""End-to-end runs of the workbench through Click's test runner."""
import pytest
from click.testing import CliRunner

from ab_cli import __version__
from ab_cli.main import _run_verb, cli

HAMMING_RECORD = "p=2 m=1\nr=[1,7]\nmultiplier=[0,1]\ndefining_set_reps=[[0,1]]\n"


@pytest.fixture
def runner():
    return CliRunner()


def test_help_lists_every_verb(runner):
    result = runner.invoke(cli, ["--help"])
    assert result.exit_code == 0
    for name in ("field", "orbits", "construct", "bch", "rs", "multiply", "sd-star", "msd", "detect-bch",
                 "mindist", "certify", "reproduce"):
        assert name in result.output


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_bch_multiply_mindist_pipeline(runner, tmp_path):
    hamming, h3 = tmp_path / "hamming.code", tmp_path / "h3.code"
    result = runner.invoke(cli, ["bch", "--q", "2", "--r", "7", "--delta", "3", "--b", "1", "--out", str(hamming)])
    assert result.exit_code == 0, result.output
    assert hamming.read_text() == HAMMING_RECORD

    result = runner.invoke(cli, ["multiply", str(hamming), "--n", "3", "--out", str(h3)])
    assert result.exit_code == 0, result.output
    assert "[21,12]" in result.output

    result = runner.invoke(cli, ["mindist", str(h3)])
    assert result.exit_code == 0, result.output
    assert result.output.strip() == "3"

    result = runner.invoke(cli, ["sd-star", "--in", str(h3)])
    assert result.exit_code == 0, result.output
    assert "sd*(C)\t3" in result.output.splitlines()


def test_code_from_standard_input(runner):
    result = runner.invoke(cli, ["mindist", "-"], input=HAMMING_RECORD)
    assert result.exit_code == 0, result.output
    assert result.output.strip() == "3"

    result = runner.invoke(cli, ["detect-bch", "-"], input=HAMMING_RECORD)
    assert result.exit_code == 0, result.output
    assert "3\t1\t1" in result.output.splitlines()


def test_certify(runner):
    result = runner.invoke(cli, ["certify", "-", "--strategy", "witness+sdstar"], input=HAMMING_RECORD)
    assert result.exit_code == 0, result.output
    assert "verdict\texact d=3" in result.output


def test_bivariate_bch_reports_dimension(runner):
    result = runner.invoke(cli, ["bch", "--q", "2^2", "--r", "7,9", "--gamma", "2", "--delta", "3"])
    assert result.exit_code == 0, result.output
    assert "# dimension 35 (lower bound 21), sd* >= 3" in result.output


# --- Exit status: 2 for usage errors, 1 for algebraic errors ---------------------------


def test_zero_code_is_an_algebraic_error(runner):
    result = runner.invoke(cli, ["construct", "--q", "2", "--r", "7", "--points", "[[0,0],[0,1],[0,3]]"])
    assert result.exit_code == 0, result.output
    record = result.output

    for verb in ("mindist", "sd-star"):
        result = runner.invoke(cli, [verb, "-"], input=record)
        assert result.exit_code == 1
        assert "error: ZeroCode" in result.output


def test_not_coprime_is_an_algebraic_error(runner):
    result = runner.invoke(cli, ["multiply", "-", "--n", "2"], input=HAMMING_RECORD)
    assert result.exit_code == 1
    assert "error: NotCoprime" in result.output


def test_bad_field_size_is_a_usage_error(runner):
    result = runner.invoke(cli, ["field", "--q", "6"])
    assert result.exit_code == 2
    result = runner.invoke(cli, ["bch", "--q", "2", "--r", "7", "--delta", "3", "--b", "1,2"])
    assert result.exit_code == 2


def test_field_size_cap_is_an_algebraic_error(runner, monkeypatch):
    result = runner.invoke(cli, ["field", "--q", "2^33"])
    assert result.exit_code == 1
    assert "error: SizeCapExceeded" in result.output

    monkeypatch.setenv("ABELIAN_FIELD_SIZE_CAP", "4")
    result = runner.invoke(cli, ["field", "--q", "2", "--r", "7"])
    assert result.exit_code == 1
    assert "error: SizeCapExceeded" in result.output


def test_unexpected_failure_uses_the_error_envelope(capsys):
    def broken():
        raise RuntimeError("boom")

    with pytest.raises(SystemExit) as info:
        _run_verb(broken, {})
    assert info.value.code == 1
    assert "error: internal_error: RuntimeError: boom" in capsys.readouterr().err


def test_path_and_in_are_exclusive(runner, tmp_path):
    path = tmp_path / "hamming.code"
    path.write_text(HAMMING_RECORD)
    result = runner.invoke(cli, ["mindist", str(path), "--in", str(path)])
    assert result.exit_code == 2
    result = runner.invoke(cli, ["mindist"])
    assert result.exit_code == 2


def test_malformed_code_file(runner):
    result = runner.invoke(cli, ["mindist", "-"], input="p=2 m=1\nr=[1,7]\n")
    assert result.exit_code == 1
    assert "error: FormatError" in result.output


def test_reproduce_first_example(runner):
    result = runner.invoke(cli, ["reproduce", "--example", "1"])
    assert result.exit_code == 0, result.output
    assert "FAIL" not in result.output
    assert result.output.splitlines()[0] == "example\tquantity\texpected\tcomputed\tstatus"
    result = runner.invoke(cli, ["reproduce", "--example", "4"])
    assert result.exit_code == 2
