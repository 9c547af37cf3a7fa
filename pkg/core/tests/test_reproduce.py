import pytest

from ab_core.reproduce import EXAMPLES, Check, render_table, run_examples


@pytest.mark.parametrize("number", sorted(EXAMPLES))
def test_published_values_are_reproduced(number):
    checks = run_examples([number])
    failed = [check.render() for check in checks if not check.passed]
    assert not failed, "\n".join(failed)
    assert all(check.example == number for check in checks)


def test_render_table():
    checks = [Check(1, "dim(C1)", "35", "35", True), Check(1, "sd*", "3", "2", False)]
    lines = render_table(checks).splitlines()
    assert lines[0] == "example\tquantity\texpected\tcomputed\tstatus"
    assert lines[1] == "1\tdim(C1)\t35\t35\tPASS"
    assert lines[2].endswith("\tFAIL")
