from ab_core.errors import ParameterError
from ab_core.registry import VerbOutput, verb
from ab_core.reproduce import EXAMPLES, render_table, run_examples


@verb
def reproduce(example: int | None = None) -> VerbOutput:
    """
    Recompute the three worked examples and compare every published value (PASS/FAIL per line).

    Args:
        example: Run only this example (1, 2 or 3)
    """
    if example is not None and example not in EXAMPLES:
        raise ParameterError(f"--example must be one of {', '.join(map(str, EXAMPLES))}")
    checks = run_examples([example] if example is not None else None)
    return VerbOutput(render_table(checks), ok=all(check.passed for check in checks))
