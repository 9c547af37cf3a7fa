"""Flag parsing shared by the workbench verbs. Malformed flags raise ParameterError."""

import json
import re

from ab_core.codes import AbelianCode
from ab_core.context import set_enumeration_cap, set_msd_cap
from ab_core.errors import NonPrimeCharacteristic, ParameterError
from ab_core.field import Field, field_of_order
from ab_core.formats import read_code, read_text, write_code, write_text

_POWER = re.compile(r"^\s*(\d+)\s*\^\s*(\d+)\s*$")


def parse_int(text: str, flag: str) -> int:
    try:
        return int(str(text).strip())
    except ValueError:
        raise ParameterError(f"--{flag} expects a decimal integer, got {text!r}") from None


def parse_q(text: str) -> Field:
    """``2^8`` or ``256``. A size that is not a prime power is a usage error; the size cap is not."""
    match = _POWER.match(text)
    q = int(match[1]) ** int(match[2]) if match else parse_int(text, "q")
    try:
        return field_of_order(q)
    except NonPrimeCharacteristic as exc:
        raise ParameterError(f"--q {text}: {exc}") from exc


def parse_int_list(text: str, flag: str) -> list[int]:
    return [parse_int(part, flag) for part in str(text).split(",") if part.strip()]


def parse_moduli(text: str) -> tuple[int, int]:
    """``r1,r2``, or a single ``r`` for the cyclic case (1, r)."""
    values = parse_int_list(text, "r")
    if len(values) == 1:
        values = [1, values[0]]
    if len(values) != 2 or min(values) < 1:
        raise ParameterError(f"--r expects r1,r2 with positive entries, got {text!r}")
    return values[0], values[1]


def parse_pair(text: str, flag: str) -> tuple[int, int]:
    values = parse_int_list(text, flag)
    if len(values) != 2:
        raise ParameterError(f"--{flag} expects two integers u,v, got {text!r}")
    return values[0], values[1]


def parse_points(text: str) -> list[tuple[int, int]]:
    """A JSON list of [a,b] pairs."""
    try:
        points = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParameterError(f"--points is not JSON: {exc}") from exc
    if not isinstance(points, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) for x in p) for p in points
    ):
        raise ParameterError("--points expects a list of [a,b] integer pairs")
    return [(a, b) for a, b in points]


def apply_caps(cap: int | None, msd_cap: bool = True) -> None:
    """Install a per-invocation cap override for msd or for exhaustive enumeration."""
    if cap is not None and cap < 1:
        raise ParameterError(f"--cap must be positive, got {cap}")
    if msd_cap:
        set_msd_cap(cap)
    else:
        set_enumeration_cap(cap)


def load_code(path: str | None) -> AbelianCode:
    if not path:
        raise ParameterError("a code file is required (--in PATH, or - for standard input)")
    return read_code(read_text(path))


def emit_code(C: AbelianCode, out: str | None) -> str:
    """The code record, written to ``out`` when given; returns what to print."""
    record = write_code(C)
    if out in (None, "-"):
        return record.rstrip("\n")
    write_text(out, record)
    return f"wrote {out}: {C.describe()}"
