"""Line-oriented text records for fields, orbit sets, polynomials and codes.

Code files look like::

    p=2 m=1
    r=[3,55]
    multiplier=[1,1]
    defining_set_reps=[[0,1],[0,5],[1,1]]

Representatives are the lexicographically least element of each orbit of the
stored defining set, sorted. Readers reject anything else.
"""

import json
import re
import sys
from pathlib import Path

from ab_core.codes import AbelianCode, code_from_defining_set
from ab_core.errors import AbelianCodeError, FormatError
from ab_core.field import Field, make_field
from ab_core.fourier import BivariatePolynomial
from ab_core.orbits import OrbitSet, orbit_closure

_FIELD = re.compile(r"^p=(\d+) m=(\d+)(?: modulus=(\[[\d,\s]*\]))?$")
_ORBITS = re.compile(r"^q=(\d+) r=(\[[\d,\s]*\]) reps=(\[.*\])$")
_POLY = re.compile(r"^field=(p=\d+ m=\d+ modulus=\[[\d,\s]*\]) r=(\[[\d,\s]*\]) coeffs=(\[[\d,\s]*\])$")


def _json_list(text: str, what: str) -> list:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{what}: {exc}") from exc
    if not isinstance(value, list):
        raise FormatError(f"{what} must be a list")
    return value


def _moduli(text: str) -> tuple[int, int]:
    r = _json_list(text, "r")
    if len(r) != 2 or not all(isinstance(x, int) and x >= 1 for x in r):
        raise FormatError(f"r must be two positive integers, got {text}")
    return r[0], r[1]


def _pairs(text: str, what: str) -> list[tuple[int, int]]:
    pairs = _json_list(text, what)
    if not all(isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) for x in p) for p in pairs):
        raise FormatError(f"{what} must be a list of [a,b] pairs")
    return [(a, b) for a, b in pairs]


def read_field(text: str) -> Field:
    match = _FIELD.match(text.strip())
    if not match:
        raise FormatError(f"not a field record: {text.strip()!r}")
    try:
        field = make_field(int(match[1]), int(match[2]))
    except AbelianCodeError as exc:
        raise FormatError(f"field record: {exc}") from exc
    if match[3] is not None and tuple(_json_list(match[3], "modulus")) != field.modulus:
        raise FormatError(f"modulus {match[3]} is not the canonical modulus {list(field.modulus)}")
    return field


def _canonical_set(q: int, r: tuple[int, int], reps: list[tuple[int, int]]) -> OrbitSet:
    for a, b in reps:
        if not (0 <= a < r[0] and 0 <= b < r[1]):
            raise FormatError(f"representative [{a},{b}] is outside Z_{r[0]} x Z_{r[1]}")
    try:
        D = orbit_closure(reps, q, r)
    except AbelianCodeError as exc:
        raise FormatError(str(exc)) from exc
    if list(D.representatives) != reps:
        raise FormatError("representatives must be orbit-minimal, distinct and sorted")
    return D


def write_orbit_set(D: OrbitSet) -> str:
    return D.record()


def read_orbit_set(text: str) -> OrbitSet:
    match = _ORBITS.match(text.strip())
    if not match:
        raise FormatError(f"not an orbit-set record: {text.strip()!r}")
    return _canonical_set(int(match[1]), _moduli(match[2]), _pairs(match[3], "reps"))


def write_polynomial(f: BivariatePolynomial) -> str:
    return f.record()


def read_polynomial(text: str) -> BivariatePolynomial:
    match = _POLY.match(text.strip())
    if not match:
        raise FormatError(f"not a polynomial record: {text.strip()[:60]!r}")
    field = read_field(match[1])
    r = _moduli(match[2])
    codes = _json_list(match[3], "coeffs")
    if len(codes) != r[0] * r[1] or not all(isinstance(c, int) and 0 <= c < field.order for c in codes):
        raise FormatError(f"coeffs must be {r[0] * r[1]} element codes of {field.name}")
    return BivariatePolynomial.from_codes(field, r, codes)


def write_code(C: AbelianCode) -> str:
    reps = ",".join(f"[{a},{b}]" for a, b in C.defining_set.representatives)
    return "\n".join(
        [
            f"p={C.field.p} m={C.field.m}",
            f"r=[{C.r[0]},{C.r[1]}]",
            f"multiplier=[{C.multiplier[0]},{C.multiplier[1]}]",
            f"defining_set_reps=[{reps}]",
        ]
    ) + "\n"


def read_code(text: str) -> AbelianCode:
    """Parse a code file.

    Raises:
        FormatError: missing lines, malformed values or non-canonical representatives
    """
    entries = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("p="):
            entries["field"] = line
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise FormatError(f"unexpected line {line!r}")
        entries[key] = value
    missing = {"field", "r", "multiplier", "defining_set_reps"} - entries.keys()
    if missing:
        raise FormatError(f"code file lacks {', '.join(sorted(missing))}")

    field = read_field(entries["field"])
    r = _moduli(entries["r"])
    multiplier = _json_list(entries["multiplier"], "multiplier")
    if len(multiplier) != 2 or not all(isinstance(x, int) for x in multiplier):
        raise FormatError("multiplier must be two integers")
    if tuple(multiplier) != (multiplier[0] % r[0], multiplier[1] % r[1]):
        raise FormatError(f"multiplier {multiplier} is not reduced modulo {list(r)}")
    D = _canonical_set(field.order, r, _pairs(entries["defining_set_reps"], "defining_set_reps"))
    try:
        return code_from_defining_set(field, r, D, (multiplier[0], multiplier[1]))
    except AbelianCodeError as exc:
        raise FormatError(f"code file: {type(exc).__name__}: {exc}") from exc


def read_text(path: str) -> str:
    """File contents, or standard input for ``-``."""
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc


def write_text(path: str | None, text: str) -> None:
    """Write to a file; ``None`` or ``-`` leave the text to the caller's output stream."""
    if path in (None, "-"):
        return
    Path(path).write_text(text, encoding="utf-8")
