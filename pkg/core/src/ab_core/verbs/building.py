from ab_core.codes import (
    BchSpec,
    bch_bivariate,
    bch_dimension_lower_bound,
    bch_univariate,
    code_from_defining_set,
    multiply_dimension,
    reed_solomon,
)
from ab_core.errors import ParameterError
from ab_core.orbits import orbit_closure
from ab_core.registry import verb
from ab_core.verbs.params import (
    apply_caps,
    emit_code,
    load_code,
    parse_int_list,
    parse_moduli,
    parse_pair,
    parse_points,
    parse_q,
)


@verb
def construct(q: str, r: str, points: str = "[]", multiplier: str | None = None, out: str | None = None) -> str:
    """
    Build the code whose defining set is the orbit closure of --points.

    Args:
        q: Field size as p^m or a decimal prime power
        r: Moduli r1,r2 (or a single r for a cyclic code)
        points: JSON list of [a,b] pairs; the defining set is their q-orbit closure
        multiplier: Root pair u,v the points are relative to (default 1,1)
        out: Write the code file here instead of printing it

    Returns:
        The code file record.
    """
    F = parse_q(q)
    moduli = parse_moduli(r)
    pts = parse_points(points)
    mult = parse_pair(multiplier, "multiplier") if multiplier else None
    D = orbit_closure(pts, F.order, moduli)
    return emit_code(code_from_defining_set(F, moduli, D, mult), out)


@verb
def bch(q: str, r: str, delta: str, b: str = "0", gamma: str | None = None, out: str | None = None) -> str:
    """
    Build a BCH code: univariate for a single r, bivariate B_q(gamma, delta, b) for r1,r2.

    Args:
        q: Field size as p^m or a decimal prime power
        r: A single length r, or moduli r1,r2
        delta: Designed distance, one per axis in gamma (comma separated)
        b: Offsets, one per axis in gamma (comma separated, default 0)
        gamma: Axes carrying consecutive hyperplanes, a subset of 1,2 (default 2)
        out: Write the code file here instead of printing it

    Returns:
        The code file record.
    """
    F = parse_q(q)
    single = len(parse_int_list(r, "r")) == 1
    moduli = parse_moduli(r)
    deltas = parse_int_list(delta, "delta")
    offsets = parse_int_list(b, "b")
    axes = parse_int_list(gamma, "gamma") if gamma is not None else [2]
    if len(offsets) == 1 and len(axes) > 1:
        offsets = offsets * len(axes)
    if len(deltas) != len(axes) or len(offsets) != len(axes):
        raise ParameterError(f"--delta and --b need one value per axis in --gamma {axes}")
    if single:
        if axes != [2]:
            raise ParameterError("a single --r builds a cyclic code; --gamma must be 2")
        return emit_code(bch_univariate(F, moduli[1], deltas[0], offsets[0]), out)
    spec = BchSpec(tuple(axes), tuple(deltas), tuple(offsets))
    C = bch_bivariate(F, moduli, spec)
    bound = bch_dimension_lower_bound(moduli, F.order, spec)
    text = emit_code(C, out)
    return f"{text}\n# dimension {C.dimension} (lower bound {bound}), sd* >= {spec.designed_product}"


@verb
def rs(q: str, delta: int, b: int = 0, out: str | None = None) -> str:
    """
    Build the Reed-Solomon code of length q-1 with zeros alpha^b, ..., alpha^(b+delta-2).

    Args:
        q: Field size as p^m or a decimal prime power
        delta: Designed distance, 2 <= delta <= q-1
        b: First zero exponent
        out: Write the code file here instead of printing it
    """
    return emit_code(reed_solomon(parse_q(q), delta, b), out)


@verb
def multiply(in_: str, n: int, out: str | None = None, cap: int | None = None) -> str:
    """
    Multiply the dimension of a cyclic code by n: C_n has defining set Z_n x D(C) and the same sd*.

    Args:
        in_: Cyclic code file (- for standard input)
        n: Number of copies, coprime to q
        out: Write the multiplied code file here instead of printing it
        cap: Free-orbit cap for the msd searches behind sd*
    """
    if n < 1:
        raise ParameterError(f"--n must be positive, got {n}")
    apply_caps(cap)
    return emit_code(multiply_dimension(load_code(in_), n), out)
