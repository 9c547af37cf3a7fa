from ab_core.apparent import msd as matrix_msd
from ab_core.apparent import orbit_matrix
from ab_core.codes import count_optimized_multipliers, detect_bch_parameters
from ab_core.errors import ParameterError, ZeroCode
from ab_core.oracle import STRATEGIES, certify_distance, minimum_distance_exhaustive
from ab_core.orbits import apply_multiplier
from ab_core.registry import VerbOutput, verb
from ab_core.verbs.params import apply_caps, load_code, parse_pair

_LISTED_MULTIPLIERS = 16


@verb
def sd_star(in_: str, multiplier: str | None = None, cap: int | None = None) -> str:
    """
    Strong apparent distance of a code: the maximum over multiplier pairs of msd(M(u.D)).

    Args:
        in_: Code file (- for standard input)
        multiplier: Also report sd* of the orbit matrix seen through this pair u,v
        cap: Free-orbit cap for the exhaustive msd search

    Returns:
        sd*, the optimized multipliers and the per-axis report of one optimized view.
    """
    apply_caps(cap)
    C = load_code(in_)
    if C.is_zero():
        raise ZeroCode("the zero code has no strong apparent distance")
    sd = C.sd_star
    shown = " ".join(f"({u},{v})" for u, v in sd.optimized_multipliers[:_LISTED_MULTIPLIERS])
    if len(sd.optimized_multipliers) > _LISTED_MULTIPLIERS:
        shown += " ..."
    view = parse_pair(multiplier, "multiplier") if multiplier else sd.optimized_multipliers[0]
    lines = [
        "key\tvalue",
        f"code\t{C.describe()}",
        f"sd*(C)\t{sd.value}",
        f"optimized\t{count_optimized_multipliers(C)}",
        f"multipliers\t{shown}",
        f"view\t({view[0]},{view[1]})",
        C.sd_report(view).render(),
    ]
    return "\n".join(lines)


@verb
def msd(in_: str, multiplier: str | None = None, cap: int | None = None) -> str:
    """
    msd of the orbit matrix of a code's defining set (seen through --multiplier, default the stored one).

    Args:
        in_: Code file (- for standard input)
        multiplier: Multiplier pair u,v applied to the canonical defining set
        cap: Free-orbit cap for the exhaustive msd search
    """
    apply_caps(cap)
    C = load_code(in_)
    u, v = parse_pair(multiplier, "multiplier") if multiplier else C.multiplier
    M = orbit_matrix(apply_multiplier(C.canonical_defining_set, u, v))
    return str(matrix_msd(M))


@verb
def detect_bch(in_: str) -> str:
    """
    Find every (delta, b, u) for which a cyclic code is the BCH code B_q(delta, b) under multiplier u.

    Args:
        in_: Cyclic code file (- for standard input)
    """
    C = load_code(in_)
    matches = detect_bch_parameters(C)
    if not matches:
        return "not a BCH code for any multiplier"
    lines = ["delta\tb\tmultiplier"]
    lines += [f"{m.delta}\t{m.b}\t{m.multiplier}" for m in matches]
    return "\n".join(lines)


@verb
def mindist(in_: str, cap: int | None = None) -> str:
    """
    Exact minimum distance by enumerating the message space.

    Args:
        in_: Code file (- for standard input)
        cap: Largest number of messages to enumerate
    """
    apply_caps(cap, msd_cap=False)
    return str(minimum_distance_exhaustive(load_code(in_)))


@verb
def certify(in_: str, strategy: str = "both", cap: int | None = None) -> VerbOutput:
    """
    Certify the minimum distance with sd* and a witness word, by enumeration, or both.

    Args:
        in_: Code file (- for standard input)
        strategy: One of exhaustive, witness+sdstar, both
        cap: Largest number of messages to enumerate
    """
    if strategy not in STRATEGIES:
        raise ParameterError(f"--strategy must be one of {', '.join(STRATEGIES)}")
    apply_caps(cap, msd_cap=False)
    certificate = certify_distance(load_code(in_), strategy)
    return VerbOutput(certificate.render())
