from ab_core.field import canonical_generator, root_of_unity, splitting_field
from ab_core.orbits import orbit_closure, orbit_partition
from ab_core.registry import verb
from ab_core.verbs.params import parse_moduli, parse_points, parse_q


@verb
def field(q: str, r: str | None = None) -> str:
    """
    Show the canonical GF(q): modulus, generator and, with --r, the splitting field and roots of unity.

    Args:
        q: Field size as p^m or a decimal prime power (e.g. 2^8 or 256)
        r: Moduli r1,r2 (or a single r); adds the splitting field L and the canonical roots

    Returns:
        Tab-separated key/value lines.
    """
    F = parse_q(q)
    lines = ["key\tvalue", f"field\t{F.record()}", f"generator\t{int(canonical_generator(F))}"]
    if r is not None:
        r1, r2 = parse_moduli(r)
        L, embedding = splitting_field(F, r1, r2)
        lines += [
            f"splitting\t{L.record()}",
            f"degree\t{L.m // F.m}",
            f"alpha\t{int(root_of_unity(L, r1))}",
            f"beta\t{int(root_of_unity(L, r2))}",
            f"embedding\t{','.join(str(int(c)) for c in embedding.table)}",
        ]
    return "\n".join(lines)


@verb
def orbits(q: str, r: str, points: str | None = None) -> str:
    """
    List the q-orbits of Z_r1 x Z_r2, or the orbits making up the closure of --points.

    Args:
        q: Field size as p^m or a decimal prime power
        r: Moduli r1,r2 (or a single r)
        points: JSON list of [a,b] pairs whose orbit closure is listed

    Returns:
        Table with representative, size and members of each orbit.
    """
    F = parse_q(q)
    moduli = parse_moduli(r)
    partition = orbit_partition(F.order, *moduli)
    if points is not None:
        closure = orbit_closure(parse_points(points), F.order, moduli)
        partition = [orbit for orbit in partition if orbit[0] in closure]
    lines = ["rep\tsize\tmembers"]
    for orbit in partition:
        members = " ".join(f"({a},{b})" for a, b in orbit)
        lines.append(f"({orbit[0].a},{orbit[0].b})\t{len(orbit)}\t{members}")
    return "\n".join(lines)
