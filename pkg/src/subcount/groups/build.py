"""Standard permutation groups and a cycle-notation parser."""

from __future__ import annotations

import re

from .core import DEFAULT_ORDER_CAP, FiniteGroup, GroupError, Perm, compose, perm_from_cycles

_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse ``"(0 1 2)(3 4)"``; ``"()"`` is the identity.  Points are 0-based."""
    s = text.strip()
    if not s or _CYCLE.sub("", s).strip():
        raise GroupError(f"bad cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE.findall(s):
        parts = body.replace(",", " ").split()
        try:
            cyc = [int(x) for x in parts]
        except ValueError:
            raise GroupError(f"bad cycle notation: {text!r}") from None
        if cyc:
            cycles.append(cyc)
    return perm_from_cycles(cycles, degree)


def format_cycles(p: Perm) -> str:
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group needs n >= 1")
    return FiniteGroup.from_permutations(n, [tuple((i + 1) % n for i in range(n))], f"C{n}")


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given order (symmetries of an ``order/2``-gon, ``order >= 6``)."""
    if order < 6 or order % 2:
        raise GroupError("dihedral order must be even and >= 6")
    n = order // 2
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return FiniteGroup.from_permutations(n, [rot, ref], f"D{order}")


def symmetric(k: int) -> FiniteGroup:
    if k < 1:
        raise GroupError("symmetric group needs k >= 1")
    if k == 1:
        return FiniteGroup.from_permutations(1, [(0,)], "S1")
    swap = perm_from_cycles([[0, 1]], k)
    cyc = tuple((i + 1) % k for i in range(k))
    return FiniteGroup.from_permutations(k, [swap, cyc], f"S{k}")


def alternating(k: int) -> FiniteGroup:
    if k < 3:
        return FiniteGroup.from_permutations(max(k, 1), [tuple(range(max(k, 1)))], f"A{k}")
    gens = [perm_from_cycles([[0, 1, i]], k) for i in range(2, k)]
    return FiniteGroup.from_permutations(k, gens, f"A{k}")


def elementary_abelian(p: int, a: int) -> FiniteGroup:
    """``(C_p)^a`` acting on ``a`` disjoint blocks of ``p`` points."""
    if a < 1:
        raise GroupError("rank must be >= 1")
    degree = p * a
    gens = []
    for j in range(a):
        gens.append(perm_from_cycles([list(range(j * p, (j + 1) * p))], degree))
    return FiniteGroup.from_permutations(degree, gens, f"{p}^{a}")


# quaternion units as (sign, unit), unit in 1, i, j, k = 0..3
_UNIT_MUL = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def quaternion8() -> FiniteGroup:
    """Q8 acting on its own 8 elements by right translation."""
    elems = [(s, u) for u in range(4) for s in (1, -1)]
    pos = {e: n for n, e in enumerate(elems)}

    def mul(x, y):
        s, u = _UNIT_MUL[(x[1], y[1])]
        return (x[0] * y[0] * s, u)

    gens = []
    for g in [(1, 1), (1, 2)]:
        gens.append(tuple(pos[mul(x, g)] for x in elems))
    return FiniteGroup.from_permutations(8, gens, "Q8")


def direct_product(G: FiniteGroup, H: FiniteGroup, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Product of two permutation groups acting on the disjoint union of their points."""
    if G.perm_generators is None or H.perm_generators is None:
        raise GroupError("direct_product needs permutation groups")
    m, n = G.degree, H.degree
    gens = [tuple(g) + tuple(range(m, m + n)) for g in G.perm_generators]
    gens += [tuple(range(m)) + tuple(m + x for x in h) for h in H.perm_generators]
    return FiniteGroup.from_permutations(m + n, gens, f"{G.name}x{H.name}", cap)


def perm_product(*perms: Perm) -> Perm:
    out = perms[0]
    for p in perms[1:]:
        out = compose(out, p)
    return out


def by_name(spec: dict) -> FiniteGroup:
    """Build a group from a corpus entry such as ``{"family": "dihedral", "order": 8}``."""
    family = spec["family"]
    if family == "cyclic":
        return cyclic(spec["order"])
    if family == "dihedral":
        return dihedral(spec["order"])
    if family == "symmetric":
        return symmetric(spec["degree"])
    if family == "alternating":
        return alternating(spec["degree"])
    if family == "elementary_abelian":
        return elementary_abelian(spec["p"], spec["rank"])
    if family == "quaternion":
        return quaternion8()
    if family == "product":
        return direct_product(by_name(spec["left"]), by_name(spec["right"]))
    raise GroupError(f"unknown group family {family!r}")
