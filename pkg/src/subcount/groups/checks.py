"""Concrete-instance checks of the subgroup-count bounds."""

from __future__ import annotations

from typing import Optional

from ..exact import DEFAULT_MAX_LEVEL, Decision, compare, factorize, p_part
from ..qfunc import bound_f, bound_main, gauss_binom, sub_ceiling
from ..report import Verdict, VerificationReport, format_decimal, worst
from .core import FiniteGroup, GroupError, SubgroupSet
from .lattice import OvergroupLattice, enumerate_overgroups
from .sylow import sylow_family

_VERDICT = {
    Decision.HOLDS: Verdict.VERIFIED,
    Decision.FAILS: Verdict.COUNTEREXAMPLE,
    Decision.UNDECIDED: Verdict.UNDECIDED,
}


def _prime_power(n: int) -> Optional[tuple[int, int]]:
    if n == 1:
        return None
    fac = factorize(n)
    if fac.length != 1:
        return None
    return fac.factors[0]


def _lattice(G, T, lattice):
    return lattice if lattice is not None else enumerate_overgroups(G, T)


def _inputs(G: FiniteGroup, T: SubgroupSet) -> dict:
    return {"group": G.name or f"order {G.order}", "order": G.order, "T_order": T.order,
            "T_generators": T.generators}


def check_pgroup_bound(G: FiniteGroup, T: SubgroupSet, ambient: Optional[SubgroupSet] = None,
                       lattice: Optional[OvergroupLattice] = None,
                       max_level: int = DEFAULT_MAX_LEVEL) -> VerificationReport:
    """Per-index counts of overgroups of ``T`` in a p-group against Gaussian binomials.

    ``ambient`` (default ``G``) must have prime-power order.  Also checks
    the total against ``S(p, c)`` where ``p**c = [ambient:T]``.
    """
    P = ambient if ambient is not None else G.full
    pp = _prime_power(P.order)
    if P.order != 1 and pp is None:
        raise GroupError(f"order {P.order} is not a prime power")
    if not T <= P:
        raise GroupError("T is not contained in the p-group")
    if lattice is None or lattice.ambient.mask != P.mask:
        lattice = enumerate_overgroups(G, T, ambient=P)
    index = P.order // T.order
    inputs = {**_inputs(G, T), "p_group_order": P.order}
    if index == 1:
        w = {"index": 1, "counts": {1: 1}, "total": 1, "tight": True}
        return VerificationReport("pgroup-bound", inputs, Verdict.VERIFIED, [w])
    p, c = factorize(index).factors[0]
    rows = []
    verdicts = []
    for k in range(c + 1):
        count = lattice.count_at_index(p**k)
        ceiling = gauss_binom(c, k, p)
        ok = count <= ceiling
        verdicts.append(Verdict.VERIFIED if ok else Verdict.COUNTEREXAMPLE)
        rows.append({"k": k, "count": count, "gauss_binom": ceiling, "tight": count == ceiling})
    cmp = compare(lattice.total, lambda level: sub_ceiling(p, c, level).value, max_level)
    verdicts.append(_VERDICT[cmp.decision])
    summary = {
        "p": p, "c": c, "total": lattice.total, "S": cmp.rhs,
        "tight": all(r["tight"] for r in rows),
    }
    return VerificationReport("pgroup-bound", inputs, worst(verdicts), [summary, *rows], cmp.level)


def check_orbit_bound(G: FiniteGroup, T: SubgroupSet, p: int) -> VerificationReport:
    """Number of T-orbits on ``Syl_p(G, T)`` is at most ``[G:T] / p**c``."""
    fam = sylow_family(G, T, p)
    index = G.order // T.order
    pc = p_part(index, p)
    bound = index // pc
    ok = fam.orbit_count <= bound
    w = {"p": p, "c": factorize(pc).factors[0][1] if pc > 1 else 0, "family_size": len(fam.members),
         "orbits": fam.orbit_count, "bound": bound, "tight": fam.orbit_count == bound}
    verdict = Verdict.VERIFIED if ok else Verdict.COUNTEREXAMPLE
    return VerificationReport("orbit-bound", {**_inputs(G, T), "p": p}, verdict, [w])


def check_main_theorem(G: FiniteGroup, T: SubgroupSet, lattice: Optional[OvergroupLattice] = None,
                       max_level: int = DEFAULT_MAX_LEVEL) -> VerificationReport:
    """``|sub(G,T)|`` against the closed-form bound and, for index > 1, against ``f([G:T])``."""
    lattice = _lattice(G, T, lattice)
    count = lattice.total
    n = G.order // T.order
    main = compare(count, lambda level: bound_main(n, level), max_level)
    verdicts = [_VERDICT[main.decision]]
    witnesses = [{"bound": "main", "count": count, "index": n, "value": main.rhs,
                  "margin_lo": format_decimal(main.rhs.lo / count)}]
    level = main.level
    if n > 1:
        fac = factorize(n)
        mid = compare(count, lambda level: bound_f(fac, level), max_level)
        verdicts.append(_VERDICT[mid.decision])
        witnesses.append({"bound": "f", "count": count, "index": n, "value": mid.rhs,
                          "margin_lo": format_decimal(mid.rhs.lo / count)})
        level = max(level, mid.level)
    return VerificationReport("main-theorem", _inputs(G, T), worst(verdicts), witnesses, level)


# -- block systems -----------------------------------------------------------

def coset_action(G: FiniteGroup, T: SubgroupSet) -> tuple[list[int], list[tuple[int, ...]]]:
    """Right cosets ``Tg`` as points 0.. (``T`` is point 0) and generator images on them."""
    t = G.table
    label = [-1] * G.order
    reps = []
    for g in range(G.order):
        if label[g] >= 0:
            continue
        for h in T.members:
            label[t[h][g]] = len(reps)
        reps.append(g)
    gens = G.full.generators or [0]
    images = [tuple(label[t[r][g]] for r in reps) for g in gens]
    return reps, images


def _minimal_block(images: list[tuple[int, ...]], seed: list[int]) -> int:
    """Bitmask of the smallest block containing ``seed`` (Atkinson's merge)."""
    n = len(images[0])
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pending = []
    for s in seed[1:]:
        a, b = find(seed[0]), find(s)
        if a != b:
            parent[b] = a
            pending.append((seed[0], s))
    while pending:
        a, b = pending.pop()
        for img in images:
            x, y = find(img[a]), find(img[b])
            if x != y:
                parent[y] = x
                pending.append((img[a], img[b]))
    root = find(0)
    mask = 0
    for x in range(n):
        if find(x) == root:
            mask |= 1 << x
    return mask


def block_systems(G: FiniteGroup, T: SubgroupSet) -> list[int]:
    """Blocks containing point 0 of the action on right cosets, one per block system."""
    reps, images = coset_action(G, T)
    n = len(reps)
    found = {1}
    queue = [1]
    while queue:
        B = queue.pop()
        members = [x for x in range(n) if B >> x & 1]
        for x in range(n):
            if B >> x & 1:
                continue
            C = _minimal_block(images, members + [x])
            if C not in found:
                found.add(C)
                queue.append(C)
    return sorted(found)


def count_block_systems(G: FiniteGroup, T: SubgroupSet, lattice: Optional[OvergroupLattice] = None,
                        max_level: int = DEFAULT_MAX_LEVEL) -> VerificationReport:
    """Block systems of ``G`` on ``G/T`` counted independently, compared with ``|sub(G,T)|``."""
    blocks = block_systems(G, T)
    lattice = _lattice(G, T, lattice)
    n = G.order // T.order
    verdicts = [Verdict.VERIFIED if len(blocks) == lattice.total else Verdict.COUNTEREXAMPLE]
    cmp = compare(len(blocks), lambda level: bound_main(n, level), max_level)
    verdicts.append(_VERDICT[cmp.decision])
    sizes = sorted(b.bit_count() for b in blocks)
    w = {"degree": n, "block_systems": len(blocks), "overgroups": lattice.total,
         "block_sizes": sizes, "bound": cmp.rhs}
    return VerificationReport("block-systems", _inputs(G, T), worst(verdicts), [w], cmp.level)


def verify_pair(G: FiniteGroup, T: SubgroupSet, max_level: int = DEFAULT_MAX_LEVEL,
                blocks: bool = True) -> list[VerificationReport]:
    """Every applicable check for one ``(G, T)``."""
    lattice = enumerate_overgroups(G, T)
    reports = [check_main_theorem(G, T, lattice, max_level)]
    if _prime_power(G.order) is not None:
        reports.append(check_pgroup_bound(G, T, lattice=lattice, max_level=max_level))
    if G.order > 1:
        for p, _ in factorize(G.order).factors:
            reports.append(check_orbit_bound(G, T, p))
    if blocks:
        reports.append(count_block_systems(G, T, lattice, max_level))
    return reports
