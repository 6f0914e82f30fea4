"""Sylow subgroups by normalizer ascent, and the families ``Syl_p(G, T)``."""

from __future__ import annotations

from dataclasses import dataclass

from ..exact import is_prime, p_part
from .core import FiniteGroup, SubgroupSet, normalizer


class SylowGrowthError(RuntimeError):
    """Raised if normalizer ascent stalls, which Sylow theory rules out."""


def sylow_subgroup(G: FiniteGroup, p: int) -> SubgroupSet:
    """A Sylow p-subgroup of ``G`` (trivial if ``p`` does not divide ``|G|``).

    A p-subgroup ``P`` that is not Sylow is proper in the p-part of its
    normalizer, so ``N(P)`` has an element ``x`` outside ``P`` with
    ``x**p`` in ``P``; then ``<P, x>`` is a p-group of order ``p|P|``.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    target = p_part(G.order, p)
    P = G.trivial
    while P.order < target:
        N = normalizer(G, P)
        step = None
        for x in N.members:
            if x not in P and G.power(x, p) in P:
                step = x
                break
        if step is None:
            raise SylowGrowthError(f"no p-element to adjoin at order {P.order} (p={p}, |G|={G.order})")
        Q = G.closure(P.generators + [step])
        if Q.order != P.order * p:
            raise SylowGrowthError(f"ascent jumped from {P.order} to {Q.order}")
        P = Q
    return P


@dataclass(frozen=True)
class SylowFamily:
    p: int
    base: SubgroupSet
    members: tuple[SubgroupSet, ...]
    orbits: tuple[tuple[SubgroupSet, ...], ...]  # T-conjugacy orbits

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)


def sylow_family(G: FiniteGroup, T: SubgroupSet, p: int) -> SylowFamily:
    """Sylow p-subgroups ``P`` of ``G`` with ``P & T`` Sylow in ``T``, split into T-orbits."""
    P0 = sylow_subgroup(G, p)
    conjugates: dict[int, SubgroupSet] = {}
    for g in range(G.order):
        Q = P0.conjugate(g)
        conjugates.setdefault(Q.mask, Q)
    want = p_part(T.order, p)
    members = [Q for m, Q in sorted(conjugates.items()) if (Q.mask & T.mask).bit_count() == want]
    remaining = {Q.mask: Q for Q in members}
    tgens = T.generators
    orbits = []
    for Q in members:
        if Q.mask not in remaining:
            continue
        orbit = {Q.mask: Q}
        queue = [Q]
        for K in queue:
            for t in tgens:
                L = K.conjugate(t)
                if L.mask not in orbit:
                    orbit[L.mask] = L
                    queue.append(L)
        for m in orbit:
            remaining.pop(m, None)
        orbits.append(tuple(orbit[m] for m in sorted(orbit)))
    return SylowFamily(p, T, tuple(members), tuple(orbits))
