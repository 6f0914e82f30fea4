"""All subgroups between a prescribed subgroup T and an ambient group."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .core import FiniteGroup, GroupError, SubgroupSet

DEFAULT_NODE_CAP = 10**6


class NodeCapExceeded(GroupError):
    pass


@dataclass(frozen=True)
class OvergroupLattice:
    base: SubgroupSet
    ambient: SubgroupSet
    nodes: tuple[SubgroupSet, ...]  # sorted by (order, mask)
    counts: dict[int, int]  # index in the ambient group -> number of nodes

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def total(self) -> int:
        return len(self.nodes)

    def count_at_index(self, k: int) -> int:
        return self.counts.get(k, 0)

    def signature(self) -> list[tuple[int, int]]:
        return sorted(self.counts.items())


def right_coset_reps(H: SubgroupSet, within: SubgroupSet) -> list[int]:
    """One representative (smallest index) of each right coset ``Hg`` in ``within``."""
    G = H.group
    t = G.table
    seen = 0
    reps = []
    mem = H.members
    for g in within.members:
        if seen >> g & 1:
            continue
        reps.append(g)
        for h in mem:
            seen |= 1 << t[h][g]
    return reps


def join_element(H: SubgroupSet, g: int) -> SubgroupSet:
    """``<H, g>``, grown from the members of ``H``."""
    G = H.group
    t = G.table
    gens = H.generators + [g]
    mask = H.mask
    elems = list(H.members)
    for x in elems:
        row = t[x]
        for s in gens:
            y = row[s]
            if not mask >> y & 1:
                mask |= 1 << y
                elems.append(y)
    return SubgroupSet(G, mask)


def enumerate_overgroups(G: FiniteGroup, T: SubgroupSet, ambient: Optional[SubgroupSet] = None,
                         node_cap: int = DEFAULT_NODE_CAP) -> OvergroupLattice:
    """Every subgroup ``H`` with ``T <= H <= ambient`` (default ambient: ``G``).

    Saturation: each known ``H`` is joined with one element from every
    right coset of ``H`` outside it.  Any overgroup ``K > H`` contains such
    a join, so by induction on order every overgroup is reached.
    """
    if T.group is not G:
        raise GroupError("T is not a subgroup of G")
    top = ambient if ambient is not None else G.full
    if not T <= top:
        raise GroupError("T is not contained in the ambient subgroup")
    found = {T.mask: T}
    frontier = [T]
    while frontier:
        H = frontier.pop()
        for g in right_coset_reps(H, top):
            if g in H:
                continue
            K = join_element(H, g)
            if K.mask not in found:
                if len(found) >= node_cap:
                    raise NodeCapExceeded(f"more than {node_cap} overgroups")
                found[K.mask] = K
                frontier.append(K)
    nodes = tuple(sorted(found.values(), key=lambda H: (H.order, H.mask)))
    counts = Counter(top.order // H.order for H in nodes)
    return OvergroupLattice(T, top, nodes, dict(sorted(counts.items())))


def all_subgroups(G: FiniteGroup) -> tuple[SubgroupSet, ...]:
    return enumerate_overgroups(G, G.trivial).nodes


def conjugacy_representatives(G: FiniteGroup, subgroups) -> list[SubgroupSet]:
    """One subgroup per conjugacy class (the one with the smallest mask)."""
    gens = G.full.generators
    seen: set[int] = set()
    reps = []
    for H in sorted(subgroups, key=lambda H: (H.order, H.mask)):
        if H.mask in seen:
            continue
        orbit = {H.mask: H}
        queue = [H]
        for K in queue:
            for g in gens:
                L = K.conjugate(g)
                if L.mask not in orbit:
                    orbit[L.mask] = L
                    queue.append(L)
        seen.update(orbit)
        reps.append(orbit[min(orbit)])
    return reps
