"""Brute-force subgroup oracle: filter candidate subsets for closure.

A subgroup containing T is a union of left cosets ``gT``, so candidates
are the subsets of the ``[G:T]`` left cosets that include T itself and
whose size divides ``|G|``.  Each candidate is checked against every
product ``a*b`` of the Cayley table, vectorized over candidates.  Nothing
here shares code with the saturation search.
"""

from __future__ import annotations

import numpy as np

from .core import FiniteGroup, SubgroupSet

ORACLE_MAX_COSETS = 26
_CHUNK = 1 << 18


def _left_cosets(G: FiniteGroup, T: SubgroupSet) -> list[list[int]]:
    t = G.table
    seen = set(T.members)
    cosets = [sorted(T.members)]
    for g in range(G.order):
        if g in seen:
            continue
        coset = sorted({t[g][h] for h in T.members})
        seen.update(coset)
        cosets.append(coset)
    return cosets


def brute_force_overgroups(G: FiniteGroup, T: SubgroupSet) -> list[int]:
    """Sorted masks of all subgroups containing ``T``, by exhaustive filtering."""
    cosets = _left_cosets(G, T)
    k = len(cosets) - 1
    if k > ORACLE_MAX_COSETS:
        raise ValueError(f"oracle limited to {ORACLE_MAX_COSETS} free cosets, got {k}")
    n = G.order
    tsize = T.order
    table = np.array(G.table, dtype=np.int64)
    # membership[j, x]: coset j+1 contains element x
    membership = np.zeros((k, n), dtype=bool)
    for j, coset in enumerate(cosets[1:]):
        membership[j, coset] = True
    base_row = np.zeros(n, dtype=bool)
    base_row[cosets[0]] = True

    ok_sizes = np.array([(c + 1) * tsize for c in range(k + 1)])
    ok_counts = np.flatnonzero(n % ok_sizes == 0)

    found: list[int] = []
    total = 1 << k
    for start in range(0, total, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        bits = ((codes[None, :] >> np.arange(k, dtype=np.int64)[:, None]) & 1).astype(bool)
        keep = np.isin(bits.sum(axis=0), ok_counts)
        bits = bits[:, keep]
        if not bits.shape[1]:
            continue
        # elem[x, i]: element x lies in candidate i
        elem = (membership.T.astype(np.uint8) @ bits.astype(np.uint8)).astype(bool)
        elem[base_row] = True
        bad = np.zeros(elem.shape[1], dtype=bool)
        for a in range(n):
            ea = elem[a]
            for b in range(n):
                bad |= ea & elem[b] & ~elem[table[a, b]]
        for col in np.flatnonzero(~bad):
            mask = 0
            for x in np.flatnonzero(elem[:, col]):
                mask |= 1 << int(x)
            found.append(mask)
    return sorted(found)
