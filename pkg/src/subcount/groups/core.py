"""Finite groups as Cayley tables, subgroups as bitmasks over element indices.

Element 0 is always the identity.  Groups built from permutations index
their elements breadth-first from the identity, multiplying on the right
by the generators in the order given, so indices are reproducible.

Permutations are tuples of images; products act left to right,
``(x * y)[i] == y[x[i]]``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

DEFAULT_ORDER_CAP = 5000

# Set SUBCOUNT_CHECK_INVARIANTS=1 (the test suite does) to verify closure
# on every SubgroupSet that is constructed.
CHECK_INVARIANTS = os.environ.get("SUBCOUNT_CHECK_INVARIANTS", "") not in ("", "0")

Perm = tuple[int, ...]


class GroupError(ValueError):
    pass


class OrderCapExceeded(GroupError):
    pass


def check_perm(p: Sequence[int], degree: int) -> Perm:
    p = tuple(p)
    if len(p) != degree or sorted(p) != list(range(degree)):
        raise GroupError(f"not a permutation of 0..{degree - 1}: {p}")
    return p


def compose(x: Perm, y: Perm) -> Perm:
    """``x`` then ``y``."""
    return tuple(y[i] for i in x)


def perm_from_cycles(cycles: Iterable[Sequence[int]], degree: int) -> Perm:
    image = list(range(degree))
    seen = set()
    for cyc in cycles:
        for a in cyc:
            if not 0 <= a < degree or a in seen:
                raise GroupError(f"bad cycle {tuple(cyc)} for degree {degree}")
            seen.add(a)
        for a, b in zip(cyc, cyc[1:] + type(cyc)(cyc[:1])):
            image[a] = b
    return tuple(image)


class FiniteGroup:
    """A finite group given by its multiplication table."""

    def __init__(self, table: list[list[int]], elements: Optional[list[Perm]] = None,
                 degree: Optional[int] = None, generators: Optional[list[Perm]] = None,
                 name: str = "", check: bool = True):
        self.table = table
        self.order = len(table)
        self.elements = elements
        self.degree = degree
        self.perm_generators = generators
        self.name = name
        if check:
            self._check_axioms()
        self.inverse = [row.index(0) for row in table]

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, order={self.order})"

    def __getstate__(self):
        state = self.__dict__.copy()
        for key in ("element_orders", "full", "trivial", "generators"):
            state.pop(key, None)
        return state

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]], name: str = "") -> "FiniteGroup":
        """Validate a Cayley table (identity 0, Latin square, associativity; O(n^3))."""
        table = [list(map(int, row)) for row in table]
        return cls(table, name=name, check=True)

    @classmethod
    def from_permutations(cls, degree: int, generators: Sequence[Sequence[int]],
                          name: str = "", cap: int = DEFAULT_ORDER_CAP) -> "FiniteGroup":
        gens = [check_perm(g, degree) for g in generators]
        identity = tuple(range(degree))
        elements = [identity]
        index = {identity: 0}
        for x in elements:
            for g in gens:
                y = compose(x, g)
                if y not in index:
                    if len(elements) >= cap:
                        raise OrderCapExceeded(f"group order exceeds cap {cap}")
                    index[y] = len(elements)
                    elements.append(y)
        table = [[index[compose(x, y)] for y in elements] for x in elements]
        return cls(table, elements, degree, gens, name, check=False)

    def _check_axioms(self) -> None:
        n = self.order
        t = self.table
        if n == 0:
            raise GroupError("empty table")
        full = set(range(n))
        for i, row in enumerate(t):
            if len(row) != n or set(row) != full:
                raise GroupError(f"row {i} is not a permutation of 0..{n - 1}")
            if row[0] != i or t[0][i] != i:
                raise GroupError("index 0 is not the identity")
        for j in range(n):
            if {t[i][j] for i in range(n)} != full:
                raise GroupError(f"column {j} is not a permutation")
        for a in range(n):
            ta = t[a]
            for b in range(n):
                ab = ta[b]
                tab = t[ab]
                tb = t[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise GroupError(f"not associative at ({a}, {b}, {c})")

    # basic operations

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def conj(self, a: int, g: int) -> int:
        """``g^-1 a g``."""
        return self.table[self.table[self.inverse[g]][a]][g]

    def power(self, a: int, k: int) -> int:
        x = 0
        for _ in range(k):
            x = self.table[x][a]
        return x

    @cached_property
    def element_orders(self) -> list[int]:
        orders = []
        for a in range(self.order):
            x, k = a, 1
            while x != 0:
                x = self.table[x][a]
                k += 1
            orders.append(k)
        return orders

    @cached_property
    def full(self) -> "SubgroupSet":
        return SubgroupSet(self, (1 << self.order) - 1)

    @cached_property
    def trivial(self) -> "SubgroupSet":
        return SubgroupSet(self, 1)

    def closure(self, seeds: Iterable[int]) -> "SubgroupSet":
        return subgroup_closure(self, seeds)

    def subgroup(self, seeds: Iterable[int]) -> "SubgroupSet":
        return subgroup_closure(self, seeds)

    def index_of(self, perm: Sequence[int]) -> int:
        if self.elements is None:
            raise GroupError("group has no permutation representation")
        try:
            return self.elements.index(tuple(perm))
        except ValueError:
            raise GroupError(f"{tuple(perm)} is not in the group") from None


def _mask_members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        low = mask & -mask
        i = low.bit_length() - 1
        out.append(i)
        mask ^= low
    return out


@dataclass(frozen=True)
class SubgroupSet:
    """A subgroup of ``group`` as a bitmask over element indices."""

    group: FiniteGroup = field(compare=False, repr=False)
    mask: int

    def __post_init__(self):
        if not self.mask & 1:
            raise GroupError("subgroup mask lacks the identity")
        if self.group.order % self.order:
            raise GroupError(f"order {self.order} does not divide {self.group.order}")
        if CHECK_INVARIANTS:
            self.check_closed()

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    @property
    def index(self) -> int:
        return self.group.order // self.order

    @cached_property
    def members(self) -> list[int]:
        return _mask_members(self.mask)

    def __contains__(self, a: int) -> bool:
        return bool(self.mask >> a & 1)

    def __le__(self, other: "SubgroupSet") -> bool:
        return self.mask & other.mask == self.mask

    def __lt__(self, other: "SubgroupSet") -> bool:
        return self.mask != other.mask and self <= other

    def __len__(self) -> int:
        return self.order

    def check_closed(self) -> None:
        t = self.group.table
        mem = self.members
        mask = self.mask
        for a in mem:
            row = t[a]
            for b in mem:
                if not mask >> row[b] & 1:
                    raise GroupError(f"mask {mask:#x} not closed: {a}*{b}")

    @cached_property
    def generators(self) -> list[int]:
        """A short generating set, chosen greedily in index order."""
        gens: list[int] = []
        cur = 1
        for a in self.members:
            if not cur >> a & 1:
                gens.append(a)
                cur = _closure_mask(self.group, gens)
        return gens

    def intersection(self, other: "SubgroupSet") -> "SubgroupSet":
        return SubgroupSet(self.group, self.mask & other.mask)

    def conjugate(self, g: int) -> "SubgroupSet":
        """``g^-1 H g``."""
        G = self.group
        mask = 0
        for a in self.members:
            mask |= 1 << G.conj(a, g)
        return SubgroupSet(G, mask)

    def is_p_group(self) -> bool:
        n = self.order
        if n == 1:
            return True
        p = _smallest_prime_factor(n)
        while n % p == 0:
            n //= p
        return n == 1


def _smallest_prime_factor(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def _closure_mask(G: FiniteGroup, seeds: Iterable[int]) -> int:
    gens = sorted({s for s in seeds if s != 0})
    mask = 1
    elems = [0]
    t = G.table
    # the set reachable from the identity by right multiplication by the
    # generators is the generated subgroup (finite group)
    for x in elems:
        row = t[x]
        for s in gens:
            y = row[s]
            if not mask >> y & 1:
                mask |= 1 << y
                elems.append(y)
    return mask


def subgroup_closure(G: FiniteGroup, seeds: Iterable[int]) -> SubgroupSet:
    """Smallest subgroup of ``G`` containing ``seeds``."""
    seeds = list(seeds)
    for s in seeds:
        if not 0 <= s < G.order:
            raise GroupError(f"element index {s} out of range for order {G.order}")
    return SubgroupSet(G, _closure_mask(G, seeds))


def normalizer(G: FiniteGroup, H: SubgroupSet, within: Optional[SubgroupSet] = None) -> SubgroupSet:
    ambient = within.members if within is not None else range(G.order)
    mask = 0
    gens = H.generators
    for g in ambient:
        if all(H.mask >> G.conj(h, g) & 1 for h in gens):
            mask |= 1 << g
    return SubgroupSet(G, mask)


def is_subgroup_mask(G: FiniteGroup, mask: int) -> bool:
    if not mask & 1:
        return False
    t = G.table
    mem = _mask_members(mask)
    for a in mem:
        row = t[a]
        for b in mem:
            if not mask >> row[b] & 1:
                return False
    return True
