"""Finite groups, overgroup lattices, Sylow families and block systems."""

from .build import (alternating, by_name, cyclic, dihedral, direct_product, elementary_abelian,
                    format_cycles, parse_cycles, quaternion8, symmetric)
from .checks import (block_systems, check_main_theorem, check_orbit_bound, check_pgroup_bound,
                     count_block_systems, verify_pair)
from .core import FiniteGroup, GroupError, OrderCapExceeded, SubgroupSet, normalizer, subgroup_closure
from .fileio import GroupFileError, parse_group_text, read_group_file
from .lattice import NodeCapExceeded, OvergroupLattice, all_subgroups, enumerate_overgroups
from .oracle import brute_force_overgroups
from .sylow import SylowFamily, sylow_family, sylow_subgroup


def group_from_permutations(degree, generators, name="", cap=None):
    kwargs = {} if cap is None else {"cap": cap}
    return FiniteGroup.from_permutations(degree, generators, name, **kwargs)
