"""Plain-text group files.

    perm <degree>              table <order>
    (0 1 2 3)                  0 1 2 3
    (0 1)                      1 0 3 2
    subgroup                   ...
    (0 2)(1 3)                 subgroup
                               2

Blank lines and ``#`` comments are ignored.  Subgroup generators are
cycles for permutation groups or element indices for tables; without a
``subgroup`` section T is trivial.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .build import parse_cycles
from .core import DEFAULT_ORDER_CAP, FiniteGroup, GroupError, OrderCapExceeded, SubgroupSet


class GroupFileError(GroupError):
    pass


@dataclass
class GroupInput:
    group: FiniteGroup
    subgroup: SubgroupSet


def _lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def parse_group_text(text: str, name: str = "", cap: int = DEFAULT_ORDER_CAP) -> GroupInput:
    lines = _lines(text)
    if not lines:
        raise GroupFileError("empty group file")
    head = lines[0].split()
    if len(head) != 2 or head[0] not in ("perm", "table"):
        raise GroupFileError(f"first line must be 'perm <degree>' or 'table <order>', got {lines[0]!r}")
    try:
        size = int(head[1])
    except ValueError:
        raise GroupFileError(f"bad size {head[1]!r}") from None
    if size < 1:
        raise GroupFileError("size must be positive")
    body = lines[1:]
    sub_lines: list[str] = []
    if "subgroup" in body:
        cut = body.index("subgroup")
        body, sub_lines = body[:cut], body[cut + 1:]
    try:
        if head[0] == "perm":
            gens = [parse_cycles(line, size) for line in body] or [tuple(range(size))]
            G = FiniteGroup.from_permutations(size, gens, name, cap)
            seeds = [G.index_of(parse_cycles(line, size)) for line in sub_lines]
        else:
            if len(body) != size:
                raise GroupFileError(f"expected {size} table rows, got {len(body)}")
            rows = [[int(x) for x in line.split()] for line in body]
            G = FiniteGroup.from_table(rows, name)
            seeds = [int(x) for line in sub_lines for x in line.split()]
        T = G.closure(seeds)
    except (GroupFileError, OrderCapExceeded):
        raise
    except (GroupError, ValueError) as exc:
        raise GroupFileError(str(exc)) from exc
    return GroupInput(G, T)


def read_group_file(path, cap: int = DEFAULT_ORDER_CAP) -> GroupInput:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise GroupFileError(f"cannot read {path}: {exc}") from exc
    return parse_group_text(text, path.stem, cap)
