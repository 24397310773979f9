"""Sects: the fibers of the base-clan projection onto Schubert cells.

Base clans of shape (p,q) correspond to p-element subsets I of 1..n, hence
to Schubert cells of the Grassmannian Gr(p,n) and to lattice paths with p
east and q north steps.  The sect of I collects every clan whose base is
the base clan of I.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

from .bruhat import Poset
from .clans import (
    Clan,
    DEFAULT_LIMIT,
    MINUS,
    PLUS,
    ClanSymbol,
    base_clan,
    enumerate_clans,
)
from .errors import (
    NotABaseClanError,
    RequiresPGeQError,
    ShapeMismatchError,
)

EAST = "E"
NORTH = "N"


@dataclass(frozen=True)
class BasisSubset:
    """A strictly increasing tuple of 1-based basis indices."""

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(i < 1 for i in self.indices):
            raise ValueError(f"indices must be positive: {self.indices}")
        if any(a >= b for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError(f"indices must strictly increase: {self.indices}")

    @property
    def p(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class LatticePath:
    """A word in north and east unit steps."""

    steps: tuple[str, ...]

    def __post_init__(self) -> None:
        bad = [s for s in self.steps if s not in (NORTH, EAST)]
        if bad:
            raise ValueError(f"steps must be {NORTH!r} or {EAST!r}: {bad}")

    @property
    def p(self) -> int:
        return self.steps.count(EAST)

    @property
    def q(self) -> int:
        return self.steps.count(NORTH)

    def east_positions(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.steps, start=1) if s == EAST)

    def __str__(self) -> str:
        return "".join(self.steps)


@dataclass(frozen=True)
class Sect:
    """All clans sharing one base clan, in enumeration order."""

    base: Clan
    members: tuple[Clan, ...]

    def __post_init__(self) -> None:
        if self.base not in self.members:
            raise ValueError("the base clan must be one of the members")
        for clan in self.members:
            if base_clan(clan) != self.base:
                raise ValueError(f"{clan} does not belong to the sect of {self.base}")

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class DenseSect:
    """The sect over the dense Schubert cell, with its extremes."""

    sect: Sect
    minimum: Clan
    maximum: Clan


def base_clan_of_subset(subset: BasisSubset, n: int) -> Clan:
    """The sign-only clan with plus exactly at the subset's positions."""
    if subset.indices and subset.indices[-1] > n:
        raise ValueError(f"{subset.indices} does not fit inside 1..{n}")
    chosen = set(subset.indices)
    return Clan(tuple(PLUS if i in chosen else MINUS for i in range(1, n + 1)))


def subset_of_base_clan(clan: Clan) -> BasisSubset:
    """Positions of the plus symbols of a sign-only clan."""
    if any(not isinstance(s, str) for s in clan.symbols):
        raise NotABaseClanError(f"{clan} contains pairs")
    return BasisSubset(
        tuple(i for i, s in enumerate(clan.symbols, start=1) if s == PLUS)
    )


def subset_colex_rank(subset: BasisSubset) -> int:
    """0-based rank of the subset in colexicographic order."""
    return sum(comb(i - 1, k) for k, i in enumerate(subset.indices, start=1))


def lattice_path(subset: BasisSubset, n: int) -> LatticePath:
    """Step i goes east iff i lies in the subset, north otherwise."""
    if subset.indices and subset.indices[-1] > n:
        raise ValueError(f"{subset.indices} does not fit inside 1..{n}")
    chosen = set(subset.indices)
    return LatticePath(
        tuple(EAST if i in chosen else NORTH for i in range(1, n + 1))
    )


def path_leq(a: LatticePath, b: LatticePath) -> bool:
    """a <= b iff a lies weakly beneath b.

    Equivalently the k-th east step of a comes no later than the k-th east
    step of b, for every k.
    """
    if (a.p, a.q) != (b.p, b.q):
        raise ShapeMismatchError("paths must share the same step counts")
    return all(x <= y for x, y in zip(a.east_positions(), b.east_positions()))


def cell_dimension(path: LatticePath) -> int:
    """Number of grid boxes beneath the path.

    Each east step contributes one box per north step strictly before it.
    """
    boxes = 0
    height = 0
    for step in path.steps:
        if step == NORTH:
            height += 1
        else:
            boxes += height
    return boxes


def sect_of_clan(clan: Clan) -> BasisSubset:
    """The subset indexing the sect a clan belongs to."""
    return subset_of_base_clan(base_clan(clan))


def sect_partition(p: int, q: int, limit: int = DEFAULT_LIMIT) -> dict[Clan, Sect]:
    """Partition C(p,q) into sects, keyed by base clan.

    Keys appear in colexicographic order of their subsets; members keep
    enumeration order.  There is one sect per p-subset of 1..p+q.
    """
    groups: dict[Clan, list[Clan]] = {}
    for clan in enumerate_clans(p, q, limit=limit):
        groups.setdefault(base_clan(clan), []).append(clan)
    ordered = sorted(
        groups, key=lambda b: subset_colex_rank(subset_of_base_clan(b))
    )
    return {b: Sect(b, tuple(groups[b])) for b in ordered}


def dense_sect(p: int, q: int, limit: int = DEFAULT_LIMIT) -> DenseSect:
    """The sect over the dense (open) Schubert cell of Gr(p, p+q).

    Its base is q minus symbols followed by p plus symbols; it is an upper
    order ideal of C(p,q) whose maximum nests q pairs around p-q plus
    symbols.  Requires p >= q.
    """
    if p < q:
        raise RequiresPGeQError(f"dense sect needs p >= q, got ({p}, {q})")
    base = Clan((MINUS,) * q + (PLUS,) * p)
    members = tuple(
        clan
        for clan in enumerate_clans(p, q, limit=limit)
        if base_clan(clan) == base
    )
    top: list[ClanSymbol] = (
        list(range(1, q + 1)) + [PLUS] * (p - q) + list(range(q, 0, -1))
    )
    maximum = Clan(tuple(top))
    assert maximum in members
    return DenseSect(Sect(base, members), base, maximum)


def is_upper_order_ideal(clans: Iterable[Clan], poset: Poset) -> bool:
    """True iff everything above a member of ``clans`` is again a member."""
    chosen = {poset.index(str(clan)) for clan in clans}
    size = len(poset)
    for i in chosen:
        for j in range(size):
            if poset.leq[i][j] and j not in chosen:
                return False
    return True


def sect_to_json(sect: Sect) -> dict:
    return {
        "I": list(subset_of_base_clan(sect.base).indices),
        "base": str(sect.base),
        "members": [str(clan) for clan in sect.members],
    }
