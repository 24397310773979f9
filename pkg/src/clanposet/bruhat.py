"""Bruhat order on (p,q)-clans and finite poset plumbing.

The order is the closure order on Borel orbits.  ``wyser_leq`` decides it
through prefix statistics alone; ``leq_via_involution`` decides it through
the underlying involutions and must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .clans import Clan, clan_sort_key, clan_statistics, underlying_involution
from .errors import ShapeMismatchError, ShrinkNotAllowedError, UnknownElementError
from .rooks import involution_leq


def _require_same_shape(gamma: Clan, tau: Clan) -> None:
    if (gamma.p, gamma.q) != (tau.p, tau.q):
        raise ShapeMismatchError(
            f"cannot compare a ({gamma.p},{gamma.q})-clan with a "
            f"({tau.p},{tau.q})-clan"
        )


def wyser_leq(gamma: Clan, tau: Clan) -> bool:
    """gamma <= tau in the closure order, by count dominance.

    Holds iff gamma(i;+) >= tau(i;+) and gamma(i;-) >= tau(i;-) for every
    prefix length i, and gamma(i,j) <= tau(i,j) for every i < j.
    """
    _require_same_shape(gamma, tau)
    sg = clan_statistics(gamma)
    st = clan_statistics(tau)
    if any(a < b for a, b in zip(sg.plus_counts, st.plus_counts)):
        return False
    if any(a < b for a, b in zip(sg.minus_counts, st.minus_counts)):
        return False
    for row_g, row_t in zip(sg.pair_table, st.pair_table):
        if any(x > y for x, y in zip(row_g, row_t)):
            return False
    return True


def leq_via_involution(gamma: Clan, tau: Clan) -> bool:
    """Same order as ``wyser_leq``, decided through underlying involutions.

    Holds iff the two sign-count dominance conditions hold and the
    underlying involution of gamma is below that of tau in the southwest
    rank-control order on permutation matrices.
    """
    _require_same_shape(gamma, tau)
    sg = clan_statistics(gamma)
    st = clan_statistics(tau)
    if any(a < b for a, b in zip(sg.plus_counts, st.plus_counts)):
        return False
    if any(a < b for a, b in zip(sg.minus_counts, st.minus_counts)):
        return False
    return involution_leq(underlying_involution(gamma), underlying_involution(tau))


@dataclass(frozen=True)
class Poset:
    """A finite poset over string keys, with its full relation and covers."""

    elements: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    covers: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, key: str) -> int:
        try:
            return self.elements.index(key)
        except ValueError:
            raise UnknownElementError(f"{key!r} is not an element of this poset")

    def leq_keys(self, a: str, b: str) -> bool:
        return self.leq[self.index(a)][self.index(b)]

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "covers": [[i, j] for i, j in self.covers],
        }


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_poset(elements: Iterable[Clan]) -> Poset:
    """Order the given clans by ``wyser_leq`` and transitively reduce.

    All clans must share one (p,q).  Elements are keyed by their canonical
    strings in enumeration order, and covers are (lower, upper) index pairs.
    """
    clans = sorted(set(elements), key=clan_sort_key)
    for other in clans[1:]:
        if (other.p, other.q) != (clans[0].p, clans[0].q):
            raise ShapeMismatchError("poset elements must share one (p, q)")
    m = len(clans)
    leq_rows = tuple(
        tuple(wyser_leq(gamma, tau) for tau in clans) for gamma in clans
    )
    strict_up = [0] * m
    strict_down = [0] * m
    for i in range(m):
        for j in range(m):
            if i != j and leq_rows[i][j]:
                strict_up[i] |= 1 << j
                strict_down[j] |= 1 << i
    covers = sorted(
        (i, j)
        for i in range(m)
        for j in _bits(strict_up[i])
        if strict_up[i] & strict_down[j] == 0
    )
    keys = tuple(str(c) for c in clans)
    return Poset(keys, leq_rows, tuple(covers))


def extremal_elements(poset: Poset) -> tuple[frozenset[str], frozenset[str]]:
    """(minimal keys, maximal keys) of the poset."""
    m = len(poset)
    minimals = frozenset(
        poset.elements[j]
        for j in range(m)
        if not any(poset.leq[i][j] for i in range(m) if i != j)
    )
    maximals = frozenset(
        poset.elements[i]
        for i in range(m)
        if not any(poset.leq[i][j] for j in range(m) if j != i)
    )
    return minimals, maximals


def embed_clan(clan: Clan, p2: int, q2: int) -> Clan:
    """Embed a (p,q)-clan into C(p2,q2) by padding.

    Prepends p2 - p plus symbols and appends q2 - q minus symbols; this
    preserves the order and maps sects into sects.
    """
    if p2 < clan.p or q2 < clan.q:
        raise ShrinkNotAllowedError(
            f"cannot embed a ({clan.p},{clan.q})-clan into C({p2},{q2})"
        )
    symbols = ("+",) * (p2 - clan.p) + clan.symbols + ("-",) * (q2 - clan.q)
    return Clan(symbols)
