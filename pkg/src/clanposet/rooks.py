"""The rook monoid, rank-control matrices, and the dense-sect isomorphism.

R_p is the set of p x p 0/1 matrices with at most one 1 per row and column.
Under the southwest rank-control order, R_p is order isomorphic to the
dense sect of C(p,p); ``verify_dense_iso`` checks this exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import combinations, permutations
from typing import Sequence

from .clans import (
    Clan,
    DEFAULT_LIMIT,
    Involution,
    MINUS,
    PLUS,
    base_clan,
    pair_positions,
)
from .errors import (
    LimitExceededError,
    NotInDenseSectError,
    NotRectangularError,
    ShapeMismatchError,
)

NW = "NW"
SW = "SW"

ROOK_LIMIT = 6


@dataclass(frozen=True)
class RookMatrix:
    """A p x p 0/1 matrix with at most one 1 in every row and column."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        p = len(self.entries)
        for row in self.entries:
            if len(row) != p:
                raise NotRectangularError("rook matrices are square")
            if any(x not in (0, 1) for x in row):
                raise ValueError(f"entries must be 0 or 1, got {row}")
            if sum(row) > 1:
                raise ValueError("more than one 1 in a row")
        for j in range(p):
            if sum(row[j] for row in self.entries) > 1:
                raise ValueError("more than one 1 in a column")

    @classmethod
    def zero(cls, p: int) -> "RookMatrix":
        return cls(tuple((0,) * p for _ in range(p)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "RookMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @property
    def p(self) -> int:
        return len(self.entries)

    def ones(self) -> tuple[tuple[int, int], ...]:
        """1-based (row, column) coordinates of the nonzero entries."""
        return tuple(
            (i + 1, j + 1)
            for i, row in enumerate(self.entries)
            for j, x in enumerate(row)
            if x
        )

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class RankControlMatrix:
    """Region ranks of a square matrix, anchored at one corner.

    For corner NW, entry (i, j) is the rank of the top-left i x j submatrix;
    for corner SW it is the rank of rows i..n against columns 1..j.
    """

    ranks: tuple[tuple[int, ...], ...]
    corner: str

    def rank(self, i: int, j: int) -> int:
        return self.ranks[i - 1][j - 1]


@dataclass(frozen=True)
class IsoReport:
    """Outcome of checking the dense sect against the rook monoid."""

    p: int
    bijective: bool
    order_preserving: bool
    order_reflecting: bool
    counterexamples: tuple[tuple[Clan, Clan], ...]

    def holds(self) -> bool:
        return self.bijective and self.order_preserving and self.order_reflecting

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "bijective": self.bijective,
            "order_preserving": self.order_preserving,
            "order_reflecting": self.order_reflecting,
            "counterexamples": [[str(a), str(b)] for a, b in self.counterexamples],
        }


def enumerate_rooks(p: int, limit: int = ROOK_LIMIT) -> list[RookMatrix]:
    """All of R_p, sorted by entries; |R_p| = sum_k C(p,k)^2 k!."""
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    if p > limit:
        raise LimitExceededError(f"p = {p} exceeds the bound {limit}")
    out: list[RookMatrix] = []
    for k in range(p + 1):
        for rows in combinations(range(p), k):
            for cols in permutations(range(p), k):
                entries = [[0] * p for _ in range(p)]
                for r, c in zip(rows, cols):
                    entries[r][c] = 1
                out.append(RookMatrix.from_rows(entries))
    out.sort(key=lambda m: m.entries)
    return out


def _as_rows(matrix) -> tuple[tuple[int, ...], ...]:
    rows = getattr(matrix, "entries", matrix)
    rows = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise NotRectangularError("rank control requires a square matrix")
    return rows


def _is_rook_type(rows: tuple[tuple[int, ...], ...]) -> bool:
    if any(x not in (0, 1) for row in rows for x in row):
        return False
    if any(sum(row) > 1 for row in rows):
        return False
    return all(sum(row[j] for row in rows) <= 1 for j in range(len(rows)))


def _rank_rational(rows: list[list[Fraction]]) -> int:
    rank = 0
    cols = len(rows[0]) if rows else 0
    pivot_row = 0
    for col in range(cols):
        pivot = next(
            (r for r in range(pivot_row, len(rows)) if rows[r][col] != 0), None
        )
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        lead = rows[pivot_row][col]
        for r in range(pivot_row + 1, len(rows)):
            if rows[r][col] != 0:
                factor = rows[r][col] / lead
                for c in range(col, cols):
                    rows[r][c] -= factor * rows[pivot_row][c]
        pivot_row += 1
        rank += 1
        if pivot_row == len(rows):
            break
    return rank


def rank_control(matrix, corner: str) -> RankControlMatrix:
    """Rank of every corner-anchored region of a square 0/1 matrix.

    Rook-type input reduces to counting the 1s in each region; anything
    else gets exact elimination over the rationals.
    """
    if corner not in (NW, SW):
        raise ValueError(f"corner must be {NW!r} or {SW!r}, got {corner!r}")
    rows = _as_rows(matrix)
    n = len(rows)
    ranks = [[0] * n for _ in range(n)]
    if _is_rook_type(rows):
        ones = [
            (i, j) for i, row in enumerate(rows) for j, x in enumerate(row) if x
        ]
        for i in range(n):
            for j in range(n):
                if corner == NW:
                    ranks[i][j] = sum(1 for r, c in ones if r <= i and c <= j)
                else:
                    ranks[i][j] = sum(1 for r, c in ones if r >= i and c <= j)
    else:
        for i in range(n):
            for j in range(n):
                if corner == NW:
                    region = [row[: j + 1] for row in rows[: i + 1]]
                else:
                    region = [row[: j + 1] for row in rows[i:]]
                ranks[i][j] = _rank_rational(
                    [[Fraction(x) for x in row] for row in region]
                )
    return RankControlMatrix(tuple(tuple(row) for row in ranks), corner)


def rook_leq(a, b, corner: str) -> bool:
    """Compare two same-size 0/1 matrices by rank control.

    The NW order reverses ranks (a <= b iff every NW rank of a is >= that
    of b); the SW order keeps them (every SW rank of a is <= that of b),
    which makes the zero matrix the minimum of R_p.
    """
    rows_a = _as_rows(a)
    rows_b = _as_rows(b)
    if len(rows_a) != len(rows_b):
        raise ShapeMismatchError("rank-control comparison needs equal sizes")
    ranks_a = rank_control(rows_a, corner).ranks
    ranks_b = rank_control(rows_b, corner).ranks
    if corner == NW:
        return all(
            x >= y for ra, rb in zip(ranks_a, ranks_b) for x, y in zip(ra, rb)
        )
    return all(x <= y for ra, rb in zip(ranks_a, ranks_b) for x, y in zip(ra, rb))


@cache
def _sw_ranks(inv: Involution) -> tuple[tuple[int, ...], ...]:
    return rank_control(inv.matrix(), SW).ranks


def involution_leq(u: Involution, w: Involution) -> bool:
    """Bruhat order on involutions via southwest rank control."""
    if u.n != w.n:
        raise ShapeMismatchError("involutions must have equal degree")
    ranks_u = _sw_ranks(u)
    ranks_w = _sw_ranks(w)
    return all(x <= y for ru, rw in zip(ranks_u, ranks_w) for x, y in zip(ru, rw))


def _dense_base(p: int) -> Clan:
    return Clan((MINUS,) * p + (PLUS,) * p)


def clan_to_rook(clan: Clan) -> RookMatrix:
    """The rook matrix of a dense-sect (p,p)-clan.

    Entry (r, s) is 1 iff symbol p+r is a pair label matching symbol s;
    only clans whose base is the dense base qualify.
    """
    p, q = clan.p, clan.q
    if p != q or base_clan(clan) != _dense_base(p):
        raise NotInDenseSectError(f"{clan} is not in the dense sect of C(p,p)")
    entries = [[0] * p for _ in range(p)]
    for s, t in pair_positions(clan):
        entries[t - p - 1][s - 1] = 1
    return RookMatrix.from_rows(entries)


def _clan_of_rook(rook: RookMatrix) -> Clan:
    # Inverse of clan_to_rook: each 1 at (r, s) becomes a pair spanning
    # positions s and p+r; unmatched positions keep the dense base signs.
    p = rook.p
    symbols: list = [MINUS] * p + [PLUS] * p
    spans = sorted((s, p + r) for r, s in rook.ones())
    for label, (s, t) in enumerate(spans, start=1):
        symbols[s - 1] = label
        symbols[t - 1] = label
    return Clan(tuple(symbols))


def rook_to_involution(rook: RookMatrix) -> Involution:
    """Extend a p x p rook matrix to an involution of 1..2p.

    The rook block sits in the lower-left corner of the 2p x 2p permutation
    matrix, its transpose in the upper-right, and the diagonal carries a 1
    exactly at the zero columns (first p) and zero rows (last p).
    """
    p = rook.p
    images = list(range(1, 2 * p + 1))
    for r, s in rook.ones():
        images[s - 1] = p + r
        images[p + r - 1] = s
    return Involution(tuple(images))


def verify_dense_iso(p: int, limit: int = DEFAULT_LIMIT) -> IsoReport:
    """Check that clan_to_rook is an order isomorphism onto R_p.

    Compares the closure order on the dense sect of C(p,p) with the SW
    rank-control order on R_p, pair by pair, and records any violations.
    """
    from .bruhat import wyser_leq
    from .sects import dense_sect

    members = dense_sect(p, p, limit=limit).sect.members
    image = {clan: clan_to_rook(clan) for clan in members}
    counterexamples: list[tuple[Clan, Clan]] = []

    seen: dict[RookMatrix, Clan] = {}
    injective = True
    for clan, rook in image.items():
        if rook in seen:
            injective = False
            counterexamples.append((seen[rook], clan))
        seen[rook] = clan
    surjective = True
    member_set = set(members)
    for rook in enumerate_rooks(p, limit=max(p, ROOK_LIMIT)):
        candidate = _clan_of_rook(rook)
        if candidate not in member_set or clan_to_rook(candidate) != rook:
            surjective = False
            counterexamples.append((candidate, candidate))
    bijective = injective and surjective

    sw_tables = {
        clan: rank_control(rook, SW).ranks for clan, rook in image.items()
    }
    preserving = reflecting = True
    for gamma in members:
        for tau in members:
            clan_le = wyser_leq(gamma, tau)
            rook_le = all(
                x <= y
                for ra, rb in zip(sw_tables[gamma], sw_tables[tau])
                for x, y in zip(ra, rb)
            )
            if clan_le and not rook_le:
                preserving = False
                counterexamples.append((gamma, tau))
            elif rook_le and not clan_le:
                reflecting = False
                counterexamples.append((gamma, tau))
    return IsoReport(p, bijective, preserving, reflecting, tuple(counterexamples))
