"""(p,q)-clans and the constructions attached to a single clan.

A (p,q)-clan is a string of n = p + q symbols, each one of ``+``, ``-`` or a
pair label that occurs exactly twice, with (#+) - (#-) = p - q.  Clans are
kept canonical: pair labels are 1, 2, 3, ... in order of first occurrence,
so ``(+1212-)`` and ``(+1717-)`` denote the same clan.  Clans index the
Borel orbits of the space of polarizations GL_n / (GL_p x GL_q).

>>> str(parse_clan("(+1717-)"))
'+1212-'
>>> parse_clan("+1212-").p
3
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import (
    BadTokenError,
    EmptyInputError,
    InternalMismatchError,
    LimitExceededError,
    UnmatchedPairError,
)

PLUS = "+"
MINUS = "-"

# A symbol is "+", "-", or a positive pair label.
ClanSymbol = int | str

DEFAULT_LIMIT = 12


def _is_sign(symbol: ClanSymbol) -> bool:
    return symbol == PLUS or symbol == MINUS


@dataclass(frozen=True)
class Clan:
    """A canonical (p,q)-clan; p and q are derived from the symbols."""

    symbols: tuple[ClanSymbol, ...]
    p: int = field(init=False)
    q: int = field(init=False)

    def __post_init__(self) -> None:
        counts: Counter[int] = Counter()
        next_label = 1
        for s in self.symbols:
            if _is_sign(s):
                continue
            if not isinstance(s, int) or isinstance(s, bool) or s < 1:
                raise BadTokenError(f"invalid clan symbol {s!r}")
            if s == next_label and s not in counts:
                next_label += 1
            elif s not in counts and s != next_label:
                raise ValueError(
                    f"labels must read 1, 2, ... by first occurrence; "
                    f"got {s} where {next_label} was expected (use canonicalize)"
                )
            counts[s] += 1
        bad = sorted(label for label, c in counts.items() if c != 2)
        if bad:
            raise UnmatchedPairError(
                f"pair labels must occur exactly twice, violated by {bad}"
            )
        pairs = len(counts)
        object.__setattr__(self, "p", self.symbols.count(PLUS) + pairs)
        object.__setattr__(self, "q", self.symbols.count(MINUS) + pairs)

    @property
    def n(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        if self.n < 10:
            return "".join(str(s) for s in self.symbols)
        return "".join(s if _is_sign(s) else f"[{s}]" for s in self.symbols)

    def __repr__(self) -> str:
        return f"Clan({str(self)!r})"

    def to_json(self) -> dict:
        return {"symbols": [str(s) for s in self.symbols], "p": self.p, "q": self.q}

    @classmethod
    def from_json(cls, data: dict) -> "Clan":
        symbols = [int(s) if s not in (PLUS, MINUS) else s for s in data["symbols"]]
        return canonicalize(symbols)


@dataclass(frozen=True)
class SignedClan:
    """A clan together with a sign on each pair position.

    ``signatures[i]`` is "+" or "-" on pair positions and None on sign
    symbols.  The default signature puts "-" on the first member of each
    pair and "+" on the second.
    """

    clan: Clan
    signatures: tuple[str | None, ...]

    def sign_at(self, position: int) -> str:
        """Sign carried by 1-based ``position``: a pair member's signature,
        or the symbol itself for a bare sign."""
        symbol = self.clan.symbols[position - 1]
        if _is_sign(symbol):
            return symbol
        sig = self.signatures[position - 1]
        if sig is None:
            raise InternalMismatchError(f"pair position {position} lacks a signature")
        return sig

    def __str__(self) -> str:
        parts = []
        for symbol, sig in zip(self.clan.symbols, self.signatures):
            parts.append(str(symbol) if sig is None else f"{symbol}{sig}")
        return " ".join(parts)


@dataclass(frozen=True)
class Involution:
    """A self-inverse permutation of 1..n in one-line notation."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")
        for i, img in enumerate(self.images, start=1):
            if self.images[img - 1] != i:
                raise ValueError(f"not an involution: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Involution":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_transpositions(
        cls, n: int, pairs: Iterable[tuple[int, int]]
    ) -> "Involution":
        images = list(range(1, n + 1))
        for i, j in pairs:
            images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def transpositions(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, img) for i, img in enumerate(self.images, start=1) if img > i
        )

    def one_line(self) -> str:
        if self.n < 10:
            return "".join(str(i) for i in self.images)
        return " ".join(str(i) for i in self.images)

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Permutation matrix with a 1 in row i, column sigma(i)."""
        n = self.n
        return tuple(
            tuple(1 if self.images[i] == j + 1 else 0 for j in range(n))
            for i in range(n)
        )

    def __str__(self) -> str:
        return self.one_line()


@dataclass(frozen=True)
class IntegerMatrix:
    """A square integer matrix carrying its determinant as metadata."""

    entries: tuple[tuple[int, ...], ...]
    det_meta: int

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntegerMatrix":
        n = len(columns)
        entries = tuple(tuple(columns[j][i] for j in range(n)) for i in range(n))
        return cls(entries, _det(entries))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)


@dataclass(frozen=True)
class ClanStatistics:
    """Prefix sign counts and the straddling-pair table of a clan.

    plus_counts[i-1] counts plus symbols and completed pairs among the first
    i symbols, minus_counts likewise with minus symbols, and
    pair_count(i, j) counts pairs (s, t) with s <= i < j < t.
    """

    plus_counts: tuple[int, ...]
    minus_counts: tuple[int, ...]
    pair_table: tuple[tuple[int, ...], ...]

    def pair_count(self, i: int, j: int) -> int:
        return self.pair_table[i - 1][j - 1]


def _det(rows: Sequence[Sequence[int]]) -> int:
    # Bareiss fraction-free elimination; exact on integer input.
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _chunk_token(chunk: str) -> ClanSymbol:
    if chunk == PLUS or chunk == MINUS:
        return chunk
    if chunk.isdigit():
        return int(chunk)
    if chunk.startswith("[") and chunk.endswith("]") and chunk[1:-1].isdigit():
        return int(chunk[1:-1])
    raise BadTokenError(f"unrecognized clan token {chunk!r}")


def _scan_adjacent(text: str) -> Iterator[ClanSymbol]:
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == PLUS or ch == MINUS:
            yield ch
            i += 1
        elif ch.isdigit():
            yield int(ch)
            i += 1
        elif ch == "[":
            close = text.find("]", i)
            if close < 0 or not text[i + 1 : close].isdigit():
                raise BadTokenError(f"malformed bracketed label near {text[i:]!r}")
            yield int(text[i + 1 : close])
            i = close + 1
        else:
            raise BadTokenError(f"unexpected character {ch!r} in clan text")


def parse_clan(text: str) -> Clan:
    """Parse clan text such as ``(+1212-)``, ``+ 1 2 1 2 -`` or ``-[1][1]+``.

    Tokens are ``+``, ``-`` and unsigned integers; an outer pair of
    parentheses is ignored and a unicode minus is accepted.
    """
    body = text.strip().replace("−", MINUS)
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1].strip()
    if not body:
        raise EmptyInputError("no clan symbols in input")
    if any(ch.isspace() for ch in body):
        tokens: list[ClanSymbol] = [_chunk_token(c) for c in body.split()]
    else:
        tokens = list(_scan_adjacent(body))
    return canonicalize(tokens)


def canonicalize(symbols: Iterable[ClanSymbol]) -> Clan:
    """Relabel pair labels as 1, 2, ... by first occurrence and validate."""
    raw = list(symbols)
    if not raw:
        raise EmptyInputError("empty symbol sequence")
    relabel: dict[int, int] = {}
    out: list[ClanSymbol] = []
    for s in raw:
        if s == "−":
            s = MINUS
        if _is_sign(s):
            out.append(s)
            continue
        if not isinstance(s, int) or isinstance(s, bool):
            raise BadTokenError(f"invalid clan symbol {s!r}")
        if s not in relabel:
            relabel[s] = len(relabel) + 1
        out.append(relabel[s])
    counts = Counter(s for s in out if isinstance(s, int))
    bad = sorted(label for label, c in counts.items() if c != 2)
    if bad:
        raise UnmatchedPairError(
            f"pair labels must occur exactly twice, violated by {bad}"
        )
    return Clan(tuple(out))


def clan_sort_key(clan: Clan) -> tuple[tuple[int, int], ...]:
    """Lexicographic key realizing the symbol order - < + < 1 < 2 < ..."""
    return tuple(
        (0, 0) if s == MINUS else (1, 0) if s == PLUS else (2, s)
        for s in clan.symbols
    )


def count_clans(p: int, q: int) -> int:
    """Closed-form cardinality of C(p,q).

    Sums over the number k of pairs: choose 2k positions, match them, and
    place p-k plus signs among the rest.

    >>> count_clans(2, 2)
    21
    """
    n = p + q
    total = 0
    for k in range(min(p, q) + 1):
        matchings = math.prod(range(1, 2 * k, 2))  # (2k-1)!!
        total += math.comb(n, 2 * k) * matchings * math.comb(n - 2 * k, p - k)
    return total


def _matchings(
    positions: tuple[int, ...]
) -> Iterator[tuple[tuple[int, int], ...]]:
    # All perfect matchings of an even, ascending position tuple.
    if not positions:
        yield ()
        return
    first, rest = positions[0], positions[1:]
    for idx in range(len(rest)):
        partner = rest[idx]
        remaining = rest[:idx] + rest[idx + 1 :]
        for sub in _matchings(remaining):
            yield ((first, partner),) + sub


def enumerate_clans(p: int, q: int, limit: int = DEFAULT_LIMIT) -> list[Clan]:
    """All canonical (p,q)-clans, sorted by ``clan_sort_key``.

    Raises LimitExceededError when p + q exceeds ``limit``.
    """
    if p < 1 or q < 1:
        raise ValueError(f"p and q must be positive, got ({p}, {q})")
    n = p + q
    if n > limit:
        raise LimitExceededError(f"p + q = {n} exceeds the bound {limit}")
    out: list[Clan] = []
    for k in range(min(p, q) + 1):
        for pair_positions in combinations(range(n), 2 * k):
            taken = set(pair_positions)
            rest = [i for i in range(n) if i not in taken]
            for matching in _matchings(pair_positions):
                skeleton: list[ClanSymbol] = [MINUS] * n
                for label, (a, b) in enumerate(sorted(matching), start=1):
                    skeleton[a] = label
                    skeleton[b] = label
                for plus_positions in combinations(rest, p - k):
                    symbols = skeleton.copy()
                    for i in plus_positions:
                        symbols[i] = PLUS
                    out.append(Clan(tuple(symbols)))
    out.sort(key=clan_sort_key)
    return out


def pair_positions(clan: Clan) -> tuple[tuple[int, int], ...]:
    """1-based position pairs (i, j), i < j, ordered by first occurrence."""
    first_seen: dict[int, int] = {}
    pairs: list[tuple[int, int]] = []
    for pos, s in enumerate(clan.symbols, start=1):
        if _is_sign(s):
            continue
        if s in first_seen:
            pairs.append((first_seen[s], pos))
        else:
            first_seen[s] = pos
    pairs.sort()
    return tuple(pairs)


def default_signed_clan(clan: Clan) -> SignedClan:
    """Sign each pair with - on its first member and + on its second."""
    signatures: list[str | None] = [None] * clan.n
    for a, b in pair_positions(clan):
        signatures[a - 1] = MINUS
        signatures[b - 1] = PLUS
    return SignedClan(clan, tuple(signatures))


def base_clan(clan: Clan) -> Clan:
    """Replace every pair member by its default signature.

    >>> str(base_clan(parse_clan("(+1212-)")))
    '+--++-'
    """
    signed = default_signed_clan(clan)
    symbols = tuple(
        s if _is_sign(s) else signed.signatures[i]
        for i, s in enumerate(clan.symbols)
    )
    return Clan(symbols)


@cache
def clan_statistics(clan: Clan) -> ClanStatistics:
    """Prefix counts and straddling-pair table; see ClanStatistics.

    A completed pair counts toward both the plus and the minus prefix count.
    """
    n = clan.n
    plus_counts: list[int] = []
    minus_counts: list[int] = []
    cp = cm = 0
    open_labels: set[int] = set()
    for s in clan.symbols:
        if s == PLUS:
            cp += 1
        elif s == MINUS:
            cm += 1
        elif s in open_labels:
            cp += 1
            cm += 1
        else:
            open_labels.add(s)
        plus_counts.append(cp)
        minus_counts.append(cm)
    table = [[0] * n for _ in range(n)]
    for a, b in pair_positions(clan):
        for i in range(a, b):
            for j in range(i + 1, b):
                table[i - 1][j - 1] += 1
    return ClanStatistics(
        tuple(plus_counts),
        tuple(minus_counts),
        tuple(tuple(row) for row in table),
    )


def default_permutation(clan: Clan) -> Involution:
    """The distinguished permutation used to build the default flag.

    Positions 1..p whose default sign is minus are matched, in increasing
    order, with positions p+1..n whose default sign is plus; everything
    else is fixed.  A pair member carries its default signature and a bare
    sign symbol carries itself.

    >>> default_permutation(parse_clan("(+1212-)")).transpositions()
    ((2, 4), (3, 5))
    """
    signed = default_signed_clan(clan)
    p, n = clan.p, clan.n
    s_positions = [i for i in range(1, p + 1) if signed.sign_at(i) == MINUS]
    t_positions = [i for i in range(p + 1, n + 1) if signed.sign_at(i) == PLUS]
    if len(s_positions) != len(t_positions):
        raise InternalMismatchError(
            f"sign imbalance in {clan}: {s_positions} vs {t_positions}"
        )
    return Involution.from_transpositions(n, zip(s_positions, t_positions))


def default_flag_matrix(clan: Clan) -> IntegerMatrix:
    """Column i spans the i-th step of the default flag of the clan.

    With sigma the default permutation and j the partner of a pair member i,
    column i is e_sigma(i) for a sign symbol, e_sigma(i) + e_sigma(j) for a
    plus-signed pair member and -e_sigma(i) + e_sigma(j) for a minus-signed
    one.  The determinant is stored unnormalized in ``det_meta``.
    """
    signed = default_signed_clan(clan)
    sigma = default_permutation(clan)
    n = clan.n
    partner: dict[int, int] = {}
    for a, b in pair_positions(clan):
        partner[a] = b
        partner[b] = a
    columns: list[list[int]] = []
    for i in range(1, n + 1):
        col = [0] * n
        s = clan.symbols[i - 1]
        if _is_sign(s):
            col[sigma(i) - 1] = 1
        else:
            j = partner[i]
            col[sigma(i) - 1] = 1 if signed.signatures[i - 1] == PLUS else -1
            col[sigma(j) - 1] = 1
        columns.append(col)
    return IntegerMatrix.from_columns(columns)


def underlying_involution(clan: Clan) -> Involution:
    """The involution whose 2-cycles are the clan's pair position pairs.

    >>> underlying_involution(parse_clan("(-1212+)")).one_line()
    '145236'
    """
    return Involution.from_transpositions(clan.n, pair_positions(clan))
