"""Combinatorics of (p,q)-clans: closure order, sects, and the rook monoid."""

from .bruhat import (
    Poset,
    build_poset,
    embed_clan,
    extremal_elements,
    leq_via_involution,
    wyser_leq,
)
from .clans import (
    Clan,
    ClanStatistics,
    ClanSymbol,
    DEFAULT_LIMIT,
    IntegerMatrix,
    Involution,
    SignedClan,
    base_clan,
    canonicalize,
    clan_sort_key,
    clan_statistics,
    count_clans,
    default_flag_matrix,
    default_permutation,
    default_signed_clan,
    enumerate_clans,
    pair_positions,
    parse_clan,
    underlying_involution,
)
from .delannoy import (
    DelannoyStep,
    WeightedDelannoyPath,
    delannoy_to_lattice,
    parse_delannoy,
)
from .rooks import (
    NW,
    SW,
    IsoReport,
    RankControlMatrix,
    RookMatrix,
    clan_to_rook,
    enumerate_rooks,
    involution_leq,
    rank_control,
    rook_leq,
    rook_to_involution,
    verify_dense_iso,
)
from .sects import (
    BasisSubset,
    DenseSect,
    LatticePath,
    Sect,
    base_clan_of_subset,
    cell_dimension,
    dense_sect,
    is_upper_order_ideal,
    lattice_path,
    path_leq,
    sect_of_clan,
    sect_partition,
    sect_to_json,
    subset_colex_rank,
    subset_of_base_clan,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "BasisSubset",
    "Clan",
    "ClanStatistics",
    "ClanSymbol",
    "DEFAULT_LIMIT",
    "DelannoyStep",
    "DenseSect",
    "IntegerMatrix",
    "Involution",
    "IsoReport",
    "LatticePath",
    "NW",
    "Poset",
    "RankControlMatrix",
    "RookMatrix",
    "SW",
    "Sect",
    "SignedClan",
    "WeightedDelannoyPath",
    "base_clan",
    "base_clan_of_subset",
    "build_poset",
    "canonicalize",
    "cell_dimension",
    "clan_sort_key",
    "clan_statistics",
    "clan_to_rook",
    "count_clans",
    "default_flag_matrix",
    "default_permutation",
    "default_signed_clan",
    "delannoy_to_lattice",
    "dense_sect",
    "embed_clan",
    "enumerate_clans",
    "enumerate_rooks",
    "errors",
    "extremal_elements",
    "involution_leq",
    "is_upper_order_ideal",
    "lattice_path",
    "leq_via_involution",
    "pair_positions",
    "parse_clan",
    "parse_delannoy",
    "path_leq",
    "rank_control",
    "rook_leq",
    "rook_to_involution",
    "sect_of_clan",
    "sect_partition",
    "sect_to_json",
    "subset_colex_rank",
    "subset_of_base_clan",
    "underlying_involution",
    "verify_dense_iso",
    "wyser_leq",
]
