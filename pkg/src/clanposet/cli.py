"""Command line interface.

Commands: enumerate, hasse, sects, dense, iso, delannoy.  All output is
deterministic; errors leave a machine readable object on stderr and a
nonzero exit status.  The environment variable SECTS_LIMIT_N overrides the
default size bound on p + q.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from .bruhat import build_poset
from .clans import DEFAULT_LIMIT, enumerate_clans
from .delannoy import delannoy_to_lattice, parse_delannoy
from .errors import ClanposetError
from .rooks import verify_dense_iso
from .sects import (
    dense_sect,
    is_upper_order_ideal,
    sect_of_clan,
    sect_partition,
    sect_to_json,
    subset_colex_rank,
    subset_of_base_clan,
)

PALETTE = (
    "#a6cee3",
    "#1f78b4",
    "#b2df8a",
    "#33a02c",
    "#fb9a99",
    "#e31a1c",
    "#fdbf6f",
    "#ff7f00",
    "#cab2d6",
    "#6a3d9a",
    "#ffff99",
    "#b15928",
)

LIMIT_ENV_VAR = "SECTS_LIMIT_N"


@dataclass
class RunConfig:
    p: int = 0
    q: int = 0
    output_format: str = "text"
    color_by_sect: bool = False
    limit_n: int = DEFAULT_LIMIT
    output_path: str | None = None


def _env_limit() -> int:
    raw = os.environ.get(LIMIT_ENV_VAR)
    if raw is None:
        return DEFAULT_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise ClanposetError(f"{LIMIT_ENV_VAR} must be an integer, got {raw!r}")


def _dumps(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def cmd_enumerate(cfg: RunConfig) -> tuple[str, int]:
    clans = enumerate_clans(cfg.p, cfg.q, limit=cfg.limit_n)
    if cfg.output_format == "json":
        return (
            _dumps(
                {
                    "p": cfg.p,
                    "q": cfg.q,
                    "count": len(clans),
                    "clans": [str(c) for c in clans],
                }
            ),
            0,
        )
    lines = [str(len(clans))] + [str(c) for c in clans]
    return "\n".join(lines) + "\n", 0


def _sect_color(clan) -> str:
    rank = subset_colex_rank(sect_of_clan(clan))
    return PALETTE[rank % len(PALETTE)]


def cmd_hasse(cfg: RunConfig) -> tuple[str, int]:
    clans = enumerate_clans(cfg.p, cfg.q, limit=cfg.limit_n)
    poset = build_poset(clans)
    if cfg.output_format == "json":
        return _dumps(poset.to_json()), 0
    colors = None
    if cfg.color_by_sect:
        colors = {str(c): _sect_color(c) for c in clans}
    lines = [f"digraph clans_{cfg.p}_{cfg.q} {{", "  rankdir=BT;"]
    for key in poset.elements:
        if colors is None:
            lines.append(f'  "{key}";')
        else:
            lines.append(f'  "{key}" [style=filled, fillcolor="{colors[key]}"];')
    for i, j in poset.covers:
        lines.append(f'  "{poset.elements[i]}" -> "{poset.elements[j]}";')
    lines.append("}")
    return "\n".join(lines) + "\n", 0


def cmd_sects(cfg: RunConfig) -> tuple[str, int]:
    partition = sect_partition(cfg.p, cfg.q, limit=cfg.limit_n)
    report = {
        "p": cfg.p,
        "q": cfg.q,
        "count": len(partition),
        "sects": [sect_to_json(sect) for sect in partition.values()],
    }
    return _dumps(report), 0


def cmd_dense(cfg: RunConfig) -> tuple[str, int]:
    dense = dense_sect(cfg.p, cfg.q, limit=cfg.limit_n)
    poset = build_poset(enumerate_clans(cfg.p, cfg.q, limit=cfg.limit_n))
    report = {
        "p": cfg.p,
        "q": cfg.q,
        "I": list(subset_of_base_clan(dense.sect.base).indices),
        "base": str(dense.sect.base),
        "min": str(dense.minimum),
        "max": str(dense.maximum),
        "size": len(dense.sect),
        "ideal": is_upper_order_ideal(dense.sect.members, poset),
        "members": [str(c) for c in dense.sect.members],
    }
    return _dumps(report), 0


def cmd_iso(cfg: RunConfig) -> tuple[str, int]:
    report = verify_dense_iso(cfg.p, limit=cfg.limit_n)
    return _dumps(report.to_json()), 0 if report.holds() else 1


def cmd_delannoy(cfg: RunConfig, tokens: str) -> tuple[str, int]:
    path = delannoy_to_lattice(parse_delannoy(tokens))
    if cfg.output_format == "json":
        return _dumps({"path": str(path)}), 0
    return str(path) + "\n", 0


def _positive_int(raw: str) -> int:
    value = int(raw)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {raw}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clanposet", description="(p,q)-clan combinatorics"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pq(sp, with_q=True):
        sp.add_argument("-p", type=_positive_int, required=True)
        if with_q:
            sp.add_argument("-q", type=_positive_int, required=True)
        sp.add_argument("-o", "--output", default=None, help="write to file")

    sp = sub.add_parser("enumerate", help="list all (p,q)-clans")
    add_pq(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("hasse", help="Hasse diagram of the closure order")
    add_pq(sp)
    sp.add_argument("--color-by-sect", action="store_true")
    sp.add_argument("--format", choices=("dot", "json"), default="dot")

    sp = sub.add_parser("sects", help="sect decomposition of C(p,q)")
    add_pq(sp)

    sp = sub.add_parser("dense", help="the dense sect of C(p,q)")
    add_pq(sp)

    sp = sub.add_parser("iso", help="check the dense sect against R_p")
    add_pq(sp, with_q=False)

    sp = sub.add_parser("delannoy", help="expand a weighted Delannoy path")
    sp.add_argument("tokens", help="step word, e.g. 'N E D:2 E'")
    sp.add_argument("-o", "--output", default=None, help="write to file")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            p=getattr(args, "p", 0),
            q=getattr(args, "q", 0),
            output_format=getattr(args, "format", "text"),
            color_by_sect=getattr(args, "color_by_sect", False),
            limit_n=_env_limit(),
            output_path=args.output,
        )
        if args.command == "enumerate":
            text, status = cmd_enumerate(cfg)
        elif args.command == "hasse":
            text, status = cmd_hasse(cfg)
        elif args.command == "sects":
            text, status = cmd_sects(cfg)
        elif args.command == "dense":
            text, status = cmd_dense(cfg)
        elif args.command == "iso":
            text, status = cmd_iso(cfg)
        else:
            text, status = cmd_delannoy(cfg, args.tokens)
        if cfg.output_path is None:
            sys.stdout.write(text)
        else:
            with open(cfg.output_path, "w", encoding="utf-8") as handle:
                handle.write(text)
    except ClanposetError as exc:
        error = {"error": exc.code, "message": str(exc)}
        print(json.dumps(error), file=sys.stderr)
        return 1
    except OSError as exc:
        error = {"error": "IoError", "message": str(exc)}
        print(json.dumps(error), file=sys.stderr)
        return 1
    return status


if __name__ == "__main__":
    sys.exit(main())
