"""Weighted Delannoy paths and their expansion into lattice paths.

A weighted Delannoy step is north, east, or a weighted diagonal D:w.  A
diagonal step with weight w rewrites itself as a north step inserted at
position w of the output built so far, followed by an east step, so a path
with no diagonal steps passes through unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadTokenError,
    EmptyInputError,
    NonPositiveWeightError,
    WeightOutOfRangeError,
)
from .sects import EAST, NORTH, LatticePath

DIAGONAL = "D"


@dataclass(frozen=True)
class DelannoyStep:
    kind: str
    weight: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in (NORTH, EAST, DIAGONAL):
            raise BadTokenError(f"unknown step kind {self.kind!r}")
        if self.kind == DIAGONAL:
            if self.weight is None:
                raise BadTokenError("diagonal steps need a weight")
            if self.weight < 1:
                raise NonPositiveWeightError(
                    f"diagonal weight must be positive, got {self.weight}"
                )
        elif self.weight is not None:
            raise BadTokenError(f"{self.kind} steps carry no weight")

    def __str__(self) -> str:
        return f"{DIAGONAL}:{self.weight}" if self.kind == DIAGONAL else self.kind


@dataclass(frozen=True)
class WeightedDelannoyPath:
    steps: tuple[DelannoyStep, ...]

    @property
    def p(self) -> int:
        return sum(1 for s in self.steps if s.kind in (EAST, DIAGONAL))

    @property
    def q(self) -> int:
        return sum(1 for s in self.steps if s.kind in (NORTH, DIAGONAL))

    def __str__(self) -> str:
        return " ".join(str(s) for s in self.steps)


def _scan_steps(chunk: str) -> list[DelannoyStep]:
    steps: list[DelannoyStep] = []
    i = 0
    while i < len(chunk):
        ch = chunk[i]
        if ch in (NORTH, EAST):
            steps.append(DelannoyStep(ch))
            i += 1
        elif ch == DIAGONAL:
            if i + 1 >= len(chunk) or chunk[i + 1] != ":":
                raise BadTokenError(f"expected ':' after D in {chunk!r}")
            j = i + 2
            while j < len(chunk) and chunk[j].isdigit():
                j += 1
            if j == i + 2:
                raise BadTokenError(f"missing weight after D: in {chunk!r}")
            steps.append(DelannoyStep(DIAGONAL, int(chunk[i + 2 : j])))
            i = j
        else:
            raise BadTokenError(f"unexpected character {ch!r} in {chunk!r}")
    return steps


def parse_delannoy(text: str) -> WeightedDelannoyPath:
    """Parse step tokens such as ``N E D:2 E`` or the compact ``NED:2E``."""
    body = text.strip()
    if not body:
        raise EmptyInputError("no Delannoy steps in input")
    steps: list[DelannoyStep] = []
    for chunk in body.split():
        steps.extend(_scan_steps(chunk))
    return WeightedDelannoyPath(tuple(steps))


def delannoy_to_lattice(path: WeightedDelannoyPath) -> LatticePath:
    """Expand diagonal steps; the result has p east and q north steps.

    D:w inserts a north step at 1-based position w of the output built so
    far and then appends an east step; w may exceed the current length by
    exactly one, anything larger raises WeightOutOfRangeError.
    """
    out: list[str] = []
    for step in path.steps:
        if step.kind == NORTH:
            out.append(NORTH)
        elif step.kind == EAST:
            out.append(EAST)
        else:
            if step.weight > len(out) + 1:
                raise WeightOutOfRangeError(
                    f"weight {step.weight} exceeds position {len(out) + 1}"
                )
            out.insert(step.weight - 1, NORTH)
            out.append(EAST)
    return LatticePath(tuple(out))
