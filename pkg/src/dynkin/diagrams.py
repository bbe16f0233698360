"""
Dynkin Diagrams

Recognition of simply-laced Dynkin diagrams as the underlying graph of a
quiver. Orientation is forgotten; loops, multiple edges, cycles and
non-ADE trees are reported as NotDynkin.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Literal, Tuple, Union

from ..qalg import Quiver
from ..utils.errors import Disconnected, ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DynkinType:
    """A(k≥1), D(k≥4), E6, E7 or E8."""

    family: Literal["A", "D", "E"]
    rank: int

    def __post_init__(self):
        valid = (
            (self.family == "A" and self.rank >= 1)
            or (self.family == "D" and self.rank >= 4)
            or (self.family == "E" and self.rank in (6, 7, 8))
        )
        if not valid:
            raise ValidationError(f"No Dynkin diagram {self.family}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        """``"A3"``, ``"D4"``, ``"E6"`` and so on."""
        text = text.strip().upper()
        if len(text) < 2 or text[0] not in "ADE" or not text[1:].isdigit():
            raise ValidationError(f"Cannot read Dynkin type {text!r}")
        return cls(text[0], int(text[1:]))  # type: ignore[arg-type]

    def edges(self) -> List[Tuple[int, int]]:
        """Edges of the standard labelling on vertices 0..rank-1."""
        k = self.rank
        if self.family == "A":
            return [(i, i + 1) for i in range(k - 1)]
        if self.family == "D":
            return [(i, i + 1) for i in range(k - 2)] + [(k - 3, k - 1)]
        return [(i, i + 1) for i in range(k - 2)] + [(2, k - 1)]

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class NotDynkin:
    reason: str

    def __str__(self) -> str:
        return f"not Dynkin ({self.reason})"


Classification = Union[DynkinType, NotDynkin]


def _leg_length(adjacency: Dict[str, List[str]], branch: str, start: str) -> int:
    length, prev, cur = 1, branch, start
    while len(adjacency[cur]) == 2:
        nxt = [w for w in adjacency[cur] if w != prev][0]
        prev, cur = cur, nxt
        length += 1
    return length


def classify_underlying_graph(quiver: Quiver) -> Classification:
    """ADE type of the underlying graph of ``quiver``.

    Raises:
        Disconnected: if the quiver is not connected

    Example:
        >>> classify_underlying_graph(linear_quiver(3))
        DynkinType(family='A', rank=3)
    """
    if not quiver.is_connected():
        raise Disconnected("Quiver is not connected; classify each component separately")
    if any(a.source == a.target for a in quiver.arrows):
        return NotDynkin("loop")
    pairs = Counter(frozenset((a.source, a.target)) for a in quiver.arrows)
    if any(count > 1 for count in pairs.values()):
        return NotDynkin("multiple edge")
    if len(pairs) != len(quiver.vertices) - 1:
        return NotDynkin("cycle")
    adjacency: Dict[str, List[str]] = {v: [] for v in quiver.vertices}
    for pair in pairs:
        u, w = tuple(pair)
        adjacency[u].append(w)
        adjacency[w].append(u)
    degrees = {v: len(ns) for v, ns in adjacency.items()}
    if max(degrees.values(), default=0) > 3:
        return NotDynkin("vertex of degree at least 4")
    branches = [v for v, d in degrees.items() if d == 3]
    if not branches:
        return DynkinType("A", len(quiver.vertices))
    if len(branches) > 1:
        return NotDynkin("more than one branch vertex")
    legs = tuple(sorted(_leg_length(adjacency, branches[0], w) for w in adjacency[branches[0]]))
    logger.debug(f"Branch vertex {branches[0]} with legs {legs}")
    if legs[:2] == (1, 1):
        return DynkinType("D", legs[2] + 3)
    if legs in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
        return DynkinType("E", sum(legs) + 1)
    return NotDynkin(f"tree with legs {legs}")
