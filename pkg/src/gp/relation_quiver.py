"""
Relation Quiver

The relation quiver has one vertex per arrow of the algebra and one edge per
quadratic relation. For a relation ``alpha*beta`` the stored edge runs
``alpha -> beta``: one step along an edge is one syzygy step,
Ω(αΛ) = βΛ. Components that are basic cycles are the perfect components.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..qalg import BoundQuiverAlgebra

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RelationEdge:
    """Edge ``source -> target`` coming from the relation ``source*target``."""

    source: str
    target: str

    @property
    def label(self) -> str:
        return f"{self.source}*{self.target}"


@dataclass(frozen=True)
class RelationQuiver:
    vertices: Tuple[str, ...]
    edges: Tuple[RelationEdge, ...]

    def out_edges(self, vertex: str) -> List[RelationEdge]:
        return [e for e in self.edges if e.source == vertex]

    def in_edges(self, vertex: str) -> List[RelationEdge]:
        return [e for e in self.edges if e.target == vertex]

    def components(self) -> List[List[str]]:
        """Weakly connected components, each listed in declaration order."""
        seen: Dict[str, int] = {}
        components: List[List[str]] = []
        for start in self.vertices:
            if start in seen:
                continue
            seen[start] = len(components)
            members = {start}
            frontier = [start]
            while frontier:
                v = frontier.pop()
                for e in self.edges:
                    for x, y in ((e.source, e.target), (e.target, e.source)):
                        if x == v and y not in seen:
                            seen[y] = len(components)
                            members.add(y)
                            frontier.append(y)
            components.append([v for v in self.vertices if v in members])
        return components


@dataclass(frozen=True)
class PerfectComponent:
    """A basic cycle of the relation quiver, oriented along syzygy steps.

    ``cycle[0]`` is the earliest-declared arrow of the component and
    ``cycle[i+1]`` is the syzygy of ``cycle[i]`` (indices mod d).
    """

    cycle: Tuple[str, ...]

    @property
    def d(self) -> int:
        return len(self.cycle)

    def successor(self, arrow: str) -> str:
        return self.cycle[(self.cycle.index(arrow) + 1) % self.d]

    def predecessor(self, arrow: str) -> str:
        return self.cycle[(self.cycle.index(arrow) - 1) % self.d]


def relation_quiver(alg: BoundQuiverAlgebra) -> RelationQuiver:
    """Build the relation quiver of ``alg``.

    Example:
        >>> rq = relation_quiver(kx2)
        >>> [e.label for e in rq.edges]
        ['x*x']
    """
    vertices = tuple(a.name for a in alg.quiver.arrows)
    edges = tuple(RelationEdge(left, right) for left, right in alg.relations)
    return RelationQuiver(vertices, edges)


def perfect_components(rq: RelationQuiver) -> List[PerfectComponent]:
    """Return the components of ``rq`` that are basic cycles."""
    result = []
    for members in rq.components():
        if not all(
            len(rq.out_edges(v)) == 1 and len(rq.in_edges(v)) == 1 for v in members
        ):
            continue
        cycle = [members[0]]
        nxt = rq.out_edges(members[0])[0].target
        while nxt != members[0]:
            cycle.append(nxt)
            nxt = rq.out_edges(nxt)[0].target
        result.append(PerfectComponent(tuple(cycle)))
    logger.debug(f"Perfect components: {[c.cycle for c in result]}")
    return result
