"""
Gorenstein Projective Classification

Indecomposable Gorenstein projective modules over a quadratic monomial
algebra are the projectives e_vΛ and the arrow ideals αΛ of perfect arrows.
Syzygies of perfect arrow ideals walk around their relation cycle, which
gives the stable classes and their periods.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Literal, Tuple

from ..qalg import BoundQuiverAlgebra
from ..utils.errors import NotStable, ValidationError
from .relation_quiver import PerfectComponent, perfect_components, relation_quiver

logger = logging.getLogger(__name__)

Direction = Literal["forward", "inverse"]


@dataclass(frozen=True)
class GpIndec:
    """An indecomposable Gorenstein projective: ``e_vΛ`` or ``αΛ``.

    Use the ``projective`` / ``arrow_ideal`` constructors; ``label`` is the
    vertex id or the arrow id respectively.
    """

    kind: Literal["projective", "arrow_ideal"]
    label: str

    @classmethod
    def projective(cls, vertex: str) -> "GpIndec":
        return cls("projective", vertex)

    @classmethod
    def arrow_ideal(cls, arrow: str) -> "GpIndec":
        return cls("arrow_ideal", arrow)

    @property
    def is_projective(self) -> bool:
        return self.kind == "projective"

    def __str__(self) -> str:
        return f"e_{self.label}Λ" if self.is_projective else f"{self.label}Λ"


@dataclass(frozen=True)
class StableClass:
    """A syzygy orbit ``[G, ΩG, Ω²G, ...]`` of non-projective indecomposables."""

    members: Tuple[GpIndec, ...]

    @property
    def period(self) -> int:
        return len(self.members)

    @property
    def representative(self) -> GpIndec:
        return self.members[0]

    def arrows(self) -> List[str]:
        return [g.label for g in self.members]

    def __contains__(self, item: GpIndec) -> bool:
        return item in self.members


@dataclass(frozen=True)
class GprjSequence:
    """The almost split sequence ``0 -> ΩG -> P_G -> G -> 0`` in Gprj-Λ."""

    left: GpIndec
    middle: GpIndec
    right: GpIndec

    @property
    def tau(self) -> GpIndec:
        """AR translate of the right end."""
        return self.left

    def __str__(self) -> str:
        return f"0 -> {self.left} -> {self.middle} -> {self.right} -> 0"


@lru_cache(maxsize=64)
def _components(alg: BoundQuiverAlgebra) -> Tuple[PerfectComponent, ...]:
    return tuple(perfect_components(relation_quiver(alg)))


@lru_cache(maxsize=64)
def _component_of(alg: BoundQuiverAlgebra) -> Dict[str, PerfectComponent]:
    return {arrow: comp for comp in _components(alg) for arrow in comp.cycle}


def is_perfect(alg: BoundQuiverAlgebra, arrow: str) -> bool:
    alg.quiver.arrow(arrow)
    return arrow in _component_of(alg)


def arrow_ideal_is_projective(alg: BoundQuiverAlgebra, arrow: str) -> bool:
    """``αΛ`` is projective exactly when no relation ``alpha*beta`` starts with it."""
    return not any(left == arrow for left, _ in alg.relations)


def gp_indecomposables(alg: BoundQuiverAlgebra) -> List[GpIndec]:
    """All indecomposable Gorenstein projectives in canonical order.

    Projectives come first in vertex order, then the arrow ideals class by
    class in syzygy order.

    Example:
        >>> [str(g) for g in gp_indecomposables(kx2)]
        ['e_1Λ', 'xΛ']
    """
    projectives = [GpIndec.projective(v) for v in alg.quiver.vertices]
    ideals = [g for cls in stable_classes(alg) for g in cls.members]
    return projectives + ideals


def syzygy_step(
    alg: BoundQuiverAlgebra, G: GpIndec, direction: Direction = "forward"
) -> GpIndec:
    """Ω(G) (forward) or Ω⁻¹(G) (inverse) for a perfect arrow ideal.

    Raises:
        NotStable: if ``G`` is projective
        ValidationError: if the arrow is not perfect
    """
    if G.is_projective:
        raise NotStable(f"{G} is projective; its syzygy is zero")
    component = _component_of(alg).get(G.label)
    if component is None:
        raise ValidationError(f"Arrow {G.label} is not perfect")
    if direction == "forward":
        return GpIndec.arrow_ideal(component.successor(G.label))
    if direction == "inverse":
        return GpIndec.arrow_ideal(component.predecessor(G.label))
    raise ValidationError(f"Unknown syzygy direction: {direction}")


def syzygy_power(alg: BoundQuiverAlgebra, G: GpIndec, k: int) -> GpIndec:
    """Ω^k(G); negative ``k`` applies Ω⁻¹."""
    direction: Direction = "forward" if k >= 0 else "inverse"
    for _ in range(abs(k)):
        G = syzygy_step(alg, G, direction)
    return G


def stable_classes(alg: BoundQuiverAlgebra) -> List[StableClass]:
    """Partition the perfect arrow ideals into Ω-orbits.

    One class per perfect component, ordered by the component's earliest
    arrow; members start at that arrow and follow Ω.
    """
    classes = [
        StableClass(tuple(GpIndec.arrow_ideal(a) for a in comp.cycle))
        for comp in sorted(_components(alg), key=lambda c: alg.quiver.arrow_index(c.cycle[0]))
    ]
    logger.debug(f"Stable classes: {[c.arrows() for c in classes]}")
    return classes


def class_of(alg: BoundQuiverAlgebra, G: GpIndec) -> StableClass:
    for cls in stable_classes(alg):
        if G in cls:
            return cls
    raise NotStable(f"{G} does not belong to a stable class")


def canonical_key(alg: BoundQuiverAlgebra, G: GpIndec) -> Tuple[int, int, int]:
    """Sort key: projectives by vertex, then arrow ideals by class and position."""
    if G.is_projective:
        return (0, alg.quiver.vertex_index(G.label), 0)
    for index, cls in enumerate(stable_classes(alg)):
        if G in cls:
            return (1, index, cls.members.index(G))
    raise ValidationError(f"Arrow {G.label} is not perfect")


def cover_of(alg: BoundQuiverAlgebra, G: GpIndec) -> GpIndec:
    """Projective cover of G: ``e_{s(α)}Λ -> αΛ`` sends ``e`` to ``α``."""
    if G.is_projective:
        return G
    return GpIndec.projective(alg.quiver.arrow(G.label).source)


def envelope_of(alg: BoundQuiverAlgebra, G: GpIndec) -> GpIndec:
    """P(G), the target of the minimal left projective approximation of G.

    For ``αΛ`` this is the projective cover of Ω⁻¹(αΛ), i.e. ``e_{t(α)}Λ``,
    which contains ``αΛ`` as a submodule. A projective is its own envelope.
    """
    if G.is_projective:
        return G
    return GpIndec.projective(alg.quiver.arrow(G.label).target)


def almost_split_gprj(alg: BoundQuiverAlgebra, G: GpIndec) -> GprjSequence:
    """Almost split sequence in Gprj-Λ ending at the arrow ideal ``G``.

    Raises:
        NotStable: if ``G`` is projective
    """
    if G.is_projective:
        raise NotStable(f"{G} is projective; no almost split sequence ends there")
    return GprjSequence(syzygy_step(alg, G), cover_of(alg, G), G)
