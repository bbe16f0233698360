"""
Stabilization and Lifting

Ψ drops the projective summands of a Gorenstein projective representation.
``lift`` runs the density construction in the other direction: layer by
layer from the sources, ``H_v = G_v ⊕ ⊕_{t(a)=v} P(H_{s(a)})``.
"""

import logging
from typing import Dict, List, Optional

import numpy as np

from ..gp import GpIndec, envelope_of, stable_classes
from ..oracle import MatrixModule, is_isomorphic
from ..qalg import Arrow, BoundQuiverAlgebra, Quiver
from ..utils.errors import ValidationError
from .symbolic import GpRep, ScalarEmb, ScalarId, StableRep, SymbolicModule, SymbolicMorphism

logger = logging.getLogger(__name__)


def psi(rep: GpRep, p: int = 101) -> StableRep:
    """Stabilize: keep the arrow ideal summands and the ScalarId entries between them."""
    keep = {
        v: [k for k, g in enumerate(m.summands) if not g.is_projective]
        for v, m in rep.vertices.items()
    }
    vertices = {v: tuple(rep.vertices[v].summands[k] for k in ks) for v, ks in keep.items()}
    arrows = {}
    for a in rep.quiver.arrows:
        rows, cols = keep[a.target], keep[a.source]
        matrix = np.zeros((len(rows), len(cols)), dtype=np.int64)
        morphism = rep.arrows[a.name]
        for i, r in enumerate(rows):
            for j, c in enumerate(cols):
                entry = morphism.get(r, c)
                if entry.kind == "id":
                    matrix[i, j] = entry.c % p
        arrows[a.name] = matrix
    return StableRep(rep.quiver, vertices, arrows, p)


def lift(
    alg: BoundQuiverAlgebra,
    rep: StableRep,
    quiver: Optional[Quiver] = None,
    canonical: bool = True,
) -> GpRep:
    """Lift a stable representation to a Gorenstein projective one.

    Each vertex module is ``G_v`` followed by one slot ``P(H_{s(a)})`` per
    incoming arrow in declaration order. The map along ``a`` is ``h'_a`` into
    ``G_v`` stacked over ``γ_{H_{s(a)}}`` into its own slot, with the
    identity on projective summands.

    Args:
        alg: Algebra supplying envelopes
        rep: Stable representation to lift
        quiver: Defaults to ``rep.quiver``; must be acyclic
        canonical: Sort the vertex modules canonically at the end

    Example:
        >>> str(lift(kx2, R).vertices["2"])   # R = (xΛ --[1]--> xΛ) over A_2
        'e_1Λ ⊕ xΛ'
    """
    quiver = quiver or rep.quiver
    modules: Dict[str, List[GpIndec]] = {}
    arrows: Dict[str, SymbolicMorphism] = {}
    for depth, layer in enumerate(quiver.source_layers()):
        for v in layer:
            summands = list(rep.vertices[v])
            slots = {}
            for a in quiver.arrows_into(v):
                slots[a.name] = len(summands)
                summands.extend(envelope_of(alg, g) for g in modules[a.source])
            modules[v] = summands
            for a in quiver.arrows_into(v):
                arrows[a.name] = _arrow_map(rep, a, modules[a.source], len(summands), slots[a.name])
        logger.debug(f"Lift layer {depth}: {layer}")
    lifted = GpRep(
        quiver, {v: SymbolicModule(tuple(s)) for v, s in modules.items()}, arrows
    )
    return lifted.canonicalize(alg) if canonical else lifted


def _arrow_map(
    rep: StableRep, arrow: Arrow, source: List[GpIndec], rows: int, slot: int
) -> SymbolicMorphism:
    entries = {}
    matrix = rep.arrows[arrow.name]
    for i in range(matrix.shape[0]):
        for j in range(matrix.shape[1]):
            if matrix[i, j]:
                entries[(i, j)] = ScalarId(int(matrix[i, j]))
    for k, g in enumerate(source):
        entries[(slot + k, k)] = ScalarId() if g.is_projective else ScalarEmb()
    return SymbolicMorphism((rows, len(source)), entries)


def _class_module(rep: StableRep, g: GpIndec, algebra: BoundQuiverAlgebra) -> MatrixModule:
    """Multiplicity representation of ``g`` as a module over the opposite path algebra."""
    index = {v: [k for k, h in enumerate(rep.vertices[v]) if h == g] for v in rep.quiver.vertices}
    labels = {v: tuple(f"{g}#{k}" for k in ks) for v, ks in index.items()}
    maps = {
        a.name: rep.arrows[a.name][np.ix_(index[a.target], index[a.source])]
        for a in rep.quiver.arrows
    }
    return MatrixModule(algebra, rep.prime, labels, maps)


def stable_isomorphic(first: StableRep, second: StableRep, seed: int = 0) -> bool:
    """Isomorphism of stable representations.

    Hom between different stable indecomposables vanishes and each has
    endomorphisms k, so the question splits into one quiver-representation
    isomorphism problem per arrow ideal.
    """
    if first.quiver.vertices != second.quiver.vertices:
        raise ValidationError("Stable representations over different quivers")
    if first.prime != second.prime:
        raise ValidationError("Stable representations over different fields")
    reversed_quiver = Quiver(
        first.quiver.vertices,
        tuple(Arrow(a.name, a.target, a.source) for a in first.quiver.arrows),
    )
    path_algebra = BoundQuiverAlgebra(reversed_quiver, (), name="kQ^op")
    classes = first.classes() + [g for g in second.classes() if g not in first.classes()]
    for g in classes:
        left = _class_module(first, g, path_algebra)
        right = _class_module(second, g, path_algebra)
        if not is_isomorphic(left, right, seed):
            logger.debug(f"Stable representations differ on {g}")
            return False
    return True


def random_stable_rep(
    alg: BoundQuiverAlgebra,
    rng: np.random.Generator,
    p: int = 101,
    max_vertices: int = 5,
    max_arrows: int = 6,
    max_mult: int = 2,
) -> StableRep:
    """Random stable representation of a random acyclic quiver.

    Arrows run from a lower to a higher vertex number; every entry allowed
    by the zero pattern is uniform in F_p.
    """
    n = int(rng.integers(1, max_vertices + 1))
    vertices = tuple(str(k) for k in range(1, n + 1))
    arrows = []
    if n > 1:
        for k in range(int(rng.integers(0, max_arrows + 1))):
            i, j = sorted(rng.choice(n, size=2, replace=False))
            arrows.append(Arrow(f"r{k + 1}", vertices[i], vertices[j]))
    quiver = Quiver(vertices, tuple(arrows))
    ideals = [g for cls in stable_classes(alg) for g in cls.members]
    modules: Dict[str, tuple] = {}
    for v in vertices:
        summands: List[GpIndec] = []
        for g in ideals:
            summands.extend([g] * int(rng.integers(0, max_mult + 1)))
        modules[v] = tuple(summands)
    maps = {}
    for a in quiver.arrows:
        src, tgt = modules[a.source], modules[a.target]
        matrix = np.zeros((len(tgt), len(src)), dtype=np.int64)
        for i, t in enumerate(tgt):
            for j, s in enumerate(src):
                if s == t:
                    matrix[i, j] = int(rng.integers(0, p))
        maps[a.name] = matrix
    return StableRep(quiver, modules, maps, p)
