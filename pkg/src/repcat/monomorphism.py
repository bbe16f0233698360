"""
Monomorphism Category S_n(Gprj-Λ)

Objects are chains ``X_1 -> X_2 -> ... -> X_n`` of monomorphisms between
Gorenstein projectives with Gorenstein projective cokernels. Indecomposables
are the intervals ``[i,j,G]`` (ΩG at positions i..j, its projective cover
P_G after j) and the projective intervals ``[j,j,P]`` (P after j).
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Literal, Optional, Tuple, Union

import numpy as np

from ..gp import GpIndec, cover_of, gp_indecomposables, stable_classes, syzygy_step
from ..oracle import realize_module, realize_morphism, verify_exact_sequence
from ..qalg import BoundQuiverAlgebra, linear_quiver
from ..utils.errors import NotCovered, ValidationError
from .report import SequenceCheck, SequenceReport, SnObjectModel, SnReport, VertexExactness
from .symbolic import (
    GpRep,
    ScalarCover,
    ScalarEmb,
    ScalarId,
    SymbolicModule,
    SymbolicMorphism,
)

logger = logging.getLogger(__name__)

Family = Literal["boundary", "top", "diagonal"]


@dataclass(frozen=True)
class Interval:
    """``[i,j,G]``: ΩG at positions i..j, P_G at j+1..n, zero before i."""

    i: int
    j: int
    G: GpIndec

    def __post_init__(self):
        if self.G.is_projective:
            raise ValidationError(f"Interval [{self.i},{self.j},{self.G}] needs a non-projective G")
        if not 1 <= self.i <= self.j:
            raise ValidationError(f"Interval bounds must satisfy 1 <= i <= j, got [{self.i},{self.j}]")

    @property
    def is_projective(self) -> bool:
        return False

    def check_bounds(self, n: int):
        if self.j > n:
            raise ValidationError(f"{self} does not fit in S_{n}")

    def content(self, alg: BoundQuiverAlgebra, n: int) -> List[Tuple[GpIndec, ...]]:
        """Summands at positions 1..n."""
        omega = syzygy_step(alg, self.G)
        cover = cover_of(alg, self.G)
        return [
            () if k < self.i else (omega,) if k <= self.j else (cover,)
            for k in range(1, n + 1)
        ]

    def __str__(self) -> str:
        return f"[{self.i},{self.j},{self.G}]"


@dataclass(frozen=True)
class ProjInterval:
    """``[i,j,P]`` with P at positions j+1..n; normal form has i = j."""

    i: int
    j: int
    P: GpIndec

    def __post_init__(self):
        if not self.P.is_projective:
            raise ValidationError(f"Projective interval needs a projective, got {self.P}")
        if not 0 <= self.i <= self.j:
            raise ValidationError(f"Interval bounds must satisfy 0 <= i <= j, got [{self.i},{self.j}]")

    @classmethod
    def normal(cls, j: int, P: GpIndec) -> "ProjInterval":
        return cls(j, j, P)

    def normalized(self) -> "ProjInterval":
        return ProjInterval.normal(self.j, self.P)

    @property
    def is_projective(self) -> bool:
        return True

    def check_bounds(self, n: int):
        if self.j > n - 1:
            raise ValidationError(f"{self} is zero in S_{n}")

    def content(self, alg: BoundQuiverAlgebra, n: int) -> List[Tuple[GpIndec, ...]]:
        return [() if k <= self.j else (self.P,) for k in range(1, n + 1)]

    def __str__(self) -> str:
        return f"[{self.i},{self.j},{self.P}]"


SnObject = Union[Interval, ProjInterval]


def sn_shape(alg: BoundQuiverAlgebra, n: int, obj: SnObject) -> str:
    """Chain rendering such as ``(0 → xΛ)``, ``(xΛ = xΛ)`` or ``(xΛ ↪ e_1Λ)``."""
    content = obj.content(alg, n)
    parts = [str(c[0]) if c else "0" for c in content]
    text = parts[0]
    for prev, cur in zip(content, content[1:]):
        arrow = "→" if not prev else "=" if prev == cur else "↪"
        text += f" {arrow} {cur[0] if cur else '0'}"
    return f"({text})"


def sn_indecomposables(alg: BoundQuiverAlgebra, n: int) -> List[SnObject]:
    """Every indecomposable of S_n(Gprj-Λ) up to isomorphism.

    Projective intervals come first (vertex order, then j), followed by the
    intervals class by class. There are n·s + m·n(n+1)/2 of them.
    """
    if n < 1:
        raise ValidationError(f"n must be at least 1, got {n}")
    objects: List[SnObject] = [
        ProjInterval.normal(j, GpIndec.projective(v))
        for v in alg.quiver.vertices
        for j in range(n)
    ]
    for cls in stable_classes(alg):
        for G in cls.members:
            objects.extend(Interval(i, j, G) for i in range(1, n + 1) for j in range(i, n + 1))
    return objects


def sn_report(alg: BoundQuiverAlgebra, n: int) -> SnReport:
    objects = sn_indecomposables(alg, n)
    models = [
        SnObjectModel(name=str(o), shape=sn_shape(alg, n, o), projective=o.is_projective)
        for o in objects
    ]
    return SnReport(
        algebra=alg.name,
        n=n,
        total=len(objects),
        non_projective=sum(not o.is_projective for o in objects),
        objects=models,
    )


def _chain_map(prev: Tuple[GpIndec, ...], cur: Tuple[GpIndec, ...]) -> SymbolicMorphism:
    if not prev or not cur:
        return SymbolicMorphism.zero(len(cur), len(prev))
    entry = ScalarId() if prev == cur else ScalarEmb()
    return SymbolicMorphism.from_rows([[entry]])


def sn_representation(alg: BoundQuiverAlgebra, n: int, obj: SnObject) -> GpRep:
    """The chain of ``obj`` as a representation of the linear quiver A_n."""
    obj.check_bounds(n)
    quiver = linear_quiver(n)
    content = obj.content(alg, n)
    vertices = {str(k + 1): SymbolicModule(content[k]) for k in range(n)}
    arrows = {
        f"a{k}": _chain_map(content[k - 1], content[k]) for k in range(1, n)
    }
    return GpRep(quiver, vertices, arrows)


@dataclass(frozen=True)
class AlmostSplitSequence:
    """``0 -> left -> ⊕ middles -> right -> 0`` with its maps at every A_n vertex.

    ``f[k]`` and ``g[k]`` are the components at vertex k+1; middle summands
    at a vertex follow the order of ``middles``.
    """

    n: int
    left: SnObject
    middles: Tuple[SnObject, ...]
    right: SnObject
    family: Family
    f: Tuple[SymbolicMorphism, ...]
    g: Tuple[SymbolicMorphism, ...]

    def __str__(self) -> str:
        middle = " ⊕ ".join(str(m) for m in self.middles)
        return f"0 -> {self.left} -> {middle} -> {self.right} -> 0"


def _boundary(alg, n: int, end: Interval) -> AlmostSplitSequence:
    G = syzygy_step(alg, end.G)
    left = Interval(1, n, G)
    if n == 1:
        middles: Tuple[SnObject, ...] = (ProjInterval.normal(0, cover_of(alg, G)),)
    else:
        middles = (Interval(1, n - 1, G),)
    f = [SymbolicMorphism.from_rows([[ScalarId()]]) for _ in range(n - 1)]
    g = [SymbolicMorphism.zero(0, 1) for _ in range(n - 1)]
    f.append(SymbolicMorphism.from_rows([[ScalarEmb()]]))
    g.append(SymbolicMorphism.from_rows([[ScalarCover()]]))
    return AlmostSplitSequence(n, left, middles, end, "boundary", tuple(f), tuple(g))


def _top(alg, n: int, end: Interval) -> AlmostSplitSequence:
    G = end.G
    omega = syzygy_step(alg, G)
    p1 = cover_of(alg, omega)
    left = Interval(1, 1, omega)
    middles = (ProjInterval.normal(0, p1), Interval(2, n, G))
    f = [SymbolicMorphism.from_rows([[ScalarEmb()]])]
    g = [SymbolicMorphism.from_rows([[ScalarCover()]])]
    for _ in range(2, n + 1):
        f.append(SymbolicMorphism.from_rows([[ScalarId()], [ScalarCover()]]))
        g.append(SymbolicMorphism.from_rows([[ScalarCover(), ScalarId(-1)]]))
    return AlmostSplitSequence(n, left, middles, end, "top", tuple(f), tuple(g))


def _diagonal(alg, n: int, end: Interval) -> AlmostSplitSequence:
    i, H = end.i, end.G
    p1 = cover_of(alg, H)
    left = Interval(i + 1, i + 1, H)
    middles = (ProjInterval.normal(i, p1), Interval(i, i + 1, H))
    f, g = [], []
    for k in range(1, n + 1):
        if k < i:
            f.append(SymbolicMorphism.zero(0, 0))
            g.append(SymbolicMorphism.zero(0, 0))
        elif k == i:
            f.append(SymbolicMorphism.zero(1, 0))
            g.append(SymbolicMorphism.from_rows([[ScalarId()]]))
        elif k == i + 1:
            f.append(SymbolicMorphism.from_rows([[ScalarEmb()], [ScalarId()]]))
            g.append(SymbolicMorphism.from_rows([[ScalarId(-1), ScalarEmb()]]))
        else:
            f.append(SymbolicMorphism.from_rows([[ScalarId()], [ScalarId()]]))
            g.append(SymbolicMorphism.from_rows([[ScalarId(-1), ScalarId()]]))
    return AlmostSplitSequence(n, left, middles, end, "diagonal", tuple(f), tuple(g))


def almost_split_sn(alg: BoundQuiverAlgebra, n: int, end: SnObject) -> AlmostSplitSequence:
    """The almost split sequence of S_n(Gprj-Λ) ending at ``end``.

    Covered right ends: ``[n,n,H]`` (boundary), ``[1,n,G]`` (top, n ≥ 2)
    and ``[i,i,H]`` with i < n (diagonal). For n = 1 the sequence is the
    Gprj-Λ sequence ``ΩG ↪ P_G ↠ G``.

    Raises:
        NotCovered: projective or uncovered right end
    """
    if end.is_projective:
        raise NotCovered(f"{end} is projective; no almost split sequence ends there")
    end.check_bounds(n)
    if end.i == end.j == n:
        seq = _boundary(alg, n, end)
    elif end.i == 1 and end.j == n:
        seq = _top(alg, n, end)
    elif end.i == end.j < n:
        seq = _diagonal(alg, n, end)
    else:
        raise NotCovered(f"No almost split sequence is available for the right end {end} in S_{n}")
    logger.debug(f"Almost split sequence ({seq.family}): {seq}")
    return seq


def _middle_rep(alg: BoundQuiverAlgebra, seq: AlmostSplitSequence) -> GpRep:
    return GpRep.direct_sum(
        linear_quiver(seq.n), [sn_representation(alg, seq.n, m) for m in seq.middles]
    )


def sequence_representations(alg: BoundQuiverAlgebra, seq: AlmostSplitSequence) -> Dict[str, GpRep]:
    return {
        "left": sn_representation(alg, seq.n, seq.left),
        "middle": _middle_rep(alg, seq),
        "right": sn_representation(alg, seq.n, seq.right),
    }


def check_almost_split_sequence(
    alg: BoundQuiverAlgebra, seq: AlmostSplitSequence, p: int = 101
) -> SequenceCheck:
    """Realize ``seq`` and check exactness, commutation and dimension additivity."""
    reps = sequence_representations(alg, seq)
    vertices = [str(k) for k in range(1, seq.n + 1)]
    realized = {
        name: {v: realize_module(alg, rep.vertices[v], p) for v in vertices}
        for name, rep in reps.items()
    }
    f_maps, g_maps, rows = {}, {}, []
    exact = additive = True
    for k, v in enumerate(vertices):
        f_maps[v] = realize_morphism(alg, seq.f[k], realized["left"][v], realized["middle"][v])
        g_maps[v] = realize_morphism(alg, seq.g[k], realized["middle"][v], realized["right"][v])
        dims = [realized[name][v].dimension for name in ("left", "middle", "right")]
        vertex_exact = verify_exact_sequence(alg, [f_maps[v], g_maps[v]])
        exact &= vertex_exact
        additive &= dims[0] + dims[2] == dims[1]
        rows.append(VertexExactness(vertex=v, exact=vertex_exact, dimensions=dims))
    commutes = True
    for k in range(1, seq.n):
        a, v, w = f"a{k}", vertices[k - 1], vertices[k]
        arrow_maps = {
            name: realize_morphism(alg, reps[name].arrows[a], realized[name][v], realized[name][w])
            for name in reps
        }
        commutes &= np.array_equal(
            f_maps[w].compose(arrow_maps["left"]).matrix,
            arrow_maps["middle"].compose(f_maps[v]).matrix,
        )
        commutes &= np.array_equal(
            g_maps[w].compose(arrow_maps["middle"]).matrix,
            arrow_maps["right"].compose(g_maps[v]).matrix,
        )
    if not (exact and commutes and additive):
        logger.warning(f"Sequence check failed for {seq}: exact={exact}, commutes={commutes}, additive={additive}")
    return SequenceCheck(
        sequence=str(seq),
        family=seq.family,
        exact=exact,
        commutes=commutes,
        additive=additive,
        vertices=rows,
    )


def all_almost_split_sn(alg: BoundQuiverAlgebra, n: int) -> List[AlmostSplitSequence]:
    """Every covered sequence, one per covered right end in canonical order."""
    result = []
    for obj in sn_indecomposables(alg, n):
        try:
            result.append(almost_split_sn(alg, n, obj))
        except NotCovered:
            continue
    return result


def gp_interval_count(alg: BoundQuiverAlgebra, n: int) -> int:
    """Closed form n·s + m·n(n+1)/2."""
    m = len(gp_indecomposables(alg)) - len(alg.quiver.vertices)
    return n * len(alg.quiver.vertices) + m * n * (n + 1) // 2


def sequence_report(
    alg: BoundQuiverAlgebra, seq: AlmostSplitSequence, check: Optional[SequenceCheck] = None
) -> SequenceReport:
    """Serializable view of ``seq``; ``check`` attaches an oracle result."""
    return SequenceReport(
        left=str(seq.left),
        middles=[str(m) for m in seq.middles],
        right=str(seq.right),
        family=seq.family,
        f=[m.render() for m in seq.f],
        g=[m.render() for m in seq.g],
        check=check,
    )
