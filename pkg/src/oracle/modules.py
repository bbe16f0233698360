"""
Matrix Modules

Explicit finite-field realizations of right Λ-modules. A module is stored as
a representation: one F_p-space per vertex (the image of the idempotent
e_v) and, for each arrow ``a``, the matrix of right multiplication by ``a``
from the space at ``t(a)`` to the space at ``s(a)``. Basis elements of
realized projectives and arrow ideals are nonzero paths.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..gp import GpIndec, cover_of, envelope_of
from ..qalg import BoundQuiverAlgebra, Path, ZeroPath
from ..utils.errors import ModuleTooLarge, NotEquivariant, ShapeMismatch, ValidationError
from . import fp_linalg as fp

logger = logging.getLogger(__name__)

MAX_DIMENSION = 512


@dataclass(frozen=True, eq=False)
class MatrixModule:
    """A right module given by vertex spaces and arrow actions.

    Attributes:
        algebra: The bound quiver algebra acting
        prime: Characteristic of the ground field
        labels: Basis labels per vertex
        maps: ``maps[a]`` has shape ``(dim at s(a), dim at t(a))``
        summands: Indecomposables this module was realized from, if any
        offsets: Per summand, the start index of its basis in each vertex space
    """

    algebra: BoundQuiverAlgebra
    prime: int
    labels: Dict[str, Tuple[str, ...]]
    maps: Dict[str, np.ndarray]
    summands: Tuple[GpIndec, ...] = ()
    offsets: Tuple[Dict[str, int], ...] = field(default=())

    def __post_init__(self):
        if self.dimension > MAX_DIMENSION:
            raise ModuleTooLarge(
                f"Module of dimension {self.dimension} exceeds the limit {MAX_DIMENSION}"
            )
        for arrow in self.algebra.quiver.arrows:
            shape = self.maps[arrow.name].shape
            expected = (self.dim(arrow.source), self.dim(arrow.target))
            if shape != expected:
                raise ShapeMismatch(
                    f"Action of {arrow.name} has shape {shape}, expected {expected}"
                )

    def dim(self, vertex: str) -> int:
        return len(self.labels[vertex])

    @property
    def dimension(self) -> int:
        return sum(len(v) for v in self.labels.values())

    @property
    def dimension_vector(self) -> Tuple[int, ...]:
        return tuple(self.dim(v) for v in self.algebra.quiver.vertices)

    @property
    def is_zero(self) -> bool:
        return self.dimension == 0

    @property
    def basis(self) -> List[str]:
        """Global basis: vertex spaces in declaration order."""
        return [lab for v in self.algebra.quiver.vertices for lab in self.labels[v]]

    def vertex_offset(self, vertex: str) -> int:
        total = 0
        for v in self.algebra.quiver.vertices:
            if v == vertex:
                return total
            total += self.dim(v)
        raise ValidationError(f"Unknown vertex: {vertex}")

    def vertex_index_sets(self) -> Dict[str, List[int]]:
        return {
            v: list(range(self.vertex_offset(v), self.vertex_offset(v) + self.dim(v)))
            for v in self.algebra.quiver.vertices
        }

    def action_matrix(self, arrow: str) -> np.ndarray:
        """Full ``d × d`` matrix of right multiplication by ``arrow``."""
        a = self.algebra.quiver.arrow(arrow)
        full = fp.zeros(self.dimension, self.dimension)
        r, c = self.vertex_offset(a.source), self.vertex_offset(a.target)
        block = self.maps[arrow]
        full[r:r + block.shape[0], c:c + block.shape[1]] = block
        return full

    def satisfies_relations(self) -> bool:
        for beta, alpha in self.algebra.relations:
            composite = fp.matmul(self.maps[alpha], self.maps[beta], self.prime)
            if composite.any():
                return False
        return True


@dataclass(frozen=True, eq=False)
class ModuleMap:
    """A vertex-graded linear map ``source -> target``."""

    source: MatrixModule
    target: MatrixModule
    blocks: Dict[str, np.ndarray]

    @property
    def matrix(self) -> np.ndarray:
        vertices = self.source.algebra.quiver.vertices
        return fp.block_diag([self.blocks[v] for v in vertices])

    def is_equivariant(self) -> bool:
        p = self.source.prime
        for arrow in self.source.algebra.quiver.arrows:
            left = fp.matmul(self.blocks[arrow.source], self.source.maps[arrow.name], p)
            right = fp.matmul(self.target.maps[arrow.name], self.blocks[arrow.target], p)
            if not np.array_equal(left, right):
                return False
        return True

    def compose(self, first: "ModuleMap") -> "ModuleMap":
        """``self ∘ first``."""
        p = self.source.prime
        blocks = {v: fp.matmul(self.blocks[v], first.blocks[v], p) for v in self.blocks}
        return ModuleMap(first.source, self.target, blocks)

    def rank(self) -> int:
        return sum(fp.rank(b, self.source.prime) for b in self.blocks.values())

    def is_injective(self) -> bool:
        return self.rank() == self.source.dimension

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dimension

    def is_isomorphism(self) -> bool:
        return self.source.dimension_vector == self.target.dimension_vector and all(
            b.shape[0] == 0 or fp.rank(b, self.source.prime) == b.shape[0]
            for b in self.blocks.values()
        )


def zero_module(alg: BoundQuiverAlgebra, p: int) -> MatrixModule:
    labels = {v: () for v in alg.quiver.vertices}
    maps = {a.name: fp.zeros(0, 0) for a in alg.quiver.arrows}
    return MatrixModule(alg, p, labels, maps)


def _path_module(alg: BoundQuiverAlgebra, paths: Sequence[Path], p: int) -> MatrixModule:
    """Module spanned by a set of paths closed under right multiplication."""
    by_vertex = {v: [q for q in paths if q.start == v] for v in alg.quiver.vertices}
    position = {str(q): i for qs in by_vertex.values() for i, q in enumerate(qs)}
    maps = {}
    for arrow in alg.quiver.arrows:
        block = fp.zeros(len(by_vertex[arrow.source]), len(by_vertex[arrow.target]))
        for j, q in enumerate(by_vertex[arrow.target]):
            image = alg.extend(q, arrow.name)
            if not isinstance(image, ZeroPath):
                block[position[str(image)], j] = 1
        maps[arrow.name] = block
    labels = {v: tuple(str(q) for q in qs) for v, qs in by_vertex.items()}
    return MatrixModule(alg, p, labels, maps)


@lru_cache(maxsize=512)
def realize_indec(alg: BoundQuiverAlgebra, indec: GpIndec, p: int) -> MatrixModule:
    """Realize ``e_vΛ`` on paths ending at v, or ``αΛ`` on paths led by α.

    Arrow ideals of any arrow (perfect or not) can be realized this way.

    Example:
        >>> realize_indec(kx2, GpIndec.projective("1"), 101).maps["x"]
        array([[0, 0], [1, 0]])  # rows/cols indexed by (e_1, x) at vertex 1
    """
    if indec.is_projective:
        paths = alg.paths_ending_at(indec.label)
    else:
        paths = alg.paths_with_leading(indec.label)
    module = _path_module(alg, paths, p)
    offsets = ({v: 0 for v in alg.quiver.vertices},)
    return MatrixModule(alg, p, module.labels, module.maps, (indec,), offsets)


def radical_of_projective(alg: BoundQuiverAlgebra, vertex: str, p: int) -> MatrixModule:
    """rad(e_vΛ): the nontrivial paths ending at v."""
    return _path_module(alg, [q for q in alg.paths_ending_at(vertex) if q.arrows], p)


def regular_module(alg: BoundQuiverAlgebra, p: int) -> MatrixModule:
    """Λ_Λ as the direct sum of all indecomposable projectives."""
    return direct_sum(
        alg, p, [realize_indec(alg, GpIndec.projective(v), p) for v in alg.quiver.vertices]
    )


def direct_sum(
    alg: BoundQuiverAlgebra, p: int, modules: Sequence[MatrixModule]
) -> MatrixModule:
    """Concatenate bases vertexwise; actions become block diagonal."""
    vertices = alg.quiver.vertices
    labels: Dict[str, List[str]] = {v: [] for v in vertices}
    summands: List[GpIndec] = []
    offsets: List[Dict[str, int]] = []
    tracked = all(m.summands for m in modules)
    for k, module in enumerate(modules):
        if tracked:
            for indec, inner in zip(module.summands, module.offsets):
                summands.append(indec)
                offsets.append({v: len(labels[v]) + inner[v] for v in vertices})
        for v in vertices:
            labels[v].extend(f"{k}:{lab}" for lab in module.labels[v])
    maps = {
        a.name: fp.block_diag([m.maps[a.name] for m in modules]) if modules
        else fp.zeros(0, 0)
        for a in alg.quiver.arrows
    }
    return MatrixModule(
        alg, p, {v: tuple(ls) for v, ls in labels.items()}, maps, tuple(summands), tuple(offsets)
    )


def realize_module(alg: BoundQuiverAlgebra, module, p: int) -> MatrixModule:
    """Realize a symbolic module (anything with a ``summands`` sequence of GpIndec)."""
    return direct_sum(alg, p, [realize_indec(alg, g, p) for g in module.summands])


def _entry_block(
    alg: BoundQuiverAlgebra, kind: str, c: int, src: GpIndec, tgt: GpIndec, vertex: str, p: int
) -> np.ndarray:
    source = realize_indec(alg, src, p)
    target = realize_indec(alg, tgt, p)
    block = fp.zeros(target.dim(vertex), source.dim(vertex))
    if kind == "zero" or c % p == 0:
        return block
    if kind == "id":
        if src != tgt:
            raise ValidationError(f"ScalarId between different summands {src} and {tgt}")
        return (c * fp.identity(source.dim(vertex))) % p
    position = {lab: i for i, lab in enumerate(target.labels[vertex])}
    if kind == "emb":
        if src.is_projective or tgt != envelope_of(alg, src):
            raise ValidationError(f"ScalarEmb must map an arrow ideal into its envelope, got {src} -> {tgt}")
        for j, lab in enumerate(source.labels[vertex]):
            block[position[lab], j] = c % p
        return block
    if kind == "cover":
        if tgt.is_projective or src != cover_of(alg, tgt):
            raise ValidationError(f"ScalarCover must map a projective cover onto its arrow ideal, got {src} -> {tgt}")
        for j, q in enumerate(p_ for p_ in alg.paths_ending_at(src.label) if p_.start == vertex):
            image = alg.prepend(tgt.label, q)
            if not isinstance(image, ZeroPath):
                block[position[str(image)], j] = c % p
        return block
    raise ValidationError(f"Unknown morphism entry kind: {kind}")


def realize_morphism(alg: BoundQuiverAlgebra, f, src: MatrixModule, tgt: MatrixModule) -> ModuleMap:
    """Realize a symbolic morphism between two realized symbolic modules.

    ``f`` provides ``entries`` mapping ``(target index, source index)`` to an
    entry with ``kind`` (zero, id, emb, cover) and scalar ``c``.

    Raises:
        ShapeMismatch: block structure disagrees with the summand lists
        NotEquivariant: the assembled map does not commute with the action
    """
    p = src.prime
    rows, cols = f.shape
    if rows != len(tgt.summands) or cols != len(src.summands):
        raise ShapeMismatch(
            f"Morphism of shape {f.shape} between modules with "
            f"{len(src.summands)} and {len(tgt.summands)} summands"
        )
    blocks = {v: fp.zeros(tgt.dim(v), src.dim(v)) for v in alg.quiver.vertices}
    for (i, j), entry in f.entries.items():
        for v in alg.quiver.vertices:
            block = _entry_block(alg, entry.kind, entry.c, src.summands[j], tgt.summands[i], v, p)
            if block.size:
                r, c = tgt.offsets[i][v], src.offsets[j][v]
                blocks[v][r:r + block.shape[0], c:c + block.shape[1]] = block
    result = ModuleMap(src, tgt, blocks)
    if not result.is_equivariant():
        raise NotEquivariant("Realized morphism does not commute with the arrow actions")
    return result


def submodule(module: MatrixModule, bases: Dict[str, np.ndarray]) -> Tuple[MatrixModule, ModuleMap]:
    """Submodule spanned vertexwise by the columns of ``bases``, with its inclusion.

    Raises:
        NotEquivariant: the spans are not closed under the action
    """
    alg, p = module.algebra, module.prime
    maps = {}
    for arrow in alg.quiver.arrows:
        image = fp.matmul(module.maps[arrow.name], bases[arrow.target], p)
        try:
            maps[arrow.name] = fp.solve(bases[arrow.source], image, p)
        except ValueError:
            raise NotEquivariant(f"Subspace is not closed under arrow {arrow.name}") from None
    labels = {v: tuple(f"{v}[{k}]" for k in range(bases[v].shape[1])) for v in alg.quiver.vertices}
    sub = MatrixModule(alg, p, labels, maps)
    return sub, ModuleMap(sub, module, {v: bases[v] for v in alg.quiver.vertices})


def quotient(module: MatrixModule, bases: Dict[str, np.ndarray]) -> Tuple[MatrixModule, ModuleMap]:
    """Quotient by the submodule spanned by ``bases``, with the projection."""
    alg, p = module.algebra, module.prime
    projections, lifts = {}, {}
    for v in alg.quiver.vertices:
        span = fp.column_basis(bases[v], p) if bases[v].size else fp.zeros(module.dim(v), 0)
        complement = fp.complement_basis(span, module.dim(v), p)
        change = np.hstack([span, complement]) if module.dim(v) else fp.zeros(0, 0)
        inv = fp.inverse(change, p) if module.dim(v) else fp.zeros(0, 0)
        projections[v] = inv[span.shape[1]:, :]
        lifts[v] = complement
    maps = {
        a.name: fp.matmul(
            projections[a.source], fp.matmul(module.maps[a.name], lifts[a.target], p), p
        )
        for a in alg.quiver.arrows
    }
    labels = {v: tuple(f"{v}[{k}]" for k in range(lifts[v].shape[1])) for v in alg.quiver.vertices}
    quo = MatrixModule(alg, p, labels, maps)
    return quo, ModuleMap(module, quo, projections)


def image_bases(f: ModuleMap) -> Dict[str, np.ndarray]:
    return {v: fp.column_basis(b, f.source.prime) if b.size else b for v, b in f.blocks.items()}


def kernel_bases(f: ModuleMap) -> Dict[str, np.ndarray]:
    p = f.source.prime
    result = {}
    for v, block in f.blocks.items():
        if f.source.dim(v) == 0:
            result[v] = fp.zeros(0, 0)
        elif block.shape[0] == 0:
            result[v] = fp.identity(f.source.dim(v))
        else:
            result[v] = fp.nullspace(block, p)
    return result


def cokernel(f: ModuleMap) -> Tuple[MatrixModule, ModuleMap]:
    return quotient(f.target, image_bases(f))

