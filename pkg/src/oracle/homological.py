"""
Homological Computations

Hom spaces as explicit linear systems, projective covers and syzygies, and
dimensions of Ext^i(M, Λ) read off a minimal projective resolution.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List

import numpy as np

from ..gp import GpIndec
from ..qalg import BoundQuiverAlgebra
from ..utils.errors import ValidationError, ZeroModule
from . import fp_linalg as fp
from .modules import (
    MatrixModule,
    ModuleMap,
    direct_sum,
    kernel_bases,
    realize_indec,
    regular_module,
    submodule,
)

logger = logging.getLogger(__name__)


def _unknown_offsets(src: MatrixModule, tgt: MatrixModule) -> Dict[str, int]:
    offsets, total = {}, 0
    for v in src.algebra.quiver.vertices:
        offsets[v] = total
        total += tgt.dim(v) * src.dim(v)
    offsets["__total__"] = total
    return offsets


def _intertwiner_system(src: MatrixModule, tgt: MatrixModule) -> np.ndarray:
    """Coefficient matrix of ``F_s(a) A^src_a - A^tgt_a F_t(a) = 0`` over all arrows.

    Unknown blocks ``F_v`` (tgt_v × src_v) are stacked vertexwise, each
    vectorized row-major.
    """
    p = src.prime
    offsets = _unknown_offsets(src, tgt)
    rows: List[np.ndarray] = []
    for arrow in src.algebra.quiver.arrows:
        s, t = arrow.source, arrow.target
        n_s, m_t = tgt.dim(s), src.dim(t)
        if n_s * m_t == 0:
            continue
        eq = fp.zeros(n_s * m_t, offsets["__total__"])
        left = np.kron(fp.identity(n_s), src.maps[arrow.name].T) % p
        right = np.kron(tgt.maps[arrow.name], fp.identity(m_t)) % p
        if left.size:
            eq[:, offsets[s]:offsets[s] + left.shape[1]] += left
        if right.size:
            eq[:, offsets[t]:offsets[t] + right.shape[1]] -= right
        rows.append(eq % p)
    if not rows:
        return fp.zeros(0, offsets["__total__"])
    return np.vstack(rows)


def hom_dimension(src: MatrixModule, tgt: MatrixModule) -> int:
    system = _intertwiner_system(src, tgt)
    return system.shape[1] - fp.rank(system, src.prime)


def hom_space(src: MatrixModule, tgt: MatrixModule) -> List[ModuleMap]:
    """A basis of Hom_Λ(src, tgt).

    Example:
        >>> len(hom_space(realize_indec(kx2, xL, 101), realize_indec(kx2, e1, 101)))
        1
    """
    if src.algebra is not tgt.algebra and src.algebra != tgt.algebra:
        raise ValidationError("Hom between modules over different algebras")
    p = src.prime
    offsets = _unknown_offsets(src, tgt)
    system = _intertwiner_system(src, tgt)
    total = offsets["__total__"]
    if total == 0:
        return []
    null = fp.nullspace(system, p) if system.shape[0] else fp.identity(total)
    basis = []
    for k in range(null.shape[1]):
        vec = null[:, k]
        blocks = {}
        for v in src.algebra.quiver.vertices:
            size = tgt.dim(v) * src.dim(v)
            blocks[v] = vec[offsets[v]:offsets[v] + size].reshape(tgt.dim(v), src.dim(v)).copy()
        basis.append(ModuleMap(src, tgt, blocks))
    return basis


def radical_bases(module: MatrixModule) -> Dict[str, np.ndarray]:
    """Vertexwise basis of M·rad Λ, the span of all arrow images."""
    p = module.prime
    result = {}
    for v in module.algebra.quiver.vertices:
        images = [module.maps[a.name] for a in module.algebra.quiver.arrows_from(v)]
        images = [m for m in images if m.size]
        if images:
            result[v] = fp.column_basis(np.hstack(images), p)
        else:
            result[v] = fp.zeros(module.dim(v), 0)
    return result


def top_generators(module: MatrixModule) -> List[tuple]:
    """Pairs ``(vertex, vector)`` whose classes form a basis of M / M·rad."""
    p = module.prime
    radical = radical_bases(module)
    gens = []
    for v in module.algebra.quiver.vertices:
        if module.dim(v) == 0:
            continue
        complement = fp.complement_basis(radical[v], module.dim(v), p)
        gens.extend((v, complement[:, k]) for k in range(complement.shape[1]))
    return gens


@dataclass(frozen=True, eq=False)
class ProjectiveCover:
    """``0 -> syzygy -> cover -> M -> 0`` with the cover map and kernel inclusion."""

    cover: MatrixModule
    cover_map: ModuleMap
    syzygy: MatrixModule
    inclusion: ModuleMap
    tops: tuple


def _act_by_path(module: MatrixModule, vector: np.ndarray, path) -> np.ndarray:
    """``vector · path``: leading arrow acts first."""
    result = vector.reshape(-1, 1)
    for arrow in path.arrows:
        result = fp.matmul(module.maps[arrow], result, module.prime)
    return result[:, 0]


def projective_cover_and_syzygy(alg: BoundQuiverAlgebra, module: MatrixModule) -> ProjectiveCover:
    """Minimal projective cover of ``module`` and its kernel.

    The generator ``g`` at vertex v defines ``e_vΛ -> M`` by ``q ↦ g·q``.

    Raises:
        ZeroModule: if ``module`` is zero
    """
    if module.is_zero:
        raise ZeroModule("The zero module has no nonzero projective cover")
    p = module.prime
    gens = top_generators(module)
    pieces = [realize_indec(alg, GpIndec.projective(v), p) for v, _ in gens]
    cover = direct_sum(alg, p, pieces)
    blocks = {}
    for u in alg.quiver.vertices:
        columns = []
        for v, g in gens:
            for q in alg.paths_ending_at(v):
                if q.start == u:
                    columns.append(_act_by_path(module, g, q))
        if columns:
            blocks[u] = np.stack(columns, axis=1) % p
        else:
            blocks[u] = fp.zeros(module.dim(u), 0)
    cover_map = ModuleMap(cover, module, blocks)
    syzygy, inclusion = submodule(cover, kernel_bases(cover_map))
    logger.debug(
        f"Cover of module {module.dimension_vector}: tops {[v for v, _ in gens]}, "
        f"syzygy {syzygy.dimension_vector}"
    )
    return ProjectiveCover(cover, cover_map, syzygy, inclusion, tuple(v for v, _ in gens))


def ext_dimensions(alg: BoundQuiverAlgebra, module: MatrixModule, bound: int) -> List[int]:
    """dim Ext^i(M, Λ) for i = 1..bound.

    From ``0 -> K_i -> P_{i-1} -> K_{i-1} -> 0`` and Ext¹(P, Λ) = 0:
    dim Ext^i(M, Λ) = hom(K_i, Λ) - hom(P_{i-1}, Λ) + hom(K_{i-1}, Λ).
    """
    if bound < 1:
        raise ValidationError(f"Ext bound must be at least 1, got {bound}")
    regular = regular_module(alg, module.prime)
    dims: List[int] = []
    current = module
    hom_current = hom_dimension(current, regular)
    for i in range(1, bound + 1):
        if current.is_zero:
            dims.extend([0] * (bound - i + 1))
            break
        step = projective_cover_and_syzygy(alg, current)
        hom_next = hom_dimension(step.syzygy, regular)
        hom_cover = hom_dimension(step.cover, regular)
        dims.append(hom_next - hom_cover + hom_current)
        current, hom_current = step.syzygy, hom_next
    logger.debug(f"Ext dimensions up to {bound}: {dims}")
    return dims


def ext_vanishing(alg: BoundQuiverAlgebra, module: MatrixModule, bound: int) -> List[bool]:
    """Per degree i = 1..bound, whether Ext^i(M, Λ) = 0."""
    return [d == 0 for d in ext_dimensions(alg, module, bound)]
