"""
Exact Sequence Checks

Rank arithmetic over F_p for short exact sequences 0 -> A -> B -> C -> 0.
"""

import logging
from typing import Optional, Sequence, Union

import numpy as np

from ..qalg import BoundQuiverAlgebra
from ..utils.errors import ShapeMismatch, ValidationError
from . import fp_linalg as fp
from .modules import ModuleMap

logger = logging.getLogger(__name__)

MapLike = Union[ModuleMap, np.ndarray]


def _matrix(f: MapLike) -> np.ndarray:
    return f.matrix if isinstance(f, ModuleMap) else np.asarray(f, dtype=np.int64)


def verify_exact_sequence(
    alg: BoundQuiverAlgebra, maps: Sequence[MapLike], p: Optional[int] = None
) -> bool:
    """True iff ``f`` is injective, ``g`` surjective and im f = ker g.

    Args:
        alg: Algebra the maps are defined over
        maps: ``[f, g]`` with f: A -> B and g: B -> C, as ModuleMaps or
            matrices in the column convention
        p: Field characteristic; taken from the ModuleMaps when omitted

    Raises:
        ShapeMismatch: if ``g ∘ f`` is not defined
    """
    if len(maps) != 2:
        raise ValidationError(f"Expected two maps [f, g], got {len(maps)}")
    f, g = maps
    if p is None:
        carrier = f if isinstance(f, ModuleMap) else g
        if not isinstance(carrier, ModuleMap):
            raise ValidationError("A prime is required for plain matrices")
        p = carrier.source.prime
    fm, gm = _matrix(f) % p, _matrix(g) % p
    if fm.ndim != 2 or gm.ndim != 2 or fm.shape[0] != gm.shape[1]:
        raise ShapeMismatch(f"Cannot compose {gm.shape} after {fm.shape}")
    dim_a, dim_b, dim_c = fm.shape[1], fm.shape[0], gm.shape[0]
    rank_f, rank_g = fp.rank(fm, p), fp.rank(gm, p)
    composite = fp.matmul(gm, fm, p)
    exact = (
        rank_f == dim_a
        and rank_g == dim_c
        and not composite.any()
        and rank_f == dim_b - rank_g
    )
    if not exact:
        logger.debug(
            f"Not exact over {alg.name or 'algebra'}: rank f={rank_f}/{dim_a}, "
            f"rank g={rank_g}/{dim_c}, dim B={dim_b}, g∘f zero={not composite.any()}"
        )
    return exact
