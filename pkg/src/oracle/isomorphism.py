"""
Isomorphism, Splitting and GP Certification

Isomorphism is decided through the Hom space between two modules; direct
summands are split off with the generalized eigenspaces of random
endomorphisms, and a module is certified Gorenstein projective by matching
each summand against the realized classification.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
import sympy

from ..gp import gp_indecomposables, stable_classes
from ..qalg import BoundQuiverAlgebra
from ..utils.errors import OracleInconclusive
from . import fp_linalg as fp
from .homological import ext_dimensions, hom_dimension, hom_space, top_generators
from .modules import MatrixModule, ModuleMap, realize_indec, submodule

logger = logging.getLogger(__name__)

RANDOM_TRIALS = 256
ENUMERATION_LIMIT = 2 ** 16
SPLIT_ATTEMPTS = 32

CERTIFIED = "certified-by-decomposition"
NOT_GP = "not-gorenstein-projective"
EVIDENCE_ONLY = "evidence-only"


def _combine(basis: List[ModuleMap], coeffs, p: int) -> ModuleMap:
    first = basis[0]
    blocks = {v: fp.zeros(*b.shape) for v, b in first.blocks.items()}
    for c, f in zip(coeffs, basis):
        if c:
            for v in blocks:
                blocks[v] = (blocks[v] + int(c) * f.blocks[v]) % p
    return ModuleMap(first.source, first.target, blocks)


def is_isomorphic(m: MatrixModule, n: MatrixModule, seed: int = 0) -> bool:
    """Decide ``M ≅ N`` by finding an invertible element of Hom(M, N).

    Small Hom spaces are enumerated completely, so a negative answer is a
    certificate. Larger spaces are sampled with a seeded RNG.

    Raises:
        OracleInconclusive: sampling found no isomorphism in a space too
            large to enumerate
    """
    if m.dimension_vector != n.dimension_vector:
        return False
    if m.is_zero:
        return True
    p = m.prime
    h = hom_dimension(m, n)
    if h == 0:
        return False
    if h != hom_dimension(n, m) or hom_dimension(m, m) != h or hom_dimension(n, n) != h:
        return False
    basis = hom_space(m, n)
    if p ** h <= min(p ** 4, ENUMERATION_LIMIT):
        for coeffs in itertools.product(range(p), repeat=h):
            if any(coeffs) and _combine(basis, coeffs, p).is_isomorphism():
                return True
        return False
    rng = np.random.default_rng(seed)
    for _ in range(RANDOM_TRIALS):
        coeffs = rng.integers(0, p, size=h)
        if _combine(basis, coeffs, p).is_isomorphism():
            return True
    raise OracleInconclusive(
        f"No isomorphism found in {RANDOM_TRIALS} samples of a Hom space of dimension {h} over F_{p}"
    )


def socle_dimension(module: MatrixModule) -> int:
    """Dimension of the elements killed by every arrow."""
    p = module.prime
    total = 0
    for v in module.algebra.quiver.vertices:
        if module.dim(v) == 0:
            continue
        outgoing = [module.maps[a.name] for a in module.algebra.quiver.arrows_into(v)]
        outgoing = [m for m in outgoing if m.shape[0]]
        if outgoing:
            total += module.dim(v) - fp.rank(np.vstack(outgoing), p)
        else:
            total += module.dim(v)
    return total


def _krylov_minpoly(matrix: np.ndarray, vector: np.ndarray, p: int) -> List[int]:
    """Monic minimal polynomial of ``vector`` under ``matrix``, highest degree first."""
    columns = [vector.reshape(-1, 1) % p]
    while True:
        nxt = fp.matmul(matrix, columns[-1], p)
        krylov = np.hstack(columns)
        try:
            coeffs = fp.solve(krylov, nxt, p)[:, 0]
        except ValueError:
            columns.append(nxt)
            continue
        return [1] + [int(-c) % p for c in reversed(coeffs)]


def _evaluate(poly: List[int], matrix: np.ndarray, p: int) -> np.ndarray:
    result = fp.zeros(*matrix.shape)
    for c in poly:
        result = (fp.matmul(result, matrix, p) + c * fp.identity(matrix.shape[0])) % p
    return result


def minimal_polynomial(matrix: np.ndarray, p: int, rng: np.random.Generator) -> sympy.Poly:
    """Minimal polynomial over F_p as the lcm of random Krylov polynomials."""
    x = sympy.Symbol("x")
    n = matrix.shape[0]
    poly = sympy.Poly(1, x, modulus=p)
    for _ in range(4 * n + 4):
        vector = rng.integers(0, p, size=n)
        if not vector.any():
            continue
        local = sympy.Poly(_krylov_minpoly(matrix, vector, p), x, modulus=p)
        poly = poly.lcm(local)
        coeffs = [int(c) % p for c in poly.monic().all_coeffs()]
        if not _evaluate(coeffs, matrix, p).any():
            return poly.monic()
    return poly.monic()


def _fitting_split(module: MatrixModule, phi: ModuleMap, rng: np.random.Generator) -> Optional[List[Dict[str, np.ndarray]]]:
    """Vertexwise bases of the generalized eigenspaces of ``phi``, or None."""
    p = module.prime
    matrix = phi.matrix
    if matrix.shape[0] == 0:
        return None
    poly = minimal_polynomial(matrix, p, rng)
    _, factors = poly.factor_list()
    if len(factors) < 2:
        return None
    pieces = []
    for factor, mult in factors:
        coeffs = [int(c) % p for c in factor.monic().all_coeffs()]
        bases = {}
        for v in module.algebra.quiver.vertices:
            d = module.dim(v)
            if d == 0:
                bases[v] = fp.zeros(0, 0)
                continue
            power = fp.matrix_power(_evaluate(coeffs, phi.blocks[v], p), mult, p)
            bases[v] = fp.nullspace(power, p)
        pieces.append(bases)
    return pieces


def split_module(module: MatrixModule, seed: int = 0) -> List[MatrixModule]:
    """Split ``module`` into summands that survived every splitting attempt.

    A module with simple top, simple socle or one-dimensional endomorphism
    ring is returned as is.
    """
    if module.is_zero:
        return []
    if len(top_generators(module)) == 1 or socle_dimension(module) == 1:
        return [module]
    endo = hom_space(module, module)
    if len(endo) <= 1:
        return [module]
    rng = np.random.default_rng(seed)
    p = module.prime
    for attempt in range(SPLIT_ATTEMPTS):
        phi = _combine(endo, rng.integers(0, p, size=len(endo)), p)
        pieces = _fitting_split(module, phi, rng)
        if pieces is None:
            continue
        logger.debug(f"Split module {module.dimension_vector} into {len(pieces)} parts (attempt {attempt + 1})")
        summands: List[MatrixModule] = []
        for bases in pieces:
            sub, _ = submodule(module, bases)
            summands.extend(split_module(sub, seed + attempt + 1))
        return summands
    return [module]


@dataclass
class GpCertificate:
    """Verdict of the Gorenstein projectivity oracle."""

    label: str
    summands: List[str] = field(default_factory=list)
    unmatched: int = 0
    ext_dimensions: List[int] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.label == CERTIFIED


def default_ext_bound(alg: BoundQuiverAlgebra) -> int:
    """2·max l(G) + 2."""
    periods = [c.period for c in stable_classes(alg)]
    return 2 * max(periods, default=0) + 2


def certify_gorenstein_projective(
    alg: BoundQuiverAlgebra, module: MatrixModule, seed: int = 0, ext_bound: Optional[int] = None
) -> GpCertificate:
    """Certify ``module`` by matching its summands against the GP indecomposables.

    When some summand matches nothing, Ext^i(M, Λ) is computed: a nonzero
    group refutes Gorenstein projectivity, otherwise the verdict is only
    evidence.
    """
    p = module.prime
    candidates = [(g, realize_indec(alg, g, p)) for g in gp_indecomposables(alg)]
    matched, unmatched = [], 0
    for summand in split_module(module, seed):
        found = None
        for g, realized in candidates:
            if realized.dimension_vector != summand.dimension_vector:
                continue
            try:
                if is_isomorphic(summand, realized, seed):
                    found = g
                    break
            except OracleInconclusive:
                continue
        if found is None:
            unmatched += 1
        else:
            matched.append(str(found))
    if unmatched == 0:
        return GpCertificate(CERTIFIED, matched)
    bound = ext_bound or default_ext_bound(alg)
    dims = ext_dimensions(alg, module, bound)
    label = NOT_GP if any(dims) else EVIDENCE_ONLY
    logger.info(f"GP verdict {label}: {unmatched} unmatched summand(s), Ext dims {dims}")
    return GpCertificate(label, matched, unmatched, dims)
