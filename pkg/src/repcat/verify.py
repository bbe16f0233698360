"""
Representation Verification

Local check of a Gorenstein projective representation: at every vertex the
map from the incoming sources must be a monomorphism whose cokernel is
Gorenstein projective. Also reads stable representations from JSON files
and runs the algebra-level and density suites behind ``gsemi verify``.
"""

import json
import logging
import re
from pathlib import Path as FilePath
from typing import Optional, Union

import numpy as np
from pydantic import ValidationError as PydanticValidationError

from ..gp import GpIndec, almost_split_gprj, gp_indecomposables, is_perfect, syzygy_step
from ..oracle import (
    EVIDENCE_ONLY,
    NOT_GP,
    ModuleMap,
    certify_gorenstein_projective,
    cokernel,
    default_ext_bound,
    direct_sum,
    ext_dimensions,
    is_isomorphic,
    projective_cover_and_syzygy,
    realize_indec,
    realize_module,
    realize_morphism,
    verify_exact_sequence,
)
from ..qalg import Arrow, BoundQuiverAlgebra, Quiver, linear_quiver, load_quiver
from ..utils.errors import OracleInconclusive, ParseError, ValidationError
from .lift import lift, psi, random_stable_rep, stable_isomorphic
from .report import (
    AlgebraVerification,
    DensityReport,
    GpRepVerification,
    GprjSequenceCheck,
    StableRepFile,
    SyzygyAgreement,
    VertexCheck,
)
from .symbolic import GpRep, ScalarCover, ScalarEmb, StableRep, SymbolicModule, SymbolicMorphism

logger = logging.getLogger(__name__)

BY_CONSTRUCTION = "gorenstein-projective-by-construction"


def verify_gp_rep(
    alg: BoundQuiverAlgebra,
    rep: GpRep,
    p: int = 101,
    seed: int = 0,
    ext_bound: Optional[int] = None,
) -> GpRepVerification:
    """Check every vertex of ``rep`` through the oracle.

    Raises:
        OracleInconclusive: a cokernel could be neither matched nor refuted
    """
    rep.validate(alg)
    quiver = rep.quiver
    realized = {v: realize_module(alg, rep.vertices[v], p) for v in quiver.vertices}
    checks = []
    for v in quiver.vertices:
        incoming = quiver.arrows_into(v)
        if not incoming:
            checks.append(VertexCheck(vertex=v, injective=True, cokernel=BY_CONSTRUCTION))
            continue
        maps = [
            realize_morphism(alg, rep.arrows[a.name], realized[a.source], realized[v])
            for a in incoming
        ]
        source = direct_sum(alg, p, [realized[a.source] for a in incoming])
        blocks = {
            u: np.hstack([f.blocks[u] for f in maps]) for u in alg.quiver.vertices
        }
        assembled = ModuleMap(source, realized[v], blocks)
        if not assembled.is_injective():
            logger.info(f"Vertex {v}: incoming map is not injective")
            checks.append(VertexCheck(vertex=v, injective=False, cokernel="not-computed"))
            return GpRepVerification(
                valid=False, failing_vertex=v, reason="incoming map is not injective", vertices=checks
            )
        quotient_module, _ = cokernel(assembled)
        certificate = certify_gorenstein_projective(alg, quotient_module, seed, ext_bound)
        checks.append(
            VertexCheck(
                vertex=v, injective=True, cokernel=certificate.label, summands=certificate.summands
            )
        )
        if certificate.label == NOT_GP:
            return GpRepVerification(
                valid=False,
                failing_vertex=v,
                reason=f"cokernel has Ext dimensions {certificate.ext_dimensions}",
                vertices=checks,
            )
        if certificate.label == EVIDENCE_ONLY:
            raise OracleInconclusive(
                f"Cokernel at vertex {v} has vanishing Ext up to degree "
                f"{len(certificate.ext_dimensions)} but matches no known indecomposable"
            )
    logger.debug(f"Representation verified at {len(checks)} vertices")
    return GpRepVerification(valid=True, vertices=checks)


_LINEAR = re.compile(r"^A(\d+)$")


def resolve_quiver(spec, base_dir: Optional[FilePath] = None) -> Quiver:
    """Quiver from ``"A<n>"``, a quiver file path, or an inline quiver."""
    if isinstance(spec, str):
        match = _LINEAR.match(spec)
        if match:
            return linear_quiver(int(match.group(1)))
        path = FilePath(spec)
        if not path.is_absolute() and base_dir is not None and not path.exists():
            path = base_dir / path
        return load_quiver(path)
    return Quiver(
        tuple(spec.vertices),
        tuple(Arrow(a.name, a.source, a.target) for a in spec.arrows),
    )


def stable_rep_from_dict(alg: BoundQuiverAlgebra, data: dict, p: int = 101,
                         base_dir: Optional[FilePath] = None) -> StableRep:
    """Build a StableRep from the JSON rep-file structure.

    Raises:
        ValidationError: schema violation, unknown vertex or non-perfect arrow
        PatternViolation: nonzero entry between different arrow ideals
    """
    try:
        parsed = StableRepFile.model_validate(data)
    except PydanticValidationError as exc:
        raise ValidationError(f"Invalid rep file: {exc}") from None
    quiver = resolve_quiver(parsed.quiver, base_dir)
    vertices = {}
    for v, items in parsed.vertices.items():
        if not quiver.has_vertex(v):
            raise ValidationError(f"Rep file names unknown vertex {v}")
        summands = []
        for item in items:
            if not is_perfect(alg, item.class_):
                raise ValidationError(f"Arrow {item.class_} is not perfect")
            summands.extend([GpIndec.arrow_ideal(item.class_)] * item.mult)
        vertices[v] = tuple(summands)
    arrows = {}
    for name, rows in parsed.arrows.items():
        quiver.arrow(name)
        arrows[name] = np.array(rows, dtype=np.int64)
    return StableRep(quiver, vertices, arrows, p)


def load_stable_rep(alg: BoundQuiverAlgebra, path: Union[str, FilePath], p: int = 101) -> StableRep:
    path = FilePath(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None
    except OSError as exc:
        raise ParseError(f"Cannot read {path}: {exc}") from None
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not valid UTF-8 at byte {exc.start}") from None
    logger.info(f"Loaded stable representation from {path}")
    return stable_rep_from_dict(alg, data, p, path.parent)


def _gprj_sequence_exact(alg: BoundQuiverAlgebra, G: GpIndec, p: int) -> GprjSequenceCheck:
    seq = almost_split_gprj(alg, G)
    modules = [SymbolicModule((g,)) for g in (seq.left, seq.middle, seq.right)]
    left, middle, right = (realize_module(alg, m, p) for m in modules)
    f = realize_morphism(alg, SymbolicMorphism.from_rows([[ScalarEmb()]]), left, middle)
    g = realize_morphism(alg, SymbolicMorphism.from_rows([[ScalarCover()]]), middle, right)
    return GprjSequenceCheck(sequence=str(seq), exact=verify_exact_sequence(alg, [f, g]))


def verify_algebra(
    alg: BoundQuiverAlgebra, p: int = 101, seed: int = 0, ext_bound: Optional[int] = None
) -> AlgebraVerification:
    """Oracle suite over the whole classification.

    For every perfect arrow the realized syzygy must be isomorphic to the
    combinatorial one and Ext^i(αΛ, Λ) must vanish up to ``ext_bound``;
    every almost split sequence of Gprj-Λ must be exact.
    """
    bound = ext_bound or default_ext_bound(alg)
    syzygies, sequences = [], []
    for G in gp_indecomposables(alg):
        if G.is_projective:
            continue
        omega = syzygy_step(alg, G)
        computed = projective_cover_and_syzygy(alg, realize_indec(alg, G, p)).syzygy
        agrees = is_isomorphic(computed, realize_indec(alg, omega, p), seed)
        dims = ext_dimensions(alg, realize_indec(alg, G, p), bound)
        syzygies.append(
            SyzygyAgreement(arrow=G.label, syzygy=str(omega), agrees=agrees, ext_dimensions=dims)
        )
        sequences.append(_gprj_sequence_exact(alg, G, p))
    passed = all(s.agrees and not any(s.ext_dimensions) for s in syzygies)
    passed &= all(s.exact for s in sequences)
    if not passed:
        logger.warning(f"Oracle suite failed for {alg.name or 'algebra'} over F_{p}")
    return AlgebraVerification(
        algebra=alg.name,
        prime=p,
        ext_bound=bound,
        syzygies=syzygies,
        sequences=sequences,
        passed=passed,
    )


def density_suite(
    alg: BoundQuiverAlgebra,
    trials: int,
    p: int = 101,
    seed: int = 0,
    ext_bound: Optional[int] = None,
    max_vertices: int = 5,
    max_arrows: int = 6,
    max_mult: int = 2,
) -> DensityReport:
    """Lift ``trials`` random stable representations and check both directions.

    A trial passes when the lift verifies as Gorenstein projective and its
    stabilization is isomorphic to the original. The size bounds are passed
    to ``random_stable_rep``.
    """
    if trials < 0:
        raise ValidationError(f"Number of trials must be non-negative, got {trials}")
    rng = np.random.default_rng(seed)
    passed, failures = 0, []
    for k in range(trials):
        rep = random_stable_rep(alg, rng, p, max_vertices, max_arrows, max_mult)
        lifted = lift(alg, rep)
        verification = verify_gp_rep(alg, lifted, p, seed, ext_bound)
        roundtrip = stable_isomorphic(psi(lifted, p), rep, seed)
        if verification.valid and roundtrip:
            passed += 1
            continue
        reason = verification.reason if not verification.valid else "stabilization differs"
        failures.append(f"trial {k + 1}: {reason}")
        logger.warning(f"Density trial {k + 1} failed: {reason}")
    logger.info(f"Density suite over {alg.name or 'algebra'}: {passed}/{trials} passed")
    return DensityReport(algebra=alg.name, trials=trials, passed=passed, failures=failures)
