"""
CM-Finiteness of Representation Categories

Gorenstein projective representations of an acyclic quiver Q over a
G-semisimple algebra are CM-finite exactly when Q is Dynkin (or Λ has no
non-projective Gorenstein projectives), with m·|Φ⁺| non-projective
indecomposables.
"""

import logging

from ..gp import stable_classes
from ..qalg import BoundQuiverAlgebra, Quiver
from ..utils.errors import ValidationError
from .diagrams import DynkinType, classify_underlying_graph
from .report import DynkinReport
from .roots import positive_roots

logger = logging.getLogger(__name__)


def cm_classification(
    alg: BoundQuiverAlgebra, quiver: Quiver, include_roots: bool = False
) -> DynkinReport:
    """CM-finiteness and the count m·|Φ⁺| for representations of ``quiver`` over ``alg``.

    Raises:
        ValidationError: if ``quiver`` has an oriented cycle
        Disconnected: if ``quiver`` is not connected
    """
    if quiver.has_oriented_cycle():
        raise ValidationError("Representation quiver must be acyclic")
    m = sum(cls.period for cls in stable_classes(alg))
    kind = classify_underlying_graph(quiver)
    if isinstance(kind, DynkinType):
        roots = positive_roots(kind)
        report = DynkinReport(
            type=str(kind),
            dynkin=True,
            root_count=len(roots),
            roots=[list(r) for r in roots] if include_roots else None,
            m=m,
            cm_finite=True,
            gp_count=m * len(roots),
        )
    else:
        report = DynkinReport(
            type=str(kind),
            dynkin=False,
            m=m,
            cm_finite=m == 0,
            gp_count=0 if m == 0 else None,
        )
    logger.info(f"CM classification over {alg.name or 'algebra'}: {report.render()}")
    return report
