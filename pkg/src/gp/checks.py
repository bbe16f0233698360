"""
Algebra-Level Checks

G-semisimplicity, the 1-Gorenstein arrow test and the singularity
descriptors, combined into the full analysis report.
"""

import logging

from ..qalg import BoundQuiverAlgebra
from .classification import arrow_ideal_is_projective, is_perfect, stable_classes
from .report import (
    AnalysisReport,
    ClassSummary,
    GsemisimpleReport,
    OneGorensteinReport,
    SingularityDescriptor,
    T2Descriptor,
)

logger = logging.getLogger(__name__)


def _class_summaries(alg: BoundQuiverAlgebra):
    return [ClassSummary(arrows=c.arrows(), period=c.period) for c in stable_classes(alg)]


def check_gsemisimple(alg: BoundQuiverAlgebra) -> GsemisimpleReport:
    """Every accepted input is quadratic monomial, hence G-semisimple and CM-finite."""
    classes = _class_summaries(alg)
    return GsemisimpleReport(
        gsemisimple=True,
        reason="quadratic-monomial",
        m=sum(c.period for c in classes),
        classes=classes,
        cm_finite=True,
    )


def check_one_gorenstein(alg: BoundQuiverAlgebra) -> OneGorensteinReport:
    """Arrow test for rad Λ ⊕ Λ generating Gprj-Λ.

    rad(e_vΛ) is the direct sum of the arrow ideals αΛ with t(α) = v, so the
    radical is Gorenstein projective exactly when each arrow is perfect or
    has a projective ideal.
    """
    perfect, projective, offending = [], [], []
    for arrow in alg.quiver.arrows:
        if is_perfect(alg, arrow.name):
            perfect.append(arrow.name)
        elif arrow_ideal_is_projective(alg, arrow.name):
            projective.append(arrow.name)
        else:
            offending.append(arrow.name)
    if offending:
        logger.info(f"Not 1-Gorenstein: offending arrows {offending}")
    return OneGorensteinReport(
        one_gorenstein=not offending,
        offending_arrows=offending,
        perfect_arrows=perfect,
        projective_arrows=projective,
    )


def singularity_descriptor(alg: BoundQuiverAlgebra) -> SingularityDescriptor:
    """The multiset {l(G)} standing for ∏ D^b(mod k)/[l(G)]."""
    periods = sorted(c.period for c in stable_classes(alg))
    if periods:
        text = " × ".join(f"D^b(mod k)/[{period}]" for period in periods)
    else:
        text = "0 (every Gorenstein projective is projective)"
    return SingularityDescriptor(algebra=alg.name, periods=periods, text=text)


def t2_singularity_descriptor(alg: BoundQuiverAlgebra) -> T2Descriptor:
    """Stable category of S_2(Gprj-Λ): one factor prj kZ_d/I² with d = 3·l(G)."""
    lengths = sorted(3 * c.period for c in stable_classes(alg))
    if lengths:
        text = " × ".join(f"prj kZ_{d}/I²" for d in lengths)
    else:
        text = "0"
    return T2Descriptor(algebra=alg.name, cycle_lengths=lengths, text=text)


def analyze(alg: BoundQuiverAlgebra) -> AnalysisReport:
    """Full gp report for ``gsemi analyze``."""
    gs = check_gsemisimple(alg)
    gor = check_one_gorenstein(alg)
    sing = singularity_descriptor(alg)
    logger.info(f"Analysis of {alg.name or '<unnamed>'}: m={gs.m}, classes={len(gs.classes)}")
    return AnalysisReport(
        algebra=alg.name,
        vertices=len(alg.quiver.vertices),
        arrows=len(alg.quiver.arrows),
        relations=len(alg.relations),
        m=gs.m,
        classes=gs.classes,
        gsemisimple=gs.gsemisimple,
        cm_finite=gs.cm_finite,
        one_gorenstein=gor.one_gorenstein,
        offending_arrows=gor.offending_arrows,
        singularity=sing.periods,
        singularity_text=sing.text,
    )
