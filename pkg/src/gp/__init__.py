"""
Gorenstein Projective Module

Relation quiver, perfect components, the classification of indecomposable
Gorenstein projectives, syzygy orbits and the algebra-level reports.
"""

from .checks import (
    analyze,
    check_gsemisimple,
    check_one_gorenstein,
    singularity_descriptor,
    t2_singularity_descriptor,
)
from .classification import (
    GpIndec,
    GprjSequence,
    StableClass,
    almost_split_gprj,
    arrow_ideal_is_projective,
    canonical_key,
    class_of,
    cover_of,
    envelope_of,
    gp_indecomposables,
    is_perfect,
    stable_classes,
    syzygy_power,
    syzygy_step,
)
from .relation_quiver import (
    PerfectComponent,
    RelationEdge,
    RelationQuiver,
    perfect_components,
    relation_quiver,
)
from .report import (
    AnalysisReport,
    ClassSummary,
    GsemisimpleReport,
    OneGorensteinReport,
    SingularityDescriptor,
    T2Descriptor,
)

__all__ = [
    'RelationEdge',
    'RelationQuiver',
    'PerfectComponent',
    'relation_quiver',
    'perfect_components',
    'GpIndec',
    'StableClass',
    'GprjSequence',
    'gp_indecomposables',
    'syzygy_step',
    'syzygy_power',
    'stable_classes',
    'class_of',
    'canonical_key',
    'cover_of',
    'envelope_of',
    'is_perfect',
    'arrow_ideal_is_projective',
    'almost_split_gprj',
    'check_gsemisimple',
    'check_one_gorenstein',
    'singularity_descriptor',
    't2_singularity_descriptor',
    'analyze',
    'AnalysisReport',
    'ClassSummary',
    'GsemisimpleReport',
    'OneGorensteinReport',
    'SingularityDescriptor',
    'T2Descriptor',
]
