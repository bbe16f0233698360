"""
Representation Category Module

Gorenstein projective representations of acyclic quivers: stabilization,
lifting, the monomorphism categories S_n(Gprj-Λ), almost split sequences,
stable components and their export.
"""

from .components import (
    StableComponent,
    component_report,
    divisibility_report,
    expected_seed_period,
    knit_stable_component,
    stable_components,
    tau_period,
)
from .export import export_quiver, to_document
from .lift import lift, psi, random_stable_rep, stable_isomorphic
from .monomorphism import (
    AlmostSplitSequence,
    Interval,
    ProjInterval,
    SnObject,
    all_almost_split_sn,
    almost_split_sn,
    check_almost_split_sequence,
    gp_interval_count,
    sequence_report,
    sn_indecomposables,
    sn_report,
    sn_representation,
    sn_shape,
)
from .report import (
    AlgebraVerification,
    ComponentList,
    ComponentReport,
    DensityReport,
    DivisibilityReport,
    GpRepVerification,
    LiftCheck,
    QuiverDocument,
    SequenceCheck,
    SequenceList,
    SequenceReport,
    SnReport,
    StableRepFile,
)
from .symbolic import (
    GpRep,
    ScalarCover,
    ScalarEmb,
    ScalarId,
    StableRep,
    SymbolicModule,
    SymbolicMorphism,
    Zero,
)
from .verify import (
    density_suite,
    load_stable_rep,
    resolve_quiver,
    stable_rep_from_dict,
    verify_algebra,
    verify_gp_rep,
)

__all__ = [
    'SymbolicModule',
    'SymbolicMorphism',
    'Zero',
    'ScalarId',
    'ScalarEmb',
    'ScalarCover',
    'GpRep',
    'StableRep',
    'psi',
    'lift',
    'stable_isomorphic',
    'random_stable_rep',
    'verify_gp_rep',
    'load_stable_rep',
    'stable_rep_from_dict',
    'resolve_quiver',
    'verify_algebra',
    'density_suite',
    'Interval',
    'ProjInterval',
    'SnObject',
    'sn_indecomposables',
    'sn_representation',
    'sn_shape',
    'sn_report',
    'gp_interval_count',
    'AlmostSplitSequence',
    'almost_split_sn',
    'all_almost_split_sn',
    'check_almost_split_sequence',
    'sequence_report',
    'StableComponent',
    'knit_stable_component',
    'stable_components',
    'tau_period',
    'expected_seed_period',
    'divisibility_report',
    'component_report',
    'export_quiver',
    'to_document',
    'ComponentList',
    'ComponentReport',
    'DivisibilityReport',
    'GpRepVerification',
    'LiftCheck',
    'QuiverDocument',
    'SequenceCheck',
    'SequenceList',
    'SequenceReport',
    'AlgebraVerification',
    'DensityReport',
    'SnReport',
    'StableRepFile',
]
