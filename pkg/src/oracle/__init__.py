"""
Oracle Module

Independent verification over F_p: realized modules and morphisms, Hom and
Ext computations, projective covers, isomorphism tests and exactness checks.
"""

from .homological import (
    ProjectiveCover,
    ext_dimensions,
    ext_vanishing,
    hom_dimension,
    hom_space,
    projective_cover_and_syzygy,
    top_generators,
)
from .isomorphism import (
    CERTIFIED,
    EVIDENCE_ONLY,
    NOT_GP,
    GpCertificate,
    certify_gorenstein_projective,
    default_ext_bound,
    is_isomorphic,
    socle_dimension,
    split_module,
)
from .modules import (
    MAX_DIMENSION,
    MatrixModule,
    ModuleMap,
    cokernel,
    direct_sum,
    quotient,
    radical_of_projective,
    realize_indec,
    realize_module,
    realize_morphism,
    regular_module,
    submodule,
    zero_module,
)
from .sequences import verify_exact_sequence

__all__ = [
    'MatrixModule',
    'ModuleMap',
    'MAX_DIMENSION',
    'realize_indec',
    'realize_module',
    'realize_morphism',
    'radical_of_projective',
    'regular_module',
    'direct_sum',
    'zero_module',
    'submodule',
    'quotient',
    'cokernel',
    'hom_space',
    'hom_dimension',
    'top_generators',
    'ProjectiveCover',
    'projective_cover_and_syzygy',
    'ext_dimensions',
    'ext_vanishing',
    'is_isomorphic',
    'socle_dimension',
    'split_module',
    'GpCertificate',
    'certify_gorenstein_projective',
    'default_ext_bound',
    'CERTIFIED',
    'NOT_GP',
    'EVIDENCE_ONLY',
    'verify_exact_sequence',
]
