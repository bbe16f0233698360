"""
Dynkin Module

ADE recognition of underlying graphs, positive roots via the Tits form and
the CM-finiteness count for Gorenstein projective representations.
"""

from .classification import cm_classification
from .diagrams import Classification, DynkinType, NotDynkin, classify_underlying_graph
from .report import DynkinReport
from .roots import expected_root_count, highest_root, positive_roots, root_count, tits_matrix

__all__ = [
    'DynkinType',
    'NotDynkin',
    'Classification',
    'classify_underlying_graph',
    'positive_roots',
    'root_count',
    'highest_root',
    'expected_root_count',
    'tits_matrix',
    'DynkinReport',
    'cm_classification',
]
