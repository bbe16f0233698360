"""
Quiver Algebra Module

Quivers, paths and quadratic monomial bound quiver algebras, plus the
text-format parser.
"""

from .parser import format_algebra, load_algebra, load_quiver, parse_algebra, parse_quiver
from .quiver import (
    ZERO,
    Arrow,
    BoundQuiverAlgebra,
    Path,
    Quiver,
    ZeroPath,
    compose_paths,
    enumerate_nonzero_paths,
    linear_quiver,
    opposite_algebra,
)

__all__ = [
    'Arrow',
    'Quiver',
    'Path',
    'ZERO',
    'ZeroPath',
    'BoundQuiverAlgebra',
    'compose_paths',
    'enumerate_nonzero_paths',
    'opposite_algebra',
    'linear_quiver',
    'parse_algebra',
    'parse_quiver',
    'load_algebra',
    'load_quiver',
    'format_algebra',
]

__version__ = '1.0.0'
