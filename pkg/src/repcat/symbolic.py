"""
Symbolic Representations

Vertexwise Gorenstein projective modules and block morphisms between them.
Entries of a block morphism are scalar multiples of the identity, of the
embedding ``G -> P(G)`` or of the projective cover ``P_G -> G``; the oracle
turns them into matrices.
"""

import logging
from dataclasses import dataclass, field
from typing import ClassVar, Dict, Iterable, List, Sequence, Tuple, Union

import numpy as np

from ..gp import GpIndec, canonical_key, cover_of, envelope_of
from ..qalg import BoundQuiverAlgebra, Quiver
from ..utils.errors import PatternViolation, ShapeMismatch, ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Zero:
    c: int = 0
    kind: ClassVar[str] = "zero"


@dataclass(frozen=True)
class ScalarId:
    """``c·1_G`` between equal summands."""

    c: int = 1
    kind: ClassVar[str] = "id"


@dataclass(frozen=True)
class ScalarEmb:
    """``c·γ_G``: the inclusion of an arrow ideal into its envelope ``P(G)``."""

    c: int = 1
    kind: ClassVar[str] = "emb"


@dataclass(frozen=True)
class ScalarCover:
    """``c·ζ_G``: the projective cover ``P_G -> G``."""

    c: int = 1
    kind: ClassVar[str] = "cover"


Entry = Union[Zero, ScalarId, ScalarEmb, ScalarCover]


def entry_symbol(entry: Entry) -> str:
    base = {"zero": "0", "id": "1", "emb": "γ", "cover": "ζ"}[entry.kind]
    if entry.kind == "zero" or entry.c == 1:
        return base
    return f"{entry.c}·{base}"


@dataclass(frozen=True)
class SymbolicModule:
    """A direct sum of indecomposable Gorenstein projectives."""

    summands: Tuple[GpIndec, ...] = ()

    @classmethod
    def of(cls, alg: BoundQuiverAlgebra, summands: Iterable[GpIndec]) -> "SymbolicModule":
        """Canonically ordered module."""
        return cls(tuple(sorted(summands, key=lambda g: canonical_key(alg, g))))

    def __len__(self) -> int:
        return len(self.summands)

    def __add__(self, other: "SymbolicModule") -> "SymbolicModule":
        return SymbolicModule(self.summands + other.summands)

    def canonical_permutation(self, alg: BoundQuiverAlgebra) -> List[int]:
        """Old indices in canonical order (stable for equal summands)."""
        return sorted(range(len(self)), key=lambda k: canonical_key(alg, self.summands[k]))

    def stable_part(self) -> Tuple[GpIndec, ...]:
        return tuple(g for g in self.summands if not g.is_projective)

    def __str__(self) -> str:
        return " ⊕ ".join(str(g) for g in self.summands) if self.summands else "0"


@dataclass(frozen=True)
class SymbolicMorphism:
    """Block matrix indexed by ``(target summand, source summand)``.

    Missing entries are zero.
    """

    shape: Tuple[int, int]
    entries: Dict[Tuple[int, int], Entry] = field(default_factory=dict)

    def __post_init__(self):
        rows, cols = self.shape
        for (i, j) in self.entries:
            if not (0 <= i < rows and 0 <= j < cols):
                raise ShapeMismatch(f"Entry ({i}, {j}) outside a {rows}×{cols} morphism")

    @classmethod
    def zero(cls, rows: int, cols: int) -> "SymbolicMorphism":
        return cls((rows, cols))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Entry]]) -> "SymbolicMorphism":
        entries = {
            (i, j): e
            for i, row in enumerate(rows)
            for j, e in enumerate(row)
            if e.kind != "zero"
        }
        width = len(rows[0]) if rows else 0
        return cls((len(rows), width), entries)

    @classmethod
    def block_diag(cls, blocks: Sequence["SymbolicMorphism"]) -> "SymbolicMorphism":
        entries: Dict[Tuple[int, int], Entry] = {}
        r = c = 0
        for b in blocks:
            for (i, j), e in b.entries.items():
                entries[(r + i, c + j)] = e
            r += b.shape[0]
            c += b.shape[1]
        return cls((r, c), entries)

    def get(self, i: int, j: int) -> Entry:
        return self.entries.get((i, j), Zero())

    def permute(self, rows: Sequence[int], cols: Sequence[int]) -> "SymbolicMorphism":
        """Reorder: new row ``k`` is old row ``rows[k]``, likewise for columns."""
        new_row = {old: new for new, old in enumerate(rows)}
        new_col = {old: new for new, old in enumerate(cols)}
        entries = {(new_row[i], new_col[j]): e for (i, j), e in self.entries.items()}
        return SymbolicMorphism(self.shape, entries)

    def validate(self, alg: BoundQuiverAlgebra, src: SymbolicModule, tgt: SymbolicModule):
        """Check entry kinds against the summands they connect."""
        if self.shape != (len(tgt), len(src)):
            raise ShapeMismatch(
                f"Morphism of shape {self.shape} between {len(src)} and {len(tgt)} summands"
            )
        for (i, j), entry in self.entries.items():
            s, t = src.summands[j], tgt.summands[i]
            if entry.kind == "id" and s != t:
                raise ValidationError(f"ScalarId from {s} to {t}")
            if entry.kind == "emb" and (s.is_projective or envelope_of(alg, s) != t):
                raise ValidationError(f"ScalarEmb from {s} to {t}")
            if entry.kind == "cover" and (t.is_projective or cover_of(alg, t) != s):
                raise ValidationError(f"ScalarCover from {s} to {t}")

    def render(self) -> List[List[str]]:
        rows, cols = self.shape
        return [[entry_symbol(self.get(i, j)) for j in range(cols)] for i in range(rows)]


@dataclass(frozen=True, eq=False)
class GpRep:
    """A representation of ``quiver`` with Gorenstein projective vertex modules.

    Arrow ``a`` carries a morphism ``vertices[s(a)] -> vertices[t(a)]``.
    """

    quiver: Quiver
    vertices: Dict[str, SymbolicModule]
    arrows: Dict[str, SymbolicMorphism]

    def __post_init__(self):
        for v in self.quiver.vertices:
            self.vertices.setdefault(v, SymbolicModule())
        for a in self.quiver.arrows:
            expected = (len(self.vertices[a.target]), len(self.vertices[a.source]))
            morphism = self.arrows.setdefault(a.name, SymbolicMorphism.zero(*expected))
            if morphism.shape != expected:
                raise ShapeMismatch(
                    f"Arrow {a.name} carries a {morphism.shape} morphism, expected {expected}"
                )

    def validate(self, alg: BoundQuiverAlgebra):
        for a in self.quiver.arrows:
            self.arrows[a.name].validate(alg, self.vertices[a.source], self.vertices[a.target])

    def canonicalize(self, alg: BoundQuiverAlgebra) -> "GpRep":
        """Sort every vertex module canonically and permute the morphisms to match."""
        perms = {v: m.canonical_permutation(alg) for v, m in self.vertices.items()}
        vertices = {
            v: SymbolicModule(tuple(m.summands[k] for k in perms[v]))
            for v, m in self.vertices.items()
        }
        arrows = {
            a.name: self.arrows[a.name].permute(perms[a.target], perms[a.source])
            for a in self.quiver.arrows
        }
        return GpRep(self.quiver, vertices, arrows)

    @classmethod
    def direct_sum(cls, quiver: Quiver, reps: Sequence["GpRep"]) -> "GpRep":
        vertices = {
            v: sum((r.vertices[v] for r in reps), SymbolicModule()) for v in quiver.vertices
        }
        arrows = {
            a.name: SymbolicMorphism.block_diag([r.arrows[a.name] for r in reps])
            for a in quiver.arrows
        }
        return cls(quiver, vertices, arrows)

    def to_dict(self) -> dict:
        return {
            "vertices": {v: [str(g) for g in m.summands] for v, m in self.vertices.items()},
            "arrows": {a: m.render() for a, m in self.arrows.items()},
        }


@dataclass(frozen=True, eq=False)
class StableRep:
    """A representation of ``quiver`` over the stable category.

    ``arrows[a][i, j]`` may be nonzero only when target summand ``i`` and
    source summand ``j`` are the same arrow ideal.

    Raises:
        PatternViolation: on a nonzero entry between different summands
    """

    quiver: Quiver
    vertices: Dict[str, Tuple[GpIndec, ...]]
    arrows: Dict[str, np.ndarray]
    prime: int = 101

    def __post_init__(self):
        for v in self.quiver.vertices:
            self.vertices.setdefault(v, ())
            for g in self.vertices[v]:
                if g.is_projective:
                    raise ValidationError(f"Stable vertex {v} holds the projective {g}")
        for a in self.quiver.arrows:
            src, tgt = self.vertices[a.source], self.vertices[a.target]
            expected = (len(tgt), len(src))
            matrix = np.asarray(self.arrows.get(a.name, np.zeros(expected)), dtype=np.int64)
            if matrix.size == 0:
                matrix = matrix.reshape(expected)
            if matrix.shape != (len(tgt), len(src)):
                raise ShapeMismatch(
                    f"Arrow {a.name} carries a {matrix.shape} matrix, expected {expected}"
                )
            matrix = matrix % self.prime
            self.arrows[a.name] = matrix
            for i, j in zip(*np.nonzero(matrix)):
                if tgt[i] != src[j]:
                    raise PatternViolation(
                        f"Arrow {a.name}: entry ({i}, {j}) links {src[j]} to {tgt[i]}"
                    )

    def classes(self) -> List[GpIndec]:
        seen: List[GpIndec] = []
        for v in self.quiver.vertices:
            for g in self.vertices[v]:
                if g not in seen:
                    seen.append(g)
        return seen

    def to_dict(self) -> dict:
        return {
            "vertices": {v: [str(g) for g in gs] for v, gs in self.vertices.items()},
            "arrows": {a: m.tolist() for a, m in self.arrows.items()},
        }
