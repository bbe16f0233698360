"""
Quivers, Paths and Bound Quiver Algebras

Data model for finite quivers bound by quadratic monomial relations.
Paths are written right-to-left: the path ``b*a`` runs along ``a`` first and
then along ``b``. Everything here is an immutable value.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Tuple, Union

from ..utils.errors import InfiniteDimensional, NotComposable, ValidationError

logger = logging.getLogger(__name__)

OP_SUFFIX = "^op"


@dataclass(frozen=True)
class Arrow:
    """A named arrow ``name: source -> target``."""

    name: str
    source: str
    target: str

    def __str__(self) -> str:
        return f"{self.name}: {self.source} -> {self.target}"


@dataclass(frozen=True)
class Quiver:
    """Finite quiver with vertices and arrows kept in declaration order.

    Args:
        vertices: Vertex ids in declaration order
        arrows: Arrows in declaration order

    Raises:
        ValidationError: duplicate ids or an arrow with an undeclared endpoint

    Example:
        >>> q = Quiver(("1", "2"), (Arrow("a", "1", "2"),))
        >>> q.arrows_from("1")
        (Arrow(name='a', source='1', target='2'),)
    """

    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValidationError(f"Duplicate vertex id in {list(self.vertices)}")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValidationError(f"Duplicate arrow id in {names}")
        declared = set(self.vertices)
        for arrow in self.arrows:
            for end in (arrow.source, arrow.target):
                if end not in declared:
                    raise ValidationError(
                        f"Arrow {arrow.name} uses undeclared vertex {end}"
                    )

    @cached_property
    def _arrow_index(self) -> Dict[str, int]:
        return {a.name: i for i, a in enumerate(self.arrows)}

    @cached_property
    def _vertex_index(self) -> Dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def arrow(self, name: str) -> Arrow:
        try:
            return self.arrows[self._arrow_index[name]]
        except KeyError:
            raise ValidationError(f"Unknown arrow: {name}") from None

    def arrow_index(self, name: str) -> int:
        self.arrow(name)
        return self._arrow_index[name]

    def vertex_index(self, vertex: str) -> int:
        if vertex not in self._vertex_index:
            raise ValidationError(f"Unknown vertex: {vertex}")
        return self._vertex_index[vertex]

    def has_vertex(self, vertex: str) -> bool:
        return vertex in self._vertex_index

    def arrows_from(self, vertex: str) -> Tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.source == vertex)

    def arrows_into(self, vertex: str) -> Tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.target == vertex)

    def has_oriented_cycle(self) -> bool:
        """Detect an oriented cycle by repeatedly deleting sinks."""
        remaining = set(self.vertices)
        arrows = list(self.arrows)
        changed = True
        while changed:
            changed = False
            for v in list(remaining):
                if not any(a.source == v and a.target in remaining for a in arrows):
                    remaining.discard(v)
                    changed = True
        return bool(remaining)

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {self.vertices[0]}
        frontier = [self.vertices[0]]
        while frontier:
            v = frontier.pop()
            for a in self.arrows:
                for x, y in ((a.source, a.target), (a.target, a.source)):
                    if x == v and y not in seen:
                        seen.add(y)
                        frontier.append(y)
        return len(seen) == len(self.vertices)

    def source_layers(self) -> List[List[str]]:
        """Partition the vertices of an acyclic quiver into layers.

        Layer 0 holds the vertices without incoming arrows; every arrow
        points from an earlier layer into a later one.

        Raises:
            ValidationError: if the quiver has an oriented cycle
        """
        if self.has_oriented_cycle():
            raise ValidationError("Quiver has an oriented cycle")
        placed: Dict[str, int] = {}
        layers: List[List[str]] = []
        while len(placed) < len(self.vertices):
            layer = [
                v for v in self.vertices
                if v not in placed
                and all(a.source in placed for a in self.arrows_into(v))
            ]
            for v in layer:
                placed[v] = len(layers)
            layers.append(layer)
        return layers


@dataclass(frozen=True)
class Path:
    """A path in a quiver, arrows stored in written (right-to-left) order.

    ``Path(("b", "a"), "1", "3")`` is ``b*a``: it starts at ``s(a) = 1`` and
    ends at ``t(b) = 3``. A trivial path has no arrows and ``start == end``.
    """

    arrows: Tuple[str, ...]
    start: str
    end: str

    @classmethod
    def trivial(cls, vertex: str) -> "Path":
        return cls((), vertex, vertex)

    @classmethod
    def from_arrows(cls, quiver: Quiver, arrows: Iterable[str]) -> "Path":
        """Build a path from arrow ids in written order, checking composability."""
        names = tuple(arrows)
        if not names:
            raise ValidationError("Use Path.trivial for paths of length 0")
        for later, earlier in zip(names, names[1:]):
            if quiver.arrow(earlier).target != quiver.arrow(later).source:
                raise NotComposable(f"{later} cannot follow {earlier}")
        return cls(names, quiver.arrow(names[-1]).source, quiver.arrow(names[0]).target)

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def leading_arrow(self) -> Optional[str]:
        """The last-traversed arrow (leftmost when written)."""
        return self.arrows[0] if self.arrows else None

    def __str__(self) -> str:
        if self.is_trivial:
            return f"e_{self.start}"
        return "*".join(self.arrows)


class ZeroPath:
    """The zero element returned when a composite lies in the ideal."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Zero"

    def __str__(self) -> str:
        return "0"


ZERO = ZeroPath()
PathOrZero = Union[Path, ZeroPath]


@dataclass(frozen=True)
class BoundQuiverAlgebra:
    """Quiver algebra kQ/I with I generated by length-2 paths.

    Args:
        quiver: The underlying quiver
        relations: Pairs ``(beta, alpha)`` meaning ``beta*alpha`` lies in I
        field_char: Optional prime recorded with the algebra
        name: Display name (usually the file stem)

    Raises:
        ValidationError: unknown arrow, non-composable or duplicate relation
        InfiniteDimensional: some cycle of arrows composes to nonzero paths forever
    """

    quiver: Quiver
    relations: Tuple[Tuple[str, str], ...]
    field_char: Optional[int] = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        seen = set()
        for beta, alpha in self.relations:
            b, a = self.quiver.arrow(beta), self.quiver.arrow(alpha)
            if a.target != b.source:
                raise ValidationError(
                    f"Relation {beta}*{alpha} is not a path: t({alpha})={a.target}, "
                    f"s({beta})={b.source}"
                )
            if (beta, alpha) in seen:
                raise ValidationError(f"Duplicate relation {beta}*{alpha}")
            seen.add((beta, alpha))
        if self._has_nonzero_cycle():
            raise InfiniteDimensional(
                f"Algebra {self.name or '<unnamed>'} has a cycle of nonzero compositions"
            )
        logger.debug(
            f"Algebra {self.name or '<unnamed>'} validated: {len(self.quiver.vertices)} "
            f"vertices, {len(self.quiver.arrows)} arrows, {len(self.relations)} relations"
        )

    @cached_property
    def _relation_set(self) -> frozenset:
        return frozenset(self.relations)

    def kills(self, beta: str, alpha: str) -> bool:
        """True when ``beta*alpha`` is a relation."""
        return (beta, alpha) in self._relation_set

    def _has_nonzero_cycle(self) -> bool:
        # arrow graph: alpha -> beta whenever beta*alpha is a nonzero path
        successors = {
            a.name: [
                b.name for b in self.quiver.arrows_from(a.target)
                if not self.kills(b.name, a.name)
            ]
            for a in self.quiver.arrows
        }
        state: Dict[str, int] = {}

        def visit(node: str) -> bool:
            state[node] = 1
            for nxt in successors[node]:
                if state.get(nxt) == 1:
                    return True
                if nxt not in state and visit(nxt):
                    return True
            state[node] = 2
            return False

        return any(name not in state and visit(name) for name in successors)

    def path_sort_key(self, path: Path) -> Tuple[int, Tuple[int, ...]]:
        if path.is_trivial:
            return (0, (self.quiver.vertex_index(path.start),))
        return (path.length, tuple(self.quiver.arrow_index(a) for a in path.arrows))

    @cached_property
    def nonzero_paths(self) -> Tuple[Path, ...]:
        return tuple(enumerate_nonzero_paths(self))

    def paths_ending_at(self, vertex: str) -> Tuple[Path, ...]:
        """Basis of the indecomposable projective ``e_v Λ``."""
        return tuple(p for p in self.nonzero_paths if p.end == vertex)

    def paths_with_leading(self, arrow: str) -> Tuple[Path, ...]:
        """Basis of the arrow ideal ``αΛ``."""
        return tuple(p for p in self.nonzero_paths if p.leading_arrow == arrow)

    def extend(self, path: Path, arrow: str) -> PathOrZero:
        """Right multiplication ``path · arrow`` (the arrow is traversed first)."""
        a = self.quiver.arrow(arrow)
        if a.target != path.start:
            return ZERO
        if path.arrows and self.kills(path.arrows[-1], arrow):
            return ZERO
        return Path(path.arrows + (arrow,), a.source, path.end)

    def prepend(self, arrow: str, path: Path) -> PathOrZero:
        """Left multiplication ``arrow · path`` (the arrow is traversed last)."""
        a = self.quiver.arrow(arrow)
        if a.source != path.end:
            return ZERO
        if path.arrows and self.kills(arrow, path.arrows[0]):
            return ZERO
        return Path((arrow,) + path.arrows, path.start, a.target)


def compose_paths(alg: BoundQuiverAlgebra, p: Path, q: Path) -> PathOrZero:
    """Compose ``p·q``: first ``q``, then ``p``.

    Args:
        alg: The bound quiver algebra
        p: Path traversed second
        q: Path traversed first

    Returns:
        The concatenated path, or ZERO when some length-2 sub-path is a relation

    Raises:
        NotComposable: if ``q`` does not end where ``p`` starts

    Example:
        >>> compose_paths(kx2, x, x)
        Zero
    """
    if q.end != p.start:
        raise NotComposable(f"Cannot compose {p} after {q}: {q.end} != {p.start}")
    if q.is_trivial:
        return p
    if p.is_trivial:
        return q
    arrows = p.arrows + q.arrows
    for later, earlier in zip(arrows, arrows[1:]):
        if alg.kills(later, earlier):
            return ZERO
    return Path(arrows, q.start, p.end)


def enumerate_nonzero_paths(alg: BoundQuiverAlgebra) -> List[Path]:
    """List the nonzero paths of ``alg`` (a basis of the algebra).

    Sorted by length, then by arrow declaration indices in written order;
    trivial paths come first in vertex order.
    """
    layer = [Path.trivial(v) for v in alg.quiver.vertices]
    result = list(layer)
    layer = [Path((a.name,), a.source, a.target) for a in alg.quiver.arrows]
    while layer:
        result.extend(layer)
        nxt = []
        for path in layer:
            for arrow in alg.quiver.arrows_from(path.end):
                if not alg.kills(arrow.name, path.arrows[0]):
                    nxt.append(Path((arrow.name,) + path.arrows, path.start, arrow.target))
        layer = nxt
    result.sort(key=alg.path_sort_key)
    return result


def _toggle_op(name: str) -> str:
    return name[: -len(OP_SUFFIX)] if name.endswith(OP_SUFFIX) else name + OP_SUFFIX


def opposite_algebra(alg: BoundQuiverAlgebra) -> BoundQuiverAlgebra:
    """Reverse every arrow; ``beta*alpha`` becomes ``alpha^op*beta^op``.

    Arrow and algebra names toggle the ``^op`` suffix, so applying this twice
    returns an equal algebra.
    """
    arrows = tuple(
        Arrow(_toggle_op(a.name), a.target, a.source) for a in alg.quiver.arrows
    )
    relations = tuple((_toggle_op(alpha), _toggle_op(beta)) for beta, alpha in alg.relations)
    name = _toggle_op(alg.name) if alg.name else ""
    return BoundQuiverAlgebra(Quiver(alg.quiver.vertices, arrows), relations, alg.field_char, name)


def linear_quiver(n: int) -> Quiver:
    """The linearly oriented quiver ``1 -> 2 -> ... -> n``.

    Arrow ``ak`` runs from vertex ``k`` to ``k+1``.
    """
    if n < 1:
        raise ValidationError(f"Linear quiver needs n >= 1, got {n}")
    vertices = tuple(str(k) for k in range(1, n + 1))
    arrows = tuple(Arrow(f"a{k}", str(k), str(k + 1)) for k in range(1, n))
    return Quiver(vertices, arrows)


if __name__ == "__main__":
    logging.basicConfig(level=logging.DEBUG)

    print("\n=== Bound Quiver Algebra Test ===\n")
    loop = Quiver(("1",), (Arrow("x", "1", "1"),))
    kx2 = BoundQuiverAlgebra(loop, (("x", "x"),), name="kx2")
    x = Path.from_arrows(loop, ["x"])
    print(f"Basis of k[x]/(x^2): {[str(p) for p in kx2.nonzero_paths]}")
    print(f"x*x = {compose_paths(kx2, x, x)}")
    print(f"Opposite twice equals original: {opposite_algebra(opposite_algebra(kx2)) == kx2}")
    print("\n✓ Algebra test complete")
