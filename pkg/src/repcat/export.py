"""
Quiver Export

Deterministic Graphviz DOT and JSON renderings of stable components,
relation quivers and sets of almost split sequences.
"""

import logging
from typing import Iterator, List, Sequence, Union

from ..gp import RelationQuiver
from ..utils.errors import UnsupportedFormat
from .components import StableComponent
from .monomorphism import AlmostSplitSequence
from .report import QuiverDocument, QuiverEdge, QuiverNode

logger = logging.getLogger(__name__)

Exportable = Union[
    StableComponent,
    RelationQuiver,
    Sequence[StableComponent],
    Sequence[AlmostSplitSequence],
]


def _quote(text: str) -> str:
    return '"{}"'.format(text.replace('"', r'\"'))


def _component_document(components: Sequence[StableComponent]) -> QuiverDocument:
    doc = QuiverDocument(kind="stable-component")
    for comp in components:
        doc.nodes.extend(QuiverNode(id=str(x), label=str(x)) for x in comp.vertices)
        doc.edges.extend(QuiverEdge(source=str(s), target=str(t)) for s, t in comp.arrows)
        doc.edges.extend(
            QuiverEdge(source=str(x), target=str(y), kind="tau", label="τ") for x, y in comp.tau
        )
    return doc


def _relation_document(rq: RelationQuiver) -> QuiverDocument:
    doc = QuiverDocument(kind="relation-quiver")
    doc.nodes.extend(QuiverNode(id=v, label=v) for v in rq.vertices)
    doc.edges.extend(
        QuiverEdge(source=e.source, target=e.target, kind="relation", label=e.label)
        for e in rq.edges
    )
    return doc


def _sequence_document(sequences: Sequence[AlmostSplitSequence]) -> QuiverDocument:
    """Meshes: middles feed the right end, τ points from the right end to the left."""
    doc = QuiverDocument(kind="almost-split-sequences")
    seen: List[str] = []
    for seq in sequences:
        for obj in (seq.left, *seq.middles, seq.right):
            if str(obj) not in seen:
                seen.append(str(obj))
        for m in seq.middles:
            doc.edges.append(QuiverEdge(source=str(seq.left), target=str(m)))
            doc.edges.append(QuiverEdge(source=str(m), target=str(seq.right)))
        doc.edges.append(
            QuiverEdge(source=str(seq.right), target=str(seq.left), kind="tau", label="τ")
        )
    doc.nodes.extend(QuiverNode(id=name, label=name) for name in seen)
    return doc


def to_document(obj: Exportable) -> QuiverDocument:
    if isinstance(obj, StableComponent):
        return _component_document([obj])
    if isinstance(obj, RelationQuiver):
        return _relation_document(obj)
    items = list(obj)
    if not items or isinstance(items[0], StableComponent):
        return _component_document(items)
    if isinstance(items[0], AlmostSplitSequence):
        return _sequence_document(items)
    raise UnsupportedFormat(f"Cannot export objects of type {type(items[0]).__name__}")


def dot_lines(doc: QuiverDocument) -> Iterator[str]:
    """Graphviz lines: one node per vertex, dashed edges for τ."""
    yield "digraph G {"
    for node in doc.nodes:
        yield f"  {_quote(node.id)} [label={_quote(node.label)}];"
    for edge in doc.edges:
        attrs = []
        if edge.kind == "tau":
            attrs.append("style=dashed")
        if edge.label:
            attrs.append(f"label={_quote(edge.label)}")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        yield f"  {_quote(edge.source)} -> {_quote(edge.target)}{suffix};"
    yield "}"


def export_quiver(obj: Exportable, fmt: str = "dot") -> str:
    """Serialize to ``dot`` or ``json``.

    Raises:
        UnsupportedFormat: for any other format
    """
    if fmt not in ("dot", "json"):
        raise UnsupportedFormat(f"Unsupported export format: {fmt}")
    doc = to_document(obj)
    logger.debug(f"Exporting {doc.kind} with {len(doc.nodes)} nodes as {fmt}")
    if fmt == "json":
        return doc.model_dump_json(indent=2)
    return "\n".join(dot_lines(doc)) + "\n"
