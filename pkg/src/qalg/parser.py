"""
Algebra and Quiver File Parser

Grammar for the line-oriented ``.alg`` / ``.quiver`` format
============================================================

file       = line*
line       = [statement (";" statement)* [";"]] ["#" comment]
statement  = "vertices" ":" ident*
           | "arrows" ":" [arrow ("," arrow)*]
           | "relations" ":" [relation ("," relation)*]
           | "field" ":" integer
           | "name" ":" ident
arrow      = ident ":" ident "->" ident
relation   = ident ("*" ident)*        # must have exactly two factors

``beta*alpha`` in a relations line means "first alpha, then beta".
"""

import logging
from pathlib import Path as FilePath
from typing import List, Optional, Tuple, Union

import pyparsing as pp

from ..utils.errors import NonQuadratic, ParseError, ValidationError
from .quiver import Arrow, BoundQuiverAlgebra, Quiver

logger = logging.getLogger(__name__)

# Basic tokens
identifier = pp.Regex(r"[\w.'^]+").set_name("identifier")
integer = pp.Word(pp.nums).set_name("integer").set_parse_action(lambda t: int(t[0]))
colon = pp.Suppress(":")

# Statements
arrow_decl = pp.Group(identifier - colon - identifier - pp.Suppress("->") - identifier)
relation = pp.Group(identifier + pp.ZeroOrMore(pp.Suppress("*") - identifier))

vertices_stmt = pp.Group(pp.Keyword("vertices") - colon - pp.Group(pp.ZeroOrMore(identifier)))
arrows_stmt = pp.Group(
    pp.Keyword("arrows") - colon - pp.Group(pp.Optional(pp.DelimitedList(arrow_decl)))
)
relations_stmt = pp.Group(
    pp.Keyword("relations") - colon - pp.Group(pp.Optional(pp.DelimitedList(relation)))
)
field_stmt = pp.Group(pp.Keyword("field") - colon - integer)
name_stmt = pp.Group(pp.Keyword("name") - colon - identifier)

statement = vertices_stmt | arrows_stmt | relations_stmt | field_stmt | name_stmt
line_grammar = pp.Optional(pp.DelimitedList(statement, delim=";", allow_trailing_delim=True))


class _Declarations:
    """Collects statements across lines before building the algebra."""

    def __init__(self):
        self.vertices: List[str] = []
        self.arrows: List[Arrow] = []
        self.relations: List[Tuple[str, str]] = []
        self.field: Optional[int] = None
        self.name: str = ""
        self.saw_vertices = False

    def add(self, stmt, lineno: int):
        key = stmt[0]
        if key == "vertices":
            self.saw_vertices = True
            self.vertices.extend(stmt[1])
        elif key == "arrows":
            for name, source, target in stmt[1]:
                self.arrows.append(Arrow(name, source, target))
        elif key == "relations":
            for factors in stmt[1]:
                if len(factors) != 2:
                    raise NonQuadratic(
                        f"line {lineno}: relation {'*'.join(factors)} has length "
                        f"{len(factors)}, only length-2 monomial relations are supported"
                    )
                self.relations.append((factors[0], factors[1]))
        elif key == "field":
            self.field = stmt[1]
        elif key == "name":
            self.name = stmt[1]


def _collect(text: str) -> _Declarations:
    decls = _Declarations()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        try:
            parsed = line_grammar.parse_string(line, parse_all=True)
        except pp.ParseBaseException as pe:
            raise ParseError(f"line {lineno}, column {pe.column}: {pe.msg}") from None
        for stmt in parsed:
            decls.add(stmt, lineno)
    if not decls.saw_vertices:
        raise ParseError("missing 'vertices:' declaration")
    return decls


def parse_algebra(text: str, name: str = "") -> BoundQuiverAlgebra:
    """Parse an algebra in the text format.

    Args:
        text: UTF-8 file contents
        name: Fallback display name when the file has no ``name:`` line

    Returns:
        Validated BoundQuiverAlgebra

    Raises:
        ParseError: syntax error
        NonQuadratic: relation of length other than 2
        ValidationError: unknown ids, duplicate ids, non-composable relation
        InfiniteDimensional: nonzero cycle

    Example:
        >>> alg = parse_algebra("vertices: 1; arrows: x: 1 -> 1; relations: x*x")
        >>> len(alg.nonzero_paths)
        2
    """
    decls = _collect(text)
    quiver = Quiver(tuple(decls.vertices), tuple(decls.arrows))
    algebra = BoundQuiverAlgebra(
        quiver, tuple(decls.relations), decls.field, decls.name or name
    )
    logger.info(
        f"Parsed algebra {algebra.name or '<unnamed>'}: {len(quiver.vertices)} vertices, "
        f"{len(quiver.arrows)} arrows, {len(algebra.relations)} relations"
    )
    return algebra


def parse_quiver(text: str) -> Quiver:
    """Parse a bare quiver (``vertices:`` and ``arrows:`` lines only)."""
    decls = _collect(text)
    if decls.relations:
        raise ValidationError("A quiver file cannot declare relations")
    return Quiver(tuple(decls.vertices), tuple(decls.arrows))


def _read(path: Union[str, FilePath]) -> str:
    try:
        return FilePath(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ValidationError(f"Cannot read {path}: {e.strerror}") from None
    except UnicodeDecodeError as e:
        raise ParseError(f"{path}: not valid UTF-8 at byte {e.start}") from None


def load_algebra(path: Union[str, FilePath]) -> BoundQuiverAlgebra:
    """Read and parse an algebra file; the file stem is the default name."""
    return parse_algebra(_read(path), name=FilePath(path).stem)


def load_quiver(path: Union[str, FilePath]) -> Quiver:
    return parse_quiver(_read(path))


def format_algebra(alg: BoundQuiverAlgebra) -> str:
    """Render an algebra back to the text format."""
    lines = []
    if alg.name:
        lines.append(f"name: {alg.name}")
    if alg.field_char is not None:
        lines.append(f"field: {alg.field_char}")
    lines.append("vertices: " + " ".join(alg.quiver.vertices))
    arrows = ", ".join(f"{a.name}: {a.source} -> {a.target}" for a in alg.quiver.arrows)
    lines.append(f"arrows: {arrows}".rstrip())
    relations = ", ".join(f"{b}*{a}" for b, a in alg.relations)
    lines.append(f"relations: {relations}".rstrip())
    return "\n".join(lines) + "\n"
