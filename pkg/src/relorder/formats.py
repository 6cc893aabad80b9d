"""Reading and writing relations: a line-oriented edge format, JSON, and DOT.

Edge format::

    # comment
    elements: a b c     (optional; declares isolated elements)
    a b                 (one pair per line, whitespace separated)

Labels are declared in first-appearance order.  JSON documents have
exactly the keys ``elements`` and ``pairs``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Literal

from .quotient import QuotientRelation
from .relation import Relation

Format = Literal["edge", "json"]


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, position: str | None = None):
        self.line = line
        self.position = position
        where = f"line {line}: " if line is not None else f"{position}: " if position else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class RelationDocument:
    elements: tuple[str, ...]
    pairs: tuple[tuple[str, str], ...]
    source_format: Format

    def to_relation(self) -> Relation:
        return Relation.from_pairs(self.elements, self.pairs)


def _parse_edge(text: str) -> RelationDocument:
    elements: list[str] = []
    declared: set[str] = set()
    pairs: list[tuple[str, str]] = []

    def auto(label: str) -> None:
        if label not in declared:
            declared.add(label)
            elements.append(label)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("elements:"):
            for label in line[len("elements:"):].split():
                if label in declared:
                    raise ParseError(f"duplicate label declaration {label!r}", line=lineno)
                declared.add(label)
                elements.append(label)
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected two labels, found {len(tokens)}", line=lineno)
        a, b = tokens
        auto(a)
        auto(b)
        pairs.append((a, b))
    return RelationDocument(tuple(elements), tuple(pairs), "edge")


def _parse_json(text: str) -> RelationDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", position="$")
    unknown = sorted(set(data) - {"elements", "pairs"})
    if unknown:
        raise ParseError(f"unknown fields {unknown}", position="$")
    if "elements" not in data or "pairs" not in data:
        raise ParseError("both 'elements' and 'pairs' are required", position="$")
    elements = data["elements"]
    if not isinstance(elements, list) or not all(isinstance(x, str) for x in elements):
        raise ParseError("'elements' must be a list of strings", position="elements")
    seen: set[str] = set()
    for i, label in enumerate(elements):
        if label in seen:
            raise ParseError(f"duplicate label declaration {label!r}", position=f"elements[{i}]")
        seen.add(label)
    raw_pairs = data["pairs"]
    if not isinstance(raw_pairs, list):
        raise ParseError("'pairs' must be a list", position="pairs")
    pairs = []
    for i, pair in enumerate(raw_pairs):
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, str) for x in pair)):
            raise ParseError("pair must be a list of two labels", position=f"pairs[{i}]")
        for label in pair:
            if label not in seen:
                raise ParseError(f"unknown label {label!r}", position=f"pairs[{i}]")
        pairs.append((pair[0], pair[1]))
    return RelationDocument(tuple(elements), tuple(pairs), "json")


def parse_document(text: str, fmt: Format = "edge") -> RelationDocument:
    if fmt == "edge":
        return _parse_edge(text)
    if fmt == "json":
        return _parse_json(text)
    raise ValueError(f"unknown format {fmt!r}")


def parse_relation(text: str, fmt: Format = "edge") -> Relation:
    if not text.strip():
        raise ParseError("empty input", line=1)
    return parse_document(text, fmt).to_relation()


def _check_edge_label(label: str) -> None:
    if not label or any(c.isspace() for c in label) or "#" in label or label.startswith("elements:"):
        raise ValueError(f"label {label!r} cannot be written in edge format")


def serialize(r: Relation, fmt: Format = "edge") -> str:
    if fmt == "json":
        doc = {"elements": list(r.labels), "pairs": [list(p) for p in r.label_pairs()]}
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "edge":
        for label in r.labels:
            _check_edge_label(label)
        lines = ["elements: " + " ".join(r.labels)] if r.n else []
        lines += [f"{a} {b}" for a, b in r.label_pairs()]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def emit_dot(q: QuotientRelation, name: str = "condensation") -> str:
    """DOT digraph of the class order: one node per class, one edge per covering pair.

    Edges point from the dominating class to the dominated one.
    """
    lines = [f"digraph {name} {{"]
    for cid in range(len(q.partition)):
        lines.append(f"  c{cid} [label={json.dumps(q.class_label(cid))}];")
    for c, d in sorted(q.covering_pairs()):
        lines.append(f"  c{c} -> c{d};")
    lines.append("}")
    return "\n".join(lines) + "\n"
