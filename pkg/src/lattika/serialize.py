"""JSON lattice documents and Graphviz DOT output."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import BadParams, CyclicCovers, ParseError
from .lattice import Lattice, Poset, lattice_from_covers


def lattice_to_doc(L: Lattice) -> dict:
    return {
        "name": L.name,
        "elements": list(L.names),
        "covers": [[L.names[a], L.names[b]] for a, b in L.covers],
    }


def lattice_from_doc(doc: object) -> Lattice:
    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    for key in ("elements", "covers"):
        if key not in doc:
            raise ParseError(f"missing required key {key!r}")
    elements, covers = doc["elements"], doc["covers"]
    if not isinstance(elements, list) or not all(isinstance(x, str) for x in elements):
        raise ParseError("'elements' must be a list of strings")
    if not isinstance(covers, list) or not all(
        isinstance(c, list) and len(c) == 2 and all(isinstance(x, str) for x in c) for c in covers
    ):
        raise ParseError("'covers' must be a list of [lower, upper] label pairs")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ParseError("'name' must be a string")
    try:
        return lattice_from_covers(Poset(elements, covers), name=name)
    except (BadParams, CyclicCovers) as exc:
        raise ParseError(str(exc)) from None


def loads_lattice(text: str) -> Lattice:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    return lattice_from_doc(doc)


def dumps_lattice(L: Lattice) -> str:
    return json.dumps(lattice_to_doc(L), indent=2) + "\n"


def load_lattice(path: str | Path) -> Lattice:
    return loads_lattice(Path(path).read_text())


def save_lattice(L: Lattice, path: str | Path) -> None:
    Path(path).write_text(dumps_lattice(L))


def _q(label: str) -> str:
    return json.dumps(label)


def dot_source(L: Lattice) -> str:
    """DOT text: one node per element, one edge per cover, bottom drawn lowest."""
    lines = [f"digraph {_q(L.name or 'lattice')} {{", "  rankdir=BT;"]
    for x in L.names:
        lines.append(f"  {_q(x)};")
    for a, b in L.covers:
        lines.append(f"  {_q(L.names[a])} -> {_q(L.names[b])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_dot(L: Lattice, path: str | Path | None = None) -> str:
    text = dot_source(L)
    if path is not None:
        Path(path).write_text(text)
    return text
