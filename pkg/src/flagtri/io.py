"""Facet-file formats.

Two formats are understood, chosen by file extension (``.json`` means JSON,
anything else the plain format):

* plain: one facet per line as whitespace-separated 1-based vertex labels;
  blank lines and ``#`` comments are ignored.  This is also the format of the
  packaged fixture data files.
* JSON: an object ``{"name": str, "facets": [[int, ...], ...]}`` with 1-based
  labels and an optional ``"expected"`` object of invariants to verify.

Vertices are 1-based on disk and dense 0-based in memory; reading goes
through :meth:`SimplicialComplex.from_facets`, so the original labels stay
available on the loaded complex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .complexes import SimplicialComplex, as_simplicial
from .errors import ParseError


@dataclass(frozen=True)
class LoadedComplex:
    name: str
    complex: SimplicialComplex
    expected: dict = field(default_factory=dict)


def parse_plain(text: str) -> list:
    """Parse plain facet lines into 1-based facet tuples."""
    facets = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            labels = [int(tok) for tok in body.split()]
        except ValueError:
            raise ParseError(f"non-integer vertex label in {body!r}", lineno)
        if any(v < 1 for v in labels):
            raise ParseError("vertex labels must be positive", lineno)
        if len(set(labels)) != len(labels):
            raise ParseError(f"facet {labels} repeats a vertex", lineno)
        facets.append(tuple(labels))
    if not facets:
        raise ParseError("no facets found", None)
    return facets


def _parse_json(text: str) -> tuple:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno)
    if not isinstance(obj, dict) or "facets" not in obj:
        raise ParseError("JSON payload must be an object with a 'facets' key", None)
    facets = obj["facets"]
    if not isinstance(facets, list) or not facets:
        raise ParseError("'facets' must be a non-empty list", None)
    for f in facets:
        if (not isinstance(f, list) or not f
                or any(not isinstance(v, int) or v < 1 for v in f)):
            raise ParseError(f"bad facet {f!r}: need positive integer labels", None)
        if len(set(f)) != len(f):
            raise ParseError(f"facet {f} repeats a vertex", None)
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("'name' must be a string", None)
    expected = obj.get("expected", {})
    if not isinstance(expected, dict):
        raise ParseError("'expected' must be an object", None)
    return name, [tuple(f) for f in facets], expected


def read_complex(path) -> LoadedComplex:
    """Load a facet file in either format."""
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {p}: {exc.strerror}", None)
    if p.suffix.lower() == ".json":
        name, facets, expected = _parse_json(text)
        return LoadedComplex(name or p.stem,
                             SimplicialComplex.from_facets(facets), expected)
    return LoadedComplex(p.stem, SimplicialComplex.from_facets(parse_plain(text)),
                         {})


def facet_lines(c, comment: str | None = None) -> str:
    """Serialise a complex in the plain format (labels written 1-based)."""
    sc = as_simplicial(c)
    out = []
    if comment:
        out.append(f"# {comment}")
    for f in sorted(tuple(sorted(v + 1 for v in f)) for f in sc.facets):
        out.append(" ".join(map(str, f)))
    return "\n".join(out) + "\n"


def write_complex(path, c, *, name: str | None = None, fmt: str | None = None,
                  expected: dict | None = None) -> None:
    """Write a complex to ``path`` in the chosen (or extension-implied) format."""
    p = Path(path)
    sc = as_simplicial(c)
    if fmt is None:
        fmt = "json" if p.suffix.lower() == ".json" else "plain"
    if fmt == "json":
        obj = {"name": name or p.stem,
               "facets": sorted(sorted(v + 1 for v in f) for f in sc.facets)}
        if expected:
            obj["expected"] = expected
        p.write_text(json.dumps(obj, indent=2) + "\n")
    elif fmt == "plain":
        p.write_text(facet_lines(sc, comment=name))
    else:
        raise ParseError(f"unknown format {fmt!r}", None)
