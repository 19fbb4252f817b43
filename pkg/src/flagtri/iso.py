"""Canonical labelling, isomorphism testing, and graph distance.

A flag complex is determined by its 1-skeleton, so isomorphism is decided on
graphs.  The canonical form uses colour refinement (vertex colours repeatedly
replaced by the multiset of neighbour colours) plus
individualisation-refinement backtracking: whenever refinement stalls on a
non-singleton colour class, every vertex of the first such class is tried in
turn, and the lexicographically smallest relabelled adjacency matrix over all
branches is the canonical form.  Small graphs only; that is all the package
needs.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass

from .complexes import (FlagComplex, SimplicialComplex, as_flag, iter_bits)
from .errors import FlagtriError, InvalidInput


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical labelling of a flag complex.

    ``digest`` is a hex digest of the canonically relabelled adjacency
    matrix (equal iff isomorphic); ``labeling`` sends each input vertex to
    its canonical position.
    """

    digest: str
    labeling: tuple


@dataclass(frozen=True)
class IsoResult:
    """Truthy iff isomorphic; then ``mapping`` sends vertices of the first
    complex to vertices of the second and has been verified edge for edge."""

    ok: bool
    mapping: dict | None = None

    def __bool__(self) -> bool:
        return self.ok


def _refine(rows, colors) -> tuple:
    """Colour refinement to a fixpoint, with canonical colour values."""
    n = len(rows)
    colors = list(colors)
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in iter_bits(rows[v]))))
                for v in range(n)]
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == colors:
            return tuple(new)
        colors = new


def _canonical_rows(rows):
    """Smallest relabelled adjacency matrix and the labelling reaching it."""
    n = len(rows)
    best = None
    best_perm = None

    def leaf(colors):
        nonlocal best, best_perm
        inv = [0] * n
        for v, c in enumerate(colors):
            inv[c] = v
        canon = []
        for i in range(n):
            row = 0
            for u in iter_bits(rows[inv[i]]):
                row |= 1 << colors[u]
            canon.append(row)
        canon = tuple(canon)
        if best is None or canon < best:
            best = canon
            best_perm = tuple(colors)

    def descend(colors):
        colors = _refine(rows, colors)
        counts = Counter(colors)
        target = next((c for c in sorted(counts) if counts[c] > 1), None)
        if target is None:
            leaf(colors)
            return
        for v in range(n):
            if colors[v] == target:
                split = [2 * c for c in colors]
                split[v] += 1
                descend(split)

    descend((0,) * n)
    return best, best_perm


def _dense(c) -> tuple:
    """(FlagComplex over 0..n-1, original labels in position order)."""
    if isinstance(c, FlagComplex):
        return c, tuple(range(c.vertex_count))
    if isinstance(c, SimplicialComplex):
        return as_flag(c), c.vertices
    raise InvalidInput(f"not a complex: {c!r}")


def canonical_form(c) -> CanonicalForm:
    """Canonical form of a flag complex (facet complexes must be flag).

    The digest is stable under any relabelling of the vertices; ``labeling``
    maps input vertices (dense positions for FlagComplex inputs, sorted label
    positions otherwise) to canonical positions.
    """
    fc, _ = _dense(c)
    canon, perm = _canonical_rows(fc.rows)
    n = fc.vertex_count
    h = hashlib.sha256()
    h.update(n.to_bytes(4, "big"))
    nbytes = (n + 7) // 8
    for row in canon:
        h.update(row.to_bytes(nbytes or 1, "big"))
    return CanonicalForm(h.hexdigest(), perm)


def are_isomorphic(a, b) -> IsoResult:
    """Decide isomorphism of two flag complexes and return a verified map.

    The map is assembled from the two canonical labellings and then checked
    edge for edge in both directions before being returned.
    """
    fa, labels_a = _dense(a)
    fb, labels_b = _dense(b)
    if fa.vertex_count != fb.vertex_count or fa.edge_count() != fb.edge_count():
        return IsoResult(False)
    ca = canonical_form(fa)
    cb = canonical_form(fb)
    if ca.digest != cb.digest:
        return IsoResult(False)
    inv_b = [0] * fb.vertex_count
    for v, pos in enumerate(cb.labeling):
        inv_b[pos] = v
    dense_map = {v: inv_b[ca.labeling[v]] for v in range(fa.vertex_count)}
    for u, v in fa.edges():
        if not fb.has_edge(dense_map[u], dense_map[v]):
            raise FlagtriError("canonical labelling produced a non-isomorphism")
    mapping = {labels_a[u]: labels_b[dense_map[u]]
               for u in range(fa.vertex_count)}
    return IsoResult(True, mapping)


def graph_distance(c, u: int, v: int):
    """BFS distance between two vertices in the 1-skeleton.

    Vertices of a SimplicialComplex are addressed by their labels.  Returns
    math.inf when the vertices lie in different components.
    """
    if isinstance(c, FlagComplex):
        rows = c.rows
        iu, iv = u, v
        n = c.vertex_count
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidInput(f"no such vertices: {u}, {v}")
    else:
        sc = c
        sk = sc.skeleton()
        rows = sk.rows
        try:
            iu = sk.labels.index(u)
            iv = sk.labels.index(v)
        except ValueError:
            raise InvalidInput(f"no such vertices: {u}, {v}")
    if iu == iv:
        return 0
    seen = 1 << iu
    frontier = seen
    dist = 0
    while frontier:
        dist += 1
        nxt = 0
        for i in iter_bits(frontier):
            nxt |= rows[i]
        frontier = nxt & ~seen
        if frontier >> iv & 1:
            return dist
        seen |= frontier
    return float("inf")
