"""Simplicial complexes as facet lists, and flag complexes as graphs.

Two representations are used throughout the package:

* :class:`SimplicialComplex` stores the inclusion-maximal faces (facets) of an
  abstract simplicial complex over integer vertex labels.  Faces are never
  materialised beyond a cached downward closure.
* :class:`FlagComplex` stores only a graph (bitset adjacency rows over the
  dense vertex range 0..n-1); the complex it denotes is the clique complex of
  that graph.  Maximal cliques are recovered on demand by Bron-Kerbosch
  enumeration.

Both types are immutable values: every operation returns a new object.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import EdgeNotFound, FaceNotFound, InvalidInput

Face = frozenset  # faces are frozensets of int vertex labels


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _face_key(face) -> tuple:
    return (len(face), tuple(sorted(face)))


@dataclass(frozen=True)
class FlagResult:
    """Outcome of a flagness test; truthy iff the complex is flag.

    ``witness`` is the lexicographically smallest minimal non-face of
    cardinality >= 3 when the test fails, else None.
    """

    ok: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


class SimplicialComplex:
    """An abstract simplicial complex given by its facet list.

    Vertex labels are arbitrary non-negative integers.  :meth:`from_facets`
    additionally relabels vertices densely to 0..n-1 (keeping the original
    labels in ``input_labels``); derived complexes such as links keep the
    labels of their parent so vertices stay identifiable.
    """

    __slots__ = ("facets", "vertices", "input_labels", "_faces", "_skeleton")

    def __init__(self, facets: Iterable[Iterable[int]], *, _maximal: bool = False):
        raw = []
        for f in facets:
            face = frozenset(f)
            for v in face:
                if not isinstance(v, int) or v < 0:
                    raise InvalidInput(f"vertex labels must be non-negative ints, got {v!r}")
            raw.append(face)
        if not raw:
            raise InvalidInput("a complex needs at least one facet")
        raw = sorted(set(raw), key=_face_key)
        if len(raw) > 1:
            # drop the empty face and anything contained in a later facet
            if not _maximal:
                raw = [f for i, f in enumerate(raw)
                       if f and not any(f < g for g in raw[i + 1:])]
            else:
                raw = [f for f in raw if f]
        object.__setattr__(self, "facets", tuple(raw))
        verts = set()
        for f in self.facets:
            verts |= f
        object.__setattr__(self, "vertices", tuple(sorted(verts)))
        object.__setattr__(self, "input_labels", None)
        object.__setattr__(self, "_faces", None)
        object.__setattr__(self, "_skeleton", None)

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build a complex from facet lists, relabelling vertices densely.

        Input labels may be any non-negative integers; they are mapped to
        0..n-1 in increasing order and the original labels are kept in
        ``input_labels`` (position i holds the original label of vertex i).
        """
        raw = [tuple(f) for f in facets]
        for f in raw:
            if len(f) == 0:
                raise InvalidInput("empty facet")
            if len(set(f)) != len(f):
                raise InvalidInput(f"facet {f} repeats a vertex")
        labels = sorted({v for f in raw for v in f})
        index = {v: i for i, v in enumerate(labels)}
        try:
            dense = [[index[v] for v in f] for f in raw]
        except (TypeError, KeyError) as exc:  # unhashable or weird labels
            raise InvalidInput(f"bad vertex label: {exc}")
        c = cls(dense)
        object.__setattr__(c, "input_labels", tuple(labels))
        return c

    # -- basic queries ---------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    def faces(self) -> frozenset:
        """All non-empty faces (the downward closure of the facets)."""
        if self._faces is None:
            out = set()
            for f in self.facets:
                fs = tuple(sorted(f))
                for k in range(1, len(fs) + 1):
                    out.update(map(frozenset, combinations(fs, k)))
            object.__setattr__(self, "_faces", frozenset(out))
        return self._faces

    def faces_of_dim(self, k: int) -> list:
        """Faces of dimension k, sorted lexicographically."""
        want = k + 1
        return sorted((f for f in self.faces() if len(f) == want),
                      key=lambda f: tuple(sorted(f)))

    def has_face(self, sigma: Iterable[int]) -> bool:
        s = frozenset(sigma)
        if not s:
            return True
        return any(s <= f for f in self.facets)

    def f_vector(self) -> tuple:
        """Face counts ``(1, f_0, ..., f_dim)``; the leading 1 counts the empty face."""
        counts = [0] * (self.dim + 1)
        for f in self.faces():
            counts[len(f) - 1] += 1
        return (1, *counts)

    def euler_characteristic(self) -> int:
        """Alternating face-count sum f_0 - f_1 + f_2 - ... (empty face excluded)."""
        fv = self.f_vector()
        return sum((-1) ** i * fv[i + 1] for i in range(len(fv) - 1))

    # -- subcomplexes ----------------------------------------------------

    def link(self, sigma: Iterable[int]) -> "SimplicialComplex":
        """The link of a face: all tau disjoint from sigma with tau + sigma a face."""
        s = frozenset(sigma)
        if not self.has_face(s):
            raise FaceNotFound(f"{tuple(sorted(s))} is not a face")
        return SimplicialComplex((f - s for f in self.facets if s <= f),
                                 _maximal=True)

    def star(self, sigma: Iterable[int]) -> "SimplicialComplex":
        """The closed star of a face: all facets containing it, with their faces."""
        s = frozenset(sigma)
        if not self.has_face(s):
            raise FaceNotFound(f"{tuple(sorted(s))} is not a face")
        return SimplicialComplex((f for f in self.facets if s <= f), _maximal=True)

    def induced(self, w: Iterable[int]) -> "SimplicialComplex":
        """The induced subcomplex on a vertex subset (labels are preserved)."""
        ws = frozenset(w)
        parts = {f & ws for f in self.facets}
        return SimplicialComplex(parts)

    # -- skeleton and flagness -------------------------------------------

    def skeleton(self) -> "Skeleton":
        if self._skeleton is None:
            index = {v: i for i, v in enumerate(self.vertices)}
            rows = [0] * len(self.vertices)
            for f in self.facets:
                for u, v in combinations(f, 2):
                    rows[index[u]] |= 1 << index[v]
                    rows[index[v]] |= 1 << index[u]
            object.__setattr__(
                self, "_skeleton", Skeleton(self.vertices, tuple(rows)))
        return self._skeleton

    def missing_faces(self, max_card: int) -> tuple:
        """Minimal non-faces of cardinality 2..max_card, lexicographically sorted.

        A missing face is a vertex set that is not a face although all its
        proper subsets are.  Any missing face of cardinality >= 3 spans a
        clique of the skeleton, so only skeleton cliques are enumerated.
        """
        if max_card < 2:
            raise InvalidInput("max_card must be at least 2")
        sk = self.skeleton()
        n = len(sk.labels)
        out = []
        for i, j in combinations(range(n), 2):
            if not sk.rows[i] >> j & 1:
                out.append(frozenset((sk.labels[i], sk.labels[j])))
        faces = self.faces()
        # enumerate cliques of size >= 3 by ordered extension
        stack = [((i,), sk.rows[i] >> (i + 1) << (i + 1)) for i in range(n)]
        while stack:
            clique, ext = stack.pop()
            for j in iter_bits(ext):
                bigger = clique + (j,)
                if len(bigger) < max_card:
                    stack.append((bigger, ext & sk.rows[j] & (-1 << (j + 1))))
                if len(bigger) < 3 or len(bigger) > max_card:
                    continue
                labels = frozenset(sk.labels[k] for k in bigger)
                if labels in faces:
                    continue
                if all(labels - {v} in faces for v in labels):
                    out.append(labels)
        return tuple(sorted(set(out), key=_face_key))

    def is_flag(self) -> FlagResult:
        """Whether this is the clique complex of its own 1-skeleton.

        Equivalent to every minimal non-face having cardinality 2.  On failure
        the witness is the lexicographically smallest offending non-face.
        """
        bad = [f for f in self.missing_faces(self.dim + 2) if len(f) >= 3]
        if not bad:
            return FlagResult(True)
        witness = min(bad, key=lambda f: tuple(sorted(f)))
        return FlagResult(False, tuple(sorted(witness)))

    # -- value semantics -------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return set(self.facets) == set(other.facets)

    def __hash__(self) -> int:
        return hash(frozenset(self.facets))

    def __repr__(self) -> str:
        return f"SimplicialComplex(f={self.f_vector()})"


@dataclass(frozen=True)
class Skeleton:
    """The 1-skeleton of a complex: vertex labels plus bitset adjacency rows.

    ``rows[i]`` has bit j set iff labels[i] and labels[j] span an edge.
    """

    labels: tuple
    rows: tuple

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list:
        out = []
        for i, row in enumerate(self.rows):
            for j in iter_bits(row >> (i + 1) << (i + 1)):
                out.append((self.labels[i], self.labels[j]))
        return out


class FlagComplex:
    """The clique complex of a graph on vertices 0..n-1.

    Only the graph is stored (``rows[i]`` = neighbour bitmask of vertex i);
    every clique of the graph is a face.  Facets (maximal cliques) are
    enumerated lazily and cached.
    """

    __slots__ = ("rows", "_facets")

    def __init__(self, rows: Iterable[int]):
        rows = tuple(rows)
        n = len(rows)
        full = (1 << n) - 1
        for i, row in enumerate(rows):
            if row >> i & 1:
                raise InvalidInput(f"vertex {i} adjacent to itself")
            if row & ~full:
                raise InvalidInput(f"row {i} mentions vertices >= {n}")
        for i, row in enumerate(rows):
            for j in iter_bits(row):
                if not rows[j] >> i & 1:
                    raise InvalidInput(f"adjacency not symmetric at ({i}, {j})")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_facets", None)

    def __setattr__(self, name, value):
        raise AttributeError("FlagComplex is immutable")

    @classmethod
    def from_graph(cls, n: int, edges: Iterable[tuple]) -> "FlagComplex":
        rows = [0] * n
        for u, v in edges:
            if u == v or not 0 <= u < n or not 0 <= v < n:
                raise InvalidInput(f"bad edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(rows)

    @classmethod
    def from_simplicial(cls, c: SimplicialComplex) -> "FlagComplex":
        """Adopt a facet complex that is already flag.

        Vertices are taken in sorted label order; raises InvalidInput with the
        witness when the complex is not flag.
        """
        res = c.is_flag()
        if not res:
            raise InvalidInput(f"not a flag complex, minimal non-face {res.witness}")
        return cls(c.skeleton().rows)

    # -- graph queries ---------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.rows)

    def neighbors(self, v: int) -> int:
        return self.rows[v]

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1) if u != v else False

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list:
        out = []
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def link_mask(self, sigma: Iterable[int]) -> int:
        """Bitmask of common neighbours of a clique (the link's vertex set)."""
        s = tuple(sigma)
        for v in s:
            if not isinstance(v, int) or not 0 <= v < self.vertex_count:
                raise FaceNotFound(f"{tuple(sorted(s))} is not a face")
        for u, v in combinations(s, 2):
            if u == v or not self.has_edge(u, v):
                raise FaceNotFound(f"{tuple(sorted(s))} is not a face")
        m = (1 << self.vertex_count) - 1
        for v in s:
            m &= self.rows[v]
        return m

    def link_vertices(self, sigma: Iterable[int]) -> tuple:
        return tuple(iter_bits(self.link_mask(sigma)))

    def induced_flag(self, w: Iterable[int]) -> "FlagComplex":
        """Induced flag complex on a vertex subset, relabelled in sorted order."""
        verts = sorted(set(w))
        index = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for i, v in enumerate(verts):
            for u in iter_bits(self.rows[v]):
                if u in index:
                    rows[i] |= 1 << index[u]
        return FlagComplex(rows)

    # -- faces -----------------------------------------------------------

    def facets(self) -> tuple:
        """Maximal cliques, computed by Bron-Kerbosch with pivoting."""
        if self._facets is None:
            out = []
            n = self.vertex_count
            isolated = [v for v in range(n) if not self.rows[v]]
            out.extend(frozenset((v,)) for v in isolated)

            def expand(r: tuple, p: int, x: int):
                if not p and not x:
                    out.append(frozenset(r))
                    return
                pivot = max(iter_bits(p | x), key=lambda u: (self.rows[u] & p).bit_count())
                for v in iter_bits(p & ~self.rows[pivot]):
                    expand(r + (v,), p & self.rows[v], x & self.rows[v])
                    p &= ~(1 << v)
                    x |= 1 << v

            live = mask_of(v for v in range(n) if self.rows[v])
            if live:
                expand((), live, 0)
            object.__setattr__(
                self, "_facets", tuple(sorted(out, key=_face_key)))
        return self._facets

    def to_simplicial(self) -> SimplicialComplex:
        return SimplicialComplex(self.facets(), _maximal=True)

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets()) - 1

    def f_vector(self) -> tuple:
        """Clique counts ``(1, f_0, f_1, ...)`` without enumerating facets."""
        n = self.vertex_count
        counts = [1, n]
        stack = [((i,), self.rows[i] >> (i + 1) << (i + 1)) for i in range(n)]
        while stack:
            clique, ext = stack.pop()
            for j in iter_bits(ext):
                size = len(clique) + 1
                if size >= len(counts):
                    counts.append(0)
                counts[size] += 1
                stack.append((clique + (j,), ext & self.rows[j] & (-1 << (j + 1))))
        return tuple(counts)

    def euler_characteristic(self) -> int:
        fv = self.f_vector()
        return sum((-1) ** i * fv[i + 1] for i in range(len(fv) - 1))

    # -- value semantics -------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FlagComplex):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"FlagComplex(n={self.vertex_count}, edges={self.edge_count()})"


def as_simplicial(c) -> SimplicialComplex:
    """Coerce either complex type to its facet representation."""
    if isinstance(c, FlagComplex):
        return c.to_simplicial()
    if isinstance(c, SimplicialComplex):
        return c
    raise InvalidInput(f"not a complex: {c!r}")


def as_flag(c) -> FlagComplex:
    """Coerce either complex type to a flag complex (must actually be flag)."""
    if isinstance(c, FlagComplex):
        return c
    if isinstance(c, SimplicialComplex):
        return FlagComplex.from_simplicial(c)
    raise InvalidInput(f"not a complex: {c!r}")


def labeled_digest(c) -> str:
    """Hex digest of the labelled adjacency matrix (not isomorphism-invariant).

    Used to pin the exact labelled complex a move trace starts from; canonical
    (isomorphism-invariant) digests live in the iso module.
    """
    if isinstance(c, SimplicialComplex):
        sk = c.skeleton()
        n = len(sk.labels)
        rows = sk.rows
    else:
        n = c.vertex_count
        rows = c.rows
    h = hashlib.sha256()
    h.update(n.to_bytes(4, "big"))
    nbytes = (n + 7) // 8
    for row in rows:
        h.update(row.to_bytes(nbytes or 1, "big"))
    return h.hexdigest()


def check_edge(c: FlagComplex, edge) -> tuple:
    """Normalise an edge argument to (min, max); EdgeNotFound if absent."""
    try:
        u, v = edge
    except (TypeError, ValueError):
        raise EdgeNotFound(f"not an edge: {edge!r}")
    if u == v or not (0 <= u < c.vertex_count and 0 <= v < c.vertex_count) \
            or not c.has_edge(u, v):
        raise EdgeNotFound(f"({u}, {v}) is not an edge")
    return (u, v) if u < v else (v, u)
