"""The two moves that preserve flagness: edge subdivision and admissible
edge contraction.

Subdividing any edge of a flag complex yields a flag complex.  Contracting an
edge preserves flagness exactly when the edge lies in no induced 4-cycle of
the 1-skeleton; such an edge is called admissible here.  In a flag complex an
edge always satisfies the link condition lk(e) = lk(a) * lk(b) intersection,
so admissibility is the only obstruction.

Both moves act on :class:`~flagtri.complexes.FlagComplex` at the graph level:

* subdividing edge {a, b} removes the edge, appends a new vertex w = n and
  joins w to a, b and every common neighbour of a and b;
* contracting edge {a, b} merges the larger endpoint into the smaller one and
  shifts the labels above the removed vertex down by one, so results are
  reproducible label for label.

:class:`MoveTrace` records a move sequence against a digest of the exact
labelled starting complex; :func:`replay` applies it and reproduces the same
labelled result bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (FlagComplex, SimplicialComplex, as_simplicial,
                        check_edge, iter_bits, labeled_digest)
from .errors import FaceNotFound, InadmissibleContraction, InvalidInput

SUBDIVIDE = "subdivide"
CONTRACT = "contract"


@dataclass(frozen=True)
class AdmissibleResult:
    """Truthy iff the edge may be contracted.

    When the edge is inadmissible, ``cycle`` holds one induced 4-cycle
    (a, x, y, b) in cyclic order, where (a, b) is the tested edge; the
    witness is the lexicographically first such cycle.
    """

    ok: bool
    cycle: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def stellar_subdivide(c: SimplicialComplex, sigma) -> SimplicialComplex:
    """Stellar subdivision of a face of a facet complex.

    Every facet containing sigma is replaced by the cone over its boundary
    copies: for each vertex s of sigma, facet F becomes (F - s) + w with w a
    fresh vertex label (one past the largest existing label).  Facets not
    containing sigma are untouched.  Works for faces of any dimension; the
    edge case is the one the rest of the package uses.
    """
    s = frozenset(sigma)
    if not s:
        raise InvalidInput("cannot subdivide the empty face")
    if not c.has_face(s):
        raise FaceNotFound(f"{tuple(sorted(s))} is not a face")
    w = max(c.vertices) + 1
    facets = []
    for f in c.facets:
        if s <= f:
            facets.extend((f - {v}) | {w} for v in s)
        else:
            facets.append(f)
    return SimplicialComplex(facets)


def subdivide_edge(c: FlagComplex, edge) -> FlagComplex:
    """Subdivide an edge of a flag complex.

    The new vertex w = vertex_count is joined to both endpoints and to every
    common neighbour, and the edge itself is removed.  The result is again
    flag, and its clique complex equals the stellar subdivision of the edge.
    """
    a, b = check_edge(c, edge)
    common = c.rows[a] & c.rows[b]
    w = c.vertex_count
    rows = list(c.rows)
    rows[a] &= ~(1 << b)
    rows[b] &= ~(1 << a)
    wrow = common | (1 << a) | (1 << b)
    for v in iter_bits(wrow):
        rows[v] |= 1 << w
    rows.append(wrow)
    return FlagComplex(rows)


def is_admissible(c: FlagComplex, edge) -> AdmissibleResult:
    """Test whether an edge of a flag complex may be contracted.

    The edge {a, b} is admissible iff it lies in no induced 4-cycle, i.e.
    there are no vertices x adjacent to a but not b and y adjacent to b but
    not a with x and y adjacent.  On failure the witness cycle (a, x, y, b)
    is returned with the smallest x and, for that x, the smallest y.
    """
    a, b = check_edge(c, edge)
    xs = c.rows[a] & ~c.rows[b] & ~(1 << b)
    ys = c.rows[b] & ~c.rows[a] & ~(1 << a)
    if xs and ys:
        for x in iter_bits(xs):
            hit = c.rows[x] & ys
            if hit:
                y = (hit & -hit).bit_length() - 1
                return AdmissibleResult(False, (a, x, y, b))
    return AdmissibleResult(True)


def contract_edge(c: FlagComplex, edge) -> FlagComplex:
    """Contract an admissible edge onto its smaller endpoint.

    The larger endpoint b is merged into a = min(edge): a inherits the union
    of the neighbourhoods, b disappears, and every label above b shifts down
    by one.  Raises :class:`InadmissibleContraction` (with the witness
    4-cycle) when the edge is not admissible, since contracting it would
    destroy flagness.
    """
    res = is_admissible(c, edge)
    if not res:
        raise InadmissibleContraction(edge, res.cycle)
    a, b = check_edge(c, edge)
    rows = list(c.rows)
    merged = (rows[a] | rows[b]) & ~(1 << a) & ~(1 << b)
    rows[a] = merged
    for v in iter_bits(merged):
        rows[v] = (rows[v] | (1 << a)) & ~(1 << b)
    # delete vertex b, shifting higher labels down
    low_mask = (1 << b) - 1
    out = []
    for i, row in enumerate(rows):
        if i == b:
            continue
        out.append((row & low_mask) | (row >> (b + 1)) << b)
    return FlagComplex(out)


def satisfies_link_condition(c, edge) -> bool:
    """Whether lk({a, b}) equals the intersection of lk(a) and lk(b).

    This is the classical precondition for an edge contraction to preserve
    the PL type; in a flag complex it holds for every edge, so the function
    exists mainly to check inputs that arrive as plain facet complexes.
    """
    sc = as_simplicial(c)
    u, v = edge
    if not sc.has_face((u, v)):
        raise FaceNotFound(f"({u}, {v}) is not an edge")
    both = sc.link((u, v)).faces()
    meet = sc.link((u,)).faces() & sc.link((v,)).faces()
    return both == meet


@dataclass(frozen=True)
class Move:
    """One move, recorded against the labels current when it was applied."""

    kind: str  # SUBDIVIDE or CONTRACT
    edge: tuple

    def as_json_obj(self) -> list:
        return [self.kind[0], self.edge[0], self.edge[1]]

    @classmethod
    def from_json_obj(cls, obj) -> "Move":
        kind, u, v = obj
        full = {"s": SUBDIVIDE, "c": CONTRACT}.get(kind, kind)
        return cls(full, (u, v))


def apply_move(c: FlagComplex, move: Move) -> FlagComplex:
    if move.kind == SUBDIVIDE:
        return subdivide_edge(c, move.edge)
    if move.kind == CONTRACT:
        return contract_edge(c, move.edge)
    raise InvalidInput(f"unknown move kind {move.kind!r}")


@dataclass(frozen=True)
class MoveTrace:
    """A replayable move sequence.

    ``seed_digest`` is the labelled-adjacency digest of the complex the trace
    starts from (labels matter for replay, so this is deliberately not the
    canonical digest).
    """

    seed_digest: str
    moves: tuple

    def as_json_obj(self) -> dict:
        return {"seed_digest": self.seed_digest,
                "moves": [m.as_json_obj() for m in self.moves]}

    @classmethod
    def from_json_obj(cls, obj) -> "MoveTrace":
        return cls(obj["seed_digest"],
                   tuple(Move.from_json_obj(m) for m in obj["moves"]))


def replay(trace: MoveTrace, seed: FlagComplex) -> FlagComplex:
    """Apply a recorded trace to its starting complex.

    The seed must be the exact labelled complex the trace was recorded
    against; the digest check refuses anything else.
    """
    if labeled_digest(seed) != trace.seed_digest:
        raise InvalidInput("trace does not start from this complex")
    c = seed
    for m in trace.moves:
        c = apply_move(c, m)
    return c
