"""Exact homology, manifold recognition in dimensions <= 3, and the
gamma-type face-count invariants.

Betti numbers are computed from boundary-matrix ranks with exact arithmetic
only: GF(2) ranks use bit-parallel elimination over Python ints, rational
ranks use sparse integer-scaled elimination (rows kept primitive by gcd), so
no floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb, gcd

from .complexes import SimplicialComplex, as_simplicial, iter_bits
from .errors import DimensionMismatch, InvalidInput, NotManifold, NotPure


class Field(Enum):
    GF2 = "GF2"
    RATIONAL = "Q"


@dataclass(frozen=True)
class BettiVector:
    """Betti numbers beta_0..beta_dim over the tagged field (unreduced)."""

    field: Field
    ranks: tuple

    def __getitem__(self, i: int) -> int:
        return self.ranks[i]


@dataclass(frozen=True)
class CheckResult:
    """Boolean verdict plus a human-readable reason on failure."""

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class SurfaceType:
    """Homeomorphism type of a closed surface.

    ``count`` is the number of summands: 0 for the sphere, the genus for
    orientable surfaces, the number of cross-caps otherwise.
    """

    orientable: bool
    count: int
    chi: int

    def label(self) -> str:
        if self.orientable:
            if self.count == 0:
                return "S^2"
            if self.count == 1:
                return "T^2"
            return f"#_{self.count} T^2"
        if self.count == 1:
            return "RP^2"
        if self.count == 2:
            return "#_2 RP^2 (Klein bottle)"
        return f"#_{self.count} RP^2"


@dataclass(frozen=True)
class GammaNumbers:
    """The face-count invariants of a pure (d-1)-complex.

    gamma1 = f0 - 2d
    gamma2 = f1 - (2d-3) f0 + 2d(d-2)
    g2     = f1 - d f0 + C(d+1, 2)
    gbar2  = 2 f1 - 3(d-1) f0 + 2d(d-1)
    """

    d: int
    gamma1: int
    gamma2: int
    g2: int
    gbar2: int


@dataclass(frozen=True)
class ConjectureReport:
    """Result of the gamma2 >= 16 beta_1 test on a flag closed 3-manifold."""

    gamma2: int
    beta1: int
    satisfied: bool
    slack: int  # gamma2 - 16 beta1


# -- rank computations ----------------------------------------------------


def _rank_gf2(rows) -> int:
    """Rank over GF(2) of rows given as int bitmasks."""
    pivots = {}
    rank = 0
    for row in rows:
        while row:
            col = row.bit_length() - 1
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = row
                rank += 1
                break
            row ^= piv
    return rank


def _normalize(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


def _rank_rational(rows) -> int:
    """Rank over the rationals of rows given as {column: int coefficient}.

    Exact integer-scaled elimination: each pivot row is stored with its pivot
    at its largest column, incoming rows are cross-multiplied against pivots
    and re-normalised by the gcd of their entries, so all arithmetic stays in
    the integers while the rank equals the rational rank.
    """
    pivots = {}
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            col = max(row)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = _normalize(row)
                rank += 1
                break
            a, p = row[col], piv[col]
            new = {}
            for c, v in row.items():
                nv = p * v - a * piv.get(c, 0)
                if nv:
                    new[c] = nv
            for c, v in piv.items():
                if c not in row:
                    nv = -a * v
                    if nv:
                        new[c] = nv
            row = _normalize(new)
    return rank


def _boundary_ranks(sc: SimplicialComplex, field: Field) -> list:
    """Ranks of the boundary maps d_1..d_dim (d_0 is zero)."""
    dim = sc.dim
    by_dim = [sc.faces_of_dim(k) for k in range(dim + 1)]
    ranks = []
    for k in range(1, dim + 1):
        index = {f: i for i, f in enumerate(by_dim[k - 1])}
        if field is Field.GF2:
            rows = []
            for f in by_dim[k]:
                row = 0
                for sub in combinations(sorted(f), k):
                    row |= 1 << index[frozenset(sub)]
                rows.append(row)
            ranks.append(_rank_gf2(rows))
        else:
            rows = []
            for f in by_dim[k]:
                fs = sorted(f)
                row = {}
                for i in range(k + 1):
                    sub = frozenset(fs[:i] + fs[i + 1:])
                    row[index[sub]] = -1 if i % 2 else 1
                rows.append(row)
            ranks.append(_rank_rational(rows))
    return ranks


def betti(c, field: Field = Field.RATIONAL) -> BettiVector:
    """Unreduced Betti numbers beta_0..beta_dim over the given field.

    beta_k = f_k - rank d_k - rank d_(k+1); beta_0 counts connected
    components.  Over GF(2) torsion shows up (e.g. a projective plane has
    GF(2) Betti numbers (1, 1, 1) but rational (1, 0, 0)).
    """
    sc = as_simplicial(c)
    dim = sc.dim
    if dim < 0:
        return BettiVector(field, ())
    fv = sc.f_vector()
    bdry = [0] + _boundary_ranks(sc, field) + [0]
    ranks = tuple(fv[k + 1] - bdry[k] - bdry[k + 1] for k in range(dim + 1))
    return BettiVector(field, ranks)


# -- connectivity and manifold checks -------------------------------------


def is_connected(c) -> bool:
    sc = as_simplicial(c)
    sk = sc.skeleton()
    n = len(sk.labels)
    if n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for i in iter_bits(frontier):
            nxt |= sk.rows[i]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def _single_cycle(link: SimplicialComplex) -> bool:
    """Whether a complex is one cycle: pure 1-dimensional, connected,
    every vertex of degree 2, and as many edges as vertices."""
    if link.dim != 1 or not link.is_pure():
        return False
    sk = link.skeleton()
    n = len(sk.labels)
    if n < 3 or sk.edge_count() != n:
        return False
    if any(sk.degree(i) != 2 for i in range(n)):
        return False
    return is_connected(link)


def is_closed_surface(c) -> CheckResult:
    """Connected, pure, 2-dimensional, every vertex link one cycle."""
    sc = as_simplicial(c)
    if not sc.is_pure():
        return CheckResult(False, "not pure")
    if sc.dim != 2:
        return CheckResult(False, f"dimension {sc.dim}, not 2")
    if not is_connected(sc):
        return CheckResult(False, "not connected")
    for v in sc.vertices:
        if not _single_cycle(sc.link((v,))):
            return CheckResult(False, f"link of vertex {v} is not a single cycle")
    return CheckResult(True)


def is_closed_3_manifold(c) -> CheckResult:
    """Connected, pure, 3-dimensional, vertex links are 2-spheres and edge
    links are single cycles.

    A vertex link only needs to pass the closed-surface test with Euler
    characteristic 2: the classification of surfaces then forces a sphere.
    """
    sc = as_simplicial(c)
    if not sc.is_pure():
        return CheckResult(False, "not pure")
    if sc.dim != 3:
        return CheckResult(False, f"dimension {sc.dim}, not 3")
    if not is_connected(sc):
        return CheckResult(False, "not connected")
    for v in sc.vertices:
        link = sc.link((v,))
        ok = link.is_pure() and link.dim == 2 and is_closed_surface(link)
        if not ok or link.euler_characteristic() != 2:
            return CheckResult(False, f"link of vertex {v} is not a 2-sphere")
    for f in sc.faces_of_dim(1):
        if not _single_cycle(sc.link(f)):
            e = tuple(sorted(f))
            return CheckResult(False, f"link of edge {e} is not a single cycle")
    return CheckResult(True)


def orientable(c) -> bool:
    """Whether a closed pseudomanifold admits a consistent facet orientation.

    Facet orientations are propagated across ridges; a conflict on some cycle
    means non-orientable.  For connected closed manifolds this agrees with
    the top rational Betti number being 1 (the test suite cross-checks that).
    Raises NotManifold when a ridge is not in exactly two facets or the
    complex is not connected or not pure.
    """
    sc = as_simplicial(c)
    if not sc.is_pure():
        raise NotManifold("not pure")
    if not is_connected(sc):
        raise NotManifold("not connected")
    facets = [tuple(sorted(f)) for f in sc.facets]
    if sc.dim == 0:
        return True
    ridge_at = {}
    for fi, f in enumerate(facets):
        for i in range(len(f)):
            ridge = f[:i] + f[i + 1:]
            sign = -1 if i % 2 else 1
            ridge_at.setdefault(ridge, []).append((fi, sign))
    for ridge, hits in ridge_at.items():
        if len(hits) != 2:
            raise NotManifold(f"ridge {ridge} lies in {len(hits)} facets")
    orient = {0: 1}
    stack = [0]
    adjacency = {}
    for hits in ridge_at.values():
        (f1, s1), (f2, s2) = hits
        adjacency.setdefault(f1, []).append((f2, s1 * s2))
        adjacency.setdefault(f2, []).append((f1, s1 * s2))
    while stack:
        fi = stack.pop()
        for fj, s in adjacency.get(fi, ()):
            want = -s * orient[fi]
            have = orient.get(fj)
            if have is None:
                orient[fj] = want
                stack.append(fj)
            elif have != want:
                return False
    return True


def classify_surface(c) -> SurfaceType:
    """Homeomorphism type of a closed surface, from chi and orientability."""
    res = is_closed_surface(c)
    if not res:
        raise NotManifold(res.reason or "not a closed surface")
    sc = as_simplicial(c)
    chi = sc.euler_characteristic()
    if orientable(sc):
        return SurfaceType(True, (2 - chi) // 2, chi)
    return SurfaceType(False, 2 - chi, chi)


# -- gamma invariants ------------------------------------------------------


def gamma_numbers(c, d: int | None = None) -> GammaNumbers:
    """Compute gamma1, gamma2, g2 and gbar2 from f0 and f1.

    ``d`` is one more than the dimension (the convention in which a closed
    3-manifold has d = 4); it defaults to dim + 1 and is otherwise checked
    against the complex, which must be pure.
    """
    sc = as_simplicial(c)
    if not sc.is_pure():
        raise NotPure(f"facet sizes {sorted({len(f) for f in sc.facets})}")
    if d is None:
        d = sc.dim + 1
    elif d != sc.dim + 1:
        raise DimensionMismatch(f"complex is pure of dimension {sc.dim}, "
                                f"expected {d - 1} for d = {d}")
    fv = sc.f_vector()
    f0 = fv[1]
    f1 = fv[2] if len(fv) > 2 else 0
    return GammaNumbers(
        d=d,
        gamma1=f0 - 2 * d,
        gamma2=f1 - (2 * d - 3) * f0 + 2 * d * (d - 2),
        g2=f1 - d * f0 + comb(d + 1, 2),
        gbar2=2 * f1 - 3 * (d - 1) * f0 + 2 * d * (d - 1),
    )


def conjecture_check(c) -> ConjectureReport:
    """Evaluate gamma2 >= 16 beta_1 on a flag closed 3-manifold.

    beta_1 is taken over the rationals.  Raises NotManifold when the input
    is not a closed 3-manifold and InvalidInput when it is not flag.
    """
    sc = as_simplicial(c)
    res = is_closed_3_manifold(sc)
    if not res:
        raise NotManifold(res.reason or "not a closed 3-manifold")
    flag = sc.is_flag()
    if not flag:
        raise InvalidInput(f"not flag, minimal non-face {flag.witness}")
    gamma2 = gamma_numbers(sc, 4).gamma2
    beta1 = betti(sc, Field.RATIONAL)[1]
    return ConjectureReport(gamma2=gamma2, beta1=beta1,
                            satisfied=gamma2 >= 16 * beta1,
                            slack=gamma2 - 16 * beta1)
