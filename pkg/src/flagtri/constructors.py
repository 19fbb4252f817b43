"""Builders for flag complexes: elementary families, packaged fixtures,
products, connected sums, handle additions, and the tight 3-manifold family.

All builders return complexes with dense 0-based labels.  Gluing operations
that must pick an identification do so deterministically (lexicographically
first over a canonical candidate order), so every construction here is
reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from itertools import combinations

from .complexes import (FlagComplex, SimplicialComplex, as_flag, as_simplicial,
                        iter_bits)
from .errors import (ConnectedSumInvalid, ConstructionInvariantViolated,
                     HandleInvalid, HandleTooClose, InvalidInput)
from .io import parse_plain
from .topology import (Field, betti, gamma_numbers, is_closed_3_manifold,
                       is_closed_surface, is_connected)

FIXTURES = ("rp2_11_left", "rp2_11_right", "torus_12", "grid_torus_16",
            "grid_klein_16")
_DATA_FIXTURES = frozenset(("rp2_11_left", "rp2_11_right", "torus_12"))


@dataclass(frozen=True)
class GluedComplex:
    """A connected sum plus the vertex maps from both summands into it.

    ``map_a`` and ``map_b`` send each surviving input vertex to its label in
    ``complex``; vertices interior to the removed balls are absent.
    """

    complex: FlagComplex
    map_a: dict
    map_b: dict


@dataclass(frozen=True)
class HandledComplex:
    """A handle addition plus the map from surviving input vertices."""

    complex: FlagComplex
    map: dict


@dataclass(frozen=True)
class MarkedComplex:
    """A complex with two distinguished edges whose stars are far apart."""

    complex: FlagComplex
    edge: tuple
    far_edge: tuple


def cycle(n: int) -> FlagComplex:
    """The n-cycle.  Needs n >= 4; shorter cycles are not flag."""
    if not isinstance(n, int) or n < 4:
        raise InvalidInput(f"cycle needs an integer length >= 4, got {n!r}")
    return FlagComplex.from_graph(n, [(i, (i + 1) % n) for i in range(n)])


def simplex(d: int) -> FlagComplex:
    """The d-simplex as the complete graph on d + 1 vertices."""
    if not isinstance(d, int) or d < 0:
        raise InvalidInput(f"simplex dimension must be a non-negative int, got {d!r}")
    return FlagComplex.from_graph(d + 1, combinations(range(d + 1), 2))


def octahedral_sphere(d: int) -> FlagComplex:
    """Boundary of the d-dimensional cross-polytope: vertices 0..2d - 1,
    with i and i + d the unique non-adjacent (antipodal) pairs."""
    if not isinstance(d, int) or d < 1:
        raise InvalidInput(f"octahedral sphere needs an integer d >= 1, got {d!r}")
    edges = [(i, j) for i, j in combinations(range(2 * d), 2) if j - i != d]
    return FlagComplex.from_graph(2 * d, edges)


def octahedral_colors(d: int) -> tuple:
    """Proper d-colouring of the octahedral (d - 1)-sphere: antipodes share
    a colour, so colour classes are exactly the missing edges."""
    return tuple(i % d for i in range(2 * d))


def _grid_facets(klein: bool) -> list:
    def vid(i, j):
        if klein and i >= 4:
            i -= 4
            j = -j
        return 4 * (i % 4) + (j % 4)

    facets = []
    for i in range(4):
        for j in range(4):
            facets.append((vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)))
            facets.append((vid(i, j), vid(i, j + 1), vid(i + 1, j + 1)))
    return facets


def fixture(name: str) -> SimplicialComplex:
    """Load a packaged triangulation by name; see FIXTURES for choices."""
    if name in _DATA_FIXTURES:
        text = resources.files("flagtri.data").joinpath(f"{name}.txt").read_text()
        return SimplicialComplex.from_facets(parse_plain(text))
    if name == "grid_torus_16":
        return SimplicialComplex.from_facets(_grid_facets(klein=False))
    if name == "grid_klein_16":
        return SimplicialComplex.from_facets(_grid_facets(klein=True))
    raise InvalidInput(f"unknown fixture {name!r}; available: {', '.join(FIXTURES)}")


def barycentric_subdivision(c) -> FlagComplex:
    """Order complex of the face poset.  Always flag: its cliques are the
    chains of the poset."""
    sc = as_simplicial(c)
    faces = [frozenset(f) for f in sorted(sc.faces(), key=lambda f: (len(f), f))]
    if not faces:
        raise InvalidInput("cannot subdivide a complex without faces")
    edges = [(i, j) for i, j in combinations(range(len(faces)), 2)
             if faces[i] < faces[j] or faces[j] < faces[i]]
    return FlagComplex.from_graph(len(faces), edges)


def staircase_product_facets(a, b, order_a=None,
                             order_b=None) -> SimplicialComplex:
    """Staircase triangulation of the product of two complexes.

    Facets are the monotone lattice paths through each pair of input facets,
    taken with respect to total vertex orders (ascending labels by default).
    The product vertex for (u, v) gets label rank(u) * n_b + rank(v).  Works
    for arbitrary complexes; the product is flag iff both factors are.
    """
    sa, sb = as_simplicial(a), as_simplicial(b)
    ra = _validate_order(order_a, sa.vertices, "order_a")
    rb = _validate_order(order_b, sb.vertices, "order_b")
    nb = len(sb.vertices)

    def pid(u, v):
        return ra[u] * nb + rb[v]

    facets = set()
    for fac_a in sa.facets:
        aa = sorted(fac_a, key=ra.__getitem__)
        for fac_b in sb.facets:
            bb = sorted(fac_b, key=rb.__getitem__)
            m, n = len(aa) - 1, len(bb) - 1
            for right_steps in combinations(range(m + n), m):
                i = j = 0
                path = [pid(aa[0], bb[0])]
                for step in range(m + n):
                    if step in right_steps:
                        i += 1
                    else:
                        j += 1
                    path.append(pid(aa[i], bb[j]))
                facets.add(tuple(sorted(path)))
    return SimplicialComplex.from_facets(sorted(facets))


def staircase_product(a, b, order_a=None, order_b=None) -> FlagComplex:
    """Staircase product of two flag complexes; the result is again flag."""
    fa, fb = as_flag(a), as_flag(b)
    return FlagComplex.from_simplicial(
        staircase_product_facets(fa.to_simplicial(), fb.to_simplicial(),
                                 order_a, order_b))


def _validate_order(order, labels, what):
    if order is None:
        order = labels
    order = list(order)
    if sorted(order) != list(labels):
        raise InvalidInput(f"{what} must be a permutation of the vertex labels")
    return {v: pos for pos, v in enumerate(order)}


def boundary_complex(c) -> SimplicialComplex | None:
    """Subcomplex of ridges lying in exactly one facet; None if closed."""
    sc = as_simplicial(c)
    if sc.dim < 1:
        return None
    count = {}
    for f in sc.facets:
        for r in combinations(sorted(f), len(f) - 1):
            count[r] = count.get(r, 0) + 1
    ridges = [r for r, k in count.items() if k == 1]
    if not ridges:
        return None
    return SimplicialComplex(ridges, _maximal=True)


def _ball_check(c: SimplicialComplex, expect_dim: int) -> str | None:
    """Why c is not a d-ball, or None if it is (d <= 3 only)."""
    if c.dim != expect_dim:
        return f"dimension {c.dim}, expected {expect_dim}"
    if expect_dim == 0:
        return None if len(c.facets) == 1 else "several components"
    if not c.is_pure():
        return "not pure"
    if not is_connected(c):
        return "not connected"
    count = {}
    for f in c.facets:
        for r in combinations(sorted(f), len(f) - 1):
            count[r] = count.get(r, 0) + 1
    if any(k > 2 for k in count.values()):
        return "a ridge lies in more than two facets"
    bd = [r for r, k in count.items() if k == 1]
    if not bd:
        return "no boundary"
    if c.euler_characteristic() != 1:
        return f"Euler characteristic {c.euler_characteristic()}, expected 1"
    bc = SimplicialComplex(bd, _maximal=True)
    if expect_dim == 1:
        if len(bd) != 2:
            return "boundary is not two points"
    elif expect_dim == 2:
        sk = bc.skeleton()
        if (any(d != 2 for d in map(sk.degree, range(len(sk.labels))))
                or not is_connected(bc)):
            return "boundary is not a single cycle"
    else:
        res = is_closed_surface(bc)
        if not res:
            return f"boundary is not a closed surface ({res.reason})"
        if bc.euler_characteristic() != 2:
            return "boundary surface is not a sphere"
    return None


def complex_isomorphisms(c1, c2, colors1=None, colors2=None):
    """Yield label bijections c1 -> c2 that carry facets onto facets, in
    lexicographic order over sorted vertices.  Optional colour maps restrict
    the match to colour-preserving bijections.  Intended for small inputs."""
    s1, s2 = as_simplicial(c1), as_simplicial(c2)
    v1, v2 = sorted(s1.vertices), sorted(s2.vertices)
    if len(v1) != len(v2) or len(s1.facets) != len(s2.facets):
        return

    def adjacency(sc):
        sk = sc.skeleton()
        return {lbl: {sk.labels[j] for j in iter_bits(sk.rows[i])}
                for i, lbl in enumerate(sk.labels)}

    adj1, adj2 = adjacency(s1), adjacency(s2)
    facets2 = set(s2.facets)

    def sig(v, adj, colors):
        return (len(adj[v]), -1 if colors is None else colors[v])

    def extend(idx, mapping, used):
        if idx == len(v1):
            if {frozenset(mapping[x] for x in f) for f in s1.facets} == facets2:
                yield dict(mapping)
            return
        u = v1[idx]
        for w in v2:
            if w in used or sig(u, adj1, colors1) != sig(w, adj2, colors2):
                continue
            if any((x in adj1[u]) != (mapping[x] in adj2[w]) for x in mapping):
                continue
            mapping[u] = w
            used.add(w)
            yield from extend(idx + 1, mapping, used)
            del mapping[u]
            used.discard(w)

    yield from extend(0, {}, set())


def star_vertices(c, face) -> tuple:
    """Vertex set of the closed star of a face, sorted."""
    fc = as_flag(c)
    return tuple(sorted(set(face) | set(fc.link_vertices(face))))


def _region_ball(sc: SimplicialComplex, w, side: str, exc, check: str):
    verts = set(w)
    if not verts or not verts <= set(sc.vertices):
        raise exc(check, f"{side}: region must be a non-empty vertex subset")
    ball = sc.induced(tuple(sorted(verts)))
    why = _ball_check(ball, sc.dim)
    if why is not None:
        raise exc(check, f"{side}: induced region is not a ball ({why})")
    bd = boundary_complex(ball)
    flag = bd.is_flag()
    if not flag:
        raise exc(check, f"{side}: ball boundary is not flag "
                         f"(missing face {flag.witness})")
    return ball, bd


def _check_phi(phi, bd_a, bd_b, exc):
    va, vb = set(bd_a.vertices), set(bd_b.vertices)
    if set(phi) != va or set(phi.values()) != vb or len(set(phi.values())) != len(phi):
        raise exc("boundary_isomorphism",
                  "phi must biject the two ball boundaries' vertex sets")
    fb = set(map(frozenset, bd_b.facets))
    if {frozenset(phi[v] for v in f) for f in bd_a.facets} != fb:
        raise exc("boundary_isomorphism", "phi does not carry facets onto facets")


def flag_connected_sum(a, w_a, b, w_b, phi=None) -> FlagComplex:
    """Connected sum of flag complexes along induced balls.

    The regions ``w_a`` and ``w_b`` must induce balls of full dimension with
    flag boundary spheres; the balls' interiors are removed and the boundaries
    identified along ``phi`` (lexicographically first isomorphism if omitted).
    """
    return flag_connected_sum_detailed(a, w_a, b, w_b, phi).complex


def flag_connected_sum_detailed(a, w_a, b, w_b, phi=None) -> GluedComplex:
    sa, sb = as_simplicial(as_flag(a)), as_simplicial(as_flag(b))
    if sa.dim != sb.dim:
        raise ConnectedSumInvalid(
            "dimension", f"summands have dimensions {sa.dim} and {sb.dim}")
    if sa.dim < 1:
        raise ConnectedSumInvalid("dimension", "summands must have dimension >= 1")
    ball_a, bd_a = _region_ball(sa, w_a, "first summand",
                                ConnectedSumInvalid, "region_ball")
    ball_b, bd_b = _region_ball(sb, w_b, "second summand",
                                ConnectedSumInvalid, "region_ball")
    if phi is None:
        phi = next(complex_isomorphisms(bd_a, bd_b), None)
        if phi is None:
            raise ConnectedSumInvalid(
                "boundary_isomorphism", "ball boundaries are not isomorphic")
    else:
        _check_phi(phi, bd_a, bd_b, ConnectedSumInvalid)

    drop_a, drop_b = set(ball_a.facets), set(ball_b.facets)
    keep_a = [f for f in sa.facets if f not in drop_a]
    keep_b = [f for f in sb.facets if f not in drop_b]
    if not keep_a or not keep_b:
        raise ConnectedSumInvalid("region_ball",
                                  "a ball exhausts its summand's facets")
    phi_inv = {w: v for v, w in phi.items()}
    interior_a = set(ball_a.vertices) - set(bd_a.vertices)
    survivors_a = sorted(set(sa.vertices) - interior_a)
    fresh_b = sorted(set(sb.vertices) - set(ball_b.vertices))
    base = max(survivors_a) + 1
    rename_b = dict(phi_inv)
    rename_b.update((v, base + i) for i, v in enumerate(fresh_b))

    if any(interior_a & f for f in keep_a):
        raise ConnectedSumInvalid(
            "region_ball", "a ball interior vertex lies outside its ball")
    facets = set(keep_a)
    try:
        facets.update(frozenset(rename_b[v] for v in f) for f in keep_b)
    except KeyError:
        raise ConnectedSumInvalid(
            "region_ball", "a ball interior vertex lies outside its ball")
    glued = SimplicialComplex.from_facets(sorted(map(tuple, map(sorted, facets))))
    pos = {lbl: i for i, lbl in enumerate(glued.input_labels)}
    try:
        result = FlagComplex.from_simplicial(glued)
    except InvalidInput as exc:
        raise ConstructionInvariantViolated(
            f"connected sum produced a non-flag complex: {exc}") from exc
    return GluedComplex(result,
                        {v: pos[v] for v in survivors_a},
                        {v: pos[rename_b[v]] for v in rename_b})


def edge_star_connected_sum(a, e_a, b, e_b) -> GluedComplex:
    """Connected sum along the closed stars of one edge in each summand."""
    fa, fb = as_flag(a), as_flag(b)
    return flag_connected_sum_detailed(fa, star_vertices(fa, e_a),
                                       fb, star_vertices(fb, e_b))


def graph_bfs_distances(c: FlagComplex, source: int) -> list:
    dist = [-1] * c.vertex_count
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            for v in iter_bits(c.neighbors(u)):
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


def flag_handle_addition(c, w1, w2, phi=None) -> HandledComplex:
    """Remove two far-apart induced balls from one complex and identify their
    boundary spheres.  Requires graph distance >= 4 between the regions, which
    keeps the quotient flag."""
    fc = as_flag(c)
    sc = as_simplicial(fc)
    set1, set2 = set(w1), set(w2)
    if set1 & set2:
        raise HandleInvalid("regions share vertices")
    ball1, bd1 = _region_ball(sc, w1, "first region", _handle_exc, "region_ball")
    ball2, bd2 = _region_ball(sc, w2, "second region", _handle_exc, "region_ball")
    for u in sorted(set1):
        dist = graph_bfs_distances(fc, u)
        for v in sorted(set2):
            d = dist[v] if dist[v] >= 0 else None
            if d is not None and d < 4:
                raise HandleTooClose(u, v, d)
    if phi is None:
        phi = next(complex_isomorphisms(bd1, bd2), None)
        if phi is None:
            raise HandleInvalid("ball boundaries are not isomorphic")
    else:
        _check_phi(phi, bd1, bd2, _handle_exc)

    drop = set(ball1.facets) | set(ball2.facets)
    phi_inv = {w: v for v, w in phi.items()}
    gone = (set(ball1.vertices) - set(bd1.vertices)) | set(ball2.vertices)
    rename = {v: phi_inv.get(v, v) for v in sc.vertices if v not in gone
              or v in phi_inv}
    try:
        facets = {frozenset(rename[v] for v in f)
                  for f in sc.facets if f not in drop}
    except KeyError:
        raise HandleInvalid("a ball interior vertex lies outside its ball")
    glued = SimplicialComplex.from_facets(sorted(map(tuple, map(sorted, facets))))
    pos = {lbl: i for i, lbl in enumerate(glued.input_labels)}
    try:
        result = FlagComplex.from_simplicial(glued)
    except InvalidInput as exc:
        raise ConstructionInvariantViolated(
            f"handle addition produced a non-flag complex: {exc}") from exc
    _assert_closed(result, "handle addition")
    return HandledComplex(result, {v: pos[w] for v, w in rename.items()})


def _handle_exc(check, detail):
    return HandleInvalid(f"{check}: {detail}")


def _assert_closed(c: FlagComplex, what: str) -> None:
    sc = as_simplicial(c)
    if sc.dim == 2:
        res = is_closed_surface(sc)
    elif sc.dim == 3:
        res = is_closed_3_manifold(sc)
    else:
        return
    if not res:
        raise ConstructionInvariantViolated(
            f"{what} is not a closed manifold: {res.reason}")


def surface_min(k: int, orientable: bool = True) -> FlagComplex:
    """Vertex-minimal flag surface of genus k (orientable) or with k cross
    caps: iterated vertex-star connected sums of the minimal torus or
    projective plane, giving 8 + 4k respectively 8 + 3k vertices."""
    if not isinstance(k, int) or k < 1:
        raise InvalidInput(f"need an integer k >= 1, got {k!r}")
    base = as_flag(fixture("torus_12" if orientable else "rp2_11_left"))
    glue_at = 0 if orientable else 10
    next_mark = (min(v for v in range(base.vertex_count)
                     if v != glue_at and not base.has_edge(v, glue_at))
                 if orientable else 0)
    current, marked = base, next_mark
    for _ in range(k - 1):
        res = flag_connected_sum_detailed(
            current, star_vertices(current, (marked,)),
            base, star_vertices(base, (glue_at,)))
        current, marked = res.complex, res.map_b[next_mark]
    expect = 8 + (4 if orientable else 3) * k
    if current.vertex_count != expect:
        raise ConstructionInvariantViolated(
            f"surface sum has {current.vertex_count} vertices, expected {expect}")
    _assert_closed(current, "surface connected sum")
    return current


def _square_link_edges(c: FlagComplex) -> list:
    out = []
    for e in c.edges():
        link = c.link_vertices(e)
        if len(link) != 4:
            continue
        sub = c.induced_flag(link)
        if all(sub.degree(v) == 2 for v in range(4)) and sub.edge_count() == 4:
            out.append(e)
    return out


def _attach_octahedron(state, at_edge, oct_edge):
    """One chain step: glue a fresh octahedral 3-sphere onto ``at_edge`` by a
    colour-preserving identification of the two edge-star boundaries."""
    d, colors = state
    oct4 = octahedral_sphere(4)
    oct_colors = octahedral_colors(4)
    w_d = star_vertices(d, at_edge)
    w_o = star_vertices(oct4, oct_edge)
    sd, so = as_simplicial(d), as_simplicial(oct4)
    _, bd_d = _region_ball(sd, w_d, "chain", ConnectedSumInvalid, "region_ball")
    _, bd_o = _region_ball(so, w_o, "octahedron", ConnectedSumInvalid,
                           "region_ball")
    phi = next(complex_isomorphisms(bd_d, bd_o, colors1=colors,
                                    colors2=dict(enumerate(oct_colors))), None)
    if phi is None:
        raise ConstructionInvariantViolated(
            "no colour-preserving identification of edge-star boundaries")
    res = flag_connected_sum_detailed(d, w_d, oct4, w_o, phi)
    new_colors = {res.map_a[v]: colors[v] for v in res.map_a}
    for v, img in res.map_b.items():
        if new_colors.setdefault(img, oct_colors[v]) != oct_colors[v]:
            raise ConstructionInvariantViolated(
                "identified vertices received different colours")
    return (res.complex, new_colors), res


def delta4() -> MarkedComplex:
    """Chain of four octahedral 3-spheres glued along colour-compatible edge
    stars: a flag 3-sphere with 14 vertices, 54 edges, and two distinguished
    edges whose stars are disjoint and whose links are induced 4-cycles."""
    oct_colors = octahedral_colors(4)
    state = (octahedral_sphere(4), dict(enumerate(oct_colors)))
    e = (0, 1)
    at = (4, 5)

    state, res = _attach_octahedron(state, at, (0, 1))
    e = (res.map_a[e[0]], res.map_a[e[1]])
    v1 = min(res.map_b[2], res.map_b[6])
    at = tuple(sorted((v1, res.map_b[5])))

    state, res = _attach_octahedron(state, at, (1, 2))
    e = (res.map_a[e[0]], res.map_a[e[1]])
    v3 = min(res.map_b[3], res.map_b[7])
    at = tuple(sorted((v3, res.map_b[6])))

    state, res = _attach_octahedron(state, at, (2, 3))
    e = (res.map_a[e[0]], res.map_a[e[1]])
    far = tuple(sorted((res.map_b[6], res.map_b[7])))

    return _finish_marked(state[0], e, far, expect_f=(14, 54), expect_gamma2=0)


def _finish_marked(d: FlagComplex, e, far, expect_f, expect_gamma2) -> MarkedComplex:
    fv = d.f_vector()
    if (fv[1], fv[2]) != expect_f:
        raise ConstructionInvariantViolated(
            f"chain has (f0, f1) = {(fv[1], fv[2])}, expected {expect_f}")
    for edge in (e, far):
        link = d.link_vertices(edge)
        sub = d.induced_flag(link)
        if (len(link) != 4 or sub.edge_count() != 4
                or any(sub.degree(v) != 2 for v in range(4))):
            raise ConstructionInvariantViolated(
                f"distinguished edge {edge} link is not an induced 4-cycle")
    if set(star_vertices(d, e)) & set(star_vertices(d, far)):
        raise ConstructionInvariantViolated("distinguished edge stars intersect")
    _assert_closed(d, "sphere chain")
    if gamma_numbers(d).gamma2 != expect_gamma2:
        raise ConstructionInvariantViolated(
            f"chain gamma2 is {gamma_numbers(d).gamma2}, expected {expect_gamma2}")
    return MarkedComplex(d, e, far)


def delta16() -> MarkedComplex:
    """Chain of four 14-vertex sphere chains glued along the distinguished
    edge stars: a flag 3-sphere with 38 vertices and 174 edges, again with two
    distinguished edges far apart."""
    m = delta4()
    d, e, far = m.complex, m.edge, m.far_edge
    for _ in range(3):
        res = flag_connected_sum_detailed(
            d, star_vertices(d, far), m.complex, star_vertices(m.complex, m.edge))
        e = (res.map_a[e[0]], res.map_a[e[1]])
        far = tuple(sorted((res.map_b[m.far_edge[0]], res.map_b[m.far_edge[1]])))
        d = res.complex
    return _finish_marked(d, e, far, expect_f=(38, 174), expect_gamma2=0)


def _tight_block() -> FlagComplex:
    m = delta16()
    res = flag_handle_addition(m.complex, star_vertices(m.complex, m.edge),
                               star_vertices(m.complex, m.far_edge))
    return res.complex


def gamma_tight(b: int) -> FlagComplex:
    """Flag closed 3-manifold with first Betti number b on which the lower
    bound gamma2 >= 16 b1 is attained with equality: b handles' worth of
    32-vertex blocks joined by edge-star connected sums."""
    if not isinstance(b, int) or b < 1:
        raise InvalidInput(f"need an integer b >= 1, got {b!r}")
    block = _tight_block()
    result = block
    for _ in range(b - 1):
        result = _sum_blocks(result, block)
    _assert_closed(result, "tight family member")
    g = gamma_numbers(result)
    b1 = betti(result, Field.RATIONAL)[1]
    if b1 != b or g.gamma2 != 16 * b:
        raise ConstructionInvariantViolated(
            f"tight member has (gamma2, b1) = ({g.gamma2}, {b1}), "
            f"expected ({16 * b}, {b})")
    return result


def _sum_blocks(x: FlagComplex, y: FlagComplex) -> FlagComplex:
    for ex in _square_link_edges(x):
        for ey in _square_link_edges(y):
            try:
                return edge_star_connected_sum(x, ex, y, ey).complex
            except ConnectedSumInvalid:
                continue
    raise ConstructionInvariantViolated(
        "no pair of square-link edge stars admits a connected sum")
