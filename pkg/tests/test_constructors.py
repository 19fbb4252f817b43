"""Builders: spheres, products, connected sums, handles, named families."""

import pytest

import oracles
from flagtri import (
    FIXTURES,
    ConnectedSumInvalid,
    Field,
    FlagComplex,
    HandleInvalid,
    HandleTooClose,
    InvalidInput,
    SimplicialComplex,
    are_isomorphic,
    as_flag,
    as_simplicial,
    barycentric_subdivision,
    betti,
    boundary_complex,
    classify_surface,
    complex_isomorphisms,
    cycle,
    delta4,
    delta16,
    edge_star_connected_sum,
    fixture,
    flag_connected_sum,
    flag_connected_sum_detailed,
    flag_handle_addition,
    gamma_numbers,
    gamma_tight,
    graph_bfs_distances,
    is_closed_3_manifold,
    is_closed_surface,
    octahedral_colors,
    octahedral_sphere,
    simplex,
    staircase_product,
    staircase_product_facets,
    star_vertices,
    surface_min,
)


class TestSmallBuilders:
    def test_cycle_rejects_short(self):
        for n in (3, 0, -1, 4.5):
            with pytest.raises(InvalidInput):
                cycle(n)

    def test_simplex(self):
        assert simplex(0).f_vector() == (1, 1)
        assert simplex(3).f_vector() == (1, 4, 6, 4, 1)
        with pytest.raises(InvalidInput):
            simplex(-1)

    def test_octahedral_sphere_f_vectors(self):
        assert octahedral_sphere(2).f_vector() == (1, 4, 4)
        assert octahedral_sphere(3).f_vector() == (1, 6, 12, 8)
        assert octahedral_sphere(4).f_vector() == (1, 8, 24, 32, 16)
        with pytest.raises(InvalidInput):
            octahedral_sphere(0)

    def test_octahedral_sphere_antipodes(self):
        c = octahedral_sphere(4)
        for i in range(4):
            assert not c.has_edge(i, i + 4)

    def test_octahedral_colors_proper(self):
        for d in (2, 3, 4):
            c = octahedral_sphere(d)
            col = octahedral_colors(d)
            for u, v in c.edges():
                assert col[u] != col[v]
            for i in range(d):
                assert col[i] == col[i + d]

    def test_fixture_names(self):
        for name in FIXTURES:
            c = fixture(name)
            assert is_closed_surface(c)
        with pytest.raises(InvalidInput):
            fixture("moebius")

    def test_fixture_f_vectors(self):
        assert fixture("rp2_11_left").f_vector() == (1, 11, 30, 20)
        assert fixture("rp2_11_right").f_vector() == (1, 11, 30, 20)
        assert fixture("torus_12").f_vector() == (1, 12, 36, 24)
        assert fixture("grid_torus_16").f_vector() == (1, 16, 48, 32)
        assert fixture("grid_klein_16").f_vector() == (1, 16, 48, 32)


class TestBarycentric:
    def test_empty_triangle_becomes_hexagon(self):
        c = SimplicialComplex.from_facets([[0, 1], [1, 2], [0, 2]])
        b = barycentric_subdivision(c)
        assert are_isomorphic(b, cycle(6))

    def test_torus_stays_torus(self):
        b = barycentric_subdivision(fixture("torus_12"))
        assert b.vertex_count == 12 + 36 + 24
        assert is_closed_surface(b)
        assert betti(b, Field.RATIONAL).ranks == (1, 2, 1)

    def test_always_flag(self):
        # even a non-flag input subdivides to a flag complex
        c = SimplicialComplex.from_facets([[0, 1], [1, 2], [0, 2]])
        facets = [sorted(f) for f in as_simplicial(
            barycentric_subdivision(c)).facets]
        assert oracles.is_flag(facets)


class TestStaircaseProduct:
    def test_square(self):
        p = staircase_product(simplex(1), simplex(1))
        assert p.f_vector() == (1, 4, 5, 2)

    def test_torus_from_two_squares(self):
        p = staircase_product(cycle(4), cycle(4))
        assert p.vertex_count == 16
        assert classify_surface(p).label() == "T^2"

    def test_sphere_cross_circle(self):
        p = staircase_product(octahedral_sphere(3), cycle(4))
        assert p.f_vector() == (1, 24, 120, 192, 96)
        assert is_closed_3_manifold(p)
        assert betti(p, Field.RATIONAL).ranks == (1, 1, 1, 1)

    def test_non_flag_factor_gives_non_flag_product(self):
        hollow = SimplicialComplex.from_facets([[0, 1], [1, 2], [0, 2]])
        p = staircase_product_facets(hollow, simplex(1).to_simplicial())
        assert not p.is_flag()
        assert betti(p).ranks == (1, 1, 0)  # annulus

    def test_alternative_orders_still_produce_torus(self):
        p = staircase_product(cycle(4), cycle(4),
                              order_a=[2, 0, 3, 1])
        assert classify_surface(p).label() == "T^2"

    def test_order_validation(self):
        with pytest.raises(InvalidInput):
            staircase_product(cycle(4), cycle(4), order_a=[0, 1, 2])
        with pytest.raises(InvalidInput):
            staircase_product(cycle(4), cycle(4), order_b=[0, 1, 2, 2])


class TestBoundary:
    def test_closed_complex_has_none(self):
        assert boundary_complex(fixture("torus_12")) is None
        assert boundary_complex(octahedral_sphere(4)) is None

    def test_disk_boundary_is_cycle(self):
        disk = fixture("torus_12").star((0,))
        bd = boundary_complex(disk)
        assert are_isomorphic(as_flag(bd), cycle(6))

    def test_3_ball_boundary_is_sphere(self):
        ball = octahedral_sphere(4).to_simplicial().star((0,))
        bd = boundary_complex(ball)
        assert are_isomorphic(as_flag(bd), octahedral_sphere(3))


class TestIsomorphisms:
    def test_octahedron_automorphism_count(self):
        o = octahedral_sphere(3)
        assert sum(1 for _ in complex_isomorphisms(o, o)) == 48

    def test_color_restriction(self):
        o = octahedral_sphere(3)
        col = dict(enumerate(octahedral_colors(3)))
        kept = list(complex_isomorphisms(o, o, col, col))
        assert len(kept) == 8
        for phi in kept:
            assert all(col[v] == col[phi[v]] for v in col)

    def test_deterministic_order(self):
        o = octahedral_sphere(3)
        first = next(complex_isomorphisms(o, o))
        assert first == {v: v for v in range(6)}

    def test_size_mismatch_yields_nothing(self):
        assert list(complex_isomorphisms(cycle(4), cycle(5))) == []


class TestConnectedSum:
    def test_sphere_sum_is_sphere(self):
        o = octahedral_sphere(3)
        s = flag_connected_sum(o, star_vertices(o, (0,)),
                               o, star_vertices(o, (0,)))
        assert s.f_vector() == (1, 6, 12, 8)
        assert are_isomorphic(s, o)

    def test_maps_embed_summands(self):
        o = octahedral_sphere(4)
        res = flag_connected_sum_detailed(o, star_vertices(o, (0, 1)),
                                          o, star_vertices(o, (0, 1)))
        ball_a = set(star_vertices(o, (0, 1)))
        bd_a = ball_a - {0, 1}
        for u, v in o.edges():
            if {u, v} <= {0, 1} or ({u, v} & (ball_a - bd_a)):
                continue
            assert res.complex.has_edge(res.map_a[u], res.map_a[v])

    def test_dimension_mismatch_rejected(self):
        o3, o4 = octahedral_sphere(3), octahedral_sphere(4)
        with pytest.raises(ConnectedSumInvalid):
            flag_connected_sum(o3, star_vertices(o3, (0,)),
                               o4, star_vertices(o4, (0,)))

    def test_non_ball_region_rejected(self):
        o = octahedral_sphere(3)
        with pytest.raises(ConnectedSumInvalid):
            flag_connected_sum(o, (0, 3), o, star_vertices(o, (0,)))

    def test_boundary_shape_mismatch_rejected(self):
        o = octahedral_sphere(3)
        t = as_flag(fixture("torus_12"))
        with pytest.raises(ConnectedSumInvalid):
            flag_connected_sum(o, star_vertices(o, (0,)),
                               t, star_vertices(t, (0,)))

    def test_whole_complex_is_not_a_ball(self):
        o = octahedral_sphere(3)
        with pytest.raises(ConnectedSumInvalid):
            flag_connected_sum(o, tuple(range(6)),
                               o, star_vertices(o, (0,)))

    def test_explicit_phi_validated(self):
        o = octahedral_sphere(3)
        w = star_vertices(o, (0,))
        bad = {v: v for v in range(1, 5)}
        bad[1], bad[2] = bad[2], bad[1]  # no longer an isomorphism
        with pytest.raises(ConnectedSumInvalid):
            flag_connected_sum(o, w, o, w, phi=bad)

    def test_edge_star_sum_of_3_spheres(self):
        o = octahedral_sphere(4)
        res = edge_star_connected_sum(o, (0, 1), o, (0, 1))
        s = res.complex
        assert s.f_vector()[1:3] == (10, 34)
        assert is_closed_3_manifold(s)
        assert betti(s, Field.RATIONAL).ranks == (1, 0, 0, 1)
        assert gamma_numbers(s).gamma2 == 0

    def test_edge_star_sum_gamma2_identity(self):
        o = octahedral_sphere(4)
        t = staircase_product(octahedral_sphere(3), cycle(4))
        for a, e_a, b, e_b in [(o, (0, 1), t, (0, 1)),
                               (t, (5, 6), o, (2, 3))]:
            link_len = len(as_flag(a).link_vertices(e_a))
            res = edge_star_connected_sum(a, e_a, b, e_b)
            got = gamma_numbers(res.complex).gamma2
            want = (gamma_numbers(a).gamma2 + gamma_numbers(b).gamma2
                    + 2 * (link_len - 4))
            assert got == want


class TestHandleAddition:
    def test_delta16_handle_is_tight(self):
        m = delta16()
        res = flag_handle_addition(m.complex,
                                   star_vertices(m.complex, m.edge),
                                   star_vertices(m.complex, m.far_edge))
        c = res.complex
        assert c.vertex_count == 32
        assert gamma_numbers(c).gamma2 == 16
        assert betti(c, Field.RATIONAL).ranks == (1, 1, 1, 1)

    def test_close_stars_rejected(self):
        m = delta4()
        with pytest.raises(HandleTooClose) as err:
            flag_handle_addition(m.complex,
                                 star_vertices(m.complex, m.edge),
                                 star_vertices(m.complex, m.far_edge))
        assert err.value.distance < 4

    def test_overlapping_regions_rejected(self):
        o = octahedral_sphere(4)
        with pytest.raises(HandleInvalid):
            flag_handle_addition(o, star_vertices(o, (0, 1)),
                                 star_vertices(o, (4, 5)))

    def test_bfs_distances(self):
        assert graph_bfs_distances(cycle(6), 0) == [0, 1, 2, 3, 2, 1]
        two = FlagComplex.from_graph(3, [(0, 1)])
        assert graph_bfs_distances(two, 0) == [0, 1, -1]


class TestNamedFamilies:
    def test_surface_min_orientable(self):
        for k in (1, 2, 3):
            c = surface_min(k)
            assert c.vertex_count == 8 + 4 * k
            t = classify_surface(c)
            assert t.orientable and t.count == k

    def test_surface_min_non_orientable(self):
        for k in (1, 2, 3):
            c = surface_min(k, orientable=False)
            assert c.vertex_count == 8 + 3 * k
            t = classify_surface(c)
            assert not t.orientable and t.count == k

    def test_surface_min_validates_k(self):
        for bad in (0, -2, 1.5):
            with pytest.raises(InvalidInput):
                surface_min(bad)

    def test_delta4(self):
        m = delta4()
        assert m.complex.f_vector()[1:3] == (14, 54)
        assert gamma_numbers(m.complex).gamma2 == 0
        assert is_closed_3_manifold(m.complex)

    def test_delta16(self):
        m = delta16()
        assert m.complex.f_vector()[1:3] == (38, 174)
        assert gamma_numbers(m.complex).gamma2 == 0
        assert betti(m.complex, Field.RATIONAL).ranks == (1, 0, 0, 1)

    def test_marked_edges_have_square_links(self):
        for m in (delta4(), delta16()):
            c = m.complex
            for e in (m.edge, m.far_edge):
                link = c.link_vertices(e)
                assert len(link) == 4
                assert are_isomorphic(c.induced_flag(link), cycle(4))
            assert not set(star_vertices(c, m.edge)) & \
                set(star_vertices(c, m.far_edge))

    def test_gamma_tight_validates_b(self):
        for bad in (0, -1, 2.0):
            with pytest.raises(InvalidInput):
                gamma_tight(bad)

    def test_gamma_tight_single_block(self):
        c = gamma_tight(1)
        assert c.vertex_count == 32
        assert gamma_numbers(c).gamma2 == 16
        assert betti(c, Field.RATIONAL)[1] == 1
