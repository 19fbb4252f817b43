"""Core complex types against brute-force oracles and known small cases."""

import random

import pytest

import oracles
from flagtri import (
    FaceNotFound,
    FlagComplex,
    InvalidInput,
    SimplicialComplex,
    as_flag,
    as_simplicial,
    cycle,
    fixture,
    labeled_digest,
    octahedral_sphere,
)


def random_facets(rng, max_vertices=8, max_facets=6, max_card=4):
    n = rng.randint(1, max_vertices)
    facets = []
    for _ in range(rng.randint(1, max_facets)):
        card = rng.randint(1, min(max_card, n))
        facets.append(rng.sample(range(n), card))
    return facets


def densely_relabeled(facets):
    """The same facet list after the compression from_facets applies."""
    labels = sorted({v for f in facets for v in f})
    index = {v: i for i, v in enumerate(labels)}
    return [[index[v] for v in f] for f in facets]


class TestSimplicialComplex:
    def test_rejects_empty_input(self):
        with pytest.raises(InvalidInput):
            SimplicialComplex.from_facets([])

    def test_rejects_empty_facet(self):
        with pytest.raises(InvalidInput):
            SimplicialComplex.from_facets([[0, 1], []])

    def test_drops_non_maximal_faces(self):
        c = SimplicialComplex.from_facets([[0, 1, 2], [0, 1], [2]])
        assert set(c.facets) == {frozenset({0, 1, 2})}

    def test_labels_preserved(self):
        c = SimplicialComplex.from_facets([[10, 3], [3, 7]])
        assert c.input_labels == (3, 7, 10)
        assert c.f_vector() == (1, 3, 2)

    def test_faces_against_oracle(self):
        rng = random.Random(411)
        for _ in range(60):
            facets = random_facets(rng)
            c = SimplicialComplex.from_facets(facets)
            dense = densely_relabeled(facets)
            assert c.faces() == oracles.downward_closure(dense)
            assert c.f_vector() == oracles.f_vector(facets)

    def test_faces_of_dim_sorted_and_complete(self):
        c = fixture("rp2_11_left")
        edges = c.faces_of_dim(1)
        assert edges == sorted(edges, key=lambda f: tuple(sorted(f)))
        assert len(edges) == 30
        assert all(len(f) == 2 for f in edges)

    def test_euler_characteristic(self):
        assert cycle(5).euler_characteristic() == 0
        assert fixture("torus_12").euler_characteristic() == 0
        assert fixture("rp2_11_left").euler_characteristic() == 1
        assert octahedral_sphere(3).euler_characteristic() == 2

    def test_link_matches_definition(self):
        c = fixture("torus_12")
        for v in c.vertices:
            lk = c.link([v])
            expected = {f - {v} for f in c.facets if v in f}
            assert set(lk.facets) == expected
            assert v not in lk.vertices

    def test_link_of_missing_face_raises(self):
        c = fixture("torus_12")
        with pytest.raises(FaceNotFound):
            c.link([1, 99])

    def test_star_contains_face_and_link(self):
        c = fixture("rp2_11_right")
        st = c.star([2])
        assert all(2 in f for f in st.facets)
        assert set(st.facets) <= set(c.facets)

    def test_induced_keeps_labels(self):
        c = fixture("torus_12")
        sub = c.induced([1, 2, 3, 4, 5])
        assert set(sub.vertices) <= {1, 2, 3, 4, 5}
        assert sub.faces() == {f for f in c.faces() if f <= {1, 2, 3, 4, 5}}

    def test_skeleton_is_symmetric(self):
        c = fixture("grid_klein_16")
        sk = c.skeleton()
        n = len(sk.labels)
        for i in range(n):
            for j in range(n):
                assert ((sk.rows[i] >> j) & 1) == ((sk.rows[j] >> i) & 1)
            assert not (sk.rows[i] >> i) & 1

    def test_missing_faces_of_four_cycle(self):
        c = cycle(4).to_simplicial()
        assert set(c.missing_faces(3)) == {frozenset({0, 2}),
                                           frozenset({1, 3})}

    def test_flag_detection_matches_oracle(self):
        rng = random.Random(790)
        for _ in range(40):
            facets = random_facets(rng, max_vertices=7)
            c = SimplicialComplex.from_facets(facets)
            assert bool(c.is_flag()) == oracles.is_flag(facets)

    def test_flag_witness_is_a_missing_face(self):
        c = SimplicialComplex.from_facets([[0, 1], [1, 2], [0, 2]])
        res = c.is_flag()
        assert not res
        assert res.witness == (0, 1, 2)
        for u, v in [(0, 1), (1, 2), (0, 2)]:
            assert frozenset({u, v}) in c.faces()


class TestFlagComplex:
    def test_from_graph_rejects_self_loop(self):
        with pytest.raises(InvalidInput):
            FlagComplex.from_graph(2, [(0, 0)])

    def test_from_graph_rejects_out_of_range(self):
        with pytest.raises(InvalidInput):
            FlagComplex.from_graph(2, [(0, 2)])

    def test_facets_are_maximal_cliques(self):
        rng = random.Random(152)
        for _ in range(40):
            n = rng.randint(1, 9)
            edges = [e for e in
                     [(i, j) for i in range(n) for j in range(i + 1, n)]
                     if rng.random() < 0.5]
            c = FlagComplex.from_graph(n, edges)
            cliques = oracles.all_cliques(n, edges)
            maximal = {q for q in cliques
                       if not any(q < r for r in cliques)}
            assert set(c.facets()) == maximal

    def test_f_vector_counts_cliques(self):
        rng = random.Random(153)
        for _ in range(30):
            n = rng.randint(1, 9)
            edges = [e for e in
                     [(i, j) for i in range(n) for j in range(i + 1, n)]
                     if rng.random() < 0.6]
            c = FlagComplex.from_graph(n, edges)
            cliques = oracles.all_cliques(n, edges)
            fv = [0] * (max(len(q) for q in cliques))
            for q in cliques:
                fv[len(q) - 1] += 1
            assert c.f_vector() == (1, *fv)

    def test_neighbors_and_link_vertices(self):
        c = octahedral_sphere(3)
        for v in range(6):
            nbrs = c.link_vertices((v,))
            assert len(nbrs) == 4
            assert (v + 3) % 6 not in nbrs

    def test_link_mask_requires_clique(self):
        c = cycle(4)
        with pytest.raises(FaceNotFound):
            c.link_mask((0, 2))
        with pytest.raises(FaceNotFound):
            c.link_mask((0, 9))

    def test_induced_flag_relabels_densely(self):
        c = octahedral_sphere(3)
        sub = c.induced_flag([5, 1, 3])
        assert sub.vertex_count == 3
        assert sub == FlagComplex.from_graph(3, [(0, 1), (0, 2), (1, 2)])

    def test_round_trip_preserves_structure(self):
        for name in ("rp2_11_left", "torus_12", "grid_torus_16"):
            sc = fixture(name)
            fc = as_flag(sc)
            back = as_simplicial(fc)
            assert back.facets == sc.facets

    def test_from_simplicial_rejects_non_flag(self):
        sc = SimplicialComplex.from_facets([[0, 1], [1, 2], [0, 2]])
        with pytest.raises(InvalidInput):
            FlagComplex.from_simplicial(sc)

    def test_equality_and_hash(self):
        a = cycle(5)
        b = FlagComplex.from_graph(5, [(i, (i + 1) % 5) for i in range(5)])
        assert a == b
        assert hash(a) == hash(b)
        assert a != cycle(6)

    def test_labeled_digest_depends_on_labels(self):
        a = FlagComplex.from_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        b = FlagComplex.from_graph(4, [(0, 1), (1, 3), (3, 2), (0, 2)])
        c = FlagComplex.from_graph(4, [(0, 3), (2, 3), (1, 2), (0, 1)])
        assert labeled_digest(a) != labeled_digest(b)
        assert labeled_digest(a) == labeled_digest(c)

    def test_edges_listed_once(self):
        c = as_flag(fixture("grid_torus_16"))
        edges = c.edges()
        assert len(edges) == len(set(edges)) == c.f_vector()[2]
        assert all(u < v for u, v in edges)
