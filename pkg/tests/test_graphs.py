import math
import random

import pytest

from stlab import (
    FamilySpec,
    Graph,
    canonical_graph,
    certificate,
    complete_bipartite_graph,
    complete_graph,
    construct,
    cycle_graph,
    decode_graph6,
    double_star,
    encode_graph6,
    is_complete_bipartite,
    join,
    k_join,
    path_graph,
    random_connected_graph,
    star_graph,
    star_plus_edge,
    theta_graph,
)

from oracles import brute_force_isomorphic


def random_graph(n, p, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


class TestFromEdges:
    def test_single_edge(self):
        g = Graph.from_edges(2, [(0, 1)])
        assert g.n == 2 and g.m == 1 and g.has_edge(0, 1)

    def test_empty(self):
        g = Graph.from_edges(3, [])
        assert g.n == 3 and g.m == 0

    def test_cycle_degrees(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert g.m == 4
        assert all(g.degree(u) == 2 for u in range(4))

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 3)])

    def test_rejects_oversize(self):
        with pytest.raises(ValueError):
            Graph.from_edges(65, [])

    def test_deduplicates(self):
        g = Graph.from_edges(3, [(0, 1), (1, 0), (0, 1)])
        assert g.m == 1


class TestFamilies:
    def test_theta_133(self):
        g = theta_graph(1, 3, 3)
        assert g.n == 6 and g.m == 7

    def test_book_m43(self):
        g = k_join(2, 21)
        assert g.n == 23 and g.m == 43

    def test_k3_join_edge_count(self):
        # K_3 v t K_1 realises m = 3t + 3
        for t in range(1, 8):
            assert k_join(3, t).m == 3 * t + 3

    def test_star(self):
        g = star_graph(4)
        assert g.n == 5 and g.m == 4

    def test_theta_degree_profile(self):
        # hubs are the only degree-3 vertices; adjacent exactly when l1 = 1
        for spec in ((1, 2, 2), (1, 3, 3), (2, 2, 2), (2, 3, 4), (3, 3, 3)):
            g = theta_graph(*spec)
            deg3 = [u for u in range(g.n) if g.degree(u) == 3]
            assert len(deg3) == 2
            assert g.has_edge(*deg3) == (spec[0] == 1)

    def test_parameter_domains(self):
        for bad in (lambda: theta_graph(2, 1, 3), lambda: theta_graph(1, 1, 5),
                    lambda: k_join(0, 3), lambda: k_join(2, 0),
                    lambda: star_plus_edge(1), lambda: double_star(0, 2),
                    lambda: path_graph(1), lambda: cycle_graph(2),
                    lambda: complete_graph(1)):
            with pytest.raises(ValueError):
                bad()

    def test_construct_dispatch(self):
        g = construct(FamilySpec("k_join", (2, 21)))
        assert g == k_join(2, 21)
        with pytest.raises(ValueError):
            construct(FamilySpec("nope", (1,)))
        with pytest.raises(ValueError):
            construct(FamilySpec("star", (1, 2)))


class TestJoin:
    def test_k1_join_star_is_book(self):
        for r in range(1, 8):
            g = join(Graph.from_edges(1, []), star_graph(r))
            assert certificate(g) == certificate(k_join(2, r))

    def test_empty_join_empty_is_bipartite(self):
        g = join(Graph.from_edges(2, []), Graph.from_edges(3, []))
        assert g.m == 6
        assert certificate(g) == certificate(complete_bipartite_graph(2, 3))

    def test_k2_join_k1_is_triangle(self):
        g = join(complete_graph(2), Graph.from_edges(1, []))
        assert certificate(g) == certificate(complete_graph(3))

    def test_edge_count_formula(self):
        rng = random.Random(31)
        for _ in range(100):
            a = random_graph(rng.randint(0, 6), rng.random(), rng)
            b = random_graph(rng.randint(0, 6), rng.random(), rng)
            assert join(a, b).m == a.m + b.m + a.n * b.n

    def test_capacity(self):
        with pytest.raises(ValueError):
            join(Graph.from_edges(40, []), Graph.from_edges(40, []))


class TestCertificate:
    def test_relabel_invariance_path(self):
        g = path_graph(4)
        assert certificate(g) == certificate(g.relabel([2, 0, 3, 1]))

    def test_distinguishes_c4_from_star_plus_edge(self):
        assert certificate(cycle_graph(4)) != certificate(star_plus_edge(3))

    def test_theta_reversed(self):
        g = theta_graph(1, 3, 3)
        assert certificate(g) == certificate(g.relabel(list(reversed(range(6)))))

    def test_cap(self):
        with pytest.raises(ValueError):
            certificate(Graph.from_edges(13, []))

    def test_canonical_graph_is_stable(self):
        rng = random.Random(77)
        for _ in range(50):
            g = random_graph(rng.randint(1, 9), rng.random(), rng)
            canon = canonical_graph(g)
            assert certificate(canon) == certificate(g)
            assert canonical_graph(canon) == canon

    def test_agrees_with_brute_force(self):
        rng = random.Random(12345)
        corpus = [random_graph(rng.randint(1, 8), rng.random(), rng) for _ in range(200)]
        certs = [certificate(g) for g in corpus]
        for i in range(len(corpus)):
            for j in range(i + 1, len(corpus)):
                assert (certs[i] == certs[j]) == brute_force_isomorphic(corpus[i], corpus[j])

    def test_exact_class_counts_over_all_labeled_graphs(self):
        # distinct certificates over every labeled graph on n vertices must
        # equal the cycle-index class count: any relabeling sensitivity would
        # inflate the tally, any collision would deflate it
        from itertools import combinations

        from oracles import unlabeled_graph_counts

        for n in range(1, 7):
            pairs = list(combinations(range(n), 2))
            certs = set()
            for mask in range(1 << len(pairs)):
                edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
                certs.add(certificate(Graph.from_edges(n, edges)))
            assert len(certs) == sum(unlabeled_graph_counts(n, len(pairs)))


class TestConnectivityDiameter:
    def test_double_star_diameter(self):
        for a, b in ((1, 1), (2, 3), (4, 4)):
            assert double_star(a, b).diameter() == 3

    def test_star_diameter(self):
        for r in range(2, 6):
            assert star_graph(r).diameter() == 2

    def test_single_vertex_diameter(self):
        assert Graph.from_edges(1, []).diameter() == 0

    def test_disjoint_components(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert g.components() == [(0, 1), (2, 3)]
        assert g.diameter() == math.inf

    def test_connected_flag(self):
        assert cycle_graph(5).is_connected()
        assert not Graph.from_edges(3, [(0, 1)]).is_connected()


class TestGraph6:
    def test_k2_by_hand(self):
        # one edge: header chr(63+2), body bit 1 padded to 100000 -> chr(63+32)
        assert encode_graph6(Graph.from_edges(2, [(0, 1)])) == "A_"

    def test_theta_round_trip(self):
        g = theta_graph(1, 3, 3)
        assert decode_graph6(encode_graph6(g)) == g

    def test_malformed(self):
        for junk in ("junk!", "", "A", "~??", chr(30) + "x"):
            with pytest.raises(ValueError):
                decode_graph6(junk)

    def test_nonzero_padding_rejected(self):
        # K_2 with a nonzero padding bit in the body character
        with pytest.raises(ValueError):
            decode_graph6("A" + chr(63 + 33))

    def test_random_round_trips(self):
        rng = random.Random(2024)
        for _ in range(1000):
            g = random_graph(rng.randint(0, 20), rng.random(), rng)
            assert decode_graph6(encode_graph6(g)) == g

    def test_large_orders(self):
        rng = random.Random(9)
        for n in (62, 63, 64):
            g = random_graph(n, 0.08, rng)
            text = encode_graph6(g)
            if n > 62:
                assert text.startswith(chr(126))
            assert decode_graph6(text) == g

    def test_optional_header_prefix(self):
        g = cycle_graph(5)
        assert decode_graph6(">>graph6<<" + encode_graph6(g)) == g


class TestSerialisation:
    def test_json_round_trip(self):
        g = theta_graph(1, 2, 4)
        assert Graph.from_json_dict(g.to_json_dict()) == g

    def test_json_malformed(self):
        with pytest.raises(ValueError):
            Graph.from_json_dict({"edges": [[0, 1]]})

    def test_dot_contains_edges(self):
        text = path_graph(3).to_dot()
        assert text.startswith("graph G {")
        assert "0 -- 1;" in text and "1 -- 2;" in text


class TestHelpers:
    def test_complete_bipartite_recognition(self):
        assert is_complete_bipartite(complete_bipartite_graph(2, 3))
        assert is_complete_bipartite(star_graph(5))
        assert not is_complete_bipartite(cycle_graph(5))
        assert not is_complete_bipartite(path_graph(4))
        assert not is_complete_bipartite(complete_graph(3))

    def test_random_connected_graph(self):
        rng = random.Random(8)
        for _ in range(100):
            n = rng.randint(2, 20)
            m = rng.randint(n - 1, n * (n - 1) // 2)
            g = random_connected_graph(n, m, rng)
            assert g.n == n and g.m == m and g.is_connected()

    def test_immutability_of_edits(self):
        g = path_graph(3)
        h = g.add_edge(0, 2)
        assert g.m == 2 and h.m == 3
        assert g.remove_edge(0, 1).m == 1 and g.m == 2
