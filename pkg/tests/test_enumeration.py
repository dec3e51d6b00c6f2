from collections import Counter

import pytest

from stlab import (
    certificate,
    connected_graphs,
    count_theta_free,
    cycle_graph,
    path_graph,
    star_graph,
)
from stlab.enumeration import _level

from oracles import connected_table_is_consistent, labeled_level_certificates

# class counts by edge count, confirmed against the labeled enumeration
# oracle (m <= 7) and the cycle-index consistency check (m <= 8)
KNOWN_COUNTS = {1: 1, 2: 1, 3: 3, 4: 5, 5: 12, 6: 30, 7: 79, 8: 227}


class TestLevels:
    def test_forced_levels(self):
        assert sum(1 for _ in connected_graphs(1)) == 1
        assert sum(1 for _ in connected_graphs(2)) == 1

    def test_level_three_members(self):
        certs = {certificate(g) for g in connected_graphs(3)}
        expected = {certificate(path_graph(4)), certificate(star_graph(3)),
                    certificate(cycle_graph(3))}
        assert certs == expected

    def test_counts_match_frozen_table(self):
        for m, count in KNOWN_COUNTS.items():
            assert sum(1 for _ in connected_graphs(m)) == count

    def test_matches_labeled_oracle_exactly(self):
        for m in range(1, 7):
            generated = {certificate(g) for g in connected_graphs(m)}
            assert generated == labeled_level_certificates(m)

    def test_cycle_index_consistency(self):
        # the full (vertex count, edge count) table of connected classes must
        # reproduce the Burnside counts of no-isolated-vertex classes
        table = Counter()
        for m in range(1, 9):
            for g in connected_graphs(m):
                table[(g.n, m)] += 1
        assert connected_table_is_consistent(table, 8)

    def test_member_contract(self):
        for m in range(1, 8):
            seen = set()
            for g in connected_graphs(m):
                assert g.m == m
                assert g.n <= m + 1
                assert g.is_connected()
                assert all(row != 0 for row in g.adj)
                cert = certificate(g)
                assert cert not in seen
                seen.add(cert)

    def test_deterministic_order(self):
        first = [certificate(g) for g in connected_graphs(6)]
        _level.cache_clear()
        second = [certificate(g) for g in connected_graphs(6)]
        assert first == second
        assert first == sorted(first)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            list(connected_graphs(0))

    def test_soft_cap_warns(self):
        with pytest.warns(UserWarning):
            connected_graphs(12)  # warning fires before any generation work


class TestCounts:
    def test_edge_guard_makes_everything_free(self):
        total, free = count_theta_free(6, (1, 3, 3))
        assert total == free == 30

    def test_only_the_pattern_contains_itself_at_seven_edges(self):
        total, free = count_theta_free(7, (1, 3, 3))
        assert total == 79 and free == 78

    def test_small_guard_other_spec(self):
        total, free = count_theta_free(3, (2, 2, 2))
        assert total == free == 3
