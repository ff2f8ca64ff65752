import pytest

from bipartize import is_bipartite, max_degree
from bipartize.generate import (
    bipartite_random,
    complete,
    cycle,
    generate,
    gnp,
    star,
)


class TestGnp:
    def test_p_zero_is_edgeless(self):
        g = gnp(10, 0.0, seed=1)
        assert g.edge_count == 0

    def test_p_one_is_complete(self):
        g = gnp(8, 1.0, seed=1)
        assert g.edge_count == 8 * 7 // 2

    def test_same_seed_same_graph(self):
        assert gnp(12, 0.4, seed=7) == gnp(12, 0.4, seed=7)

    def test_different_seeds_differ(self):
        assert gnp(12, 0.5, seed=1) != gnp(12, 0.5, seed=2)

    def test_invalid_probability(self):
        with pytest.raises(ValueError, match="probability"):
            gnp(5, 1.5, seed=0)

    def test_weight_range_honored(self):
        g = gnp(30, 0.2, seed=3, weights=(5, 9))
        assert all(5 <= w <= 9 for w in g.weights)

    def test_unit_weights(self):
        g = gnp(10, 0.3, seed=3, weights=None)
        assert set(g.weights) == {1}


class TestFixedFamilies:
    def test_cycle(self):
        g = cycle(5, weights=None)
        assert g.edge_count == 5
        assert max_degree(g) == 2
        assert sorted(g.edges()) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]

    def test_cycle_too_small(self):
        with pytest.raises(ValueError, match="at least 3"):
            cycle(2)

    def test_complete(self):
        g = complete(5, weights=None)
        assert g.edge_count == 10
        assert max_degree(g) == 4

    def test_star(self):
        g = star(4, weights=None)
        assert sorted(g.edges()) == [(0, 1), (0, 2), (0, 3)]
        assert max_degree(g) == 3

    def test_bipartite_random_is_bipartite(self):
        g = bipartite_random(6, 5, 0.7, seed=2)
        assert is_bipartite(g)
        # no edges inside either side
        for u, v in g.edges():
            assert (u < 6) != (v < 6)


class TestDispatcher:
    def test_by_family_name(self):
        assert generate("cycle", n=5) == cycle(5)
        assert generate("gnp", n=6, p=0.5, seed=3) == gnp(6, 0.5, seed=3)
        assert generate(
            "bipartite-random", left=3, right=4, p=0.5, seed=1
        ) == bipartite_random(3, 4, 0.5, seed=1)

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="unknown family"):
            generate("hypercube", n=3)

    def test_bad_weight_range(self):
        with pytest.raises(ValueError, match="bad weight range"):
            gnp(4, 0.5, seed=0, weights=(5, 2))
