"""Shared builders and independent reference oracles for the test suite.

The literal oracles here enumerate subsets with itertools and check each
candidate with the structural predicates only; they share no code with the
engines they validate.
"""

from __future__ import annotations

import itertools

import pytest

from bipartize import (
    WeightedGraph,
    from_edge_list,
    induced_subgraph,
    is_bipartite,
    is_independent_set,
    set_weight,
)


def cycle_graph(n: int, weights=None) -> WeightedGraph:
    return from_edge_list(
        n, [(v, (v + 1) % n) for v in range(n)], weights or [1] * n
    )


def complete_graph(n: int, weights=None) -> WeightedGraph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return from_edge_list(n, edges, weights or [1] * n)


def star_graph(n: int, weights=None) -> WeightedGraph:
    return from_edge_list(n, [(0, v) for v in range(1, n)], weights or [1] * n)


def path_graph(n: int, weights=None) -> WeightedGraph:
    return from_edge_list(n, [(v, v + 1) for v in range(n - 1)], weights or [1] * n)


def edgeless_graph(n: int, weights=None) -> WeightedGraph:
    return from_edge_list(n, [], weights or [1] * n)


def literal_mwis(g: WeightedGraph) -> tuple[int, list[int]]:
    """Max-weight independent set by plain subset enumeration.

    Returns (weight, lexicographically smallest member list without
    zero-weight nodes), matching the engines' canonical-output contract.
    """
    pos = [v for v in range(g.node_count) if g.weights[v] > 0]
    best_w, best_set = 0, []
    for r in range(len(pos) + 1):
        for combo in itertools.combinations(pos, r):
            if not is_independent_set(g, combo):
                continue
            w = set_weight(g, combo)
            if w > best_w or (w == best_w and list(combo) < best_set):
                best_w, best_set = w, list(combo)
    return best_w, best_set


def literal_induced_bipartite(g: WeightedGraph) -> tuple[int, list[int]]:
    """Max-weight bipartite-inducing set by plain subset enumeration."""
    pos = [v for v in range(g.node_count) if g.weights[v] > 0]
    best_w, best_set = 0, []
    for r in range(len(pos) + 1):
        for combo in itertools.combinations(pos, r):
            sub, _ = induced_subgraph(g, combo)
            if not is_bipartite(sub):
                continue
            w = set_weight(g, combo)
            if w > best_w or (w == best_w and list(combo) < best_set):
                best_w, best_set = w, list(combo)
    return best_w, best_set


@pytest.fixture(scope="session")
def k3() -> WeightedGraph:
    return complete_graph(3)


@pytest.fixture(scope="session")
def c5() -> WeightedGraph:
    return cycle_graph(5)
