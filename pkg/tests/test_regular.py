import networkx as nx
import pytest

from algebra.group import is_regular_action, is_subgroup
from algebra.permutation import Permutation
from cayley.automorphisms import brute_force_aut
from cayley.regular import find_regular_subgroup
from torus.graph import build_torus, torus_params


def aut_of(m, n):
    return brute_force_aut(build_torus(torus_params(m, n)))


def test_sym4_yields_the_klein_group():
    search = find_regular_subgroup(aut_of(1, 1), 4)
    assert search.found and search.exhaustive
    assert set(search.group.elements) == {
        Permutation([0, 1, 2, 3]),
        Permutation([1, 0, 3, 2]),
        Permutation([2, 3, 0, 1]),
        Permutation([3, 2, 1, 0]),
    }


def test_2x2_has_a_regular_subgroup():
    aut = aut_of(2, 2)
    search = find_regular_subgroup(aut, 16)
    assert search.found
    group = search.group
    assert group.order == 16
    assert is_regular_action(group)
    assert is_subgroup(group, aut)
    assert all(p.is_identity() or p.is_derangement() for p in group)


def test_3x2_has_none():
    search = find_regular_subgroup(aut_of(3, 2), 24)
    assert not search.found
    assert search.exhaustive


def test_budget_exhaustion_is_not_a_refutation():
    search = find_regular_subgroup(aut_of(2, 2), 16, budget=1)
    assert not search.found
    assert not search.exhaustive


def test_degree_mismatch():
    with pytest.raises(ValueError):
        find_regular_subgroup(aut_of(1, 1), 5)


def test_petersen_is_refuted_by_search():
    graph = nx.petersen_graph()
    aut = brute_force_aut(graph)
    assert aut.order == 120
    search = find_regular_subgroup(aut, 10)
    assert not search.found
    assert search.exhaustive
    assert search.nodes > 1
    assert search.derangements > 0


@pytest.mark.parametrize(
    "graph",
    [
        nx.convert_node_labels_to_integers(nx.hypercube_graph(3)),
        nx.circulant_graph(8, [1, 4]),
    ],
)
def test_non_torus_cayley_graphs(graph):
    aut = brute_force_aut(graph)
    search = find_regular_subgroup(aut, 8)
    assert search.found and search.exhaustive
    assert search.group.order == 8
    assert is_regular_action(search.group)
    assert is_subgroup(search.group, aut)
