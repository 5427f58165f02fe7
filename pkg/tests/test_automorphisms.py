import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from algebra.group import closure, is_subgroup, orbits
from algebra.permutation import Permutation
from cayley.automorphisms import brute_force_aut, naive_automorphisms, summarize_aut
from torus.graph import TorusParams, build_torus, torus_params
from torus.symmetries import make_generators, rectangular_reflections, witness_group
from utils.errors import CapacityError, SearchBudgetError


def matcher_automorphisms(graph: nx.Graph):
    return sorted(
        Permutation(mapping[x] for x in range(graph.number_of_nodes()))
        for mapping in GraphMatcher(graph, graph).isomorphisms_iter()
    )


@pytest.mark.parametrize(
    "graph",
    [
        nx.complete_graph(4),
        nx.cycle_graph(6),
        nx.path_graph(5),
        nx.petersen_graph(),
        nx.star_graph(4),
        nx.convert_node_labels_to_integers(nx.grid_2d_graph(2, 3)),
        nx.cycle_graph(12),
        nx.frucht_graph(),
        nx.convert_node_labels_to_integers(nx.ladder_graph(6)),
    ],
)
def test_brute_force_matches_both_oracles(graph):
    assert graph.number_of_nodes() <= 12
    aut = brute_force_aut(graph)
    assert list(aut.elements) == matcher_automorphisms(graph)
    assert list(aut.elements) == naive_automorphisms(graph)


def test_twelve_point_orders():
    assert brute_force_aut(nx.frucht_graph()).order == 1
    assert brute_force_aut(nx.cycle_graph(12)).order == 24
    assert brute_force_aut(nx.convert_node_labels_to_integers(nx.ladder_graph(6))).order == 4


def test_known_orders():
    assert brute_force_aut(nx.complete_graph(4)).order == 24
    assert brute_force_aut(nx.cycle_graph(6)).order == 12
    assert brute_force_aut(build_torus(TorusParams(m=1, n=1))).order == 24


def test_torus_1x1_against_naive():
    graph = build_torus(TorusParams(m=1, n=1))
    assert list(brute_force_aut(graph).elements) == naive_automorphisms(graph)


def test_aut_of_3x2():
    params = torus_params(3, 2)
    graph = build_torus(params)
    aut = brute_force_aut(graph)
    gens = make_generators(params, graph)
    assert aut.order % 6 == 0
    assert is_subgroup(closure([gens.g1, gens.g2]), aut)
    assert len(orbits(aut)) > 1
    assert list(aut.elements) == matcher_automorphisms(graph.to_networkx())

    summary = summarize_aut(aut, 3, 2)
    assert summary.reference_order == 8
    assert summary.agrees_with_reference is False
    assert not summary.vertex_transitive
    assert summary.orbit_count == len(summary.orbit_sizes)
    assert sum(summary.orbit_sizes) == 24


@pytest.mark.parametrize("n", [1, 2, 3])
def test_witness_group_lies_in_aut(n):
    graph = build_torus(TorusParams(m=n, n=n))
    assert is_subgroup(witness_group(n), brute_force_aut(graph))


@pytest.mark.parametrize("m, n", [(2, 3), (3, 2), (2, 4)])
def test_reflections_are_found(m, n):
    params = torus_params(m, n)
    aut = brute_force_aut(build_torus(params))
    for p in rectangular_reflections(params):
        assert p in aut


def test_caps_and_budgets():
    graph = build_torus(TorusParams(m=3, n=3))
    with pytest.raises(CapacityError):
        brute_force_aut(graph, vertex_cap=32)
    with pytest.raises(SearchBudgetError) as e:
        brute_force_aut(graph, node_budget=5)
    assert e.value.partial_count is not None
