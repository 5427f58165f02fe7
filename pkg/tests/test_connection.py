import networkx as nx
import pytest

from algebra.group import closure
from algebra.permutation import Permutation, compose_all, inverse
from cayley.automorphisms import brute_force_aut
from cayley.connection import (
    ConnectionSet,
    build_cayley,
    check_connection_set,
    connection_set,
    verify_cayley_isomorphism,
)
from torus.graph import TorusParams, VertexId, build_torus
from torus.symmetries import square_generators, witness_group
from utils.errors import ConnectionSetError, PreconditionError

BASE = VertexId(j=1, i=1, t=0)


def test_connection_set_on_2x2():
    graph = build_torus(TorusParams(m=2, n=2))
    gens = square_generators(2)
    s = connection_set(graph, witness_group(2), BASE)
    g1, g2, g3, g4 = gens.g1, gens.g2, gens.g3, gens.g4
    expected = {g3, compose_all([g1, g4], 16), compose_all([g1, g2, g3, g4], 16)}
    assert set(s.elements) == expected


@pytest.mark.parametrize("n", range(2, 7))
def test_connection_sets_are_cubic_and_symmetric(n):
    graph = build_torus(TorusParams(m=n, n=n))
    s = connection_set(graph, witness_group(n), BASE)
    members = set(s.elements)
    assert len(s) == 3
    assert not any(x.is_identity() for x in members)
    assert {inverse(x) for x in members} == members


def test_cayley_graph_of_witness():
    group = witness_group(2)
    graph = build_torus(TorusParams(m=2, n=2))
    cayley = build_cayley(group, connection_set(graph, group, BASE))
    assert cayley.number_of_nodes() == 16
    assert cayley.number_of_edges() == 24
    assert all(d == 3 for _, d in cayley.degree)


def test_complete_and_cycle_cayley_graphs():
    a = Permutation([1, 0, 3, 2])
    b = Permutation([2, 3, 0, 1])
    klein = closure([a, b])
    s = ConnectionSet(elements=tuple(x for x in klein if not x.is_identity()))
    assert nx.is_isomorphic(build_cayley(klein, s), nx.complete_graph(4))

    x = Permutation([1, 2, 3, 4, 0])
    c5 = closure([x])
    assert nx.is_isomorphic(
        build_cayley(c5, ConnectionSet(elements=(x, inverse(x)))), nx.cycle_graph(5)
    )


def test_invalid_connection_sets():
    x = Permutation([1, 2, 3, 4, 0])
    with pytest.raises(ConnectionSetError):
        check_connection_set(ConnectionSet(elements=(x,)))
    with pytest.raises(ConnectionSetError):
        check_connection_set(ConnectionSet(elements=(Permutation.identity(5),)))
    with pytest.raises(ConnectionSetError):
        check_connection_set(ConnectionSet(elements=(x, inverse(x))), degree=3)
    stranger = Permutation([1, 0, 2, 3, 4])
    with pytest.raises(ConnectionSetError):
        build_cayley(closure([x]), ConnectionSet(elements=(stranger,)))


@pytest.mark.parametrize("n", range(2, 7))
def test_canonical_map_is_an_isomorphism(n):
    graph = build_torus(TorusParams(m=n, n=n))
    group = witness_group(n)
    assert verify_cayley_isomorphism(graph, group, BASE)

    cayley = build_cayley(group, connection_set(graph, group, BASE))
    torus = graph.to_networkx()
    assert cayley.number_of_nodes() == torus.number_of_nodes()
    assert cayley.number_of_edges() == torus.number_of_edges()
    assert sorted(d for _, d in cayley.degree) == sorted(d for _, d in torus.degree)


def test_k4_is_cayley_on_both_groups_of_order_four():
    graph = build_torus(TorusParams(m=1, n=1))
    klein = witness_group(1)
    cyclic = closure([Permutation([1, 2, 3, 0])])
    assert verify_cayley_isomorphism(graph, klein, BASE)
    assert verify_cayley_isomorphism(graph, cyclic, BASE)


def test_non_regular_group_is_rejected():
    graph = build_torus(TorusParams(m=1, n=1))
    sym4 = brute_force_aut(graph)
    with pytest.raises(PreconditionError):
        connection_set(graph, sym4, BASE)
    with pytest.raises(PreconditionError):
        verify_cayley_isomorphism(graph, sym4, BASE)
