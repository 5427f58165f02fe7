import networkx as nx
import pytest

from torus.graph import (
    TorusGraph,
    TorusParams,
    VertexId,
    build_torus,
    decode_vertex,
    encode_vertex,
    neighbors,
    torus_params,
    validate_torus,
)
from utils.errors import CapacityError, ParameterError, VertexRangeError


def v(j, i, t):
    return VertexId(j=j, i=i, t=t)


def clause_edges(m, n):
    """Undirected edge set listed clause by clause, duplicates collapsed."""

    def idx(j, i, t):
        return (((j - 1) % n) * m + (i - 1) % m) * 4 + t

    edges = set()
    for j in range(1, n + 1):
        for i in range(1, m + 1):
            pairs = [
                (idx(j, i, 0), idx(j, i, 1)),
                (idx(j, i, 0), idx(j, i, 2)),
                (idx(j, i, 0), idx(j + 1, i, 3)),
                (idx(j, i, 1), idx(j, i, 0)),
                (idx(j, i, 1), idx(j, i, 3)),
                (idx(j, i, 1), idx(j, i + 1, 2)),
                (idx(j, i, 2), idx(j, i, 0)),
                (idx(j, i, 2), idx(j, i, 3)),
                (idx(j, i, 2), idx(j, i - 1, 1)),
                (idx(j, i, 3), idx(j, i, 1)),
                (idx(j, i, 3), idx(j, i, 2)),
                (idx(j, i, 3), idx(j - 1, i, 0)),
            ]
            edges |= {tuple(sorted(p)) for p in pairs}
    return edges


@pytest.mark.parametrize(
    "m, n, vertex, expected",
    [
        (3, 2, v(1, 1, 0), 0),
        (3, 2, v(2, 3, 3), 23),
        (3, 3, v(2, 1, 2), 14),
    ],
)
def test_encode_vertex_examples(m, n, vertex, expected):
    assert encode_vertex(torus_params(m, n), vertex) == expected


@pytest.mark.parametrize("m", range(1, 9))
@pytest.mark.parametrize("n", range(1, 9))
def test_encode_decode_is_a_bijection(m, n):
    params = torus_params(m, n)
    indices = [encode_vertex(params, decode_vertex(params, x)) for x in range(params.order)]
    assert indices == list(range(params.order))


def test_out_of_range_labels_are_rejected():
    params = torus_params(3, 2)
    with pytest.raises(VertexRangeError):
        encode_vertex(params, v(3, 1, 0))
    with pytest.raises(VertexRangeError):
        encode_vertex(params, v(1, 1, 4))
    with pytest.raises(VertexRangeError):
        decode_vertex(params, 24)
    with pytest.raises(VertexRangeError):
        neighbors(params, v(1, 0, 0))


@pytest.mark.parametrize(
    "m, n, vertex, expected",
    [
        (3, 3, v(2, 2, 3), {v(1, 2, 0), v(2, 2, 1), v(2, 2, 2)}),
        (3, 3, v(1, 1, 2), {v(1, 1, 3), v(1, 3, 1), v(1, 1, 0)}),
        (1, 1, v(1, 1, 0), {v(1, 1, 3), v(1, 1, 2), v(1, 1, 1)}),
    ],
)
def test_neighbors_examples(m, n, vertex, expected):
    assert neighbors(torus_params(m, n), vertex) == expected


@pytest.mark.parametrize("m, n", [(0, 2), (2, 0), (-1, 1)])
def test_invalid_parameters(m, n):
    with pytest.raises(ParameterError):
        torus_params(m, n)
    with pytest.raises(ParameterError):
        TorusParams(m=m, n=n)


def test_point_cap():
    with pytest.raises(CapacityError):
        build_torus(torus_params(10, 10), point_cap=399)


@pytest.mark.parametrize("m", range(1, 9))
@pytest.mark.parametrize("n", range(1, 9))
def test_build_torus_invariants(m, n):
    report = validate_torus(build_torus(torus_params(m, n)))
    assert report.ok
    assert report.order == 4 * m * n
    assert report.size == 6 * m * n
    assert report.degenerate == (m == 1 or n == 1)


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("n", range(1, 7))
def test_edges_match_clause_enumeration(m, n):
    graph = build_torus(torus_params(m, n))
    assert set(graph.edges()) == clause_edges(m, n)


def test_examples():
    g32 = build_torus(torus_params(3, 2))
    assert g32.order == 24 and len(g32.edges()) == 36

    k4 = build_torus(torus_params(1, 1)).to_networkx()
    assert nx.is_isomorphic(k4, nx.complete_graph(4))

    g22 = build_torus(torus_params(2, 2)).to_networkx()
    assert g22.number_of_nodes() == 16 and g22.number_of_edges() == 24
    assert nx.is_connected(g22)
    assert all(d == 3 for _, d in g22.degree)


def test_neighbors_have_distinct_types():
    params = torus_params(4, 3)
    for x in range(params.order):
        u = decode_vertex(params, x)
        assert len({w.t for w in neighbors(params, u)}) == 3


def test_corrupted_adjacency_is_not_symmetric():
    graph = build_torus(torus_params(3, 2))
    adjacency = list(graph.adjacency)
    a, b, c = adjacency[0]
    # point 0 claims a neighbor that does not list it back
    stranger = next(x for x in range(graph.order) if x not in (0, a, b, c) and 0 not in adjacency[x])
    adjacency[0] = tuple(sorted((a, b, stranger)))
    report = validate_torus(TorusGraph(params=graph.params, adjacency=tuple(adjacency)))
    assert not report.symmetric
    assert not report.ok
