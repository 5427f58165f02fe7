from typing import FrozenSet, List, Tuple

import networkx as nx

from algebra.permutation import Permutation
from utils.errors import DegreeMismatchError

Adjacency = Tuple[FrozenSet[int], ...]


def adjacency_of(graph) -> Adjacency:
    """Neighbor sets indexed by point.

    Accepts a TorusGraph (anything with an ``adjacency`` sequence of neighbor
    lists) or a ``networkx.Graph`` whose nodes are exactly ``0..N-1``.
    """
    if isinstance(graph, nx.Graph):
        order = graph.number_of_nodes()
        if set(graph.nodes) != set(range(order)):
            raise ValueError("networkx graph nodes must be 0..N-1")
        return tuple(frozenset(graph[v]) for v in range(order))
    return tuple(frozenset(neighbors) for neighbors in graph.adjacency)


def edges_of(adjacency: Adjacency) -> List[Tuple[int, int]]:
    """Undirected edges as sorted ``(a, b)`` pairs with ``a < b``."""
    return sorted((a, b) for a, ns in enumerate(adjacency) for b in ns if a < b)


def is_automorphism(graph, p: Permutation) -> bool:
    adjacency = adjacency_of(graph)
    if p.degree != len(adjacency):
        raise DegreeMismatchError(p.degree, len(adjacency))
    return all(p(b) in adjacency[p(a)] for a, b in edges_of(adjacency))
