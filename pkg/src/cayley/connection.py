"""Connection sets, Cayley graphs, and the canonical Cayley isomorphism.

Cayley edges are built by right multiplication, ``{g, g*s}``. Points are acted
on from the left, so ``phi: g -> g(base)`` sends ``{g, g*s}`` to
``{g(base), g(s(base))}``, an edge because ``g`` is an automorphism and
``s(base)`` is a neighbor of ``base``. The left-multiplication convention
``{g, s*g}`` gives an isomorphic graph through ``g -> g^-1`` because S = S^-1.
"""

import logging
from typing import Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict

from algebra.group import PermGroup, regularity
from algebra.permutation import Permutation, compose, inverse
from torus.graph import TorusGraph, VertexId, encode_vertex
from utils.errors import ConnectionSetError, PreconditionError

logger = logging.getLogger(__name__)


class ConnectionSet(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    base: Optional[VertexId] = None
    elements: Tuple[Permutation, ...]

    def __len__(self) -> int:
        return len(self.elements)


def check_connection_set(s: ConnectionSet, degree: Optional[int] = None):
    """Raise ConnectionSetError unless S is identity-free, inverse-closed and of the given size."""
    members = set(s.elements)
    if len(members) != len(s.elements):
        raise ConnectionSetError("Connection set lists an element twice")
    if any(x.is_identity() for x in members):
        raise ConnectionSetError("Connection set contains the identity")
    if any(inverse(x) not in members for x in members):
        raise ConnectionSetError("Connection set is not closed under inverses")
    if degree is not None and len(members) != degree:
        raise ConnectionSetError(f"Connection set has {len(members)} elements, expected {degree}")


def _require_regular(group: PermGroup):
    check = regularity(group)
    if not check.regular:
        raise PreconditionError(
            f"Group of order {group.order} on {group.degree} points is not regular "
            f"(transitive={check.transitive}, order_equals_degree={check.order_equals_degree})"
        )


def connection_set(graph: TorusGraph, group: PermGroup, base: VertexId) -> ConnectionSet:
    """S = {g in group : g(base) is a neighbor of base}."""
    if group.degree != graph.order:
        raise PreconditionError(
            f"Group degree {group.degree} differs from graph order {graph.order}"
        )
    _require_regular(group)
    b = encode_vertex(graph.params, base)
    near = set(graph.adjacency[b])
    s = ConnectionSet(base=base, elements=tuple(g for g in group if g(b) in near))
    check_connection_set(s, degree=len(near))
    return s


def build_cayley(group: PermGroup, s: ConnectionSet) -> nx.Graph:
    """Cay(group, S) with nodes in canonical element order and edges {g, g*s}."""
    check_connection_set(s)
    if not set(s.elements) <= group.element_set:
        raise ConnectionSetError("Connection set is not contained in the group")
    cayley = nx.Graph()
    cayley.add_nodes_from(group.elements)
    for g in group:
        for x in s.elements:
            cayley.add_edge(g, compose(g, x))
    return cayley


def verify_cayley_isomorphism(graph: TorusGraph, group: PermGroup, base: VertexId) -> bool:
    """True iff g -> g(base) is an isomorphism from Cay(group, S) onto the torus."""
    s = connection_set(graph, group, base)
    cayley = build_cayley(group, s)
    b = encode_vertex(graph.params, base)

    phi = {g: g(b) for g in group}
    if sorted(phi.values()) != list(range(graph.order)):
        return False
    image_edges = {tuple(sorted((phi[g], phi[h]))) for g, h in cayley.edges}
    torus_edges = set(graph.edges())
    ok = len(image_edges) == cayley.number_of_edges() and image_edges == torus_edges
    logger.debug(
        f"Cayley map on TRC4C8[{graph.params.m},{graph.params.n}]: |S|={len(s)}, "
        f"{cayley.number_of_edges()} Cayley edges, isomorphism={ok}"
    )
    return ok
