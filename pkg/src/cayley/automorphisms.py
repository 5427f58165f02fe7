"""Full automorphism groups of small graphs, computed without any symmetry hints.

The search anchors at point 0 and assigns points in breadth-first order. A point
may only go to a point with the same invariant (degree plus the multiset of
distances to every other point), adjacent to the image of its BFS parent, and at
the same distance from every point already placed as its preimage is. A
complete assignment therefore preserves all distances, hence adjacency.
"""

import logging
from collections import defaultdict, deque
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from algebra.automorphism import Adjacency, adjacency_of, is_automorphism
from algebra.group import PermGroup, orbits
from algebra.permutation import Permutation
from config import DEFAULT_LIMITS
from utils.errors import CapacityError, InternalConsistencyError, SearchBudgetError

logger = logging.getLogger(__name__)

# Automorphism group orders published for specific tori, keyed by (m, n).
REFERENCE_AUT_ORDERS: Dict[Tuple[int, int], int] = {(3, 2): 8}


def _distances(adjacency: Adjacency) -> List[List[int]]:
    order = len(adjacency)
    table = []
    for source in range(order):
        row = [-1] * order
        row[source] = 0
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for y in adjacency[x]:
                if row[y] < 0:
                    row[y] = row[x] + 1
                    queue.append(y)
        table.append(row)
    return table


def _search_order(adjacency: Adjacency) -> Tuple[List[int], List[int]]:
    """BFS order from point 0 (restarting on each component) and BFS parents."""
    order = len(adjacency)
    parent = [-1] * order
    seen = [False] * order
    sequence = []
    for root in range(order):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            x = queue.popleft()
            sequence.append(x)
            for y in sorted(adjacency[x]):
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    queue.append(y)
    return sequence, parent


def brute_force_aut(
    graph,
    node_budget: int = DEFAULT_LIMITS.node_budget,
    vertex_cap: int = DEFAULT_LIMITS.aut_vertex_cap,
) -> PermGroup:
    """Aut(graph) by backtracking; ``graph`` is a TorusGraph or a networkx graph on 0..N-1."""
    adjacency = adjacency_of(graph)
    order = len(adjacency)
    if order > vertex_cap:
        raise CapacityError("Graph order", order, vertex_cap)
    if order == 0:
        return PermGroup.trivial(0)

    dist = _distances(adjacency)
    invariant = [
        (len(adjacency[v]), tuple(sorted(dist[v]))) for v in range(order)
    ]
    cells: Dict[tuple, List[int]] = defaultdict(list)
    for v in range(order):
        cells[invariant[v]].append(v)

    sequence, parent = _search_order(adjacency)
    image = [-1] * order
    used = [False] * order
    found: List[Permutation] = []
    nodes = 0

    def candidates(depth: int) -> Sequence[int]:
        u = sequence[depth]
        pool = cells[invariant[u]]
        if parent[u] >= 0:
            near = adjacency[image[parent[u]]]
            pool = [w for w in pool if w in near]
        placed = sequence[:depth]
        return [
            w
            for w in pool
            if not used[w] and all(dist[x][u] == dist[image[x]][w] for x in placed)
        ]

    def extend(depth: int):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchBudgetError(node_budget, partial_count=len(found))
        if depth == order:
            found.append(Permutation(image))
            return
        u = sequence[depth]
        for w in candidates(depth):
            image[u] = w
            used[w] = True
            extend(depth + 1)
            used[w] = False
            image[u] = -1

    extend(0)
    for p in found:
        if not is_automorphism(graph, p):
            raise InternalConsistencyError(f"Search produced a non-automorphism {p!r}")
    logger.debug(f"Aut search on {order} points: {len(found)} automorphisms, {nodes} nodes")
    return PermGroup.from_elements(order, found)


def naive_automorphisms(graph) -> List[Permutation]:
    """Injective maps built in point order, each prefix filtered by adjacency.

    No invariants and no search order: factorial time in the worst case, meant
    as an oracle for graphs of up to about a dozen points.
    """
    adjacency = adjacency_of(graph)
    order = len(adjacency)
    image: List[int] = []
    used = [False] * order
    found: List[Permutation] = []

    def extend(x: int):
        if x == order:
            p = Permutation(image)
            if is_automorphism(graph, p):
                found.append(p)
            return
        for y in range(order):
            if used[y] or len(adjacency[y]) != len(adjacency[x]):
                continue
            if any((w in adjacency[x]) != (image[w] in adjacency[y]) for w in range(x)):
                continue
            image.append(y)
            used[y] = True
            extend(x + 1)
            used[y] = False
            image.pop()

    extend(0)
    return sorted(found)


class AutSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    m: Optional[int] = None
    n: Optional[int] = None
    order: int
    degree: int
    orbit_count: int
    orbit_sizes: List[int]
    vertex_transitive: bool
    generator_count: int
    reference_order: Optional[int] = None
    agrees_with_reference: Optional[bool] = None


def summarize_aut(aut: PermGroup, m: Optional[int] = None, n: Optional[int] = None) -> AutSummary:
    parts = orbits(aut)
    reference = REFERENCE_AUT_ORDERS.get((m, n)) if m is not None and n is not None else None
    if reference is not None and reference != aut.order:
        logger.warning(
            f"Aut(TRC4C8[{m},{n}]) has order {aut.order}; the published order is {reference}"
        )
    return AutSummary(
        m=m,
        n=n,
        order=aut.order,
        degree=aut.degree,
        orbit_count=len(parts),
        orbit_sizes=[len(p) for p in parts],
        vertex_transitive=len(parts) == 1,
        generator_count=len(aut.generators),
        reference_order=reference,
        agrees_with_reference=None if reference is None else reference == aut.order,
    )

