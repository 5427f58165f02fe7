"""Rhomboidal C4C8 torus graphs TRC4C8(R)[m,n].

Vertices are labelled ``(j, i, t)`` with column ``j`` in ``1..n``, row ``i`` in
``1..m`` and type ``t`` in ``0..3``. Row arithmetic is modulo ``m`` and column
arithmetic modulo ``n``; labels are converted to 0-based residues internally and
back to 1-based labels at the boundary.

Flat point index: ``((j - 1) * m + (i - 1)) * 4 + t``. Every export and every
permutation in this package uses it.
"""

import logging
from collections import deque
from typing import FrozenSet, List, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from config import DEFAULT_LIMITS
from utils.errors import CapacityError, ParameterError, VertexRangeError

logger = logging.getLogger(__name__)

TYPES = (0, 1, 2, 3)

# (delta_j, delta_i, t') per type, in the order the neighborhoods are listed
_NEIGHBOR_OFFSETS = {
    3: ((-1, 0, 0), (0, 0, 1), (0, 0, 2)),
    2: ((0, 0, 3), (0, -1, 1), (0, 0, 0)),
    1: ((0, 0, 3), (0, 1, 2), (0, 0, 0)),
    0: ((1, 0, 3), (0, 0, 2), (0, 0, 1)),
}


class TorusParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    m: int = Field(ge=1, description="number of rows, range of index i")
    n: int = Field(ge=1, description="number of columns, range of index j")

    def __init__(self, **data):
        # ParameterError rather than a pydantic ValidationError
        for name in ("m", "n"):
            value = data.get(name)
            if isinstance(value, int) and value < 1:
                raise ParameterError(f"m and n must be >= 1, got m={data.get('m')}, n={data.get('n')}")
        super().__init__(**data)

    @property
    def order(self) -> int:
        return 4 * self.m * self.n

    @property
    def size(self) -> int:
        return 6 * self.m * self.n

    @property
    def is_square(self) -> bool:
        return self.m == self.n

    @property
    def is_degenerate(self) -> bool:
        return self.m == 1 or self.n == 1


def torus_params(m: int, n: int) -> TorusParams:
    return TorusParams(m=m, n=n)


class VertexId(BaseModel):
    model_config = ConfigDict(frozen=True)

    j: int
    i: int
    t: int

    def __str__(self) -> str:
        return f"v[{self.j},{self.i}]^{self.t}"


def _check_vertex(params: TorusParams, v: VertexId):
    if not (1 <= v.j <= params.n and 1 <= v.i <= params.m and v.t in TYPES):
        raise VertexRangeError(
            f"Vertex (j={v.j}, i={v.i}, t={v.t}) outside [m={params.m}, n={params.n}]"
        )


def vertex(params: TorusParams, j: int, i: int, t: int) -> VertexId:
    """Build a vertex from possibly out-of-range coordinates, wrapping j and i."""
    if t not in TYPES:
        raise VertexRangeError(f"Type {t} is not in 0..3")
    return VertexId(j=(j - 1) % params.n + 1, i=(i - 1) % params.m + 1, t=t)


def encode_vertex(params: TorusParams, v: VertexId) -> int:
    _check_vertex(params, v)
    return ((v.j - 1) * params.m + (v.i - 1)) * 4 + v.t


def decode_vertex(params: TorusParams, index: int) -> VertexId:
    if not 0 <= index < params.order:
        raise VertexRangeError(f"Point {index} outside 0..{params.order - 1}")
    cell, t = divmod(index, 4)
    j0, i0 = divmod(cell, params.m)
    return VertexId(j=j0 + 1, i=i0 + 1, t=t)


def neighbors(params: TorusParams, v: VertexId) -> FrozenSet[VertexId]:
    _check_vertex(params, v)
    return frozenset(
        vertex(params, v.j + dj, v.i + di, t)
        for dj, di, t in _NEIGHBOR_OFFSETS[v.t]
    )


class TorusGraph(BaseModel):
    """Immutable cubic adjacency over the 4mn flat point indices."""

    model_config = ConfigDict(frozen=True)

    params: TorusParams
    adjacency: Tuple[Tuple[int, int, int], ...]

    @property
    def order(self) -> int:
        return len(self.adjacency)

    def edges(self) -> List[Tuple[int, int]]:
        return sorted(
            (a, b) for a, ns in enumerate(self.adjacency) for b in ns if a < b
        )

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.order))
        g.add_edges_from(self.edges())
        return g


def build_torus(params: TorusParams, point_cap: int = DEFAULT_LIMITS.point_cap) -> TorusGraph:
    if params.order > point_cap:
        raise CapacityError("Torus order", params.order, point_cap)
    adjacency = []
    for index in range(params.order):
        v = decode_vertex(params, index)
        adjacency.append(
            tuple(sorted(encode_vertex(params, u) for u in neighbors(params, v)))
        )
    logger.debug(f"Built TRC4C8[{params.m},{params.n}] with {params.order} points")
    return TorusGraph(params=params, adjacency=tuple(adjacency))


class ValidationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    m: int
    n: int
    order: int
    size: int
    order_ok: bool
    size_ok: bool
    cubic: bool
    simple: bool
    symmetric: bool
    connected: bool
    degenerate: bool

    @property
    def ok(self) -> bool:
        return all(
            (self.order_ok, self.size_ok, self.cubic, self.simple, self.symmetric, self.connected)
        )


def validate_torus(graph: TorusGraph) -> ValidationReport:
    params = graph.params
    adjacency = graph.adjacency
    order = len(adjacency)
    in_range = all(0 <= b < order for ns in adjacency for b in ns)

    simple = in_range and all(
        len(set(ns)) == len(ns) and a not in ns for a, ns in enumerate(adjacency)
    )
    symmetric = in_range and all(a in adjacency[b] for a, ns in enumerate(adjacency) for b in ns)
    cubic = all(len(set(ns)) == 3 for ns in adjacency)
    size = len({tuple(sorted((a, b))) for a, ns in enumerate(adjacency) for b in ns})

    # breadth-first from point 0
    connected = False
    if order and in_range:
        seen = {0}
        queue = deque([0])
        while queue:
            for b in adjacency[queue.popleft()]:
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        connected = len(seen) == order

    return ValidationReport(
        m=params.m,
        n=params.n,
        order=order,
        size=size,
        order_ok=order == params.order,
        size_ok=size == params.size,
        cubic=cubic,
        simple=simple,
        symmetric=symmetric,
        connected=connected,
        degenerate=params.is_degenerate,
    )
