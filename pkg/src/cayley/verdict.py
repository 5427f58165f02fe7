import logging
from enum import StrEnum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict

from algebra.group import PermGroup, closure, is_regular_action, orbits
from cayley.automorphisms import REFERENCE_AUT_ORDERS, brute_force_aut
from cayley.connection import connection_set, verify_cayley_isomorphism
from cayley.regular import find_regular_subgroup
from config import DEFAULT_LIMITS, SearchLimits
from torus.graph import TorusGraph, TorusParams, VertexId, build_torus
from torus.symmetries import make_generators
from utils.errors import GroupBudgetError, SearchBudgetError

logger = logging.getLogger(__name__)

BASE_VERTEX = VertexId(j=1, i=1, t=0)


class CayleyAnswer(StrEnum):
    YES = "yes"
    NO = "no"
    INCONCLUSIVE = "inconclusive"


class CayleyWitness(BaseModel):
    """A regular subgroup whose canonical Cayley map onto the torus was verified."""

    model_config = ConfigDict(frozen=True)

    source: str
    group_order: int
    base: VertexId
    generators: List[List[int]]
    connection_set: List[List[int]]


class CayleyVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    m: int
    n: int
    is_cayley: CayleyAnswer
    witness_group_order: Optional[int] = None
    connection_set_size: Optional[int] = None
    aut_order: Optional[int] = None
    vertex_transitive: Optional[bool] = None
    orbit_count: Optional[int] = None
    exhaustive: bool = False
    budget_exhausted: bool = False
    reference_aut_order: Optional[int] = None
    witness: Optional[CayleyWitness] = None
    notes: List[str] = []


def _witness(graph: TorusGraph, group: PermGroup, source: str) -> Optional[CayleyWitness]:
    if not is_regular_action(group) or not verify_cayley_isomorphism(graph, group, BASE_VERTEX):
        return None
    s = connection_set(graph, group, BASE_VERTEX)
    return CayleyWitness(
        source=source,
        group_order=group.order,
        base=BASE_VERTEX,
        generators=[list(g.images) for g in group.generators],
        connection_set=[list(x.images) for x in sorted(s.elements)],
    )


def decide_cayley(
    params: TorusParams,
    budget: int = DEFAULT_LIMITS.node_budget,
    limits: SearchLimits = DEFAULT_LIMITS,
    with_aut: bool = False,
) -> CayleyVerdict:
    """Decide whether TRC4C8[m,n] is a Cayley graph.

    Square tori go through the generator construction. Everything else needs
    the full automorphism group: an intransitive group settles "no" at once,
    otherwise the regular-subgroup search decides. Budget exhaustion yields
    "inconclusive", never a guess.
    """
    graph = build_torus(params, limits.point_cap)
    fields = dict(m=params.m, n=params.n, reference_aut_order=REFERENCE_AUT_ORDERS.get((params.m, params.n)))
    notes: List[str] = []
    witness = None

    if params.is_square:
        try:
            gens = make_generators(params, graph)
            group = closure([p for _, p in gens.present()], limits.closure_cap)
            witness = _witness(graph, group, "generators g1..g4")
        except GroupBudgetError as e:
            notes.append(str(e))
        if witness is None:
            notes.append("generator construction did not yield a verified witness")

    small_enough = params.order <= limits.aut_vertex_cap
    if witness is not None and not (with_aut and small_enough):
        logger.info(f"TRC4C8[{params.m},{params.n}] is Cayley on a group of order {witness.group_order}")
        return CayleyVerdict(
            **fields,
            is_cayley=CayleyAnswer.YES,
            witness_group_order=witness.group_order,
            connection_set_size=len(witness.connection_set),
            vertex_transitive=True,
            orbit_count=1,
            exhaustive=True,
            witness=witness,
            notes=notes,
        )

    if not small_enough:
        notes.append(
            f"order {params.order} exceeds the brute-force cap {limits.aut_vertex_cap}"
        )
        return CayleyVerdict(**fields, is_cayley=CayleyAnswer.INCONCLUSIVE, notes=notes)

    try:
        aut = brute_force_aut(graph, budget, limits.aut_vertex_cap)
    except SearchBudgetError as e:
        notes.append(str(e))
        if witness is not None:
            return CayleyVerdict(
                **fields,
                is_cayley=CayleyAnswer.YES,
                witness_group_order=witness.group_order,
                connection_set_size=len(witness.connection_set),
                vertex_transitive=True,
                orbit_count=1,
                exhaustive=True,
                budget_exhausted=True,
                witness=witness,
                notes=notes,
            )
        return CayleyVerdict(
            **fields, is_cayley=CayleyAnswer.INCONCLUSIVE, budget_exhausted=True, notes=notes
        )

    parts = orbits(aut)
    aut_fields = dict(aut_order=aut.order, vertex_transitive=len(parts) == 1, orbit_count=len(parts))
    reference = fields["reference_aut_order"]
    if reference is not None and reference != aut.order:
        notes.append(f"computed automorphism group order {aut.order} differs from the published {reference}")

    if witness is None and len(parts) > 1:
        notes.append(f"automorphism group has {len(parts)} vertex orbits")
        logger.info(f"TRC4C8[{params.m},{params.n}] is not vertex-transitive")
        return CayleyVerdict(
            **fields, **aut_fields, is_cayley=CayleyAnswer.NO, exhaustive=True, notes=notes
        )

    if witness is None:
        search = find_regular_subgroup(aut, params.order, budget)
        if search.group is not None:
            witness = _witness(graph, search.group, "regular subgroup of Aut")
        elif search.exhaustive:
            notes.append(
                f"no regular subgroup of order {params.order} among {search.derangements} derangements"
            )
            return CayleyVerdict(
                **fields, **aut_fields, is_cayley=CayleyAnswer.NO, exhaustive=True, notes=notes
            )
        else:
            return CayleyVerdict(
                **fields,
                **aut_fields,
                is_cayley=CayleyAnswer.INCONCLUSIVE,
                budget_exhausted=True,
                notes=notes + ["regular subgroup search exhausted its budget"],
            )

    if witness is None:
        notes.append("regular subgroup found but its Cayley map failed verification")
        return CayleyVerdict(**fields, **aut_fields, is_cayley=CayleyAnswer.INCONCLUSIVE, notes=notes)

    return CayleyVerdict(
        **fields,
        **aut_fields,
        is_cayley=CayleyAnswer.YES,
        witness_group_order=witness.group_order,
        connection_set_size=len(witness.connection_set),
        exhaustive=True,
        witness=witness,
        notes=notes,
    )
