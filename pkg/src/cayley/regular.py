"""Exhaustive search for a regular subgroup inside a materialized group.

A regular subgroup R of a group acting on ``degree`` points has exactly one
element carrying point 0 to each point, and every non-identity element of R is
a derangement. The search grows a semiregular subgroup one derangement at a
time: with the subgroup S so far, it takes the smallest point p not yet reached
from 0 and branches over the derangements sending 0 to p. Any regular R
containing S contains one of them, so no candidate is missed. Subgroups reached
along different branches are explored once.
"""

import logging
from typing import Dict, List, Optional, Set

from pydantic import BaseModel, ConfigDict

from algebra.group import PermGroup, closure, orbit
from algebra.permutation import Permutation
from config import DEFAULT_LIMITS
from utils.errors import GroupBudgetError, PreconditionError

logger = logging.getLogger(__name__)


class RegularSearch(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    group: Optional[PermGroup] = None
    exhaustive: bool
    nodes: int
    derangements: int

    @property
    def found(self) -> bool:
        return self.group is not None


class _BudgetExhausted(Exception):
    pass


def _semiregular(group: PermGroup) -> bool:
    return all(p.is_identity() or p.is_derangement() for p in group)


def find_regular_subgroup(
    aut: PermGroup, degree: int, budget: int = DEFAULT_LIMITS.node_budget
) -> RegularSearch:
    if aut.degree != degree:
        raise PreconditionError(f"Group acts on {aut.degree} points, expected {degree}")

    derangements = [p for p in aut if p.is_derangement()]
    if degree <= 1:
        return RegularSearch(
            group=PermGroup.trivial(degree), exhaustive=True, nodes=0, derangements=0
        )
    if len(orbit(aut.generators, 0)) != degree:
        logger.debug("Group is not transitive; no regular subgroup")
        return RegularSearch(group=None, exhaustive=True, nodes=0, derangements=len(derangements))

    by_image: Dict[int, List[Permutation]] = {}
    for p in derangements:
        by_image.setdefault(p(0), []).append(p)

    seen: Set[frozenset] = set()
    nodes = 0

    def search(current: PermGroup) -> Optional[PermGroup]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _BudgetExhausted()
        if current.order == degree:
            return current
        reached = {g(0) for g in current}
        target = min(p for p in range(degree) if p not in reached)
        for x in by_image.get(target, []):
            try:
                grown = closure(list(current.generators) + [x], cap=degree)
            except GroupBudgetError:
                continue
            if degree % grown.order or not _semiregular(grown):
                continue
            if grown.element_set in seen:
                continue
            seen.add(grown.element_set)
            result = search(grown)
            if result is not None:
                return result
        return None

    start = PermGroup.trivial(degree)
    try:
        group = search(start)
    except _BudgetExhausted:
        logger.warning(f"Regular subgroup search stopped after {budget} nodes")
        return RegularSearch(group=None, exhaustive=False, nodes=nodes, derangements=len(derangements))

    if group is not None:
        # drop the identity generator carried over from the trivial start
        gens = [g for g in group.generators if not g.is_identity()]
        group = PermGroup(degree, gens or [group.identity], group.element_set)
    logger.debug(
        f"Regular subgroup search on {degree} points: found={group is not None}, {nodes} nodes"
    )
    return RegularSearch(group=group, exhaustive=True, nodes=nodes, derangements=len(derangements))
