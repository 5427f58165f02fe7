"""Fully materialized permutation groups.

Groups here are small (the regular witnesses have order 4n^2 and the brute-force
automorphism targets stay under a few thousand elements), so every group keeps
its complete element set in canonical (lexicographic) order.
"""

from __future__ import annotations

import logging
from collections import deque
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Set, Tuple

from pydantic import BaseModel, ConfigDict

from algebra.permutation import Permutation, compose, inverse
from utils.errors import (
    DegreeMismatchError,
    GroupBudgetError,
    PreconditionError,
)

logger = logging.getLogger(__name__)

DEFAULT_CLOSURE_CAP = 1_000_000


class PermGroup:
    __slots__ = ("_degree", "_generators", "_elements", "_element_set")

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation],
        elements: Iterable[Permutation],
    ):
        self._degree = degree
        self._generators = tuple(generators)
        self._element_set: FrozenSet[Permutation] = frozenset(elements)
        self._elements: Tuple[Permutation, ...] = tuple(sorted(self._element_set))

    @classmethod
    def trivial(cls, degree: int) -> PermGroup:
        e = Permutation.identity(degree)
        return cls(degree, [e], [e])

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Permutation]) -> PermGroup:
        """Wrap a set already known to be a group, picking a greedy generating set."""
        element_set = frozenset(elements)
        generators: List[Permutation] = []
        generated: Set[Permutation] = {Permutation.identity(degree)}
        for p in sorted(element_set):
            if p not in generated:
                generators.append(p)
                generated = set(closure(generators, cap=len(element_set)).elements)
        if not generators:
            generators = [Permutation.identity(degree)]
        return cls(degree, generators, element_set)

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> Tuple[Permutation, ...]:
        return self._generators

    @property
    def elements(self) -> Tuple[Permutation, ...]:
        return self._elements

    @property
    def element_set(self) -> FrozenSet[Permutation]:
        return self._element_set

    @property
    def order(self) -> int:
        return len(self._elements)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self._degree)

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self._elements)

    def __contains__(self, p: object) -> bool:
        return p in self._element_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self._degree == other._degree and self._element_set == other._element_set

    def __hash__(self) -> int:
        return hash(self._element_set)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self._degree}, order={self.order})"

    def is_abelian(self) -> bool:
        gens = self._generators
        return all(compose(a, b) == compose(b, a) for a in gens for b in gens)

    def exponent_profile(self) -> List[int]:
        """Sorted element orders."""
        return sorted(p.order for p in self._elements)


def closure(gens: Sequence[Permutation], cap: int = DEFAULT_CLOSURE_CAP) -> PermGroup:
    """Breadth-first closure of ``gens`` under left composition, from the identity."""
    if not gens:
        raise ValueError("closure needs at least one generator")
    degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatchError(degree, g.degree)

    e = Permutation.identity(degree)
    seen: Set[Permutation] = {e}
    frontier = deque([e])
    while frontier:
        x = frontier.popleft()
        for g in gens:
            y = compose(g, x)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise GroupBudgetError(cap)
                frontier.append(y)
    logger.debug(f"Closure of {len(gens)} generators on {degree} points: order {len(seen)}")
    return PermGroup(degree, gens, seen)


def orbit(gens: Sequence[Permutation], point: int) -> Set[int]:
    if gens and not 0 <= point < gens[0].degree:
        raise ValueError(f"Point {point} outside 0..{gens[0].degree - 1}")
    result = {point}
    queue = deque([point])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g(x)
            if y not in result:
                result.add(y)
                queue.append(y)
    return result


def orbits(group: PermGroup) -> List[Tuple[int, ...]]:
    """Orbit partition, each orbit sorted, orbits ordered by smallest point."""
    remaining = set(range(group.degree))
    result = []
    while remaining:
        start = min(remaining)
        o = orbit(group.generators, start)
        remaining -= o
        result.append(tuple(sorted(o)))
    return result


def stabilizer(group: PermGroup, point: int) -> PermGroup:
    fixing = [p for p in group if p(point) == point]
    return PermGroup.from_elements(group.degree, fixing)


class RegularityCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    transitive: bool
    order_equals_degree: bool

    @property
    def regular(self) -> bool:
        return self.transitive and self.order_equals_degree


def regularity(group: PermGroup) -> RegularityCheck:
    transitive = len(orbit(group.generators, 0)) == group.degree if group.degree else True
    return RegularityCheck(
        transitive=transitive,
        order_equals_degree=group.order == group.degree,
    )


def is_regular_action(group: PermGroup) -> bool:
    return regularity(group).regular


def is_subgroup(sub: PermGroup, group: PermGroup) -> bool:
    return sub.degree == group.degree and sub.element_set <= group.element_set


def is_normal(sub: PermGroup, group: PermGroup) -> bool:
    """``g^-1 h g`` in ``sub`` for every generator pair; enough for normality."""
    if not is_subgroup(sub, group):
        raise PreconditionError("Subgroup elements are not all contained in the group")
    for g in group.generators:
        g_inv = inverse(g)
        for h in sub.generators:
            if compose(g_inv, compose(h, g)) not in sub:
                return False
    return True


def intersect(a: PermGroup, b: PermGroup) -> PermGroup:
    if a.degree != b.degree:
        raise DegreeMismatchError(a.degree, b.degree)
    return PermGroup.from_elements(a.degree, a.element_set & b.element_set)
