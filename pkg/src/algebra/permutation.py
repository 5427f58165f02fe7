"""Dense permutations of ``{0..deg-1}``.

Composition is right-to-left: ``compose(p, q)`` applies ``q`` first, so that the
juxtaposition ``g2 g3`` written in a proof is ``compose(g2, g3)`` here, and
``p * q`` means the same thing.
"""

from __future__ import annotations

import functools
import math
from typing import Iterable, List, Sequence, Tuple

from utils.errors import DegreeMismatchError, NotAPermutationError


@functools.total_ordering
class Permutation:
    """A bijection on ``range(degree)`` stored as its image sequence.

    Ordering is lexicographic on the image sequence; that is the canonical
    order every group listing and report follows.
    """

    __slots__ = ("_images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise NotAPermutationError(
                f"Images do not form a bijection on 0..{len(images) - 1}"
            )
        self._images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: Tuple[int, ...]) -> Permutation:
        # skips the bijection check; callers guarantee it
        p = cls.__new__(cls)
        p._images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls._trusted(tuple(range(degree)))

    @property
    def images(self) -> Tuple[int, ...]:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    def __call__(self, point: int) -> int:
        return self._images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        return power(self, k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other: Permutation) -> bool:
        return self._images < other._images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({list(self._images)})"

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self._images))

    def fixed_points(self) -> List[int]:
        return [x for x, y in enumerate(self._images) if x == y]

    def is_derangement(self) -> bool:
        return not self.fixed_points()

    def cycles(self) -> List[Tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point, sorted."""
        seen = [False] * self.degree
        result = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            x = self._images[start]
            while x != start:
                cycle.append(x)
                seen[x] = True
                x = self._images[x]
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    @property
    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))


def _check_degrees(p: Permutation, q: Permutation):
    if p.degree != q.degree:
        raise DegreeMismatchError(p.degree, q.degree)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``r`` with ``r(x) = p(q(x))``."""
    _check_degrees(p, q)
    return Permutation._trusted(tuple(map(p._images.__getitem__, q._images)))


def compose_all(factors: Sequence[Permutation], degree: int) -> Permutation:
    """Right-to-left product of ``factors``; the identity when empty."""
    result = Permutation.identity(degree)
    for factor in factors:
        result = compose(result, factor)
    return result


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for x, y in enumerate(p.images):
        inv[y] = x
    return Permutation._trusted(tuple(inv))


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        return power(inverse(p), -k)
    result = Permutation.identity(p.degree)
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def conjugate(h: Permutation, g: Permutation) -> Permutation:
    """``g^-1 h g``."""
    return compose(inverse(g), compose(h, g))
