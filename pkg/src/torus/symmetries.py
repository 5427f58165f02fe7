"""The four torus symmetries g1..g4 and machine checks of their algebra.

    g1: (j, i, t) -> (j, i - 1, t)
    g2: (j, i, t) -> (j + 1, i, t)
    g3: (j, i, t) -> (i, j, s3(t))                    s3 = 3<->2, 1<->0, square tori only
    g4: (j, i, t) -> (n - j + 1, n - i + 1, s4(t))    s4 = 3<->0, 2<->1, square tori only

Words over the generators are read right-to-left, the same way ``compose`` is.
"""

import logging
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from algebra.automorphism import is_automorphism
from algebra.group import (
    PermGroup,
    closure,
    intersect,
    is_normal,
)
from algebra.permutation import (
    Permutation,
    compose,
    compose_all,
    conjugate,
    inverse,
    power,
)
from config import DEFAULT_LIMITS
from torus.graph import (
    TorusGraph,
    TorusParams,
    VertexId,
    build_torus,
    decode_vertex,
    encode_vertex,
    vertex,
)
from utils.errors import InternalConsistencyError, ShapeError

logger = logging.getLogger(__name__)

_S3 = {3: 2, 2: 3, 1: 0, 0: 1}
_S4 = {3: 0, 2: 1, 1: 2, 0: 3}
_COLUMN_MIRROR = {3: 0, 0: 3, 1: 1, 2: 2}
_ROW_MIRROR = {1: 2, 2: 1, 0: 0, 3: 3}


def _vertex_map(params: TorusParams, f: Callable[[VertexId], VertexId]) -> Permutation:
    return Permutation(
        encode_vertex(params, f(decode_vertex(params, x))) for x in range(params.order)
    )


def _verified(graph: TorusGraph, name: str, p: Permutation) -> Permutation:
    if not is_automorphism(graph, p):
        raise InternalConsistencyError(
            f"{name} is not an automorphism of TRC4C8[{graph.params.m},{graph.params.n}]"
        )
    return p


class GeneratorSet(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    params: TorusParams
    g1: Permutation
    g2: Permutation
    g3: Optional[Permutation] = None
    g4: Optional[Permutation] = None

    @property
    def degree(self) -> int:
        return self.params.order

    def get(self, k: int) -> Permutation:
        if k in (3, 4) and not self.params.is_square:
            raise ShapeError(
                f"g{k} exists only on square tori, got m={self.params.m}, n={self.params.n}"
            )
        try:
            return {1: self.g1, 2: self.g2, 3: self.g3, 4: self.g4}[k]
        except KeyError:
            raise ValueError(f"Unknown generator g{k}") from None

    def present(self) -> List[Tuple[int, Permutation]]:
        result = [(1, self.g1), (2, self.g2)]
        if self.g3 is not None and self.g4 is not None:
            result += [(3, self.g3), (4, self.g4)]
        return result


def make_generators(params: TorusParams, graph: Optional[TorusGraph] = None) -> GeneratorSet:
    """g1 and g2 for every torus; g3 and g4 as well when m = n.

    Every map is checked against the graph before it is returned.
    """
    graph = graph or build_torus(params)
    n = params.n

    g1 = _vertex_map(params, lambda v: vertex(params, v.j, v.i - 1, v.t))
    g2 = _vertex_map(params, lambda v: vertex(params, v.j + 1, v.i, v.t))
    g3 = g4 = None
    if params.is_square:
        g3 = _vertex_map(params, lambda v: vertex(params, v.i, v.j, _S3[v.t]))
        g4 = _vertex_map(
            params, lambda v: vertex(params, n - v.j + 1, n - v.i + 1, _S4[v.t])
        )

    gens = GeneratorSet(params=params, g1=g1, g2=g2, g3=g3, g4=g4)
    for k, p in gens.present():
        _verified(graph, f"g{k}", p)
    return gens


def square_generators(n: int) -> GeneratorSet:
    return make_generators(TorusParams(m=n, n=n))


def rectangular_reflections(params: TorusParams) -> Tuple[Permutation, Permutation]:
    """Column and row mirrors; automorphisms for every m, n, outside <g1..g4>."""
    graph = build_torus(params)
    column = _vertex_map(
        params, lambda v: vertex(params, 2 - v.j, v.i, _COLUMN_MIRROR[v.t])
    )
    row = _vertex_map(params, lambda v: vertex(params, v.j, 2 - v.i, _ROW_MIRROR[v.t]))
    return _verified(graph, "column mirror", column), _verified(graph, "row mirror", row)


class GroupWord(BaseModel):
    """A product of generator powers, evaluated right-to-left."""

    model_config = ConfigDict(frozen=True)

    factors: Tuple[Tuple[int, int], ...] = ()

    def evaluate(self, gens: GeneratorSet) -> Permutation:
        return compose_all(
            [power(gens.get(k), e) for k, e in self.factors], gens.degree
        )

    def normalized(self) -> "GroupWord":
        """Merge neighbouring powers, reduce involutions mod 2, drop zero powers."""
        merged: List[List[int]] = []
        for k, e in self.factors:
            if e == 0:
                continue
            if merged and merged[-1][0] == k:
                merged[-1][1] += e
            else:
                merged.append([k, e])
        factors = []
        for k, e in merged:
            if k in (3, 4):
                e %= 2
            if e:
                factors.append((k, e))
        return GroupWord(factors=tuple(factors))

    def inverse(self) -> "GroupWord":
        return GroupWord(factors=tuple((k, -e) for k, e in reversed(self.factors)))

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"g{k}" if e == 1 else f"g{k}^{e}" for k, e in self.factors)


def _word(*factors: Tuple[int, int]) -> GroupWord:
    return GroupWord(factors=tuple(factors))


class RelationCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    relation: str
    holds: bool


class RelationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    relations: List[RelationCheck]
    derived: List[RelationCheck]

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.relations + self.derived)


def _relation_table(n: int) -> List[Tuple[str, GroupWord, GroupWord]]:
    return [
        ("g1^n = 1", _word((1, n)), _word()),
        ("g2^n = 1", _word((2, n)), _word()),
        ("g3^2 = 1", _word((3, 2)), _word()),
        ("g4^2 = 1", _word((4, 2)), _word()),
        ("g1*g2 = g2*g1", _word((1, 1), (2, 1)), _word((2, 1), (1, 1))),
        ("g3*g4 = g4*g3", _word((3, 1), (4, 1)), _word((4, 1), (3, 1))),
        ("g1*g4 = g4*g1^-1", _word((1, 1), (4, 1)), _word((4, 1), (1, -1))),
        ("g2*g4 = g4*g2^-1", _word((2, 1), (4, 1)), _word((4, 1), (2, -1))),
        ("g2*g3 = g3*g1^-1", _word((2, 1), (3, 1)), _word((3, 1), (1, -1))),
    ]


_DERIVED = [
    ("g1*g3 = g3*g2^-1", _word((1, 1), (3, 1)), _word((3, 1), (2, -1))),
]


def _check(gens: GeneratorSet, table) -> List[RelationCheck]:
    return [
        RelationCheck(relation=text, holds=lhs.evaluate(gens) == rhs.evaluate(gens))
        for text, lhs, rhs in table
    ]


def verify_relations(n: int) -> RelationReport:
    gens = square_generators(n)
    report = RelationReport(
        n=n,
        relations=_check(gens, _relation_table(n)),
        derived=_check(gens, _DERIVED),
    )
    for r in report.relations + report.derived:
        if not r.holds:
            logger.warning(f"Relation {r.relation} fails on [{n},{n}]")
    return report


def describe_group(group: PermGroup) -> str:
    """Isomorphism type of a group of order <= 4, or of a C_k x C_k, else a summary."""
    order = group.order
    orders = group.exponent_profile()
    exponent = max(orders)
    if order == 1:
        return "1"
    if exponent == order:
        return f"C{order}"
    if group.is_abelian():
        root = round(order ** 0.5)
        if root * root == order and exponent == root and len(group.generators) <= 2:
            return f"C{root} x C{root}"
        return f"abelian of order {order}, exponent {exponent}"
    return f"non-abelian of order {order}"


class StructureReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    H_order: int
    K_order: int
    G_order: int
    expected_G_order: int
    H_type: str
    K_type: str
    H_abelian: bool
    K_elementary_abelian: bool
    H_normal: bool
    K_normal: bool
    intersection_order: int
    order_product_matches: bool
    unique_factorization: bool
    conjugations: List[RelationCheck]
    product_kind: str

    @property
    def is_semidirect(self) -> bool:
        return (
            self.H_normal
            and self.intersection_order == 1
            and self.order_product_matches
            and self.unique_factorization
        )


def _elementary_abelian_2(group: PermGroup) -> bool:
    return group.is_abelian() and all(p.order <= 2 for p in group)


def verify_group_structure(n: int, cap: int = DEFAULT_LIMITS.closure_cap) -> StructureReport:
    gens = square_generators(n)
    g1, g2, g3, g4 = (gens.get(k) for k in (1, 2, 3, 4))
    H = closure([g1, g2], cap)
    K = closure([g3, g4], cap)
    G = closure([g1, g2, g3, g4], cap)

    products = {compose(h, k) for h in H for k in K}
    unique = len(products) == H.order * K.order and products == set(G.element_set)

    conjugations = [
        RelationCheck(relation="g3^-1*g1*g3 = g2^-1", holds=conjugate(g1, g3) == inverse(g2)),
        RelationCheck(relation="g3^-1*g2*g3 = g1^-1", holds=conjugate(g2, g3) == inverse(g1)),
        RelationCheck(relation="g4^-1*g1*g4 = g1^-1", holds=conjugate(g1, g4) == inverse(g1)),
        RelationCheck(relation="g4^-1*g2*g4 = g2^-1", holds=conjugate(g2, g4) == inverse(g2)),
    ]
    k_normal = is_normal(K, G)
    report = StructureReport(
        n=n,
        H_order=H.order,
        K_order=K.order,
        G_order=G.order,
        expected_G_order=4 * n * n,
        H_type=describe_group(H),
        K_type=describe_group(K),
        H_abelian=H.is_abelian(),
        K_elementary_abelian=_elementary_abelian_2(K),
        H_normal=is_normal(H, G),
        K_normal=k_normal,
        intersection_order=intersect(H, K).order,
        order_product_matches=H.order * K.order == G.order,
        unique_factorization=unique,
        conjugations=conjugations,
        product_kind="direct" if k_normal else "semidirect",
    )
    logger.info(
        f"[{n},{n}]: |H|={report.H_order} |K|={report.K_order} |G|={report.G_order} "
        f"H normal={report.H_normal} |H&K|={report.intersection_order}"
    )
    return report


def witness_group(n: int, cap: int = DEFAULT_LIMITS.closure_cap) -> PermGroup:
    """G = <g1, g2, g3, g4> on [n, n]."""
    gens = square_generators(n)
    return closure([p for _, p in gens.present()], cap)


def is_stabilizer_trivial(group: PermGroup, point: int) -> bool:
    return all(p.is_identity() or p(point) != point for p in group)


# Explicit words for mixed-type transport, keyed by (source type, target type).
# Arguments are the source column/row (j, i) and the target column/row (j2, i2).
_MIXED_WORDS: Dict[Tuple[int, int], Callable[[int, int, int, int], GroupWord]] = {
    (3, 2): lambda j, i, j2, i2: _word((1, j - i2), (2, j2 - i), (3, 1)),
    (3, 0): lambda j, i, j2, i2: _word((1, -i2 - i + 1), (2, j2 + j - 1), (4, 1)),
    (3, 1): lambda j, i, j2, i2: _word((1, -i2 - j + 1), (2, j2 + i - 1), (3, 1), (4, 1)),
    (2, 1): lambda j, i, j2, i2: _word((1, -i2 - i + 1), (2, j2 + j - 1), (4, 1)),
    (2, 0): lambda j, i, j2, i2: _word((1, -i2 - j + 1), (2, j2 + i - 1), (4, 1), (3, 1)),
    (1, 0): lambda j, i, j2, i2: _word((1, j - i2), (2, j2 - i), (3, 1)),
}


def _transport_word(v: VertexId, w: VertexId) -> GroupWord:
    if v.t == w.t:
        return _word((1, v.i - w.i), (2, w.j - v.j))
    if (v.t, w.t) in _MIXED_WORDS:
        return _MIXED_WORDS[v.t, w.t](v.j, v.i, w.j, w.i)
    # reverse direction of a listed pair: invert the word carrying w to v
    return _MIXED_WORDS[w.t, v.t](w.j, w.i, v.j, v.i).inverse()


def transport(
    n: int, v: VertexId, w: VertexId, gens: Optional[GeneratorSet] = None
) -> GroupWord:
    """A word over g1..g4 carrying v to w on [n, n], verified before it is returned."""
    params = TorusParams(m=n, n=n)
    gens = gens or square_generators(n)
    source = encode_vertex(params, v)
    target = encode_vertex(params, w)

    word = _transport_word(v, w).normalized()
    if word.evaluate(gens)(source) != target:
        raise InternalConsistencyError(f"Word {word} does not carry {v} to {w} on [{n},{n}]")
    return word
