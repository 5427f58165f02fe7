import pytest

from cayley.verdict import CayleyAnswer, decide_cayley
from config import SearchLimits
from torus.graph import torus_params


def test_square_torus_is_cayley():
    verdict = decide_cayley(torus_params(3, 3))
    assert verdict.is_cayley == CayleyAnswer.YES
    assert verdict.witness_group_order == 36
    assert verdict.connection_set_size == 3
    assert verdict.witness is not None
    assert verdict.witness.base.model_dump() == {"j": 1, "i": 1, "t": 0}


def test_3x2_is_not_cayley():
    verdict = decide_cayley(torus_params(3, 2))
    assert verdict.is_cayley == CayleyAnswer.NO
    assert verdict.exhaustive
    assert verdict.aut_order is not None and verdict.aut_order % 6 == 0
    assert verdict.vertex_transitive is False
    assert verdict.reference_aut_order == 8
    assert any("differs" in note for note in verdict.notes)
    assert verdict.witness is None


def test_k4_is_cayley():
    verdict = decide_cayley(torus_params(1, 1))
    assert verdict.is_cayley == CayleyAnswer.YES
    assert verdict.witness_group_order == 4


def test_square_with_aut():
    verdict = decide_cayley(torus_params(2, 2), with_aut=True)
    assert verdict.is_cayley == CayleyAnswer.YES
    assert verdict.aut_order is not None and verdict.aut_order % 16 == 0
    assert verdict.vertex_transitive


@pytest.mark.parametrize("m, n", [(1, 2), (2, 1)])
def test_degenerate_rectangles_reach_a_verdict(m, n):
    verdict = decide_cayley(torus_params(m, n))
    assert verdict.is_cayley in (CayleyAnswer.YES, CayleyAnswer.NO)
    assert verdict.exhaustive
    if verdict.is_cayley == CayleyAnswer.YES:
        assert verdict.witness is not None


def test_oversize_rectangle_is_inconclusive():
    verdict = decide_cayley(torus_params(5, 4))
    assert verdict.is_cayley == CayleyAnswer.INCONCLUSIVE
    assert verdict.notes


def test_budget_exhaustion_is_inconclusive():
    verdict = decide_cayley(torus_params(3, 2), budget=3, limits=SearchLimits())
    assert verdict.is_cayley == CayleyAnswer.INCONCLUSIVE
    assert verdict.budget_exhausted
    assert not verdict.exhaustive
