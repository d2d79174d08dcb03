from fractions import Fraction as F

from multiutility.axioms import Axiom, check_axiom, verify_certificate
from multiutility.core import Lottery, OutcomeSpace
from multiutility.oracle import GridSpec, count_pairs, enumerate_lotteries, grid_check


def test_enumerate_lotteries():
    two = enumerate_lotteries(GridSpec(2, OutcomeSpace.of_size(2)))
    assert [l.probabilities for l in two] == [(0, 1), (F(1, 2), F(1, 2)), (1, 0)]
    assert len(enumerate_lotteries(GridSpec(1, OutcomeSpace.of_size(3)))) == 3
    assert len(enumerate_lotteries(GridSpec(3, OutcomeSpace.of_size(3)))) == 10
    assert count_pairs(GridSpec(1, OutcomeSpace.of_size(2))) == 2


def test_p2_grid(p2):
    pairs = grid_check(p2, Axiom.PARETO_STAR, GridSpec(3, p2.space))
    assert (Lottery.uniform(3), Lottery((F(1, 3), F(2, 3), 0))) in pairs
    assert all(verify_certificate(p2, Axiom.PARETO_STAR, l, l2) for l, l2 in pairs)
    assert not check_axiom(p2, Axiom.PARETO_STAR).holds


def test_p1_grid_empty(p1):
    assert grid_check(p1, Axiom.PARETO_STAR, GridSpec(4, p1.space)) == []


def test_refinement_keeps_violations(p5):
    coarse = grid_check(p5, Axiom.PARETO_STAR, GridSpec(3, p5.space))
    fine = set(grid_check(p5, Axiom.PARETO_STAR, GridSpec(9, p5.space)))
    assert coarse and set(coarse) <= fine


def test_p5_non_reversal_grid_empty(p5):
    assert grid_check(p5, Axiom.NON_REVERSAL, GridSpec(5, p5.space)) == []
