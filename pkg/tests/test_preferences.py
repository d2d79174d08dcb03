from fractions import Fraction as F

from multiutility.core import Lottery, UtilitySet, UtilityVector
from multiutility.preferences import (
    Relation,
    compare,
    expected_utility,
    is_strictly_increasing,
    make_strictly_increasing,
)


def test_expected_utility():
    assert expected_utility(Lottery.uniform(3), UtilityVector((2, 1, 0))) == 1
    assert expected_utility(Lottery.degenerate(3, 0), UtilityVector((2, 1, 0))) == 2
    l = Lottery((F(1, 9), F(2, 3), F(2, 9)))
    assert expected_utility(l, UtilityVector((1, 2, 0))) == F(13, 9)


def test_compare():
    a, b, c = (Lottery.degenerate(3, i) for i in range(3))
    segment = UtilitySet(((1, 0, 0), (0, 1, 0)))
    assert compare(a, a, segment) is Relation.INDIFFERENT
    assert compare(a, b, segment) is Relation.INCOMPARABLE
    assert compare(a, c, UtilitySet(((2, 1, 0), (1, 2, 0)))) is Relation.STRICTLY_PREFERRED
    assert compare(c, a, UtilitySet(((2, 1, 0), (1, 2, 0)))) is Relation.STRICTLY_DISPREFERRED


def test_mirror():
    assert Relation.STRICTLY_PREFERRED.mirror() is Relation.STRICTLY_DISPREFERRED
    assert Relation.INCOMPARABLE.mirror() is Relation.INCOMPARABLE


def test_strictly_increasing_singleton():
    assert is_strictly_increasing(UtilitySet(((2, 1, 0),))).holds


def test_strictly_increasing_counterexample_is_genuine():
    s = UtilitySet(((1, 0, 0), (0, 1, 0)))
    verdict = is_strictly_increasing(s)
    assert not verdict.holds
    d = verdict.direction
    assert sum(d) == 0
    # d ranks strictly under the induced relation (weakly everywhere, strictly somewhere) but the vertex ties
    scores = [sum(x * y for x, y in zip(d, v)) for v in s.vertices]
    assert min(scores) >= 0 and max(scores) > 0
    assert verdict.vertex.dot(d) == 0


def test_strictly_increasing_equivalent_vertices():
    assert is_strictly_increasing(UtilitySet(((1, 0, 0), (2, 1, 1)))).holds
    # (2,0,1) is not u + 1 for u = (1,0,0); the direction (0,-1,1) separates them
    literal = is_strictly_increasing(UtilitySet(((1, 0, 0), (2, 0, 1))))
    assert not literal.holds
    assert literal.vertex.dot(literal.direction) == 0


def test_barycenter_wrapper():
    w = make_strictly_increasing(UtilitySet(((1, 0, 0), (0, 1, 0))))
    assert w.barycenter.values == (F(1, 2), F(1, 2), 0)
    assert make_strictly_increasing(UtilitySet(((2, 1, 0),))).barycenter.values == (2, 1, 0)
    d = (1, 0, -1)
    assert w.barycenter.dot(d) == F(1, 2)
    for shifted in w.shifted(F(1, 10)):
        assert sum(x * y for x, y in zip(d, shifted)) > 0


def test_wrapper_breaks_ties():
    w = make_strictly_increasing(UtilitySet(((1, 0, 0), (0, 1, 0))))
    a, c = Lottery.degenerate(3, 0), Lottery.degenerate(3, 2)
    assert compare(a, c, w) is Relation.STRICTLY_PREFERRED
