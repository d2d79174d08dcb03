"""Property-based checks of invariances and kernel agreement."""

import itertools
from fractions import Fraction as F

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from multiutility.axioms import Axiom, check_axiom
from multiutility.core import Lottery, Profile, UtilitySet, UtilityVector, normalize_utility, utilities_equivalent
from multiutility.geometry import LinearSystem, cone_membership, rank, solve_feasibility
from multiutility.preferences import compare
from multiutility.representation import sets_equivalent

small = st.integers(-4, 4)
positive = st.fractions(min_value=F(1, 4), max_value=4, max_denominator=4).filter(lambda x: x > 0)
offsets = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def utilities(draw, k=3):
    return UtilityVector(tuple(draw(st.lists(small, min_size=k, max_size=k).filter(lambda v: len(set(v)) > 1))))


@st.composite
def lotteries(draw, k=3):
    weights = draw(st.lists(st.integers(0, 6), min_size=k, max_size=k).filter(any))
    total = sum(weights)
    return Lottery(tuple(F(w, total) for w in weights))


@st.composite
def utility_sets(draw, k=3):
    verts = draw(st.lists(utilities(k), min_size=1, max_size=3))
    try:
        return UtilitySet(tuple(v.values for v in verts))
    except ValueError:
        return UtilitySet((verts[0].values,))


@given(utilities(), positive, offsets)
def test_normalize_invariant(u, alpha, beta):
    assert normalize_utility(u.affine(alpha, beta)) == normalize_utility(u)
    assert normalize_utility(normalize_utility(u)) == normalize_utility(u)


@given(utilities(), positive, offsets)
def test_equivalence_affine(u, alpha, beta):
    assert utilities_equivalent(u, u.affine(alpha, beta))
    assert utilities_equivalent(u.affine(alpha, beta), u)


@given(lotteries(), lotteries(), utility_sets())
def test_compare_mirror(l, l2, s):
    assert compare(l, l2, s) is compare(l2, l, s).mirror()


@given(lotteries(), lotteries(), utility_sets(), positive, offsets)
def test_compare_scale_invariant(l, l2, s, alpha, beta):
    scaled = UtilitySet(tuple(v.affine(alpha, beta).values for v in s.vertices))
    assert compare(l, l2, scaled) is compare(l, l2, s)


@settings(max_examples=40)
@given(utility_sets(), utility_sets(), utility_sets(), positive, offsets)
def test_sets_equivalent_relation(a, b, c, alpha, beta):
    assert sets_equivalent(a, a)
    assert sets_equivalent(a, b) == sets_equivalent(b, a)
    if sets_equivalent(a, b) and sets_equivalent(b, c):
        assert sets_equivalent(a, c)
    moved = UtilitySet(tuple(v.affine(alpha, beta).values for v in a.vertices))
    assert sets_equivalent(moved, b) == sets_equivalent(a, b)


@st.composite
def systems(draw, nvars=3):
    s = LinearSystem(nvars)
    for _ in range(draw(st.integers(1, 5))):
        s.add(draw(st.lists(small, min_size=nvars, max_size=nvars)),
              draw(st.sampled_from(["<=", ">=", "==", "<", ">"])), draw(small))
    return s


@settings(max_examples=60)
@given(systems(), st.data())
def test_row_scaling_preserves_feasibility(system, data):
    i = data.draw(st.integers(0, len(system.constraints) - 1))
    factor = data.draw(positive)
    assert solve_feasibility(system).feasible == solve_feasibility(system.scaled_row(i, factor)).feasible


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=3), st.lists(small, min_size=3, max_size=3))
def test_cone_membership_matches_grid(gens, target):
    if len(set(target)) == 1:
        return
    got = cone_membership(target, gens)
    if got is not None:
        weights, shift = got
        assert all(w >= 0 for w in weights)
        assert tuple(sum((w * g[z] for w, g in zip(weights, gens)), F(0)) + shift for z in range(3)) == tuple(target)
    # any small integer combination that hits the target must be found
    for weights in itertools.product(range(4), repeat=len(gens)):
        diff = [target[z] - sum(w * g[z] for w, g in zip(weights, gens)) for z in range(3)]
        if len(set(diff)) == 1:
            assert got is not None
            break


@given(st.lists(st.lists(small, min_size=4, max_size=4), max_size=6))
def test_rank_matches_sympy(vectors):
    expected = sympy.Matrix(vectors).rank() if vectors else 0
    assert rank(vectors) == expected


@settings(max_examples=25, deadline=None)
@given(utility_sets(), utility_sets(), utility_sets(), positive, offsets)
def test_axiom_verdicts_scale_invariant(a, b, social, alpha, beta):
    p = Profile.build([[v.values for v in a.vertices], [v.values for v in b.vertices]],
                      [v.values for v in social.vertices])
    scaled = Profile.build([[v.affine(alpha, beta).values for v in a.vertices], [v.values for v in b.vertices]],
                           [v.values for v in social.vertices])
    for axiom in Axiom:
        assert check_axiom(p, axiom).holds == check_axiom(scaled, axiom).holds
