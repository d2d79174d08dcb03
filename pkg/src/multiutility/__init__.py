"""Exact verification of unanimity axioms for profiles of expected
multi-utility preferences over lotteries, with utility sets given as
polytopes."""

from multiutility.axioms import Axiom, AxiomVerdict, check_axiom, direction_to_lottery_pair, verify_certificate
from multiutility.core import (
    Lottery,
    OutcomeSpace,
    Profile,
    UtilitySet,
    UtilityVector,
    no_conflict_pair,
    normalize_utility,
    utilities_equivalent,
    validate_utility_set,
)
from multiutility.geometry import LinearSystem, cone_membership, polytope_membership, rank, solve_feasibility
from multiutility.oracle import GridSpec, enumerate_lotteries, grid_check
from multiutility.preferences import (
    Relation,
    StrictlyIncreasingSet,
    compare,
    expected_utility,
    is_strictly_increasing,
    make_strictly_increasing,
)
from multiutility.representation import (
    ConditionVerdict,
    aggregate_minkowski,
    aggregate_union_hull,
    bi_independent,
    check_nonreversal_condition,
    check_pareto_condition,
    check_prop1_condition,
    check_prop2_condition,
    check_theorem1_condition,
    contains_equivalent,
    sets_equivalent,
)

__version__ = "0.1.0"
