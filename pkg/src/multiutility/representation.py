"""Representation conditions on profiles and aggregation rules meeting them.

All quantifiers over utility sets are discharged at vertices.  The arguments
that make this exact:

* Weighted-sum condition ("every combination of individual utilities is matched
  by some social utility, up to a nonnegative weighted sum plus constant").
  Checking vertex combinations is necessary since vertices are combinations.
  It is sufficient: if every vertex combination is matched then, for any
  ``d`` that is ``<= 0`` on the social set and, for every agent, ``> 0`` at
  some point of that agent's set, picking for each agent a vertex where ``d``
  is positive yields a matched social utility with ``d . u0 > 0``, a
  contradiction.  So the Pareto* axiom holds, and with a no-conflict pair the
  axiom in turn forces the full condition.
* Pareto condition (each social utility is a nonnegative combination of
  individual ones plus constant).  Writing ``alpha_i u_i`` as a nonnegative
  combination of agent ``i``'s vertices makes it one linear system per social
  vertex, and the representable points form a convex cone, so vertices of the
  social set suffice.
* Weights are never required to be nonzero: a zero weight vector would make a
  hull point constant, which :class:`~multiutility.core.UtilitySet` rules out.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from multiutility.core import (
    Profile,
    UtilitySet,
    UtilityVector,
    no_conflict_pair,
    to_fraction,
)
from multiutility.geometry import (
    LinearSystem,
    check_certificate,
    cone_membership,
    rank,
    solve_feasibility,
)


@dataclass(frozen=True)
class InfeasibleCase:
    """A checked item whose linear system has no solution, with the dual
    multipliers proving it."""

    label: dict
    system: LinearSystem
    certificate: tuple[Fraction, ...]

    def recheck(self) -> bool:
        return check_certificate(self.system, self.certificate) and not solve_feasibility(
            self.system
        ).feasible


@dataclass(frozen=True)
class ConditionVerdict:
    condition: str
    status: str  # "holds", "fails" or "vacuous"
    failures: tuple[InfeasibleCase, ...] = ()
    solutions: tuple[dict, ...] = ()
    no_conflict_pair: tuple[str, str] | None = None
    checked: int = 0

    @property
    def holds(self) -> bool:
        return self.status != "fails"

    @property
    def counterexample(self) -> dict | None:
        return self.failures[0].label if self.failures else None

    def __bool__(self) -> bool:
        return self.holds


def _combination_system(social: UtilitySet, signed: Sequence[tuple[UtilityVector, int]]):
    """Convex ``theta`` over social vertices, ``alpha >= 0`` and free ``beta``
    with ``sum theta_m w_m = sum sign_j alpha_j g_j + beta``."""
    soc = social.vertices
    M, G = len(soc), len(signed)
    system = LinearSystem(M + G + 1).nonnegative(range(M + G))
    system.add([1] * M + [0] * (G + 1), "==", 1)
    for z in range(social.dimension):
        row = [w[z] for w in soc] + [-sign * g[z] for g, sign in signed] + [-1]
        system.add(row, "==", 0)
    return system


def _fail(condition, label, system, ncp, solutions=(), checked=0) -> ConditionVerdict:
    cert = solve_feasibility(system, certificate=True).certificate
    return ConditionVerdict(
        condition, "fails", (InfeasibleCase(label, system, cert),), tuple(solutions), ncp, checked
    )


def check_theorem1_condition(profile: Profile) -> ConditionVerdict:
    """Every vertex combination (one vertex per agent) has a social utility
    equal to a nonnegative weighted sum of it plus a constant."""
    ncp = no_conflict_pair(profile)
    ind = [s.vertices for s in profile.individuals]
    M, n = len(profile.social), profile.n
    solutions = []
    for count, combo in enumerate(itertools.product(*(range(len(vs)) for vs in ind)), 1):
        gens = [(vs[c], 1) for vs, c in zip(ind, combo)]
        system = _combination_system(profile.social, gens)
        res = solve_feasibility(system)
        if not res.feasible:
            return _fail("theorem1", {"individual_vertices": combo}, system, ncp, solutions, count)
        x = res.witness
        solutions.append({
            "individual_vertices": combo,
            "social_weights": x[:M],
            "alpha": x[M:M + n],
            "beta": x[M + n],
        })
    return ConditionVerdict("theorem1", "holds", (), tuple(solutions), ncp, len(solutions))


def _pooled_generators(profile: Profile):
    owners, gens = [], []
    for i, s in enumerate(profile.individuals):
        for v in s.vertices:
            owners.append(i)
            gens.append(v)
    return owners, gens


def _alpha_from_gamma(owners, gamma, n) -> tuple[Fraction, ...]:
    alpha = [Fraction(0)] * n
    for i, g in zip(owners, gamma):
        alpha[i] += g
    return tuple(alpha)


def check_pareto_condition(profile: Profile) -> ConditionVerdict:
    """Every social vertex is a nonnegative combination of individual vertices
    plus a constant (some combination of individual utilities, weighted)."""
    ncp = no_conflict_pair(profile)
    owners, gens = _pooled_generators(profile)
    K, k = len(gens), profile.space.size
    solutions = []
    for m, w in enumerate(profile.social.vertices):
        system = LinearSystem(K + 1).nonnegative(range(K))
        for z in range(k):
            system.add([g[z] for g in gens] + [1], "==", w[z])
        res = solve_feasibility(system)
        if not res.feasible:
            return _fail("pareto", {"social_vertex": m}, system, ncp, solutions, m + 1)
        solutions.append({
            "social_vertex": m,
            "vertex_weights": res.witness[:K],
            "alpha": _alpha_from_gamma(owners, res.witness[:K], profile.n),
            "beta": res.witness[K],
        })
    return ConditionVerdict("pareto", "holds", (), tuple(solutions), ncp, len(solutions))


def _agent_subsets(n: int):
    """Nonempty agent subsets, the full set first, then by decreasing size."""
    for size in range(n, 0, -1):
        yield from itertools.combinations(range(n), size)


def check_prop1_condition(profile: Profile, strict_mode: bool = False) -> ConditionVerdict:
    """Some social utility equals a nonnegative weighted sum of some
    combination of individual utilities plus a constant.

    With ``strict_mode`` every set is read through its strictly increasing
    wrapper ``{u + eps*barycenter}``.  Because each barycenter is the vertex
    average, positive multiples of wrapper elements are exactly the
    combinations with *all* vertex coefficients strictly positive.  An agent
    may also get weight zero, so the search runs over the subset ``S`` of
    agents with positive weight: ``sum c_m w_m = sum_{i in S} sum_k g_ik v_ik
    + beta`` with ``c > 0`` and ``g > 0``.

    The strict reading implies Non-Reversal but is not implied by it: with
    individuals ``{(3,3,4)}``, ``{(2,2,5)}`` and social hull
    ``{(4,2,4), (3,3,4), (2,2,5)}`` Non-Reversal holds while every wrapped
    social utility separates the first two outcomes and no individual
    combination does.  :func:`check_nonreversal_condition` is the exact test.
    """
    ncp = no_conflict_pair(profile)
    soc = profile.social.vertices
    M, k = len(soc), profile.space.size
    owners, gens = _pooled_generators(profile)

    if not strict_mode:
        K = len(gens)
        system = LinearSystem(M + K + 1).nonnegative(range(M + K))
        system.add([1] * M + [0] * (K + 1), "==", 1)
        for z in range(k):
            system.add([w[z] for w in soc] + [-g[z] for g in gens] + [-1], "==", 0)
        res = solve_feasibility(system)
        if not res.feasible:
            return _fail("prop1", {"strict_mode": False}, system, ncp, (), 1)
        x = res.witness
        sol = {
            "social_weights": x[:M],
            "vertex_weights": x[M:M + K],
            "alpha": _alpha_from_gamma(owners, x[M:M + K], profile.n),
            "beta": x[M + K],
        }
        return ConditionVerdict("prop1", "holds", (), (sol,), ncp, 1)

    failures = []
    for checked, subset in enumerate(_agent_subsets(profile.n), 1):
        cols = [j for j, i in enumerate(owners) if i in subset]
        G = len(cols)
        system = LinearSystem(M + G + 1)
        for j in range(M + G):
            row = [0] * (M + G + 1)
            row[j] = 1
            system.add(row, ">", 0)
        for z in range(k):
            system.add([w[z] for w in soc] + [-gens[j][z] for j in cols] + [-1], "==", 0)
        res = solve_feasibility(system, certificate=True)
        if res.feasible:
            x = res.witness
            total = sum(x[:M])
            gamma = [Fraction(0)] * len(gens)
            for j, val in zip(cols, x[M:M + G]):
                gamma[j] = val / total
            sol = {
                "agents": subset,
                "social_weights": tuple(c / total for c in x[:M]),
                "vertex_weights": tuple(gamma),
                "alpha": _alpha_from_gamma(owners, gamma, profile.n),
                "beta": x[M + G] / total,
            }
            return ConditionVerdict("prop1-strict", "holds", (), (sol,), ncp, checked)
        failures.append(InfeasibleCase({"agents": subset}, system, res.certificate))
    return ConditionVerdict("prop1-strict", "fails", tuple(failures), (), ncp, len(failures))


def check_nonreversal_condition(profile: Profile) -> ConditionVerdict:
    """Exact linear characterization of Non-Reversal on polytope profiles.

    Holds iff for some agent ``j`` a social utility ``u0`` in the (closed)
    social set satisfies ``u0 = sum gamma_ik v_ik + beta`` with ``gamma >= 0``
    and every coefficient of agent ``j`` strictly positive.

    Sufficiency: if every agent strictly prefers ``l``, then ``d = l - l'`` is
    ``>= 0`` on all individual vertices and ``> 0`` on one of ``j``'s, so
    ``d . u0 > 0``.  Necessity (given a no-conflict pair): if the system for
    ``j`` is infeasible, duality gives ``d_j >= 0`` on all individual vertices
    and ``<= t`` on the social ones, with either ``t < 0`` (tilt by the
    no-conflict direction to make every agent strict) or ``t = 0`` and
    ``d_j > 0`` on some vertex of ``j``; summing the ``d_j`` over agents
    yields a reversal.
    """
    ncp = no_conflict_pair(profile)
    soc = profile.social.vertices
    M, k = len(soc), profile.space.size
    owners, gens = _pooled_generators(profile)
    K = len(gens)
    failures = []
    for j in range(profile.n):
        system = LinearSystem(M + K + 1).nonnegative(range(M + K))
        system.add([1] * M + [0] * (K + 1), "==", 1)
        for c, i in enumerate(owners):
            if i == j:
                row = [0] * (M + K + 1)
                row[M + c] = 1
                system.add(row, ">", 0)
        for z in range(k):
            system.add([w[z] for w in soc] + [-g[z] for g in gens] + [-1], "==", 0)
        res = solve_feasibility(system, certificate=True)
        if res.feasible:
            x = res.witness
            sol = {
                "anchor_agent": j,
                "social_weights": x[:M],
                "vertex_weights": x[M:M + K],
                "alpha": _alpha_from_gamma(owners, x[M:M + K], profile.n),
                "beta": x[M + K],
            }
            return ConditionVerdict("non-reversal", "holds", (), (sol,), ncp, j + 1)
        failures.append(InfeasibleCase({"anchor_agent": j}, system, res.certificate))
    return ConditionVerdict("non-reversal", "fails", tuple(failures), (), ncp, profile.n)


def bi_independent(us: Sequence, vs: Sequence) -> bool:
    """``{u_1..u_n, v_1..v_n, 1}`` is linearly independent."""
    if len(us) != len(vs):
        raise ValueError("need as many u's as v's")
    if not us:
        return False
    k = len(us[0])
    return rank(list(us) + list(vs) + [(1,) * k]) == 2 * len(us) + 1


def bi_utilitarian_weights(social: UtilitySet, us: Sequence, vs: Sequence) -> dict | None:
    """Social weights, ``alpha``, ``alpha'`` and ``beta`` with
    ``sum theta_m w_m = sum alpha_i u_i - sum alpha'_i v_i + beta``, or None."""
    n = len(us)
    signed = [(UtilityVector(u), 1) for u in us] + [(UtilityVector(v), -1) for v in vs]
    res = solve_feasibility(_combination_system(social, signed))
    if not res.feasible:
        return None
    M = len(social)
    x = res.witness
    return {
        "social_weights": x[:M],
        "alpha": x[M:M + n],
        "alpha_neg": x[M + n:M + 2 * n],
        "beta": x[M + 2 * n],
    }


def check_prop2_condition(profile: Profile) -> ConditionVerdict:
    """Every bi-independent vertex pair combination is matched by a
    bi-utilitarian social utility.  Necessary for Pareto Incomparability, not
    sufficient.  ``vacuous`` when no vertex pair combination is bi-independent
    (always so when ``|Z| < 2n + 1``)."""
    ncp = no_conflict_pair(profile)
    ind = [s.vertices for s in profile.individuals]
    if profile.space.size < 2 * profile.n + 1:
        return ConditionVerdict("prop2", "vacuous", (), (), ncp, 0)
    pairs = [list(itertools.permutations(range(len(vs)), 2)) for vs in ind]
    solutions = []
    for combo in itertools.product(*pairs):
        us = [vs[a] for vs, (a, _) in zip(ind, combo)]
        vs_ = [vs[b] for vs, (_, b) in zip(ind, combo)]
        if not bi_independent(us, vs_):
            continue
        sol = bi_utilitarian_weights(profile.social, us, vs_)
        if sol is None:
            signed = [(u, 1) for u in us] + [(v, -1) for v in vs_]
            system = _combination_system(profile.social, signed)
            return _fail("prop2", {"individual_pairs": combo}, system, ncp, solutions, len(solutions) + 1)
        solutions.append({"individual_pairs": combo, **sol})
    status = "holds" if solutions else "vacuous"
    return ConditionVerdict("prop2", status, (), tuple(solutions), ncp, len(solutions))


def aggregate_minkowski(individuals: Sequence[UtilitySet], weights: Sequence) -> UtilitySet:
    """Hull of ``sum alpha_i v^i`` over all vertex combinations, i.e. the
    weighted Minkowski sum of the individual sets."""
    weights = [to_fraction(w) for w in weights]
    if len(weights) != len(individuals):
        raise ValueError(f"need {len(individuals)} weights, got {len(weights)}")
    if any(w <= 0 for w in weights):
        raise ValueError("aggregation weights must be strictly positive")
    k = individuals[0].dimension
    verts = []
    for combo in itertools.product(*(s.vertices for s in individuals)):
        verts.append(tuple(
            sum((a * v[z] for a, v in zip(weights, combo)), Fraction(0)) for z in range(k)
        ))
    return UtilitySet(tuple(verts))


def aggregate_union_hull(individuals: Sequence[UtilitySet]) -> UtilitySet:
    """Convex hull of every individual vertex."""
    if not individuals:
        raise ValueError("need at least one utility set")
    return UtilitySet(tuple(v for s in individuals for v in s.vertices))


def contains_equivalent(utility_set: UtilitySet, u) -> bool:
    """Some member of ``utility_set`` is a positive affine transform of ``u``.

    Solved as ``u = sum mu_k v_k + beta`` with ``mu >= 0``; nonconstancy of
    ``u`` forces ``sum mu > 0`` and ``sum (mu_k / sum mu) v_k`` is the member.
    """
    return cone_membership(u, utility_set.vertices) is not None


def sets_equivalent(a: UtilitySet, b: UtilitySet) -> bool:
    """Every member of each set is a positive affine transform of a member of
    the other.  The members of ``a`` with this property form a convex set
    (the cone over ``b`` plus constants is convex), so vertices suffice."""
    if a.dimension != b.dimension:
        raise ValueError("utility sets live on different outcome spaces")
    return all(contains_equivalent(b, v) for v in a.vertices) and all(
        contains_equivalent(a, v) for v in b.vertices
    )
