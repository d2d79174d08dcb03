"""Exact checkers for the unanimity axioms.

Every axiom quantifies over lottery pairs, and only their difference
``d = l - l'`` matters; any nonzero mean-zero ``d`` is a positive multiple of
some lottery difference.  A violation is therefore a mean-zero ``d`` solving a
small homogeneous linear system.  Existential clauses ("some utility of agent
``i`` ranks strictly") are resolved by enumerating one vertex per agent, since
a linear functional is positive somewhere on a polytope iff it is positive at
a vertex; universal clauses contribute one row per vertex.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from multiutility.core import Lottery, Profile, no_conflict_pair
from multiutility.geometry import LinearSystem, solve_feasibility
from multiutility.preferences import Relation, compare


class Axiom(enum.Enum):
    PARETO = "pareto"
    PARETO_STAR = "pareto-star"
    PARETO_INDIFFERENCE = "pareto-indifference"
    PARETO_INCOMPARABILITY = "pareto-incomparability"
    NON_REVERSAL = "non-reversal"

    @classmethod
    def parse(cls, name: str) -> "Axiom":
        key = name.strip().lower().replace("_", "-").replace("*", "-star")
        aliases = {"paretostar": "pareto-star", "nonreversal": "non-reversal"}
        key = aliases.get(key, key)
        for a in cls:
            if a.value == key:
                return a
        raise ValueError(f"unknown axiom {name!r}")


def axiom_violated(axiom: Axiom, individual: Sequence[Relation], social: Relation) -> bool:
    """Whether one lottery pair ``(l, l')`` with the given relations breaks the
    axiom's implication."""
    if axiom is Axiom.PARETO:
        return all(r.weak for r in individual) and not social.weak
    if axiom is Axiom.PARETO_STAR:
        return all(not r.weak for r in individual) and social.weak
    if axiom is Axiom.NON_REVERSAL:
        return all(r is Relation.STRICTLY_PREFERRED for r in individual) and social.weak_reverse
    if axiom is Axiom.PARETO_INDIFFERENCE:
        return all(r is Relation.INDIFFERENT for r in individual) and social is not Relation.INDIFFERENT
    if axiom is Axiom.PARETO_INCOMPARABILITY:
        return all(r is Relation.INCOMPARABLE for r in individual) and social is not Relation.INCOMPARABLE
    raise ValueError(axiom)


def relations(profile: Profile, l: Lottery, l2: Lottery) -> tuple[list[Relation], Relation]:
    return [compare(l, l2, s) for s in profile.individuals], compare(l, l2, profile.social)


def verify_certificate(profile: Profile, axiom: Axiom, l: Lottery, l2: Lottery) -> bool:
    """Re-evaluate the axiom on the single pair ``(l, l2)`` from the relations
    alone; True iff the pair violates it."""
    individual, social = relations(profile, l, l2)
    return axiom_violated(axiom, individual, social)


def direction_to_lottery_pair(d: Sequence) -> tuple[Lottery, Lottery]:
    """Lotteries ``(uniform + eps*d, uniform)`` with ``eps = 1/(|Z| max|d|)``.

    Their difference is a positive multiple of ``d``, so every sign computed
    from ``d`` carries over.  The step size keeps the first lottery inside the
    simplex (possibly on its boundary).
    """
    d = tuple(Fraction(x) for x in d)
    k = len(d)
    if sum(d) != 0:
        raise ValueError("direction must sum to zero")
    top = max(abs(x) for x in d)
    if top == 0:
        raise ValueError("direction must be nonzero")
    eps = 1 / (k * top)
    uniform = Fraction(1, k)
    return Lottery(tuple(uniform + eps * x for x in d)), Lottery.uniform(k)


@dataclass(frozen=True)
class AxiomVerdict:
    axiom: Axiom
    holds: bool
    witness: tuple[Lottery, Lottery] | None = None
    direction: tuple[Fraction, ...] | None = None
    selection: dict = field(default_factory=dict)
    individual_relations: tuple[Relation, ...] = ()
    social_relation: Relation | None = None
    no_conflict_pair: tuple[str, str] | None = None

    def __bool__(self) -> bool:
        return self.holds


def _base_system(k: int) -> LinearSystem:
    return LinearSystem(k).add([1] * k, "==", 0)


def _candidates(profile: Profile, axiom: Axiom) -> Iterator[tuple[dict, LinearSystem]]:
    """Yield ``(selection, system)`` pairs; the axiom is violated iff one of
    the systems is feasible.  Systems are homogeneous in ``d``."""
    k = profile.space.size
    ind = [s.vertices for s in profile.individuals]
    soc = profile.social.vertices
    all_ind = [v for vs in ind for v in vs]

    if axiom is Axiom.PARETO:
        # d = l - l'
        for m, w in enumerate(soc):
            sys_ = _base_system(k)
            for v in all_ind:
                sys_.add(v.values, ">=", 0)
            sys_.add(w.values, "<", 0)
            yield {"social_vertex": m}, sys_

    elif axiom is Axiom.PARETO_STAR:
        # d = l' - l: every agent has a utility ranking l' strictly higher,
        # while the social set weakly prefers l
        for combo in itertools.product(*(range(len(vs)) for vs in ind)):
            sys_ = _base_system(k)
            for vs, c in zip(ind, combo):
                sys_.add(vs[c].values, ">", 0)
            for w in soc:
                sys_.add(w.values, "<=", 0)
            yield {"individual_vertices": combo}, sys_

    elif axiom is Axiom.NON_REVERSAL:
        for combo in itertools.product(*(range(len(vs)) for vs in ind)):
            sys_ = _base_system(k)
            for v in all_ind:
                sys_.add(v.values, ">=", 0)
            for vs, c in zip(ind, combo):
                sys_.add(vs[c].values, ">", 0)
            for w in soc:
                sys_.add(w.values, "<=", 0)
            yield {"individual_vertices": combo}, sys_

    elif axiom is Axiom.PARETO_INDIFFERENCE:
        # -d is a solution whenever d is, so one social sign suffices
        for m, w in enumerate(soc):
            sys_ = _base_system(k)
            for v in all_ind:
                sys_.add(v.values, "==", 0)
            sys_.add(w.values, ">", 0)
            yield {"social_vertex": m}, sys_

    elif axiom is Axiom.PARETO_INCOMPARABILITY:
        pairs = [list(itertools.permutations(range(len(vs)), 2)) for vs in ind]
        for combo in itertools.product(*pairs):
            for social_sign in (">=", "<="):
                sys_ = _base_system(k)
                for vs, (up, down) in zip(ind, combo):
                    sys_.add(vs[up].values, ">", 0)
                    sys_.add(vs[down].values, "<", 0)
                for w in soc:
                    sys_.add(w.values, social_sign, 0)
                yield {"individual_pairs": combo, "social_sign": social_sign}, sys_
    else:
        raise ValueError(axiom)


def _orient(axiom: Axiom, d) -> tuple[Lottery, Lottery]:
    moved, uniform = direction_to_lottery_pair(d)
    if axiom is Axiom.PARETO_STAR:
        return uniform, moved
    return moved, uniform


def check_axiom(profile: Profile, axiom: Axiom, strict: str = "normalize") -> AxiomVerdict:
    """Decide whether ``profile`` satisfies ``axiom``.

    On violation the verdict carries a lottery pair ``(l, l')`` in the axiom's
    own orientation (premise about ``l`` versus ``l'`` holds for every agent,
    the social conclusion fails), accepted by :func:`verify_certificate`.
    Candidate systems are tried in a fixed order, so witnesses are
    reproducible.
    """
    if isinstance(axiom, str):
        axiom = Axiom.parse(axiom)
    ncp = no_conflict_pair(profile)
    for selection, system in _candidates(profile, axiom):
        res = solve_feasibility(system, strict=strict)
        if res.feasible:
            l, l2 = _orient(axiom, res.witness)
            individual, social = relations(profile, l, l2)
            if not axiom_violated(axiom, individual, social):
                raise AssertionError(f"{axiom.value}: witness fails re-verification")
            return AxiomVerdict(
                axiom, False, (l, l2), res.witness, selection,
                tuple(individual), social, ncp,
            )
    return AxiomVerdict(axiom, True, no_conflict_pair=ncp)
