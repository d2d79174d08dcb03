"""Brute-force grid oracle.

Evaluates the axioms extensionally on every ordered pair of lotteries whose
probabilities are multiples of ``1/D``.  It shares no search code with
:mod:`multiutility.axioms`: relations come straight from vertex expected
utilities.  Sound but incomplete; an empty result proves nothing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from multiutility.axioms import Axiom, axiom_violated
from multiutility.core import Lottery, OutcomeSpace, Profile
from multiutility.preferences import classify

DEFAULT_DENOMINATOR = 5


@dataclass(frozen=True)
class GridSpec:
    denominator: int
    space: OutcomeSpace

    def __post_init__(self):
        if self.denominator < 1:
            raise ValueError("grid denominator must be at least 1")


def enumerate_lotteries(spec: GridSpec) -> list[Lottery]:
    """All lotteries on the grid, in lexicographic order of probabilities."""
    D, k = spec.denominator, spec.space.size
    out = []
    # stars and bars: bar positions among D + k - 1 slots
    for bars in itertools.combinations(range(D + k - 1), k - 1):
        counts, prev = [], -1
        for b in bars:
            counts.append(b - prev - 1)
            prev = b
        counts.append(D + k - 2 - prev)
        out.append(tuple(Fraction(c, D) for c in counts))
    out.sort()
    return [Lottery(p) for p in out]


def grid_check_many(
    profile: Profile, axioms: Iterable[Axiom], spec: GridSpec
) -> dict[Axiom, list[tuple[Lottery, Lottery]]]:
    axioms = list(axioms)
    lotteries = enumerate_lotteries(spec)
    sets = [s.vertices for s in profile.individuals] + [profile.social.vertices]
    # expected utility of every grid lottery under every vertex
    eu = [
        [[sum((p * x for p, x in zip(l, v)), Fraction(0)) for v in vs] for vs in sets]
        for l in lotteries
    ]
    found = {a: [] for a in axioms}
    for a_idx, b_idx in itertools.permutations(range(len(lotteries)), 2):
        ea, eb = eu[a_idx], eu[b_idx]
        rels = [classify(x - y for x, y in zip(sa, sb)) for sa, sb in zip(ea, eb)]
        individual, social = rels[:-1], rels[-1]
        for axiom in axioms:
            if axiom_violated(axiom, individual, social):
                found[axiom].append((lotteries[a_idx], lotteries[b_idx]))
    return found


def grid_check(profile: Profile, axiom: Axiom, spec: GridSpec) -> list[tuple[Lottery, Lottery]]:
    """Every ordered pair ``(l, l')`` of distinct grid lotteries violating
    ``axiom``, in lexicographic order."""
    return grid_check_many(profile, [axiom], spec)[axiom]


def count_pairs(spec: GridSpec) -> int:
    n = len(enumerate_lotteries(spec))
    return n * (n - 1)
