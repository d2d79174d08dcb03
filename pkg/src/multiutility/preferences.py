"""Expected multi-utility comparisons.

``l`` is weakly preferred to ``l'`` under a utility set when every utility in
the set gives ``l`` at least the expected utility of ``l'``.  On a polytope
the extreme values of ``(l - l') . u`` are attained at vertices, so the
four-way classification below only ever looks at vertex values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from multiutility.core import Lottery, UtilitySet, UtilityVector
from multiutility.geometry import LinearSystem, solve_feasibility


class Relation(enum.Enum):
    STRICTLY_PREFERRED = "strictly-preferred"
    STRICTLY_DISPREFERRED = "strictly-dispreferred"
    INDIFFERENT = "indifferent"
    INCOMPARABLE = "incomparable"

    @property
    def weak(self) -> bool:
        """``l`` is weakly preferred to ``l'``."""
        return self in (Relation.STRICTLY_PREFERRED, Relation.INDIFFERENT)

    @property
    def weak_reverse(self) -> bool:
        """``l'`` is weakly preferred to ``l``."""
        return self in (Relation.STRICTLY_DISPREFERRED, Relation.INDIFFERENT)

    def mirror(self) -> "Relation":
        return _MIRROR[self]


_MIRROR = {
    Relation.STRICTLY_PREFERRED: Relation.STRICTLY_DISPREFERRED,
    Relation.STRICTLY_DISPREFERRED: Relation.STRICTLY_PREFERRED,
    Relation.INDIFFERENT: Relation.INDIFFERENT,
    Relation.INCOMPARABLE: Relation.INCOMPARABLE,
}


def classify(scores: Iterable[Fraction]) -> Relation:
    """Relation implied by the vertex values of ``(l - l') . u``."""
    pos = neg = False
    for s in scores:
        if s > 0:
            pos = True
        elif s < 0:
            neg = True
    if pos and neg:
        return Relation.INCOMPARABLE
    if pos:
        return Relation.STRICTLY_PREFERRED
    if neg:
        return Relation.STRICTLY_DISPREFERRED
    return Relation.INDIFFERENT


def expected_utility(lottery: Lottery, u: UtilityVector) -> Fraction:
    if len(lottery) != len(u):
        raise ValueError("lottery and utility live on different outcome spaces")
    return sum((p * v for p, v in zip(lottery, u)), Fraction(0))


@dataclass(frozen=True)
class StrictlyIncreasingSet:
    """The open set ``{u + eps * barycenter : u in base, eps > 0}``.

    It induces the same preference as ``base`` and every member ranks strict
    preferences strictly: the barycenter averages vertex values that are all
    ``>= 0`` with at least one ``> 0`` whenever ``l`` is strictly preferred.
    """

    base: UtilitySet
    barycenter: UtilityVector

    def __post_init__(self):
        if self.barycenter != self.base.barycenter():
            raise ValueError("barycenter must be the vertex average of the base set")

    @property
    def vertices(self):
        return self.base.vertices

    @property
    def dimension(self) -> int:
        return self.base.dimension

    def shifted(self, eps) -> list[tuple[Fraction, ...]]:
        """Base vertices translated by ``eps * barycenter``."""
        eps = Fraction(eps)
        return [
            tuple(v + eps * b for v, b in zip(vert, self.barycenter)) for vert in self.base
        ]


def make_strictly_increasing(utility_set: UtilitySet) -> StrictlyIncreasingSet:
    return StrictlyIncreasingSet(utility_set, utility_set.barycenter())


def _vertices(utility_set) -> Sequence:
    if isinstance(utility_set, StrictlyIncreasingSet):
        return utility_set.base.vertices
    return getattr(utility_set, "vertices", utility_set)


def compare(l: Lottery, l2: Lottery, utility_set) -> Relation:
    """Classify ``l`` against ``l2`` under a utility set (or its strictly
    increasing wrapper, which induces the same relation)."""
    d = l.minus(l2)
    return classify(
        sum((a * b for a, b in zip(d, v)), Fraction(0)) for v in _vertices(utility_set)
    )


@dataclass(frozen=True)
class StrictIncreaseVerdict:
    holds: bool
    direction: tuple[Fraction, ...] | None = None
    vertex: UtilityVector | None = None

    def __bool__(self) -> bool:
        return self.holds


def is_strictly_increasing(utility_set: UtilitySet) -> StrictIncreaseVerdict:
    """Check that every element of the hull ranks every strict preference of
    the induced relation strictly.

    A failure is a mean-zero ``d`` (a lottery difference) that is weakly
    positive on all vertices, at least 1 on some vertex ``v'``, and ``<= 0`` on
    a vertex ``u``; one system per ordered pair ``(u, v')``.
    """
    verts = utility_set.vertices
    k = utility_set.dimension
    for u in verts:
        for v_strict in verts:
            if v_strict is u:
                continue
            system = LinearSystem(k)
            system.add([1] * k, "==", 0)
            for v in verts:
                system.add(v.values, ">=", 0)
            system.add(v_strict.values, ">=", 1)
            system.add(u.values, "<=", 0)
            res = solve_feasibility(system)
            if res.feasible:
                return StrictIncreaseVerdict(False, res.witness, u)
    return StrictIncreaseVerdict(True)
