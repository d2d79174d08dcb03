"""Domain types for lotteries, utility vectors, utility polytopes and profiles.

Everything is exact: coordinates are stored as :class:`fractions.Fraction` and
all objects are immutable once constructed.  Vectors are positional, aligned
with the ordered outcome labels of an :class:`OutcomeSpace`.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from multiutility.geometry import LinearSystem, solve_feasibility


def to_fraction(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused so that no binary rounding can leak into a verdict.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, numbers.Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational {x!r}") from exc
    raise TypeError(f"expected an exact rational, got {type(x).__name__} {x!r}")


def _as_tuple(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(to_fraction(v) for v in values)


def is_constant(values: Sequence) -> bool:
    return all(v == values[0] for v in values)


@dataclass(frozen=True)
class OutcomeSpace:
    outcomes: tuple[str, ...]

    def __post_init__(self):
        outcomes = tuple(self.outcomes)
        object.__setattr__(self, "outcomes", outcomes)
        if any(not isinstance(z, str) or not z for z in outcomes):
            raise ValueError("outcome labels must be nonempty strings")
        if len(set(outcomes)) != len(outcomes):
            raise ValueError("outcome labels must be unique")
        if len(outcomes) < 2:
            raise ValueError("at least two outcomes are required")

    @classmethod
    def of_size(cls, k: int) -> "OutcomeSpace":
        """Outcomes labelled a, b, c, ... (z0, z1, ... beyond 26)."""
        if k <= 26:
            return cls(tuple("abcdefghijklmnopqrstuvwxyz"[:k]))
        return cls(tuple(f"z{i}" for i in range(k)))

    @property
    def size(self) -> int:
        return len(self.outcomes)

    def index(self, label: str) -> int:
        return self.outcomes.index(label)


@dataclass(frozen=True)
class Lottery:
    probabilities: tuple[Fraction, ...]

    def __post_init__(self):
        probs = _as_tuple(self.probabilities)
        object.__setattr__(self, "probabilities", probs)
        if len(probs) < 2:
            raise ValueError("a lottery needs at least two outcomes")
        if any(p < 0 for p in probs):
            raise ValueError(f"negative probability in {probs}")
        if sum(probs) != 1:
            raise ValueError(f"probabilities sum to {sum(probs)}, not 1")

    @classmethod
    def uniform(cls, k: int) -> "Lottery":
        return cls((Fraction(1, k),) * k)

    @classmethod
    def degenerate(cls, k: int, index: int) -> "Lottery":
        return cls(tuple(Fraction(int(i == index)) for i in range(k)))

    def __len__(self) -> int:
        return len(self.probabilities)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.probabilities)

    def __getitem__(self, i: int) -> Fraction:
        return self.probabilities[i]

    def minus(self, other: "Lottery") -> tuple[Fraction, ...]:
        if len(other) != len(self):
            raise ValueError("lotteries live on different outcome spaces")
        return tuple(p - q for p, q in zip(self, other))


@dataclass(frozen=True)
class UtilityVector:
    """A nonconstant utility function over the outcome space."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = _as_tuple(self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) < 2:
            raise ValueError("a utility vector needs at least two outcomes")
        if is_constant(vals):
            raise ValueError(f"utility vector {format_vector(vals)} is constant")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values)

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def dot(self, other: Iterable) -> Fraction:
        other = tuple(other)
        if len(other) != len(self.values):
            raise ValueError("dimension mismatch")
        return sum((a * b for a, b in zip(self.values, other)), Fraction(0))

    def affine(self, alpha, beta=0) -> "UtilityVector":
        """Return ``alpha * self + beta``."""
        alpha, beta = to_fraction(alpha), to_fraction(beta)
        return UtilityVector(tuple(alpha * v + beta for v in self.values))


def _dedupe(vectors: Iterable[UtilityVector]) -> tuple[UtilityVector, ...]:
    seen = set()
    out = []
    for v in vectors:
        if v.values not in seen:
            seen.add(v.values)
            out.append(v)
    return tuple(out)


def hull_contains_constant(vertices: Sequence[Sequence[Fraction]]) -> bool:
    """Whether some convex combination of ``vertices`` is a constant vector."""
    m, k = len(vertices), len(vertices[0])
    system = LinearSystem(m)
    for j in range(m):
        system.add([int(i == j) for i in range(m)], ">=", 0)
    system.add([1] * m, "==", 1)
    for z in range(1, k):
        system.add([v[z] - v[0] for v in vertices], "==", 0)
    return solve_feasibility(system).feasible


@dataclass(frozen=True)
class UtilitySet:
    """Convex hull of finitely many nonconstant utility vectors.

    The vertex list is a generating set: it is deduplicated but points that are
    not extreme are allowed and harmless.
    """

    vertices: tuple[UtilityVector, ...]

    def __post_init__(self):
        verts = tuple(
            v if isinstance(v, UtilityVector) else UtilityVector(v) for v in self.vertices
        )
        if not verts:
            raise ValueError("a utility set needs at least one vertex")
        k = len(verts[0])
        if any(len(v) != k for v in verts):
            raise ValueError("vertices have mismatched lengths")
        verts = _dedupe(verts)
        if len(verts) > 1 and hull_contains_constant([v.values for v in verts]):
            raise ValueError("the convex hull of the vertices contains a constant vector")
        object.__setattr__(self, "vertices", verts)

    @property
    def dimension(self) -> int:
        return len(self.vertices[0])

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[UtilityVector]:
        return iter(self.vertices)

    def barycenter(self) -> UtilityVector:
        m = len(self.vertices)
        return UtilityVector(
            tuple(sum(col, Fraction(0)) / m for col in zip(*(v.values for v in self.vertices)))
        )


def validate_utility_set(vertices: Sequence) -> UtilitySet:
    """Build a :class:`UtilitySet`, rejecting empty lists, constant vertices and
    hulls that pass through a constant vector."""
    if not vertices:
        raise ValueError("a utility set needs at least one vertex")
    return UtilitySet(tuple(vertices))


@dataclass(frozen=True)
class Profile:
    space: OutcomeSpace
    individuals: tuple[UtilitySet, ...]
    social: UtilitySet
    agent_ids: tuple[str, ...] = field(default=())

    def __post_init__(self):
        individuals = tuple(self.individuals)
        object.__setattr__(self, "individuals", individuals)
        if len(individuals) < 2:
            raise ValueError(f"need at least two individuals, got {len(individuals)}")
        k = self.space.size
        for i, s in enumerate(individuals):
            if s.dimension != k:
                raise ValueError(f"agent {i} has vectors of length {s.dimension}, expected {k}")
        if self.social.dimension != k:
            raise ValueError(f"social set has vectors of length {self.social.dimension}, expected {k}")
        ids = tuple(self.agent_ids) or tuple(str(i + 1) for i in range(len(individuals)))
        if len(ids) != len(individuals) or len(set(ids)) != len(ids):
            raise ValueError("agent ids must be unique, one per individual")
        object.__setattr__(self, "agent_ids", ids)

    @classmethod
    def build(cls, individuals: Sequence[Sequence], social: Sequence, outcomes=None) -> "Profile":
        """Convenience constructor from nested vertex lists."""
        individuals = [s if isinstance(s, UtilitySet) else validate_utility_set(s) for s in individuals]
        social = social if isinstance(social, UtilitySet) else validate_utility_set(social)
        k = social.dimension
        space = OutcomeSpace(tuple(outcomes)) if outcomes is not None else OutcomeSpace.of_size(k)
        return cls(space, tuple(individuals), social)

    @property
    def n(self) -> int:
        return len(self.individuals)

    def with_social(self, social: UtilitySet) -> "Profile":
        return Profile(self.space, self.individuals, social, self.agent_ids)


def normalize_utility(u: UtilityVector) -> UtilityVector:
    """Canonical representative of the positive-affine class of ``u``:
    coordinates sum to zero and max minus min equals one."""
    vals = u.values if isinstance(u, UtilityVector) else _as_tuple(u)
    if is_constant(vals):
        raise ValueError("cannot normalize a constant vector")
    mean = sum(vals, Fraction(0)) / len(vals)
    spread = max(vals) - min(vals)
    return UtilityVector(tuple((v - mean) / spread for v in vals))


def utilities_equivalent(u: UtilityVector, v: UtilityVector) -> bool:
    """``u = a*v + b`` for some ``a > 0``."""
    if len(u) != len(v):
        raise ValueError("utility vectors are defined on different outcome spaces")
    return normalize_utility(u) == normalize_utility(v)


def no_conflict_pair_indices(individuals: Sequence[UtilitySet]) -> tuple[int, int] | None:
    k = individuals[0].dimension
    verts = [v for s in individuals for v in s.vertices]
    for hi in range(k):
        for lo in range(k):
            if hi != lo and all(v[hi] > v[lo] for v in verts):
                return hi, lo
    return None


def no_conflict_pair(profile: Profile) -> tuple[str, str] | None:
    """First ordered outcome pair ``(z*, z_*)`` ranked ``z* > z_*`` by every
    individual utility, scanning outcomes in their listed order.

    Strict inequality at every vertex carries over to the whole hull.
    """
    pair = no_conflict_pair_indices(profile.individuals)
    if pair is None:
        return None
    return profile.space.outcomes[pair[0]], profile.space.outcomes[pair[1]]


def format_rational(x: Fraction) -> str:
    return str(x)


def format_vector(values: Iterable) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"
