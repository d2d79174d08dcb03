"""Seeded random profile generators shared by the property and acceptance tests."""

from __future__ import annotations

import random

from multiutility.core import OutcomeSpace, Profile, UtilitySet, no_conflict_pair_indices


def random_set(rng: random.Random, k: int, max_vertices: int = 3, lo: int = 0, hi: int = 5) -> UtilitySet:
    """Random valid utility set with integer coordinates in ``[lo, hi]``."""
    while True:
        m = rng.randint(1, max_vertices)
        verts = []
        while len(verts) < m:
            v = tuple(rng.randint(lo, hi) for _ in range(k))
            if len(set(v)) > 1:
                verts.append(v)
        try:
            return UtilitySet(tuple(verts))
        except ValueError:
            continue


def random_agents(rng, k, n, max_vertices=3, require_ncp=True):
    while True:
        sets = [random_set(rng, k, max_vertices) for _ in range(n)]
        if not require_ncp or no_conflict_pair_indices(sets) is not None:
            return sets


def random_profile(
    rng: random.Random,
    sizes=(3, 4),
    agents=(2, 3),
    max_vertices: int = 3,
    require_ncp: bool = True,
) -> Profile:
    """Profile with ``|Z|`` in ``sizes`` and ``n`` in ``agents``.

    Social sets mix fresh random vertices with vertices borrowed from the
    individuals, so that both verdicts of every checker occur often.
    """
    k = rng.choice(sizes)
    n = rng.choice(agents)
    individuals = random_agents(rng, k, n, max_vertices, require_ncp)
    pool = [v.values for s in individuals for v in s.vertices]
    while True:
        m = rng.randint(1, max_vertices)
        verts = []
        for _ in range(m):
            if rng.random() < 0.4:
                verts.append(rng.choice(pool))
            else:
                v = tuple(rng.randint(0, 5) for _ in range(k))
                if len(set(v)) > 1:
                    verts.append(v)
        if not verts:
            continue
        try:
            social = UtilitySet(tuple(verts))
        except ValueError:
            continue
        return Profile(OutcomeSpace.of_size(k), tuple(individuals), social)


def random_profiles(seed: int, count: int, **kwargs) -> list[Profile]:
    rng = random.Random(seed)
    return [random_profile(rng, **kwargs) for _ in range(count)]
