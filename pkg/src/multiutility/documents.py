"""JSON documents for profiles, agent lists and utility sets.

A profile document::

    {
      "outcomes": ["a", "b", "c"],
      "agents": [{"id": "1", "vertices": [[2, 1, 0]]},
                 {"id": "2", "vertices": [[1, 2, 0]]}],
      "social": {"vertices": [["3", "3/1", 0]]}
    }

Rationals are integers or ``"p/q"`` strings; floats are rejected.  An agent
list document is the same without ``social``; a set document is
``{"outcomes": [...], "vertices": [...]}``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

import jsonschema

from multiutility.core import (
    OutcomeSpace,
    Profile,
    UtilitySet,
    UtilityVector,
    hull_contains_constant,
    is_constant,
)

_RATIONAL = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*$"},
    ]
}
_VERTICES = {"type": "array", "minItems": 1, "items": {"type": "array", "items": _RATIONAL}}
_OUTCOMES = {"type": "array", "minItems": 2, "items": {"type": "string", "minLength": 1}}

AGENTS_SCHEMA = {
    "type": "object",
    "required": ["outcomes", "agents"],
    "properties": {
        "outcomes": _OUTCOMES,
        "agents": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["vertices"],
                "properties": {"id": {"type": ["string", "integer"]}, "vertices": _VERTICES},
            },
        },
        "social": {
            "type": "object",
            "required": ["vertices"],
            "properties": {"vertices": _VERTICES},
        },
    },
}

PROFILE_SCHEMA = dict(AGENTS_SCHEMA, required=["outcomes", "agents", "social"])

SET_SCHEMA = {
    "type": "object",
    "required": ["outcomes", "vertices"],
    "properties": {"outcomes": _OUTCOMES, "vertices": _VERTICES},
}


class DocumentError(ValueError):
    """Malformed or invalid input document."""


def _load(document) -> Any:
    if isinstance(document, (str, bytes)):
        try:
            return json.loads(document)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"not valid JSON: {exc}") from exc
    return document


def _validate(data, schema) -> None:
    errors = sorted(jsonschema.Draft202012Validator(schema).iter_errors(data), key=lambda e: list(e.path))
    if errors:
        e = errors[0]
        where = "/".join(str(p) for p in e.path) or "(root)"
        raise DocumentError(f"{where}: {e.message}")


def _rational(raw, where: str) -> Fraction:
    if isinstance(raw, bool) or not isinstance(raw, (int, str)):
        raise DocumentError(f"{where}: expected an integer or 'p/q' string, got {raw!r}")
    try:
        return Fraction(raw.strip()) if isinstance(raw, str) else Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"{where}: malformed rational {raw!r}") from None


def _utility_set(rows, k: int, owner: str) -> UtilitySet:
    vertices = []
    for vi, row in enumerate(rows):
        if len(row) != k:
            raise DocumentError(f"{owner} vertex {vi}: has {len(row)} coordinates, expected {k}")
        vals = tuple(_rational(x, f"{owner} vertex {vi} coordinate {c}") for c, x in enumerate(row))
        if is_constant(vals):
            raise DocumentError(f"{owner} vertex {vi}: constant vector {list(map(str, vals))}")
        vertices.append(UtilityVector(vals))
    if len(vertices) > 1 and hull_contains_constant([v.values for v in vertices]):
        raise DocumentError(f"{owner}: convex hull of the vertices contains a constant vector")
    return UtilitySet(tuple(vertices))


def _space(data) -> OutcomeSpace:
    try:
        return OutcomeSpace(tuple(data["outcomes"]))
    except ValueError as exc:
        raise DocumentError(f"outcomes: {exc}") from None


def parse_agents(document) -> tuple[OutcomeSpace, list[UtilitySet], list[str]]:
    """Outcome space, individual sets and agent ids from an agents (or
    profile) document."""
    data = _load(document)
    _validate(data, AGENTS_SCHEMA)
    space = _space(data)
    sets, ids = [], []
    for ai, agent in enumerate(data["agents"]):
        aid = str(agent.get("id", ai + 1))
        sets.append(_utility_set(agent["vertices"], space.size, f"agent {aid!r}"))
        ids.append(aid)
    if len(set(ids)) != len(ids):
        raise DocumentError("agent ids must be unique")
    return space, sets, ids


def parse_profile(document) -> Profile:
    """Validated :class:`Profile` from JSON text or an already-decoded dict."""
    data = _load(document)
    _validate(data, PROFILE_SCHEMA)
    space, sets, ids = parse_agents(data)
    if len(sets) < 2:
        raise DocumentError(f"agents: need at least two individuals, got {len(sets)}")
    social = _utility_set(data["social"]["vertices"], space.size, "social")
    return Profile(space, tuple(sets), social, tuple(ids))


def parse_set(document) -> tuple[OutcomeSpace, UtilitySet]:
    data = _load(document)
    _validate(data, SET_SCHEMA)
    space = _space(data)
    return space, _utility_set(data["vertices"], space.size, "set")


def rational_str(x) -> str:
    return str(Fraction(x))


def vector_doc(v) -> list[str]:
    return [rational_str(x) for x in v]


def set_doc(space: OutcomeSpace, utility_set: UtilitySet) -> dict:
    return {
        "outcomes": list(space.outcomes),
        "vertices": [vector_doc(v) for v in utility_set.vertices],
    }


def profile_doc(profile: Profile) -> dict:
    return {
        "outcomes": list(profile.space.outcomes),
        "agents": [
            {"id": aid, "vertices": [vector_doc(v) for v in s.vertices]}
            for aid, s in zip(profile.agent_ids, profile.individuals)
        ],
        "social": {"vertices": [vector_doc(v) for v in profile.social.vertices]},
    }


def emit_profile(profile: Profile) -> str:
    return json.dumps(profile_doc(profile), indent=2)


def to_jsonable(obj):
    """Recursively render Fractions as ``"p/q"`` strings and tuples as lists."""
    if isinstance(obj, Fraction):
        return rational_str(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "probabilities"):
        return vector_doc(obj.probabilities)
    if isinstance(obj, UtilityVector):
        return vector_doc(obj.values)
    if hasattr(obj, "value") and hasattr(obj, "name"):
        return obj.value
    return obj
