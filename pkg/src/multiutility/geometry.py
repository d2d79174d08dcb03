"""Exact rational linear feasibility.

A dense two-phase simplex over :class:`~fractions.Fraction` with Bland's
least-index rule (finite termination, no tolerances).  Strict inequalities are
handled either by maximizing a common slack ``t`` (capped at 1) or, for
homogeneous systems, by rescaling ``c.x > 0`` to ``c.x >= 1``.

Infeasible systems can produce a dual certificate ``y`` (one multiplier per
constraint) that is checked by :func:`check_certificate` without any solver.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

WEAK = (">=", "<=", "==")
STRICT = (">", "<")
_ZERO = Fraction(0)


@dataclass(frozen=True)
class Constraint:
    coefficients: tuple[Fraction, ...]
    relation: str
    rhs: Fraction

    @property
    def strict(self) -> bool:
        return self.relation in STRICT

    def holds(self, x: Sequence[Fraction]) -> bool:
        lhs = sum((a * b for a, b in zip(self.coefficients, x)), _ZERO)
        r = self.relation
        if r == ">=":
            return lhs >= self.rhs
        if r == "<=":
            return lhs <= self.rhs
        if r == "==":
            return lhs == self.rhs
        if r == ">":
            return lhs > self.rhs
        return lhs < self.rhs


@dataclass
class LinearSystem:
    """Linear constraints over free rational variables.

    Sign restrictions are ordinary constraints (``x_j >= 0``); use
    :meth:`nonnegative` for the common case.
    """

    num_vars: int
    constraints: list[Constraint] = field(default_factory=list)

    def add(self, coefficients, relation: str, rhs=0) -> "LinearSystem":
        if relation not in WEAK + STRICT:
            raise ValueError(f"unknown relation {relation!r}")
        coeffs = tuple(Fraction(c) for c in coefficients)
        if len(coeffs) != self.num_vars:
            raise ValueError(f"expected {self.num_vars} coefficients, got {len(coeffs)}")
        self.constraints.append(Constraint(coeffs, relation, Fraction(rhs)))
        return self

    def nonnegative(self, indices) -> "LinearSystem":
        for j in indices:
            row = [0] * self.num_vars
            row[j] = 1
            self.add(row, ">=", 0)
        return self

    @property
    def weak_constraints(self) -> list[Constraint]:
        return [c for c in self.constraints if not c.strict]

    @property
    def strict_constraints(self) -> list[Constraint]:
        return [c for c in self.constraints if c.strict]

    @property
    def is_homogeneous(self) -> bool:
        return all(c.rhs == 0 for c in self.constraints)

    def satisfied_by(self, x: Sequence) -> bool:
        x = [Fraction(v) for v in x]
        return len(x) == self.num_vars and all(c.holds(x) for c in self.constraints)

    def scaled_row(self, index: int, factor) -> "LinearSystem":
        """Copy with constraint ``index`` multiplied by ``factor > 0``."""
        factor = Fraction(factor)
        if factor <= 0:
            raise ValueError("row scaling factor must be positive")
        out = LinearSystem(self.num_vars, list(self.constraints))
        c = out.constraints[index]
        out.constraints[index] = Constraint(
            tuple(a * factor for a in c.coefficients), c.relation, c.rhs * factor
        )
        return out


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: tuple[Fraction, ...] | None = None
    certificate: tuple[Fraction, ...] | None = None

    def __bool__(self) -> bool:
        return self.feasible


# -- simplex -----------------------------------------------------------------


def _pivot(T, r, row, col):
    prow = T[row]
    piv = prow[col]
    if piv != 1:
        prow = [v / piv for v in prow]
        T[row] = prow
    # the tableau is sparse; touch only the pivot row's nonzero columns
    nz = [(j, p) for j, p in enumerate(prow) if p]
    for i, trow in enumerate(T):
        if i != row:
            f = trow[col]
            if f:
                for j, p in nz:
                    trow[j] -= f * p
    if r is not None:
        f = r[col]
        if f:
            for j, p in nz:
                r[j] -= f * p


def _bland(T, r, basis, ncols):
    while True:
        col = next((j for j in range(ncols) if r[j] > 0), None)
        if col is None:
            return "optimal"
        best = None
        for i, row in enumerate(T):
            a = row[col]
            if a > 0:
                key = (row[-1] / a, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return "unbounded"
        i = best[1]
        _pivot(T, r, i, col)
        basis[i] = col


def simplex(A, b, c):
    """Maximize ``c.x`` subject to ``A x = b``, ``x >= 0``.

    Returns ``(status, x, value)`` with status one of ``"optimal"``,
    ``"infeasible"``, ``"unbounded"``; ``x`` and ``value`` are None unless
    optimal.
    """
    n = len(c)
    m = len(A)
    T = []
    for i, (row, bi) in enumerate(zip(A, b)):
        row = [Fraction(v) for v in row]
        bi = Fraction(bi)
        if bi < 0:
            row = [-v for v in row]
            bi = -bi
        art = [_ZERO] * m
        art[i] = Fraction(1)
        T.append(row + art + [bi])
    basis = [n + i for i in range(m)]

    # phase 1: maximize -sum(artificials)
    r = [_ZERO] * n + [Fraction(-1)] * m + [_ZERO]
    for row in T:
        r = [a + v for a, v in zip(r, row)]
    _bland(T, r, basis, n + m)
    if r[-1] > 0:
        return "infeasible", None, None

    keep = []
    for i in range(len(T)):
        if basis[i] >= n:
            col = next((j for j in range(n) if T[i][j] != 0), None)
            if col is None:
                continue  # redundant row
            _pivot(T, None, i, col)
            basis[i] = col
        keep.append(i)
    T = [T[i][:n] + [T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    # phase 2
    r = [Fraction(v) for v in c] + [_ZERO]
    for i, row in enumerate(T):
        cb = Fraction(c[basis[i]])
        if cb:
            r = [a - cb * v for a, v in zip(r, row)]
    status = _bland(T, r, basis, n)
    if status == "unbounded":
        return "unbounded", None, None
    x = [_ZERO] * n
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    value = sum((Fraction(cj) * xj for cj, xj in zip(c, x)), _ZERO)
    return "optimal", tuple(x), value


def _sign_rows(system: LinearSystem) -> set[int]:
    """Indices of constraints that merely say ``x_j >= 0``."""
    out = set()
    for i, con in enumerate(system.constraints):
        if con.relation == ">=" and con.rhs == 0:
            nz = [a for a in con.coefficients if a != 0]
            if len(nz) == 1 and nz[0] > 0:
                out.add(i)
    return out


def _standard_form(system: LinearSystem):
    """Translate to ``A z = b, z >= 0``.

    Variables with an explicit ``x_j >= 0`` row map to one column; the rest are
    split as ``p - q``.  Strict rows share a slack ``t`` capped at 1.  Returns
    ``(A, b, c, t_index, columns)`` where ``columns[j]`` lists the
    ``(column, sign)`` pairs that make up ``x_j``.
    """
    n = system.num_vars
    sign_rows = _sign_rows(system)
    nonneg = {
        next(j for j, a in enumerate(system.constraints[i].coefficients) if a != 0)
        for i in sign_rows
    }
    columns = []
    width = 0
    for j in range(n):
        if j in nonneg:
            columns.append(((width, 1),))
            width += 1
        else:
            columns.append(((width, 1), (width + 1, -1)))
            width += 2
    rows = [con for i, con in enumerate(system.constraints) if i not in sign_rows]
    strict = any(c.strict for c in rows)
    s = width
    width += sum(1 for c in rows if c.relation != "==")
    t_index = width if strict else None
    if strict:
        width += 2
    A, b = [], []
    for con in rows:
        row = [_ZERO] * width
        for j, a in enumerate(con.coefficients):
            if a:
                for col, sign in columns[j]:
                    row[col] = a if sign > 0 else -a
        rel = con.relation
        if rel in (">=", ">"):
            row[s] = Fraction(-1)
            s += 1
        elif rel in ("<=", "<"):
            row[s] = Fraction(1)
            s += 1
        if rel == ">":
            row[t_index] = Fraction(-1)
        elif rel == "<":
            row[t_index] = Fraction(1)
        A.append(row)
        b.append(con.rhs)
    c = [_ZERO] * width
    if strict:
        row = [_ZERO] * width
        row[t_index] = Fraction(1)
        row[t_index + 1] = Fraction(1)
        A.append(row)
        b.append(Fraction(1))
        c[t_index] = Fraction(1)
    return A, b, c, t_index, columns


def _solve_slack(system: LinearSystem) -> tuple[Fraction, ...] | None:
    A, b, c, t_index, columns = _standard_form(system)
    status, z, _ = simplex(A, b, c)
    if status != "optimal":
        return None
    if t_index is not None and z[t_index] <= 0:
        return None
    return tuple(
        sum((z[col] if sign > 0 else -z[col] for col, sign in cols), _ZERO) for cols in columns
    )


def _normalized(system: LinearSystem) -> LinearSystem:
    if not system.is_homogeneous:
        raise ValueError("the >= 1 normalization only applies to homogeneous systems")
    out = LinearSystem(system.num_vars)
    for con in system.constraints:
        if con.relation == ">":
            out.add(con.coefficients, ">=", 1)
        elif con.relation == "<":
            out.add(con.coefficients, "<=", -1)
        else:
            out.constraints.append(con)
    return out


def alternative_system(system: LinearSystem) -> LinearSystem:
    """The weak system whose solutions are normalized infeasibility certificates.

    One multiplier ``y_i`` per constraint, oriented so that ``y_i >= 0`` on
    ``>=``/``>`` rows, ``y_i <= 0`` on ``<=``/``<`` rows and free on equalities;
    ``sum y_i a_i = 0``, ``s = sum y_i b_i >= 0`` and ``s + sum |y_strict| = 1``.
    """
    cons = system.constraints
    m = len(cons)
    alt = LinearSystem(m)
    for i, con in enumerate(cons):
        unit = [0] * m
        unit[i] = 1
        if con.relation in (">=", ">"):
            alt.add(unit, ">=", 0)
        elif con.relation in ("<=", "<"):
            alt.add(unit, "<=", 0)
    for j in range(system.num_vars):
        alt.add([con.coefficients[j] for con in cons], "==", 0)
    rhs = [con.rhs for con in cons]
    alt.add(rhs, ">=", 0)
    strict_mass = [
        1 if con.relation == ">" else -1 if con.relation == "<" else 0 for con in cons
    ]
    alt.add([a + s for a, s in zip(rhs, strict_mass)], "==", 1)
    return alt


def check_certificate(system: LinearSystem, certificate: Sequence) -> bool:
    """True iff ``certificate`` proves ``system`` has no solution.

    Summing ``y_i * (a_i . x  rel_i  b_i)`` yields ``0 >= s`` (strict when a
    strict row carries weight), contradicting ``s > 0`` or ``s = 0`` with
    strict weight.
    """
    y = [Fraction(v) for v in certificate]
    cons = system.constraints
    if len(y) != len(cons):
        return False
    for yi, con in zip(y, cons):
        if con.relation in (">=", ">") and yi < 0:
            return False
        if con.relation in ("<=", "<") and yi > 0:
            return False
    for j in range(system.num_vars):
        if sum((yi * con.coefficients[j] for yi, con in zip(y, cons)), _ZERO) != 0:
            return False
    s = sum((yi * con.rhs for yi, con in zip(y, cons)), _ZERO)
    strict_weight = sum((abs(yi) for yi, con in zip(y, cons) if con.strict), _ZERO)
    return s > 0 or (s == 0 and strict_weight > 0)


def infeasibility_certificate(system: LinearSystem) -> tuple[Fraction, ...]:
    witness = _solve_slack(alternative_system(system))
    if witness is None:
        raise RuntimeError("system is feasible; no infeasibility certificate exists")
    return witness


def solve_feasibility(
    system: LinearSystem, strict: str = "slack", certificate: bool = False
) -> FeasibilityResult:
    """Decide ``system`` exactly.

    ``strict`` selects how strict rows are handled: ``"slack"`` (any system) or
    ``"normalize"`` (homogeneous systems only).  With ``certificate=True`` an
    infeasible answer carries a multiplier vector accepted by
    :func:`check_certificate`.
    """
    if strict == "slack":
        witness = _solve_slack(system)
    elif strict == "normalize":
        witness = _solve_slack(_normalized(system))
    else:
        raise ValueError(f"unknown strict-inequality strategy {strict!r}")
    if witness is not None:
        if not system.satisfied_by(witness):
            raise AssertionError("simplex returned a point that fails substitution")
        return FeasibilityResult(True, witness)
    cert = infeasibility_certificate(system) if certificate else None
    return FeasibilityResult(False, None, cert)


# -- membership queries -------------------------------------------------------


def _vec(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


def cone_membership(target, generators, negated=None):
    """Nonnegative ``weights`` and free ``shift`` with
    ``target = sum(+-w_g * g) + shift * 1``, or None.

    Generators flagged in ``negated`` enter with a minus sign.  The weights are
    never all zero: that would make ``target`` constant, which is refused.
    """
    target = _vec(target)
    if all(t == target[0] for t in target):
        raise ValueError("target vector is constant")
    gens = [_vec(g) for g in generators]
    if any(len(g) != len(target) for g in gens):
        raise ValueError("generators and target have different lengths")
    negated = list(negated) if negated is not None else [False] * len(gens)
    m = len(gens)
    system = LinearSystem(m + 1).nonnegative(range(m))
    for z in range(len(target)):
        row = [(-g[z] if neg else g[z]) for g, neg in zip(gens, negated)] + [1]
        system.add(row, "==", target[z])
    res = solve_feasibility(system)
    if not res.feasible:
        return None
    return res.witness[:m], res.witness[m]


def polytope_membership(point, vertices):
    """Convex weights expressing ``point`` over ``vertices`` (a UtilitySet or a
    list of vectors), or None."""
    verts = [_vec(v) for v in getattr(vertices, "vertices", vertices)]
    point = _vec(point)
    m = len(verts)
    system = LinearSystem(m).nonnegative(range(m))
    system.add([1] * m, "==", 1)
    for z in range(len(point)):
        system.add([v[z] for v in verts], "==", point[z])
    res = solve_feasibility(system)
    return res.witness if res.feasible else None


def rank(vectors) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    rows = []
    for v in vectors:
        v = _vec(v)
        d = lcm(*(x.denominator for x in v)) if v else 1
        rows.append([int(x * d) for x in v])
    if not rows or not rows[0]:
        return 0
    ncols = len(rows[0])
    r = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        for i in range(r + 1, len(rows)):
            rows[i] = [
                (p * rows[i][j] - rows[i][col] * rows[r][j]) // prev for j in range(ncols)
            ]
        prev = p
        r += 1
        if r == len(rows):
            break
    return r
