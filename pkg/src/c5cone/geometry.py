"""Branches, curves, tangency, and canonical lines/planes in C^n.

Directions are projective representatives scaled so the first nonzero entry
is 1; planes are 2 x n matrices in reduced row-echelon form. Both are
canonical, so equality (and deduplication) is entry-wise comparison, with no
epsilon anywhere: the coefficient field is exact.
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple

from .errors import (
    DependentVectors,
    DimensionMismatch,
    IncompatibleSystem,
    NonPrimitiveParametrization,
)
from .scalar import CycloScalar, common_conductor
from .series import (
    CoordinateSeries,
    Parametrization,
    is_primitive,
    order,
    puiseux_form_check,
)

_ONE = CycloScalar.rational(1)


# ---------------------------------------------------------------------------
# Exact linear algebra over Q(zeta_N).


def rref(rows):
    """Reduced row-echelon form; returns (rows, pivot column indices).

    Input rows are not modified. Zero rows are dropped from the result.
    """
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(work)) if not work[i][col].is_zero()), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        lead = work[r][col]
        if not (lead.is_rational() and lead.rational_value() == 1):
            inv = lead.inverse()
            work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and not work[i][col].is_zero():
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return [row for row in work[:r]], pivots


def matrix_rank(rows) -> int:
    return len(rref(rows)[1])


def null_space(rows):
    """Canonical (RREF) basis of {v : M v = 0} for the row matrix M."""
    if not rows:
        return []
    ncols = len(rows[0])
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    zero = CycloScalar.rational(0)
    for f in free:
        vec = [zero] * ncols
        vec[f] = _ONE
        for i, pc in enumerate(pivots):
            vec[pc] = -reduced[i][f]
        basis.append(vec)
    reduced_basis, _ = rref(basis)
    return reduced_basis


# ---------------------------------------------------------------------------
# Projective directions and planes.


class Direction:
    """Nonzero vector scaled so its first nonzero entry is 1."""

    __slots__ = ("vec",)

    def __init__(self, entries: Iterable[CycloScalar]):
        entries = tuple(entries)
        lead = next((e for e in entries if not e.is_zero()), None)
        if lead is None:
            raise ValueError("the zero vector has no direction")
        if not (lead.is_rational() and lead.rational_value() == 1):
            inv = lead.inverse()
            entries = tuple(e * inv for e in entries)
        self.vec = entries

    @property
    def n(self) -> int:
        return len(self.vec)

    def __eq__(self, other):
        if not isinstance(other, Direction):
            return NotImplemented
        return self.n == other.n and all(a == b for a, b in zip(self.vec, other.vec))

    __hash__ = None

    def key(self):
        return tuple(e.text() for e in self.vec)

    def text(self) -> str:
        return "(" + ", ".join(e.text() for e in self.vec) + ")"

    def __repr__(self):
        return f"<direction {self.text()}>"


class Plane:
    """Two-dimensional linear subspace of C^n as a canonical 2 x n RREF basis."""

    __slots__ = ("basis",)

    def __init__(self, basis_rows):
        rows = [list(r) for r in basis_rows]
        reduced, pivots = rref(rows)
        if len(pivots) != 2:
            raise DependentVectors(
                f"expected a rank-2 span, got rank {len(pivots)}", rank=len(pivots)
            )
        self.basis = tuple(tuple(row) for row in reduced)

    @property
    def n(self) -> int:
        return len(self.basis[0])

    def contains(self, d: Direction) -> bool:
        return matrix_rank([list(self.basis[0]), list(self.basis[1]), list(d.vec)]) == 2

    def __eq__(self, other):
        if not isinstance(other, Plane):
            return NotImplemented
        return self.n == other.n and all(
            a == b for ra, rb in zip(self.basis, other.basis) for a, b in zip(ra, rb)
        )

    __hash__ = None

    def key(self):
        return tuple(tuple(e.text() for e in row) for row in self.basis)

    def __repr__(self):
        rows = "; ".join("(" + ", ".join(e.text() for e in row) + ")" for row in self.basis)
        return f"<plane span{{{rows}}}>"


def plane_from_vectors(w: Direction, v: Direction) -> Plane:
    """Canonical plane spanned by two independent directions."""
    if w.n != v.n:
        raise DimensionMismatch(
            f"vectors live in dimensions {w.n} and {v.n}", dims=[w.n, v.n]
        )
    return Plane([list(w.vec), list(v.vec)])


def plane_equations(p: Plane):
    """n-2 independent linear forms (covectors) vanishing exactly on p,
    in canonical order."""
    return [tuple(row) for row in null_space([list(r) for r in p.basis])]


# ---------------------------------------------------------------------------
# Branches and curves.


class Branch:
    """A validated irreducible germ: primitive Puiseux-form parametrization
    with its multiplicity and special coordinate set."""

    __slots__ = ("param", "m", "special_coords", "label", "conductor")

    def __init__(self, param: Parametrization, label: str = "b", conductor: int | None = None):
        if not is_primitive(param):
            g = 0
            for series in param.coords:
                for e, _ in series.terms:
                    g = math.gcd(g, e)
            raise NonPrimitiveParametrization(
                f"branch {label}: all exponents share the factor {g}",
                label=label,
                gcd=g,
            )
        m, special = puiseux_form_check(param)
        needed = common_conductor(
            m, *(c.conductor for series in param.coords for _, c in series.terms)
        )
        target = needed if conductor is None else common_conductor(needed, conductor)
        if any(
            c.conductor != target for series in param.coords for _, c in series.terms
        ):
            param = Parametrization(
                CoordinateSeries((e, c.embed(target)) for e, c in series.terms)
                for series in param.coords
            )
        self.param = param
        self.m = m
        self.special_coords = special
        self.label = label
        self.conductor = target

    @property
    def n(self) -> int:
        return self.param.n

    def embedded(self, conductor: int) -> "Branch":
        if conductor == self.conductor:
            return self
        return Branch(self.param, self.label, conductor)

    def __repr__(self):
        return f"<branch {self.label}: {self.param.text()}>"


class Curve(NamedTuple):
    """A reduced curve germ: ordered branches sharing one ambient dimension
    and one global conductor (all scalars pre-embedded)."""

    n: int
    branches: tuple
    conductor: int


def curve(branches: Iterable[Branch]) -> Curve:
    branches = tuple(branches)
    if not branches:
        raise ValueError("a curve needs at least one branch")
    n = branches[0].n
    for b in branches:
        if b.n != n:
            raise DimensionMismatch(
                f"branch {b.label} has ambient dimension {b.n}, expected {n}",
                dims=[n, b.n],
            )
    labels = [b.label for b in branches]
    if len(set(labels)) != len(labels):
        raise ValueError(f"branch labels are not unique: {labels}")
    conductor = common_conductor(*(b.conductor for b in branches))
    return Curve(n, tuple(b.embedded(conductor) for b in branches), conductor)


def tangent_direction(b: Branch) -> Direction:
    """Direction of lowest-order coefficients: entry j is the coefficient of
    u^m in coordinate j."""
    return Direction(series.coefficient(b.m) for series in b.param.coords)


class TangencyClassification(NamedTuple):
    S: frozenset  # indices of singular branches (m > 1)
    T: frozenset  # pairs (i < j) of tangent branches
    NT: frozenset  # pairs (i < j) of non-tangent branches


def classify(c: Curve) -> TangencyClassification:
    tangents = [tangent_direction(b) for b in c.branches]
    r = len(c.branches)
    S = frozenset(i for i, b in enumerate(c.branches) if b.m > 1)
    T, NT = set(), set()
    for i in range(r):
        for j in range(i + 1, r):
            (T if tangents[i] == tangents[j] else NT).add((i, j))
    return TangencyClassification(S, frozenset(T), frozenset(NT))


def check_compatibility(c: Curve) -> dict:
    """For every tangent pair pick the smallest shared special coordinate.

    Returns {(i, j): coordinate index}; raises IncompatibleSystem naming the
    first tangent pair with no shared special coordinate.
    """
    cls = classify(c)
    chosen = {}
    for i, j in sorted(cls.T):
        shared = c.branches[i].special_coords & c.branches[j].special_coords
        if not shared:
            raise IncompatibleSystem(c.branches[i].label, c.branches[j].label)
        chosen[(i, j)] = min(shared)
    return chosen
