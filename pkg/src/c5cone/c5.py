"""Assembly of the cone of bi-secant limits and its plane-count bounds.

For a singular curve the cone is a finite union of 2-planes, collected in
three steps: characteristic planes of each singular branch, contact planes
of each tangent pair (full root group, theta = 1 included), and the span of
the two tangents for each non-tangent pair. A smooth irreducible germ
degenerates to its tangent line.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from .auxiliary import characteristic_records, contact_records
from .errors import UnsupportedDimension
from .geometry import (
    Curve,
    check_compatibility,
    classify,
    plane_equations,
    plane_from_vectors,
    tangent_direction,
)
from .scalar import CycloScalar


class C5Cone(NamedTuple):
    """dimension 2: components is a sorted tuple of planes; dimension 1
    (smooth irreducible input): components is a single tangent direction.
    provenance[i] lists (kind, labels, k) descriptors for components[i]."""

    dimension: int
    components: tuple
    provenance: tuple


def c5_cone(c: Curve, representatives: bool = True) -> C5Cone:
    """Run the three collection steps and deduplicate.

    representatives=True visits one theta per subgroup order in the
    characteristic step (same plane set); the contact step always visits
    the full root group.
    """
    cls = classify(c)
    special = check_compatibility(c)
    if len(c.branches) == 1 and c.branches[0].m == 1:
        b = c.branches[0]
        return C5Cone(
            dimension=1,
            components=(tangent_direction(b),),
            provenance=((("tangent", (b.label,), -1),),),
        )
    found = {}
    ordered = []

    def add(plane, descriptor):
        key = plane.key()
        if key not in found:
            found[key] = [plane, []]
            ordered.append(key)
        found[key][1].append(descriptor)

    for i in sorted(cls.S):
        b = c.branches[i]
        for rec in characteristic_records(b, representatives=representatives):
            add(rec.plane, (rec.kind, rec.labels, rec.k))
    for i, j in sorted(cls.T):
        bi, bj = c.branches[i], c.branches[j]
        for rec in contact_records(bi, bj, special[(i, j)]):
            add(rec.plane, (rec.kind, rec.labels, rec.k))
    for i, j in sorted(cls.NT):
        bi, bj = c.branches[i], c.branches[j]
        plane = plane_from_vectors(tangent_direction(bi), tangent_direction(bj))
        add(plane, ("non-tangent", (bi.label, bj.label), -1))
    keys = sorted(ordered)
    return C5Cone(
        dimension=2,
        components=tuple(found[k][0] for k in keys),
        provenance=tuple(tuple(found[k][1]) for k in keys),
    )


def sigma(n: int) -> int:
    """Maximum length of a chain of nested divisors of n: 1 plus the number
    of prime factors counted with multiplicity."""
    if n < 1:
        raise ValueError(f"sigma needs n >= 1, got {n}")
    count = 1
    p = 2
    while p * p <= n:
        while n % p == 0:
            count += 1
            n //= p
        p += 1
    if n > 1:
        count += 1
    return count


def bound1(c: Curve) -> int:
    """Sum of (m_i - 1) over singular branches, plus lcm(m_i, m_j) over
    tangent pairs, plus the number of non-tangent pairs."""
    cls = classify(c)
    total = sum(c.branches[i].m - 1 for i in cls.S)
    total += sum(math.lcm(c.branches[i].m, c.branches[j].m) for i, j in cls.T)
    return total + len(cls.NT)


def bound2(c: Curve) -> int:
    """Like bound1 with sigma(m_i) - 1 in place of m_i - 1; never larger."""
    cls = classify(c)
    total = sum(sigma(c.branches[i].m) - 1 for i in cls.S)
    total += sum(math.lcm(c.branches[i].m, c.branches[j].m) for i, j in cls.T)
    return total + len(cls.NT)


# ---------------------------------------------------------------------------
# Product equation in ambient dimension 3.


def integer_normalized_form(form) -> tuple:
    """Scale a covector with rational entries to coprime integers, first
    nonzero entry positive. Entries outside Q are returned unchanged."""
    values = []
    for e in form:
        if not e.is_rational():
            return tuple(form)
        values.append(e.rational_value())
    den_lcm = math.lcm(*(v.denominator for v in values if v != 0))
    ints = [v * den_lcm for v in values]
    g = math.gcd(*(int(v) for v in ints if v != 0))
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        g = -g
    return tuple(CycloScalar.rational(Fraction(int(v), g)) for v in ints)


def _poly_mul_form(poly: dict, form: tuple) -> dict:
    out = {}
    for monomial, coeff in poly.items():
        for pos, fc in enumerate(form):
            if fc.is_zero():
                continue
            key = tuple(
                e + 1 if idx == pos else e for idx, e in enumerate(monomial)
            )
            c = out.get(key)
            c = coeff * fc if c is None else c + coeff * fc
            if c.is_zero():
                out.pop(key, None)
            else:
                out[key] = c
    return out


def product_equation(cone: C5Cone) -> dict:
    """Expanded product of the defining linear forms of a 3-space cone,
    as {exponent triple: coefficient}. Forms are integer-normalized first,
    so the graded-lex leading coefficient is positive (1 in the fixtures)."""
    if cone.dimension != 2 or any(p.n != 3 for p in cone.components):
        n = cone.components[0].n if cone.components else 0
        raise UnsupportedDimension(
            f"product equation requires planes in dimension 3, got {n}", n=n
        )
    poly = {(0, 0, 0): CycloScalar.rational(1)}
    for plane in cone.components:
        (form,) = plane_equations(plane)
        poly = _poly_mul_form(poly, integer_normalized_form(form))
    return poly


def graded_lex_order(monomial: tuple) -> tuple:
    return (-sum(monomial), tuple(-e for e in monomial))


def polynomial_text(poly: dict, names=("x", "y", "z")) -> str:
    """Render {exponents: coefficient} with monomials in graded-lex order,
    highest first."""
    if not poly:
        return "0"
    parts = []
    for monomial in sorted(poly, key=graded_lex_order):
        coeff = poly[monomial]
        factors = []
        for name, e in zip(names, monomial):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        body = "*".join(factors)
        ctext = coeff.text()
        if not body:
            parts.append(ctext)
        elif ctext == "1":
            parts.append(body)
        elif ctext == "-1":
            parts.append(f"-{body}")
        elif coeff.is_rational():
            parts.append(f"{ctext}*{body}")
        else:
            parts.append(f"({ctext})*{body}")
    return " + ".join(parts).replace("+ -", "- ")
