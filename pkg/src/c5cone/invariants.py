"""Plane-curve invariants and the bi-Lipschitz equivalence decision.

Characteristic exponents via the gcd chain, intersection multiplicity of
plane branch pairs from contact auxiliary multiplicities, the arithmetic
structure tying a tangent pair's contact multiplicities to its common
scaled characteristic exponents, and the profile comparison that decides
bi-Lipschitz equivalence (outer metric) of two curve germs.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Optional

from .auxiliary import cham, coam
from .errors import (
    NonIntegralResult,
    NotPlaneCurve,
    StructureMismatch,
    TooManyBranches,
)
from .geometry import Branch, Curve, check_compatibility, classify

MAX_BRANCHES = 12


def characteristic_exponents(b: Branch) -> tuple:
    """Gcd-chain characteristic exponents of a plane branch, multiplicity
    included: {m} plus every support exponent of the non-special coordinate
    where the running gcd drops."""
    if b.n != 2:
        raise NotPlaneCurve(
            f"branch {b.label} lives in dimension {b.n}, expected 2", n=b.n
        )
    s = min(b.special_coords)
    other = b.param.coords[1 - s]
    exponents = [b.m]
    g = b.m
    for e, _ in other.terms:
        reduced = math.gcd(g, e)
        if reduced < g:
            exponents.append(e)
            g = reduced
    return tuple(exponents)


def intersection_multiplicity(coam_seq, mt1: int, mt2: int) -> int:
    """Sum of the contact auxiliary multiplicities divided by mt1*mt2.

    The division is exact for genuine plane branch pairs; a remainder means
    the inputs do not belong together.
    """
    total = sum(coam_seq)
    denominator = mt1 * mt2
    if total % denominator != 0:
        raise NonIntegralResult(
            f"sum {total} of contact multiplicities is not divisible by {denominator}",
            total=total,
            denominator=denominator,
        )
    return total // denominator


class ContactStructure(NamedTuple):
    """Arithmetic shape of a pair's contact auxiliary multiplicities.

    betas are the common scaled characteristic exponents above the common
    order N = lcm(m_1, m_2); E is the gcd chain E_0 = N,
    E_j = gcd(N, beta_1..beta_j); the multiset of contact multiplicities is
    beta_k repeated E_{k-1} - E_k times for k <= q, then delta = max value
    repeated E_q times.
    """

    tau: int
    betas: tuple
    E: tuple
    q: int
    delta: int
    counts: dict


def contact_structure(bi: Branch, bj: Branch, coam_seq) -> ContactStructure:
    """Derive and validate the structure above against an actual contact
    multiplicity sequence of the pair (bi, bj)."""
    lcm = math.lcm(bi.m, bj.m)
    scale_i, scale_j = lcm // bi.m, lcm // bj.m
    scaled_i = {e * scale_i for e in characteristic_exponents(bi)}
    scaled_j = {e * scale_j for e in characteristic_exponents(bj)}
    betas = tuple(sorted(e for e in scaled_i & scaled_j if e > lcm))
    chain = [lcm]
    for beta in betas:
        chain.append(math.gcd(chain[-1], beta))
    delta = max(coam_seq)
    below = sorted({v for v in coam_seq if v < delta})
    q = len(below)
    if q > len(betas) or tuple(below) != betas[:q]:
        raise StructureMismatch(
            f"values {below} below delta={delta} are not a prefix of the "
            f"common scaled exponents {betas}",
            below=below,
            betas=list(betas),
        )
    expected = {}
    for k in range(1, q + 1):
        expected[betas[k - 1]] = chain[k - 1] - chain[k]
    expected[delta] = expected.get(delta, 0) + chain[q]
    actual = {}
    for v in coam_seq:
        actual[v] = actual.get(v, 0) + 1
    if expected != actual:
        raise StructureMismatch(
            f"multiplicity pattern {expected} does not match the contact "
            f"sequence counts {actual}",
            expected=expected,
            actual=actual,
        )
    return ContactStructure(
        tau=len(betas),
        betas=betas,
        E=tuple(chain),
        q=q,
        delta=delta,
        counts=actual,
    )


class InvariantProfile(NamedTuple):
    r: int
    chams: tuple  # frozenset per branch
    coams: dict  # (i, j) with i < j -> sorted tuple
    tangent: dict  # (i, j) -> bool


def profile(c) -> InvariantProfile:
    """All characteristic and contact auxiliary multiplicities of a curve."""
    reason = getattr(c, "reason", None)
    if reason is not None:
        raise reason
    special = check_compatibility(c)
    cls = classify(c)
    chams = tuple(cham(b) for b in c.branches)
    coams = {}
    tangent = {}
    r = len(c.branches)
    for i in range(r):
        for j in range(i + 1, r):
            pair = (i, j)
            coams[pair] = coam(c.branches[i], c.branches[j], special.get(pair))
            tangent[pair] = pair in cls.T
    return InvariantProfile(r=r, chams=chams, coams=coams, tangent=tangent)


class EquivalenceVerdict(NamedTuple):
    equivalent: bool
    witness: Optional[tuple]  # witness[i] = index in Y matched to branch i of X


def bilipschitz_equivalent(x: Curve, y: Curve) -> EquivalenceVerdict:
    """Search for a branch bijection matching every characteristic set and
    every pairwise contact sequence; first witness in lexicographic order.

    Ambient dimensions may differ: only the multiplicity data is compared.
    """
    if len(x.branches) > MAX_BRANCHES or len(y.branches) > MAX_BRANCHES:
        raise TooManyBranches(
            f"bijection search capped at {MAX_BRANCHES} branches",
            limit=MAX_BRANCHES,
        )
    px, py = profile(x), profile(y)
    if px.r != py.r:
        return EquivalenceVerdict(False, None)
    r = px.r
    candidates = [
        [j for j in range(r) if py.chams[j] == px.chams[i]] for i in range(r)
    ]

    def pair_key(a: int, b: int):
        return (a, b) if a < b else (b, a)

    assignment = [None] * r
    used = [False] * r

    def extend(i: int) -> bool:
        if i == r:
            return True
        for j in candidates[i]:
            if used[j]:
                continue
            ok = all(
                px.coams[(p, i)] == py.coams[pair_key(assignment[p], j)]
                for p in range(i)
            )
            if ok:
                assignment[i] = j
                used[j] = True
                if extend(i + 1):
                    return True
                assignment[i] = None
                used[j] = False
        return False

    if extend(0):
        return EquivalenceVerdict(True, tuple(assignment))
    return EquivalenceVerdict(False, None)
