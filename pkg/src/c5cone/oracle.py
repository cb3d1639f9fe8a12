"""Floating-point cross-validation of the symbolic cone.

Two instruments, both in ordinary double precision:

* random bi-secant sampling: pairs of points near the origin on all branch
  combinations; each normalized secant direction must approach some cone
  component as the radius shrinks;
* witness families: explicit point pairs built from an auxiliary record so
  the secant limit is exactly v_theta + lambda*w; their directions must
  converge to that target (and hence to the record's plane).

Double precision imposes two limits, both made explicit rather than left
to produce noise. Cancellation: the signal of a record of order k on a
branch of order N lives in the top 16 decimal digits only while u**(k - N)
stays well above 1e-16, so witness u-values keep that ratio near 1e-9 at
the smallest point, and a family that would need u beyond 0.3 to do so
(gap of 14 or more) is reported as skipped. Underflow: a leading term
below double range at every admissible scale (multiplicity in the
hundreds) skips the family, or raises FloatingPointUnderflow instead of
sampling unrepresentable points.
"""

from __future__ import annotations

import cmath
import math
import os
import random
from concurrent.futures import ThreadPoolExecutor
from typing import NamedTuple, Optional

from .auxiliary import characteristic_aux, contact_aux
from .c5 import C5Cone, c5_cone
from .errors import DegenerateSecant, DimensionMismatch, FloatingPointUnderflow
from .geometry import Branch, Curve, check_compatibility
from .scalar import CycloScalar, common_conductor, root_of_unity, to_complex
from .series import Parametrization, substitute_power

DEFAULT_RADII = (1e-2, 1e-3)
DEFAULT_SAMPLES = 200
DEFAULT_TOLERANCE = 1e-2
PRNG_NAME = "mt19937"
_SKIP_U = 0.3
_NOISE_EXPONENT = 7  # keep cancellation noise near 1e-9 at the smallest u
_FLOOR_U = 1e-4


def worker_count() -> int:
    """Worker bound from C5CONE_THREADS (default 1, minimum 1)."""
    raw = os.environ.get("C5CONE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# Complex evaluation helpers.


def _complex_terms(p: Parametrization):
    return [
        [(e, to_complex(c)) for e, c in series.terms] for series in p.coords
    ]


def _eval_param(cterms, u: complex):
    return [sum(c * u**e for e, c in series) for series in cterms]


def _norm(vec) -> float:
    # hypot scales internally, so components near the double-range floor
    # do not lose their squares to underflow.
    return math.hypot(*(part for z in vec for part in (z.real, z.imag)))


def _orthonormalize(rows):
    """Modified Gram-Schmidt over complex rows (assumed independent)."""
    basis = []
    for row in rows:
        v = list(row)
        for b in basis:
            inner = sum(bz.conjugate() * vz for bz, vz in zip(b, v))
            v = [vz - inner * bz for vz, bz in zip(v, b)]
        scale = _norm(v)
        basis.append([z / scale for z in v])
    return basis


def _residual(unit_vec, basis) -> float:
    total = 0.0
    for b in basis:
        total += abs(sum(bz.conjugate() * vz for bz, vz in zip(b, unit_vec))) ** 2
    return math.sqrt(max(0.0, 1.0 - total))


def component_basis(component):
    """Orthonormal complex basis of a cone component (plane or line)."""
    if hasattr(component, "basis"):
        rows = [[to_complex(e) for e in row] for row in component.basis]
    else:
        rows = [[to_complex(e) for e in component.vec]]
    return _orthonormalize(rows)


# ---------------------------------------------------------------------------
# Witness families.


class WitnessResult(NamedTuple):
    kind: str
    labels: tuple
    k: int
    group_order: int
    k_theta: int
    u_values: tuple
    target_distances: tuple
    plane_distances: tuple
    monotone: bool
    skipped: bool
    skip_reason: Optional[str]

    @property
    def final_plane_distance(self) -> float:
        return self.plane_distances[-1] if self.plane_distances else math.inf


def default_u_values(gap: int):
    """Four geometric evaluation points for a record whose signal exponent
    exceeds the branch order by gap; (None, reason) when doubles cannot
    resolve the record."""
    if gap <= 0:
        u_final = _FLOOR_U
    else:
        u_final = max(10 ** (-_NOISE_EXPONENT / gap), _FLOOR_U)
    if u_final > _SKIP_U:
        return None, (
            f"signal u^{gap} above the leading order needs u > {_SKIP_U} to "
            f"clear double-precision cancellation noise"
        )
    u_high = min(_SKIP_U, 1000 * u_final)
    ratio = (u_final / u_high) ** (1 / 3)
    return tuple(u_high * ratio**i for i in range(4)), None


def _skipped(kind, labels, k, group_order, k_theta, reason) -> WitnessResult:
    return WitnessResult(
        kind, labels, k, group_order, k_theta, (), (), (), False, True, reason
    )


def _run_family(kind, labels, k, psi1, psi2, group_order, theta, k_theta,
                lam, target_exact, plane, u_values) -> WitnessResult:
    if u_values is None:
        u_values, reason = default_u_values(k_theta - group_order)
        if u_values is None:
            return _skipped(kind, labels, k, group_order, k_theta, reason)
        if k_theta * math.log10(u_values[-1]) < -300:
            return _skipped(
                kind, labels, k, group_order, k_theta,
                f"order-{k_theta} signal underflows IEEE doubles on the "
                f"default evaluation window",
            )
    u_values = tuple(float(u) for u in u_values)
    theta_c = to_complex(theta)
    lam_c = to_complex(lam)
    c1 = _complex_terms(psi1)
    c2 = _complex_terms(psi2)
    # h(u) = theta*u + c*u^(k-N+1) with c = -lam*theta/N makes the secant
    # direction converge exactly to v_theta + lam*w.
    offset = -lam_c * theta_c / group_order
    power = k_theta - group_order + 1
    target = _orthonormalize([[to_complex(t) for t in target_exact]])
    plane_basis = component_basis(plane)
    target_distances = []
    plane_distances = []
    for u in u_values:
        h = theta_c * u + offset * u**power
        alpha = [
            a - b for a, b in zip(_eval_param(c1, u), _eval_param(c2, h))
        ]
        scale = _norm(alpha)
        if scale == 0.0:
            raise DegenerateSecant(
                f"witness points coincide at u={u}", u=u, labels=list(labels)
            )
        direction = [z / scale for z in alpha]
        target_distances.append(_residual(direction, target))
        plane_distances.append(_residual(direction, plane_basis))
    monotone = (
        len(target_distances) >= 3
        and target_distances[-3] >= target_distances[-2] >= target_distances[-1]
    )
    return WitnessResult(
        kind, labels, k, group_order, k_theta, u_values,
        tuple(target_distances), tuple(plane_distances), monotone, False, None,
    )


def _as_scalar(lam) -> CycloScalar:
    return lam if isinstance(lam, CycloScalar) else CycloScalar.rational(lam)


def witness_secant_family(b: Branch, k: int, lam=1, u_values=None) -> WitnessResult:
    """Characteristic witness on one branch: secants between phi(u) and
    phi(theta*u - (lam*theta/m)*u^(k_theta-m+1)), theta = zeta_m^k."""
    lam = _as_scalar(lam)
    theta = root_of_unity(b.conductor, b.m, k)
    record = characteristic_aux(b, theta, k=k)
    v_raw = [s.coefficient(record.m_theta) for s in record.diff.coords]
    w_raw = [s.coefficient(b.m) for s in b.param.coords]
    target = [v + lam * w for v, w in zip(v_raw, w_raw)]
    return _run_family(
        "characteristic", (b.label,), k, b.param, b.param, b.m, theta,
        record.m_theta, lam, target, record.plane, u_values,
    )


def contact_witness_family(bi: Branch, bj: Branch, k: int,
                           common_special: Optional[int] = None, lam=1,
                           u_values=None) -> WitnessResult:
    """Contact witness on a tangent pair, working on the reparametrized
    branches psi_i(u) = phi_i(u^(lcm/m_i))."""
    lam = _as_scalar(lam)
    lcm = math.lcm(bi.m, bj.m)
    conductor = common_conductor(bi.conductor, bj.conductor)
    theta = root_of_unity(conductor, lcm, k)
    record = contact_aux(bi, bj, theta, common_special, k=k)
    psi1 = substitute_power(bi.param, lcm // bi.m)
    psi2 = substitute_power(bj.param, lcm // bj.m)
    v_raw = [s.coefficient(record.m_theta) for s in record.diff.coords]
    w_raw = [s.coefficient(lcm) for s in psi1.coords]
    target = [v + lam * w for v, w in zip(v_raw, w_raw)]
    return _run_family(
        "contact", (bi.label, bj.label), k, psi1, psi2, lcm, theta,
        record.m_theta, lam, target, record.plane, u_values,
    )


def diagonal_witness_family(bi: Branch, bj: Branch, u_values=None) -> WitnessResult:
    """Non-tangent pair witness: secants between psi_i(u) and psi_j(u)
    converge to the difference of the two tangent coefficient vectors,
    which lies in the span of the tangents."""
    lcm = math.lcm(bi.m, bj.m)
    conductor = common_conductor(bi.conductor, bj.conductor)
    one = root_of_unity(conductor, 1, 0)
    record = contact_aux(bi, bj, one, None, k=0)
    psi1 = substitute_power(bi.param, lcm // bi.m)
    psi2 = substitute_power(bj.param, lcm // bj.m)
    target = [s.coefficient(lcm) for s in record.diff.coords]
    return _run_family(
        "non-tangent", (bi.label, bj.label), 0, psi1, psi2, lcm, one,
        record.m_theta, CycloScalar.rational(0), target, record.plane, u_values,
    )


def cone_witness_results(c: Curve, cone: Optional[C5Cone] = None, lam=1) -> list:
    """One witness family per cone component, built from the component's
    first provenance record."""
    if cone is None:
        cone = c5_cone(c)
    if cone.dimension != 2:
        return []
    by_label = {b.label: (i, b) for i, b in enumerate(c.branches)}
    special = check_compatibility(c)
    results = []
    for descriptors in cone.provenance:
        kind, labels, k = descriptors[0]
        if kind == "characteristic":
            results.append(witness_secant_family(by_label[labels[0]][1], k, lam))
        elif kind == "contact":
            i, bi = by_label[labels[0]]
            j, bj = by_label[labels[1]]
            results.append(
                contact_witness_family(bi, bj, k, special.get((i, j)), lam)
            )
        else:
            bi = by_label[labels[0]][1]
            bj = by_label[labels[1]][1]
            results.append(diagonal_witness_family(bi, bj))
    return results


# ---------------------------------------------------------------------------
# Random bi-secant sampling.


class SampleReport(NamedTuple):
    seed: int
    prng: str
    radii: tuple
    samples_per_radius: int
    per_radius_max: tuple  # (radius, max distance) pairs, radii descending
    component_min: tuple  # per component, min distance at smallest radius
    degenerate_count: int
    max_plane_distance: float


def _derived_rng(seed: int, source_index: int, radius_index: int) -> random.Random:
    mixed = (
        seed * 0x9E3779B97F4A7C15
        + (source_index + 1) * 0xBF58476D1CE4E5B9
        + (radius_index + 1) * 0x94D049BB133111EB
    ) % (1 << 64)
    return random.Random(mixed)


def _draw_point(rng: random.Random, radius: float) -> complex:
    r = radius * (0.5 + 0.5 * rng.random())
    return r * cmath.exp(2j * math.pi * rng.random())


def _sample_source(args):
    cterms_i, cterms_j, same, radius, count, rng, bases = args
    max_distance = 0.0
    mins = [math.inf] * len(bases)
    degenerate = 0
    produced = 0
    while produced < count:
        u = _draw_point(rng, radius)
        v = _draw_point(rng, radius)
        p = _eval_param(cterms_i, u)
        q = _eval_param(cterms_j, v)
        delta = [a - b for a, b in zip(p, q)]
        scale = _norm(delta)
        if scale < 1e-280:
            degenerate += 1
            if degenerate > 100 * count:
                raise DegenerateSecant(
                    "persistent numerically equal sample points",
                    radius=radius,
                )
            continue
        direction = [z / scale for z in delta]
        best = math.inf
        for idx, basis in enumerate(bases):
            d = _residual(direction, basis)
            if d < mins[idx]:
                mins[idx] = d
            if d < best:
                best = d
        if best > max_distance:
            max_distance = best
        produced += 1
    return max_distance, mins, degenerate


def sample_secant_directions(c: Curve, radii=DEFAULT_RADII, k: int = DEFAULT_SAMPLES,
                             seed: int = 0, cone: Optional[C5Cone] = None) -> SampleReport:
    """Draw k point pairs per radius on every branch combination (same
    branch and cross branch), and measure how far the normalized secant
    directions sit from the nearest cone component."""
    radii = tuple(float(r) for r in radii)
    if not radii or any(not 0 < r <= 0.5 for r in radii):
        raise ValueError(f"radii must lie in (0, 0.5], got {radii}")
    if list(radii) != sorted(radii, reverse=True):
        raise ValueError(f"radii must be decreasing, got {radii}")
    if k < 1:
        raise ValueError(f"need at least one sample per radius, got {k}")
    for b in c.branches:
        if b.m * math.log10(radii[-1] / 2) < -300:
            raise FloatingPointUnderflow(
                f"branch {b.label} has multiplicity {b.m}; its leading term "
                f"underflows IEEE doubles at radius {radii[-1]}",
                label=b.label, multiplicity=b.m, radius=radii[-1],
            )
    if cone is None:
        cone = c5_cone(c)
    bases = [component_basis(comp) for comp in cone.components]
    cterms = [_complex_terms(b.param) for b in c.branches]
    r = len(c.branches)
    sources = [(i, i) for i in range(r)] + [
        (i, j) for i in range(r) for j in range(i + 1, r)
    ]
    tasks = []
    for radius_index, radius in enumerate(radii):
        for source_index, (i, j) in enumerate(sources):
            tasks.append((
                cterms[i], cterms[j], i == j, radius, k,
                _derived_rng(seed, source_index, radius_index), bases,
            ))
    workers = worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_sample_source, tasks))
    else:
        outcomes = [_sample_source(t) for t in tasks]
    per_radius = []
    degenerate_total = 0
    component_min = [math.inf] * len(bases)
    for radius_index, radius in enumerate(radii):
        chunk = outcomes[radius_index * len(sources):(radius_index + 1) * len(sources)]
        per_radius.append((radius, max(o[0] for o in chunk)))
        degenerate_total += sum(o[2] for o in chunk)
        if radius_index == len(radii) - 1:
            for _, mins, _ in chunk:
                component_min = [min(a, b) for a, b in zip(component_min, mins)]
    return SampleReport(
        seed=seed,
        prng=PRNG_NAME,
        radii=radii,
        samples_per_radius=k,
        per_radius_max=tuple(per_radius),
        component_min=tuple(component_min),
        degenerate_count=degenerate_total,
        max_plane_distance=per_radius[-1][1],
    )
