"""Isoperimetric orbits and Weil-Petersson areas in the parameter domain.

An orbit is a level set of the octagon perimeter P.  With the auxiliary
quantity E = 2(cosh(P/8) + 1) the orbit through perimeter P is an oval in
the (a, alpha_tilde) domain parametrized by an angle phi, degenerating to
the point (2^{-1/4}, 0) at the regular perimeter P_reg.  The WP area
enclosed by an orbit reduces to a single integral over a in [a_minus,
a_plus], which is cross-checked here against direct 2-D integration of the
WP density.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .errors import DomainError
from .fenchel_nielsen import wp_coefficient_raw
from .octagon import OctagonParams, b_of, perimeter_ab

__all__ = [
    "A_REG",
    "E_REG",
    "P_REG",
    "QUAD_TOLERANCE",
    "OrbitSample",
    "AreaResult",
    "ParabolaFit",
    "e_of_p",
    "p_of_e",
    "e_of_a",
    "a_extremes",
    "orbit_point",
    "orbit_samples",
    "asymptotic_orbit",
    "wp_area",
    "wp_area_grid",
    "parabola_fit",
]

A_REG = 2.0 ** -0.25
E_REG = 12.0 + 8.0 * math.sqrt(2.0)
P_REG = 8.0 * math.acosh(5.0 + 4.0 * math.sqrt(2.0))

# absolute tolerance for the single-integral area quadrature
QUAD_TOLERANCE = 1e-10

# discriminant E^2 - 24E + 16 may round slightly negative at E_reg
_DISC_CLAMP = 1e-12


def e_of_p(p: float) -> float:
    """Auxiliary quantity E = 2(cosh(P/8) + 1)."""
    if p <= 0.0:
        raise DomainError(f"perimeter must be positive, got {p!r}")
    return 2.0 * (math.cosh(p / 8.0) + 1.0)


def p_of_e(e: float) -> float:
    """Perimeter P = 8 arccosh(E/2 - 1), inverse of e_of_p."""
    if e <= 4.0:
        raise DomainError(f"E must exceed 4, got {e!r}")
    return 8.0 * math.acosh(e / 2.0 - 1.0)


def e_of_a(a):
    """E along the symmetric locus alpha_tilde = 0: E = 4a^2/((1-a^2)(2a^2-1))."""
    a = np.asarray(a, dtype=float)
    out = 4.0 * a * a / ((1.0 - a * a) * (2.0 * a * a - 1.0))
    if out.ndim == 0:
        return float(out)
    return out


def _discriminant(e: float) -> float:
    disc = e * e - 24.0 * e + 16.0
    if disc < -_DISC_CLAMP:
        raise DomainError(f"E = {e!r} lies below the regular value {E_REG!r}")
    return max(disc, 0.0)


def a_extremes(e: float) -> tuple[float, float]:
    """Minimal and maximal a on the orbit of E; both satisfy e_of_a(a) = E."""
    root = math.sqrt(_discriminant(e))
    lo = math.sqrt(3.0 * e - 4.0 - root) / (2.0 * math.sqrt(e))
    hi = math.sqrt(3.0 * e - 4.0 + root) / (2.0 * math.sqrt(e))
    return lo, hi


@dataclass(frozen=True)
class OrbitSample:
    """One point of an isoperimetric orbit."""

    e: float
    phi: float
    a: float
    alpha_tilde: float

    @property
    def params(self) -> OctagonParams:
        return OctagonParams(self.a, self.alpha_tilde)


def orbit_point(e: float, phi: float) -> OrbitSample:
    """Point of the orbit of E at angle phi; phi = 0 and pi hit a_plus, a_minus."""
    root = math.sqrt(_discriminant(e))
    phi = phi % (2.0 * math.pi)
    c, s = math.cos(phi), math.sin(phi)
    a = math.sqrt(3.0 * e - 4.0 + c * root) / (2.0 * math.sqrt(e))
    inner = e - 12.0 - c * root
    # (E-12)^2 exceeds the discriminant by 128, so inner > 0 for E > E_reg
    assert inner > 0.0, inner
    at = math.atan(
        math.sqrt((e - 4.0) * _discriminant(e)) * s
        / (math.sqrt(2.0) * e * math.sqrt(inner))
    )
    return OrbitSample(e, phi, a, at)


def orbit_samples(e: float, n: int) -> list[OrbitSample]:
    """Orbit at n equally spaced angles phi = 2 pi j / n, j = 0 .. n-1."""
    if n < 1:
        raise ValueError(f"need at least one sample, got {n!r}")
    return [orbit_point(e, 2.0 * math.pi * j / n) for j in range(n)]


def asymptotic_orbit(phi: float) -> tuple[float, float]:
    """Large-P limit (a, alpha_tilde) of the orbit point at angle phi.

    a tends to sqrt(3 + cos phi)/2 and alpha_tilde to
    arctan(sin phi / sqrt(2(1 - cos phi))), which equals arctan(cos(phi/2))
    on (0, 2 pi); the phi = 0 value is the limiting corner pi/4.
    """
    phi = phi % (2.0 * math.pi)
    a = 0.5 * math.sqrt(3.0 + math.cos(phi))
    return a, math.atan(math.cos(0.5 * phi))


def _area_integrand(a: np.ndarray, e_star: float) -> np.ndarray:
    one_minus_a2 = 1.0 - a * a
    two_a2 = 2.0 * a * a - 1.0
    # E*(1-a^2) - 4 = (E - 12 -+ sqrt(disc))/4 > 0 on the whole a-interval
    ratio = (e_star - 4.0) * one_minus_a2 / (e_star * one_minus_a2 - 4.0)
    one_minus_e = np.maximum(1.0 - e_of_a(a) / e_star, 0.0)
    f = np.sqrt(ratio * one_minus_e)
    return 16.0 * a / (one_minus_a2 * np.sqrt(two_a2)) * np.arctanh(f)


@dataclass(frozen=True)
class AreaResult:
    """WP area enclosed by the orbit of perimeter p_star."""

    p_star: float
    area: float
    quad_error_estimate: float
    evaluations: int


def wp_area(p_star: float) -> AreaResult:
    """WP area inside the orbit P = p_star by adaptive quadrature.

    The integral over a in [a_minus, a_plus] is taken in the normalized
    variable t with a = a_minus + (a_plus - a_minus) t, which regularizes
    the square-root vanishing of the integrand at both endpoints.
    """
    if p_star < P_REG - 1e-12:
        raise DomainError(f"p_star = {p_star!r} lies below P_reg = {P_REG!r}")
    e_star = e_of_p(max(p_star, P_REG))
    lo, hi = a_extremes(e_star)
    width = hi - lo
    if width <= 0.0:
        return AreaResult(p_star, 0.0, 0.0, 0)

    def g(t: float) -> float:
        return width * float(_area_integrand(np.asarray(lo + width * t), e_star))

    area, err, info = quad(
        g, 0.0, 1.0, epsabs=QUAD_TOLERANCE, epsrel=QUAD_TOLERANCE,
        limit=200, full_output=True,
    )[:3]
    if err > 1e-6 * max(1.0, abs(area)):
        raise RuntimeError(
            f"area quadrature did not converge at p_star = {p_star!r}: "
            f"estimate {area!r}, error {err!r}, {info['neval']} evaluations"
        )
    return AreaResult(p_star, area, err, int(info["neval"]))


def _wp_density_masked(a: np.ndarray, at: np.ndarray, cosh_star: float) -> np.ndarray:
    """WP density where the point is in-domain and strictly inside the orbit."""
    with np.errstate(invalid="ignore", divide="ignore"):
        b = b_of(a, at)
        ok = (b < 1.0) & (2.0 * a * a * np.cos(at) ** 2 > 1.0) & (a < 1.0)
        p = perimeter_ab(a, np.where(ok, b, 0.5))
        inside = ok & (p < 8.0 * math.acosh(cosh_star))
        dens = np.where(inside, wp_coefficient_raw(a, at), 0.0)
    return dens


def wp_area_grid(p_star: float, n: int = 1200, refine: int = 16) -> float:
    """Independent 2-D midpoint integration of the WP density over {P < p_star}.

    Cells of an n-by-n grid over the bounding box are classified by the
    inside-orbit indicator at their corners; boundary cells are re-integrated
    on a refine-by-refine midpoint subgrid to suppress the O(1/n) staircase
    error of the indicator.
    """
    if p_star < P_REG - 1e-12:
        raise DomainError(f"p_star = {p_star!r} lies below P_reg = {P_REG!r}")
    e_star = e_of_p(max(p_star, P_REG))
    cosh_star = e_star / 2.0 - 1.0
    lo, hi = a_extremes(e_star)
    if hi - lo <= 0.0:
        return 0.0
    at_max = math.pi / 4.0
    a_edges = np.linspace(lo, hi, n + 1)
    at_edges = np.linspace(-at_max, at_max, n + 1)
    da = a_edges[1] - a_edges[0]
    dat = at_edges[1] - at_edges[0]

    with np.errstate(invalid="ignore", divide="ignore"):
        ca, cat = np.meshgrid(a_edges, at_edges, indexing="ij")
        cb = b_of(ca, cat)
        cok = (cb < 1.0) & (2.0 * ca * ca * np.cos(cat) ** 2 > 1.0)
        cp = perimeter_ab(ca, np.where(cok, cb, 0.5))
        corner_in = cok & (cp < 8.0 * math.acosh(cosh_star))
    in_count = (
        corner_in[:-1, :-1].astype(int)
        + corner_in[1:, :-1]
        + corner_in[:-1, 1:]
        + corner_in[1:, 1:]
    )

    mid_a = 0.5 * (a_edges[:-1] + a_edges[1:])
    mid_at = 0.5 * (at_edges[:-1] + at_edges[1:])
    ma, mat = np.meshgrid(mid_a, mid_at, indexing="ij")
    interior = in_count == 4
    total = float(np.sum(_wp_density_masked(ma[interior], mat[interior], cosh_star)))
    total *= da * dat

    bi, bj = np.nonzero((in_count > 0) & (in_count < 4))
    if bi.size:
        offs = (np.arange(refine) + 0.5) / refine
        sub_a = a_edges[bi][:, None, None] + da * offs[None, :, None]
        sub_at = at_edges[bj][:, None, None] + dat * offs[None, None, :]
        sub_a, sub_at = np.broadcast_arrays(sub_a, sub_at)
        dens = _wp_density_masked(sub_a.ravel(), sub_at.ravel(), cosh_star)
        total += float(np.sum(dens)) * da * dat / (refine * refine)
    return total


@dataclass(frozen=True)
class ParabolaFit:
    """Least-squares fit area = c1 (P - P_reg)^2 + c2 (P - P_reg)."""

    c1: float
    c2: float
    residual_norm: float
    p_values: tuple[float, ...]
    areas: tuple[float, ...]


def parabola_fit(
    p_min: float = P_REG, p_max: float = 41.0, step: float = 0.5
) -> ParabolaFit:
    """Fit the quadrature areas over [p_min, p_max] to a parabola through 0."""
    if not p_min < p_max:
        raise ValueError(f"need p_min < p_max, got {p_min!r}, {p_max!r}")
    ps = np.arange(p_min, p_max + 0.5 * step, step)
    if ps.size < 3:
        raise ValueError(f"need at least 3 samples, got {ps.size}")
    areas = np.array([wp_area(float(p)).area for p in ps])
    dp = ps - P_REG
    design = np.column_stack([dp * dp, dp])
    coeffs, _, _, _ = np.linalg.lstsq(design, areas, rcond=None)
    resid = float(np.linalg.norm(design @ coeffs - areas))
    return ParabolaFit(
        float(coeffs[0]), float(coeffs[1]), resid,
        tuple(float(p) for p in ps), tuple(float(x) for x in areas),
    )
