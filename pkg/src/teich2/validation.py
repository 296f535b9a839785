"""Invariant suite over a parameter grid, backing the validate subcommand.

Every cross-check stated by the library modules is exercised here: group
relation and discreteness margins, the triple construction of the
generators, side pairings, Fenchel-Nielsen consistency, the Wolpert form,
L/T relations, both perimeter routes with interior angles, isoperimetric
orbit behavior, and the two independent area integrations.  The result is
a JSON-ready report with one entry per check.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor

from . import isoperimetric as iso
from .fenchel_nielsen import (
    dt_residuals,
    lt_relations_check,
    pants_data,
    wp_coefficient,
    wp_fd_check,
)
from .group import (
    ball,
    generators,
    m_matrices,
    omega_table,
    relation_defect,
    side_pairing_check,
)
from .hyperbolic import dist, translation
from .octagon import (
    OctagonParams,
    build_geometry,
    domain_grid,
    interior_angles_numeric,
    perimeter,
    perimeter_numeric,
)

__all__ = ["DEFAULT_TOLERANCES", "run_validation", "thread_count"]

DEFAULT_TOLERANCES: dict[str, float] = {
    "relation_defect": 1e-9,
    "generator_traces": 0.0,
    "triple_agreement": 1e-9,
    "side_pairing": 1e-9,
    "side_pairing_interior": 0.0,
    "fn_consistency": 1e-9,
    "wolpert_relative": 1e-5,
    "wolpert_k3": 1e-9,
    "lt_relations": 1e-9,
    "perimeter_routes": 1e-8,
    "interior_angles": 1e-8,
    "orbit_constancy": 1e-8,
    "orbit_mirror": 1e-12,
    "orbit_asymptote": 1e-3,
    "area_regular": 1e-10,
    "area_cross_check": 1e-4,
    "ball_counts": 0.0,
}

_GRID_KEYS = (
    "relation_defect",
    "generator_traces",
    "triple_agreement",
    "side_pairing",
    "fn_consistency",
    "wolpert_relative",
    "wolpert_k3",
    "lt_relations",
    "perimeter_routes",
    "interior_angles",
)


def thread_count() -> int:
    """Worker count, capped by the TEICH2_THREADS environment variable."""
    cap = os.environ.get("TEICH2_THREADS")
    workers = os.cpu_count() or 1
    if cap is not None:
        workers = max(1, min(workers, int(cap)))
    return min(workers, 32)


def _grid_point(params: OctagonParams) -> dict[str, float]:
    geom = build_geometry(params)
    gens = generators(params)

    rel = relation_defect(gens).defect
    traces = max(0.0, 2.0 - min(abs(g.trace) for g in gens.g))

    mm = m_matrices(geom)
    omegas = omega_table(geom)
    triple = 0.0
    for k in range(4):
        pk = omegas[k] / (1.0 + math.sqrt(1.0 - abs(omegas[k]) ** 2))
        triple = max(triple, gens.g[k].projective_gap(mm[k] @ mm[5]))
        triple = max(triple, gens.g[k].projective_gap(translation(pk)))

    sp = side_pairing_check(geom, gens, samples=0)
    pairing = max(sp.endpoint_residual, sp.midpoint_residual)

    data = pants_data(params)
    data_p = pants_data(params, primed=True)
    fn_res = 0.0
    for k in range(3):
        fn_res = max(fn_res, abs(data.c[k] - math.cosh(0.5 * data.lengths[k])))
    a, b = params.a, params.b
    d12 = 4.0 / ((1.0 - a * a) * (1.0 - b * b)) - 1.0
    d3 = 2.0 / (1.0 - a * a) ** 2 - 1.0
    for k, ref in enumerate((d12, d12, d3)):
        fn_res = max(fn_res, abs(data.d[k] - ref))
    fn_res = max(fn_res, *(abs(r) for r in dt_residuals(data)))
    p_plus = complex(geom.p_plus)
    p_minus = complex(geom.p_minus)
    fn_res = max(fn_res, abs(data.lengths[0] - 2.0 * dist(p_plus, p_minus)))
    fn_res = max(fn_res, abs(data.lengths[2] - 2.0 * dist(0.0, a)))
    fn_res = max(fn_res, abs(data_p.lengths[0] - 2.0 * dist(1j * p_plus, p_minus)))

    coeff = wp_coefficient(params)
    chk = wp_fd_check(params)
    chk_p = wp_fd_check(params, primed=True)
    wolpert_rel = max(
        abs(chk.value - coeff) / coeff, abs(chk_p.value - coeff) / coeff
    )
    wolpert_k3 = max(abs(chk.summands[2]), abs(chk_p.summands[2]))

    lt = lt_relations_check(params).max_residual

    p_closed = perimeter(params)
    p_sum = perimeter_numeric(geom)
    ang0, ang1 = interior_angles_numeric(geom)
    angle_res = max(
        abs(ang0 - geom.beta),
        abs(ang1 - (0.5 * math.pi - geom.beta)),
        abs(4.0 * (ang0 + ang1) - 2.0 * math.pi),
    )

    return {
        "relation_defect": rel,
        "generator_traces": traces,
        "triple_agreement": triple,
        "side_pairing": pairing,
        "fn_consistency": fn_res,
        "wolpert_relative": wolpert_rel,
        "wolpert_k3": wolpert_k3,
        "lt_relations": lt,
        "perimeter_routes": abs(p_closed - p_sum),
        "interior_angles": angle_res,
    }


def _orbit_checks(results: dict[str, float]) -> None:
    constancy = 0.0
    mirror = 0.0
    for p_target in range(25, 42, 2):
        e = iso.e_of_p(float(p_target))
        samples = iso.orbit_samples(e, 256)
        for s in samples:
            constancy = max(
                constancy, abs(perimeter(s.params) - p_target) / p_target
            )
        for j in range(1, 128):
            left, right = samples[j], samples[256 - j]
            mirror = max(
                mirror,
                abs(left.a - right.a),
                abs(left.alpha_tilde + right.alpha_tilde),
            )
    results["orbit_constancy"] = constancy
    results["orbit_mirror"] = mirror

    e200 = iso.e_of_p(200.0)
    sup = 0.0
    for j in range(256):
        phi = (j + 0.5) * 2.0 * math.pi / 256.0
        s = iso.orbit_point(e200, phi)
        a_inf, at_inf = iso.asymptotic_orbit(phi)
        sup = max(sup, abs(s.a - a_inf), abs(s.alpha_tilde - at_inf))
    results["orbit_asymptote"] = sup


def _area_checks(results: dict[str, float]) -> None:
    results["area_regular"] = abs(iso.wp_area(iso.P_REG).area)
    dev = 0.0
    for p_star in (25.0, 41.0):
        quad_area = iso.wp_area(p_star).area
        grid_area = iso.wp_area_grid(p_star)
        dev = max(dev, abs(grid_area - quad_area) / quad_area)
    results["area_cross_check"] = dev


def run_validation(
    n_a: int = 20,
    n_alpha: int = 20,
    margin: float = 0.02,
    seed: int = 0,
    tolerances: dict[str, float] | None = None,
) -> dict:
    """Run every invariant check and return a JSON-ready report."""
    tols = dict(DEFAULT_TOLERANCES)
    if tolerances:
        unknown = set(tolerances) - set(tols)
        if unknown:
            raise ValueError(f"unknown tolerance names: {sorted(unknown)}")
        tols.update(tolerances)

    grid = domain_grid(n_a, n_alpha, margin)
    with ThreadPoolExecutor(max_workers=thread_count()) as pool:
        per_point = list(pool.map(_grid_point, grid))
    results = {key: max(pt[key] for pt in per_point) for key in _GRID_KEYS}

    probe = grid[len(grid) // 2]
    sp = side_pairing_check(
        build_geometry(probe), generators(probe), samples=500, seed=seed
    )
    results["side_pairing_interior"] = float(sp.interior_violations)

    _orbit_checks(results)
    _area_checks(results)

    reg = OctagonParams(iso.A_REG, 0.0)
    counts_ok = (
        len(ball(generators(reg), 1)) == 9
        and len(ball(generators(probe), 2)) == 65
    )
    results["ball_counts"] = 0.0 if counts_ok else 1.0

    checks = []
    for name in DEFAULT_TOLERANCES:
        residual = results[name]
        tol = tols[name]
        checks.append(
            {
                "name": name,
                "max_residual": residual,
                "tolerance": tol,
                "passed": bool(residual <= tol),
            }
        )
    return {
        "grid": {"n_a": n_a, "n_alpha": n_alpha, "margin": margin},
        "points": len(grid),
        "seed": seed,
        "checks": checks,
        "passed": all(c["passed"] for c in checks),
    }
