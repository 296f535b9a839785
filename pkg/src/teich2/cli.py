"""Command-line interface: geometry dumps, orbits, areas, tilings, validation.

Exit codes: 0 success, 2 argument errors, 3 domain errors (parameters
outside the admissible region), 4 validation failure.  With ``--format
json`` errors additionally produce a JSON error object on stdout.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Any, Sequence

from . import isoperimetric as iso
from .errors import DomainError
from .fenchel_nielsen import (
    FD_STEP,
    dt_residuals,
    lt_relations_check,
    pants_data,
    wp_coefficient,
    wp_fd_check,
)
from .group import ball, cells, generators, relation_defect, side_pairing_check
from .octagon import (
    OctagonParams,
    build_geometry,
    interior_angles_numeric,
    perimeter,
    perimeter_numeric,
)
from .serialization import emit_csv, emit_json, emit_svg
from .validation import DEFAULT_TOLERANCES, run_validation

__all__ = ["run", "main"]

_DEFAULT_ORBIT_PERIMETERS = [25.0, 27.0, 29.0, 31.0, 33.0, 35.0, 37.0, 39.0, 41.0]


def _add_params(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--a", type=float, required=True, help="first octagon parameter")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--alpha", type=float, help="vertex angle alpha (radians)")
    grp.add_argument(
        "--alpha-tilde", type=float, dest="alpha_tilde",
        help="shifted angle alpha - pi/4 (radians)",
    )
    sp.add_argument(
        "--margin", type=float, default=0.0,
        help="required distance to the domain boundary (default 0)",
    )


def _add_output(sp: argparse.ArgumentParser, formats: Sequence[str]) -> None:
    sp.add_argument("--format", choices=list(formats), default=formats[0])
    sp.add_argument("-o", "--output", default=None, help="output path (default stdout)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="teich2",
        description="Genus-2 hyperbolic octagons: geometry, Fuchsian group, "
        "Fenchel-Nielsen data, isoperimetric orbits, WP areas.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("octagon", help="geometry dump for one parameter point")
    _add_params(sp)
    _add_output(sp, ("json", "csv", "svg"))

    sp = sub.add_parser("group", help="generators, relation defect, side pairing")
    _add_params(sp)
    sp.add_argument("--samples", type=int, default=500, help="interior sample count")
    sp.add_argument("--seed", type=int, default=0)
    _add_output(sp, ("json", "csv"))

    sp = sub.add_parser("fn", help="Fenchel-Nielsen data and the WP form")
    _add_params(sp)
    sp.add_argument("--fd-step", type=float, default=FD_STEP, dest="fd_step")
    _add_output(sp, ("json", "csv"))

    sp = sub.add_parser("orbit", help="isoperimetric orbit samples")
    sp.add_argument(
        "--P", type=float, action="append", dest="perimeters", metavar="P",
        help="target perimeter, repeatable (default 25..41 step 2)",
    )
    sp.add_argument("--samples", type=int, default=256)
    _add_output(sp, ("csv", "json"))

    sp = sub.add_parser("area", help="WP area table and parabola fit")
    sp.add_argument("--p-min", type=float, default=iso.P_REG, dest="p_min")
    sp.add_argument("--p-max", type=float, default=41.0, dest="p_max")
    sp.add_argument("--step", type=float, default=0.5)
    _add_output(sp, ("csv", "json"))

    sp = sub.add_parser("tiling", help="group ball and octagon tiling")
    _add_params(sp)
    sp.add_argument("-n", "--radius", type=int, default=2, help="ball radius")
    sp.add_argument(
        "--vertices", default=None, metavar="PATH",
        help="also write a per-cell vertex CSV to PATH",
    )
    _add_output(sp, ("csv", "json", "svg"))

    sp = sub.add_parser("validate", help="run the full invariant suite")
    sp.add_argument("--grid", type=int, nargs=2, default=[20, 20],
                    metavar=("N_A", "N_ALPHA"))
    sp.add_argument("--margin", type=float, default=0.02)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument(
        "--tolerance", action="append", default=[], metavar="NAME=VALUE",
        help="override a named tolerance, repeatable",
    )
    _add_output(sp, ("json",))
    return parser


def _params_from_args(args: argparse.Namespace) -> OctagonParams:
    if args.alpha is not None:
        return OctagonParams.from_alpha(args.a, args.alpha, margin=args.margin)
    return OctagonParams(args.a, args.alpha_tilde, margin=args.margin)


def _flatten(value: Any, prefix: str, rows: list[tuple[str, Any]]) -> None:
    if isinstance(value, dict):
        for key, item in value.items():
            _flatten(item, f"{prefix}.{key}" if prefix else str(key), rows)
    elif isinstance(value, (list, tuple)):
        for k, item in enumerate(value):
            _flatten(item, f"{prefix}[{k}]", rows)
    elif isinstance(value, complex):
        rows.append((f"{prefix}.re", value.real))
        rows.append((f"{prefix}.im", value.imag))
    else:
        rows.append((prefix, value))


def _emit_payload(args: argparse.Namespace, payload: dict[str, Any]) -> None:
    if args.format == "json":
        emit_json(args.output, payload)
    else:
        rows: list[tuple[str, Any]] = []
        _flatten(payload, "", rows)
        emit_csv(args.output, ("key", "value"), rows)


def _octagon_payload(params: OctagonParams) -> dict[str, Any]:
    geom = build_geometry(params)
    p_closed = perimeter(params)
    p_sum = perimeter_numeric(geom)
    ang0, ang1 = interior_angles_numeric(geom)
    area = 6.0 * math.pi - 4.0 * (ang0 + ang1)
    return {
        "params": {
            "a": params.a,
            "alpha": params.alpha,
            "alpha_tilde": params.alpha_tilde,
            "b": params.b,
        },
        "beta": geom.beta,
        "arcs": {
            "r_plus": geom.arc_plus.radius,
            "r_minus": geom.arc_minus.radius,
            "phi_plus": geom.arc_plus.phi,
            "phi_minus": geom.arc_minus.phi,
            "t_plus": geom.t_plus,
            "t_minus": geom.t_minus,
        },
        "omega": {
            "plus": geom.omega_plus,
            "minus": geom.omega_minus,
            "omega4": geom.omega4,
        },
        "vertices": list(geom.vertices),
        "midpoints": list(geom.midpoints),
        "perimeter": {
            "closed_form": p_closed,
            "vertex_sum": p_sum,
            "residual": abs(p_closed - p_sum),
        },
        "angles": {
            "at_even_vertices": ang0,
            "at_odd_vertices": ang1,
            "sum": 4.0 * (ang0 + ang1),
            "area": area,
            "area_residual": abs(area - 4.0 * math.pi),
        },
    }


def _cmd_octagon(args: argparse.Namespace) -> int:
    params = _params_from_args(args)
    if args.format == "svg":
        emit_svg(args.output, [build_geometry(params)])
        return 0
    _emit_payload(args, _octagon_payload(params))
    return 0


def _cmd_group(args: argparse.Namespace) -> int:
    params = _params_from_args(args)
    geom = build_geometry(params)
    gens = generators(params)
    rel = relation_defect(gens)
    sp = side_pairing_check(geom, gens, samples=args.samples, seed=args.seed)
    payload = {
        "params": {"a": params.a, "alpha": params.alpha,
                   "alpha_tilde": params.alpha_tilde, "b": params.b},
        "generators": [
            {"label": f"g{k}", "u": g.u, "v": g.v, "trace": g.trace,
             "class": g.classify()}
            for k, g in enumerate(gens.g)
        ],
        "relation": {"defect": rel.defect, "sign": rel.sign},
        "side_pairing": {
            "endpoint_residual": sp.endpoint_residual,
            "midpoint_residual": sp.midpoint_residual,
            "interior_samples": sp.interior_samples,
            "interior_violations": sp.interior_violations,
        },
    }
    _emit_payload(args, payload)
    return 0


def _cmd_fn(args: argparse.Namespace) -> int:
    params = _params_from_args(args)
    coeff = wp_coefficient(params)
    chk = wp_fd_check(params, h=args.fd_step)
    chk_p = wp_fd_check(params, h=args.fd_step, primed=True)
    lt = lt_relations_check(params)
    payload: dict[str, Any] = {
        "params": {"a": params.a, "alpha": params.alpha,
                   "alpha_tilde": params.alpha_tilde, "b": params.b},
    }
    for label, primed in (("unprimed", False), ("primed", True)):
        data = pants_data(params, primed=primed)
        payload[label] = {
            "lengths": list(data.lengths),
            "twists": list(data.twists),
            "c": list(data.c),
            "d": list(data.d),
            "p_aux": data.p_aux,
            "dt_residuals": [abs(r) for r in dt_residuals(data)],
        }
    payload["lt_relations"] = {
        "residual_l3": lt.residual_l3,
        "residual_tau3": lt.residual_tau3,
        "residual_l1_primed": lt.residual_l1_primed,
        "residual_t1_primed": lt.residual_t1_primed,
    }
    payload["wp"] = {
        "coefficient": coeff,
        "fd_value": chk.value,
        "fd_summands": list(chk.summands),
        "fd_relative_error": abs(chk.value - coeff) / coeff,
        "fd_primed_value": chk_p.value,
        "fd_step": args.fd_step,
    }
    _emit_payload(args, payload)
    return 0


def _cmd_orbit(args: argparse.Namespace) -> int:
    targets = args.perimeters or list(_DEFAULT_ORBIT_PERIMETERS)
    if args.samples < 1:
        raise DomainError(f"need at least one sample, got {args.samples!r}")
    orbits = []
    for p_target in targets:
        e = iso.e_of_p(p_target)
        samples = iso.orbit_samples(e, args.samples)
        orbits.append((p_target, e, samples))
    if args.format == "json":
        emit_json(args.output, {
            "orbits": [
                {
                    "p_target": p_target,
                    "e": e,
                    "samples": [
                        {"phi": s.phi, "a": s.a, "alpha_tilde": s.alpha_tilde,
                         "p_check": perimeter(s.params)}
                        for s in samples
                    ],
                }
                for p_target, e, samples in orbits
            ],
        })
        return 0
    rows = []
    for _, _, samples in orbits:
        for s in samples:
            rows.append((s.phi, s.a, s.alpha_tilde, perimeter(s.params)))
    emit_csv(args.output, ("phi", "a", "alpha_tilde", "P_check"), rows)
    return 0


def _cmd_area(args: argparse.Namespace) -> int:
    fit = iso.parabola_fit(args.p_min, args.p_max, args.step)
    if args.format == "json":
        emit_json(args.output, {
            "fit": {"c1": fit.c1, "c2": fit.c2,
                    "residual_norm": fit.residual_norm},
            "p_reg": iso.P_REG,
            "table": [
                {"P": p, "area": area}
                for p, area in zip(fit.p_values, fit.areas)
            ],
        })
        return 0
    emit_csv(args.output, ("P", "area"), list(zip(fit.p_values, fit.areas)))
    print(
        f"fit: c1={fit.c1:.6g} c2={fit.c2:.6g} residual={fit.residual_norm:.3g}",
        file=sys.stderr,
    )
    return 0


def _cmd_tiling(args: argparse.Namespace) -> int:
    params = _params_from_args(args)
    gens = generators(params)
    if args.format == "svg" or args.vertices is not None:
        tiles = cells(gens, args.radius)
    if args.format == "svg":
        emit_svg(args.output, tiles)
    elif args.format == "json":
        b = ball(gens, args.radius)
        emit_json(args.output, {
            "radius": args.radius,
            "count": len(b),
            "relation_sign": b.relation_sign,
            "elements": [
                {"word": el.word, "u": el.transform.u, "v": el.transform.v}
                for el in b.elements
            ],
        })
    else:
        b = ball(gens, args.radius)
        rows = [
            (el.word, el.transform.u.real, el.transform.u.imag,
             el.transform.v.real, el.transform.v.imag)
            for el in b.elements
        ]
        emit_csv(args.output, ("word", "u_re", "u_im", "v_re", "v_im"), rows)
    if args.vertices is not None:
        vrows = []
        for tile in tiles:
            for k, v in enumerate(tile.vertices):
                vrows.append((tile.word, k, v.real, v.imag))
        emit_csv(args.vertices, ("word", "k", "x", "y"), vrows)
    return 0


def _parse_tolerances(items: list[str]) -> dict[str, float]:
    out: dict[str, float] = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep or name not in DEFAULT_TOLERANCES:
            raise ValueError(
                f"expected NAME=VALUE with NAME in "
                f"{sorted(DEFAULT_TOLERANCES)}, got {item!r}"
            )
        out[name] = float(value)
    return out


def _cmd_validate(args: argparse.Namespace) -> int:
    tols = _parse_tolerances(args.tolerance)
    report = run_validation(
        n_a=args.grid[0], n_alpha=args.grid[1], margin=args.margin,
        seed=args.seed, tolerances=tols,
    )
    emit_json(args.output, report)
    for check in report["checks"]:
        status = "ok  " if check["passed"] else "FAIL"
        print(
            f'{status} {check["name"]:24s} max {check["max_residual"]:.3e} '
            f'tol {check["tolerance"]:.1e}',
            file=sys.stderr,
        )
    return 0 if report["passed"] else 4


_COMMANDS = {
    "octagon": _cmd_octagon,
    "group": _cmd_group,
    "fn": _cmd_fn,
    "orbit": _cmd_orbit,
    "area": _cmd_area,
    "tiling": _cmd_tiling,
    "validate": _cmd_validate,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"teich2: domain error: {exc}", file=sys.stderr)
        if getattr(args, "format", None) == "json":
            emit_json(getattr(args, "output", None),
                      {"error": {"type": type(exc).__name__, "message": str(exc)}})
        return 3
    except ValueError as exc:
        print(f"teich2: argument error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"teich2: i/o error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
