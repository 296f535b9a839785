"""CSV, JSON and SVG emitters with fixed, byte-reproducible formatting.

CSV uses 17 significant digits (shortest form via %g), '.' decimal
separator, a header row, and LF line endings.  JSON documents carry a top
level ``"schema": "teich2/v1"`` marker and serialize floats with Python's
shortest round-tripping repr, so parsing reproduces the doubles bit-exactly.
SVG maps the unit disk to a 1000 x 1000 viewport and renders geodesic sides
as true circular arcs through three sampled points.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from typing import Any, Iterable, Sequence

__all__ = [
    "SCHEMA",
    "SVG_SIZE",
    "SVG_SCALE",
    "format_float",
    "csv_text",
    "json_text",
    "svg_text",
    "emit_csv",
    "emit_json",
    "emit_svg",
]

SCHEMA = "teich2/v1"
SVG_SIZE = 1000
SVG_SCALE = 495.0  # disk radius in pixels, centered in the viewport

# three arc points closer than this in pixels are rendered as a chord
_COLLINEAR_EPS = 1e-6


def format_float(x: float) -> str:
    """17-significant-digit decimal form, enough to round-trip a double."""
    return f"{float(x):.17g}"


def _cell(x: Any) -> str:
    if isinstance(x, bool) or isinstance(x, str):
        return str(x)
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        return format_float(x)
    return str(x)


def csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(header))
    for row in rows:
        writer.writerow([_cell(x) for x in row])
    return buf.getvalue()


def _json_default(x: Any) -> Any:
    if isinstance(x, complex):
        return [x.real, x.imag]
    if hasattr(x, "item"):
        return x.item()
    raise TypeError(f"not JSON-serializable: {type(x).__name__}")


def json_text(payload: dict[str, Any]) -> str:
    doc = {"schema": SCHEMA, **payload}
    return json.dumps(doc, indent=2, default=_json_default) + "\n"


def _pix(z: complex) -> tuple[float, float]:
    return (
        SVG_SIZE / 2.0 + SVG_SCALE * z.real,
        SVG_SIZE / 2.0 - SVG_SCALE * z.imag,
    )


def _fmt_pix(x: float) -> str:
    return f"{x:.4f}"


def _arc_command(s: tuple[float, float], m: tuple[float, float], e: tuple[float, float]) -> str:
    """SVG path command from s to e along the circle through s, m, e.

    Falls back to a line when the three points are numerically collinear
    (image of a diameter geodesic).  Octagon sides are always minor arcs,
    so the large-arc flag is 0; the sweep flag follows the orientation of
    (s, m, e) in pixel coordinates.
    """
    x1, y1 = s
    x2, y2 = m
    x3, y3 = e
    d = 2.0 * (x1 * (y2 - y3) + x2 * (y3 - y1) + x3 * (y1 - y2))
    if abs(d) < _COLLINEAR_EPS:
        return f"L {_fmt_pix(x3)} {_fmt_pix(y3)}"
    q1 = x1 * x1 + y1 * y1
    q2 = x2 * x2 + y2 * y2
    q3 = x3 * x3 + y3 * y3
    ux = (q1 * (y2 - y3) + q2 * (y3 - y1) + q3 * (y1 - y2)) / d
    uy = (q1 * (x3 - x2) + q2 * (x1 - x3) + q3 * (x2 - x1)) / d
    r = math.hypot(x1 - ux, y1 - uy)
    cross = (x2 - x1) * (y3 - y2) - (y2 - y1) * (x3 - x2)
    sweep = 1 if cross > 0.0 else 0
    return f"A {_fmt_pix(r)} {_fmt_pix(r)} 0 0 {sweep} {_fmt_pix(x3)} {_fmt_pix(y3)}"


def _cell_path(vertices: Sequence[complex], midpoints: Sequence[complex]) -> str:
    n = len(vertices)
    start = _pix(vertices[0])
    parts = [f"M {_fmt_pix(start[0])} {_fmt_pix(start[1])}"]
    for k in range(n):
        s = _pix(vertices[k])
        e = _pix(vertices[(k + 1) % n])
        m = _pix(midpoints[k])
        parts.append(_arc_command(s, m, e))
    parts.append("Z")
    return " ".join(parts)


def svg_text(cells: Iterable[Any]) -> str:
    """SVG document with one path per cell; cells carry vertices and midpoints."""
    half = SVG_SIZE / 2.0
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" '
        f'height="{SVG_SIZE}" viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        f'<circle cx="{half}" cy="{half}" r="{SVG_SCALE}" '
        'fill="none" stroke="#999999" stroke-width="1"/>',
    ]
    for cell in cells:
        path = _cell_path(cell.vertices, cell.midpoints)
        lines.append(
            f'<path d="{path}" fill="none" stroke="#000000" stroke-width="0.5"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def emit_csv(path: str | None, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    _write(path, csv_text(header, rows))


def emit_json(path: str | None, payload: dict[str, Any]) -> None:
    _write(path, json_text(payload))


def emit_svg(path: str | None, cells: Iterable[Any]) -> None:
    _write(path, svg_text(cells))
