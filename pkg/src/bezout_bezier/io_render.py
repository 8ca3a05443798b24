"""Serialization of verification reports: CSV rows and SVG figures.

Both writers are pure functions of their inputs, so identical reports
always serialize to byte-identical text (golden-file friendly).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .envelope import VerificationReport
from .errors import DomainError
from .geometry import QuadBezier, quad_point

CSV_HEADER = (
    "r,s,a_rs,b_rs,a_sr,b_sr,t_contact,x1,y1,x2,y2,"
    "gap_alpha,gap_beta,deviation,bound_ok"
)

PADDING_FRACTION = 0.05

SEGMENT_STROKE = "#000000"
CURVE_STROKE = "#d62728"
CONTROL_FILL = "#1f77b4"


def format_real(value: float) -> str:
    """Reals in output files: 12 significant digits."""
    return format(value, ".12g")


def _coord(value: float) -> str:
    """SVG coordinates: 9 significant digits is plenty at screen scale."""
    return format(value, ".9g")


@dataclass(frozen=True, slots=True)
class RenderOptions:
    """Knobs for the SVG rendering (stored coordinates stay mathematical)."""

    width_px: int = 800
    show_curve: bool = False
    show_controls: bool = False
    curve_samples: int = 256
    stroke_width_fraction: float = 0.0008

    def __post_init__(self):
        if self.width_px < 16:
            raise DomainError(f"width_px must be >= 16 (got {self.width_px})")
        if self.curve_samples < 2:
            raise DomainError(
                f"curve_samples must be >= 2 (got {self.curve_samples})"
            )
        if not 0.0 < self.stroke_width_fraction < 1.0:
            raise DomainError(
                "stroke_width_fraction must lie in (0, 1) "
                f"(got {self.stroke_width_fraction})"
            )


def to_csv(report: VerificationReport) -> str:
    """One row per record in lexicographic (r, s) order, LF-terminated.

    Integer columns exactly; reals with 12 significant digits; booleans
    as true/false.
    """
    lines = [CSV_HEADER]
    for rec in report.records:
        seg = rec.segment
        lines.append(
            ",".join(
                (
                    str(rec.pair.r),
                    str(rec.pair.s),
                    str(rec.coeffs.a),
                    str(rec.coeffs.b),
                    str(rec.flipped.a),
                    str(rec.flipped.b),
                    format_real(rec.t_contact),
                    format_real(seg.start.x),
                    format_real(seg.start.y),
                    format_real(seg.end.x),
                    format_real(seg.end.y),
                    format_real(rec.gap_alpha),
                    format_real(rec.gap_beta),
                    format_real(rec.deviation),
                    "true" if rec.bound_ok else "false",
                )
            )
        )
    return "\n".join(lines) + "\n"


def to_svg(report: VerificationReport, opts: RenderOptions = RenderOptions()) -> str:
    """Standalone SVG 1.1 document with one line element per record.

    The viewBox is the bounding box of all segment endpoints plus the
    three control points, padded 5% per side; the y-axis is flipped at
    render time only, so mathematical "up" draws upward.  Element order
    is deterministic: segments in record order, then control markers,
    then the curve overlay last.
    """
    p, q = report.params.center.p, report.params.center.q
    xs = [0.0, float(p), float(q)]
    ys = [0.0, float(q), float(p)]
    for rec in report.records:
        xs.extend((rec.segment.start.x, rec.segment.end.x))
        ys.extend((rec.segment.start.y, rec.segment.end.y))
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    pad_x = PADDING_FRACTION * (x_hi - x_lo) or 1.0
    pad_y = PADDING_FRACTION * (y_hi - y_lo) or 1.0
    x_lo, x_hi = x_lo - pad_x, x_hi + pad_x
    y_lo, y_hi = y_lo - pad_y, y_hi + pad_y
    width = x_hi - x_lo
    height = y_hi - y_lo
    diagonal = math.sqrt(width * width + height * height)
    stroke = opts.stroke_width_fraction * diagonal
    height_px = max(1, round(opts.width_px * height / width))

    # Flip: emit (x, -y); the viewBox covers [-y_hi, -y_lo] vertically.
    def fx(v: float) -> str:
        return _coord(v)

    def fy(v: float) -> str:
        return _coord(-v)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        (
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{opts.width_px}" height="{height_px}" '
            f'viewBox="{fx(x_lo)} {fy(y_hi)} {_coord(width)} {_coord(height)}">'
        ),
    ]
    for rec in report.records:
        seg = rec.segment
        # a collapsed segment still draws: round caps render it as a dot
        cap = ' stroke-linecap="round"' if rec.degenerate else ""
        lines.append(
            f'<line x1="{fx(seg.start.x)}" y1="{fy(seg.start.y)}" '
            f'x2="{fx(seg.end.x)}" y2="{fy(seg.end.y)}" '
            f'stroke="{SEGMENT_STROKE}" stroke-width="{_coord(stroke)}"{cap}/>'
        )
    if opts.show_controls:
        marker_r = _coord(0.005 * diagonal)
        for cx, cy in ((float(p), float(q)), (0.0, 0.0), (float(q), float(p))):
            lines.append(
                f'<circle cx="{fx(cx)}" cy="{fy(cy)}" r="{marker_r}" '
                f'fill="{CONTROL_FILL}"/>'
            )
    if opts.show_curve:
        curve = QuadBezier(p, q)
        n = opts.curve_samples
        points = " ".join(
            "{},{}".format(fx(pt.x), fy(pt.y))
            for pt in (quad_point(curve, i / (n - 1)) for i in range(n))
        )
        lines.append(
            f'<polyline points="{points}" fill="none" '
            f'stroke="{CURVE_STROKE}" stroke-width="{_coord(1.5 * stroke)}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
