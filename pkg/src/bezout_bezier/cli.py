"""Command-line front end.

Subcommands: bezout, neighbors, envelope, verify, audit-sweep.
Exit codes: 0 success, 1 usage or parse error, 2 domain or hypothesis
violation, 3 verification failure (a measured deviation at or above
epsilon, which would falsify the approximation bound).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .envelope import (
    EnvelopeParams,
    VerificationReport,
    build_envelope,
    sweep_one,
)
from .errors import DomainError, HypothesisError
from .io_render import RenderOptions, format_real, to_csv, to_svg
from .numtheory import Center, CoprimePair, bezout_coefficients, coprime_neighbors

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_BOUND_FAILED = 3

AUDIT_HEADER = "p,q,epsilon,neighbor_count,max_deviation,bound_slack,all_ok"


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract here is exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(
            f"expected a nonnegative integer, got {text}"
        )
    return value


def _nonnegative_float(text: str) -> float:
    value = float(text)
    if not value >= 0.0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative number, got {text}")
    return value


def _width_px(text: str) -> int:
    value = int(text)
    if value < 16:
        raise argparse.ArgumentTypeError(f"width must be at least 16 px, got {text}")
    return value


def _curve_samples(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"need at least 2 samples, got {text}")
    return value


def _stroke_fraction(text: str) -> float:
    value = float(text)
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(
            f"stroke fraction must lie in (0, 1), got {text}"
        )
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="bezout-bezier",
        description=(
            "Approximate the quadratic Bezier curve for control points "
            "(p,q), (0,0), (q,p) by segments joining Bezout coefficients "
            "of coprime pairs near (p,q), and verify the deviation bounds."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("bezout", parents=[], help="normalized Bezout coefficients")
    sp.add_argument("p", type=_positive_int)
    sp.add_argument("q", type=_positive_int)
    sp.set_defaults(func=cmd_bezout)

    sp = sub.add_parser("neighbors", help="coprime pairs within a disk")
    sp.add_argument("p", type=_positive_int)
    sp.add_argument("q", type=_nonnegative_int)
    sp.add_argument("radius", type=_nonnegative_float)
    sp.set_defaults(func=cmd_neighbors)

    for name, func, help_text in (
        ("envelope", cmd_envelope, "build the segment family and write CSV/SVG"),
        ("verify", cmd_verify, "check the deviation bound and print PASS/FAIL"),
    ):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("p", type=_positive_int)
        sp.add_argument("q", type=_nonnegative_int)
        sp.add_argument("epsilon", type=float)
        if name == "envelope":
            sp.add_argument(
                "--format",
                choices=("csv", "svg", "text"),
                default="csv",
                help="output format (default: csv)",
            )
            sp.add_argument(
                "--output",
                type=Path,
                default=None,
                help="write to this file instead of stdout",
            )
            sp.add_argument("--width-px", type=_width_px, default=800)
            sp.add_argument("--show-curve", action="store_true")
            sp.add_argument("--show-controls", action="store_true")
            sp.add_argument("--curve-samples", type=_curve_samples, default=256)
            sp.add_argument(
                "--stroke-width-fraction", type=_stroke_fraction, default=0.0008
            )
        sp.set_defaults(func=func)

    sp = sub.add_parser(
        "audit-sweep",
        help="run many (p, q, epsilon) combinations from a spec file",
    )
    sp.add_argument(
        "spec_path",
        type=Path,
        help="file of 'p q epsilon' lines; '#' starts a comment",
    )
    sp.set_defaults(func=cmd_audit_sweep)

    return parser


def _fail_domain(exc: Exception) -> int:
    print(f"error: {exc}", file=sys.stderr)
    return EXIT_DOMAIN


def cmd_bezout(args) -> int:
    try:
        coeffs = bezout_coefficients(CoprimePair(args.p, args.q))
    except DomainError as exc:
        return _fail_domain(exc)
    a, b = coeffs.a, coeffs.b
    print(f"B({args.p},{args.q}) = ({a}, {b})")
    print(f"check: {a}*{args.q} - {b}*{args.p} = {a * args.q - b * args.p}")
    return EXIT_OK


def cmd_neighbors(args) -> int:
    try:
        pairs = coprime_neighbors(Center(args.p, args.q), args.radius)
    except DomainError as exc:
        return _fail_domain(exc)
    for pair in pairs:
        print(f"({pair.r},{pair.s})")
    print(f"count: {len(pairs)}")
    return EXIT_OK


def _report_text(report: VerificationReport) -> str:
    params = report.params
    lines = [
        f"center: ({params.center.p},{params.center.q})",
        f"epsilon: {format_real(params.epsilon)}",
        f"neighbor_count: {report.neighbor_count}",
    ]
    for rec in report.records:
        status = "ok" if rec.bound_ok else "BOUND VIOLATED"
        lines.append(
            f"({rec.pair.r},{rec.pair.s}) "
            f"B=({rec.coeffs.a},{rec.coeffs.b}) "
            f"flip=({rec.flipped.a},{rec.flipped.b}) "
            f"t={format_real(rec.t_contact)} "
            f"deviation={format_real(rec.deviation)} {status}"
        )
    lines.append(f"max_deviation: {format_real(report.max_deviation)}")
    lines.append(f"max_endpoint_gap: {format_real(report.max_endpoint_gap)}")
    lines.append("PASS" if report.all_bounds_hold else "FAIL")
    return "\n".join(lines) + "\n"


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)


def cmd_envelope(args) -> int:
    try:
        params = EnvelopeParams(Center(args.p, args.q), args.epsilon)
    except (DomainError, HypothesisError) as exc:
        return _fail_domain(exc)
    report = build_envelope(params)
    if args.format == "svg":
        opts = RenderOptions(
            width_px=args.width_px,
            show_curve=args.show_curve,
            show_controls=args.show_controls,
            curve_samples=args.curve_samples,
            stroke_width_fraction=args.stroke_width_fraction,
        )
        text = to_svg(report, opts)
    elif args.format == "csv":
        text = to_csv(report)
    else:
        text = _report_text(report)
    _emit(text, args.output)
    return EXIT_OK if report.all_bounds_hold else EXIT_BOUND_FAILED


def cmd_verify(args) -> int:
    try:
        params = EnvelopeParams(Center(args.p, args.q), args.epsilon)
    except (DomainError, HypothesisError) as exc:
        return _fail_domain(exc)
    report = build_envelope(params)
    print(f"neighbor_count: {report.neighbor_count}")
    print(f"max_deviation: {format_real(report.max_deviation)}")
    print(f"max_endpoint_gap: {format_real(report.max_endpoint_gap)}")
    print("PASS" if report.all_bounds_hold else "FAIL")
    return EXIT_OK if report.all_bounds_hold else EXIT_BOUND_FAILED


def _parse_sweep_spec(text: str) -> list[tuple[int, int, float]]:
    """Parse 'p q epsilon' lines; raises ValueError naming the bad line."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 'p q epsilon', got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1]), float(parts[2])))
        except ValueError:
            raise ValueError(
                f"line {lineno}: could not parse 'p q epsilon' from {raw!r}"
            ) from None
    return rows


def cmd_audit_sweep(args) -> int:
    try:
        text = args.spec_path.read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {args.spec_path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        rows = _parse_sweep_spec(text)
    except ValueError as exc:
        print(f"error: {args.spec_path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = [AUDIT_HEADER]
    for p, q, eps in rows:
        try:
            center = Center(p, q)
        except DomainError as exc:
            out.append(_skip_row(p, q, eps, str(exc)))
            continue
        result = sweep_one(center, eps)
        if result.report is None:
            out.append(_skip_row(p, q, eps, result.skip_reason or ""))
        else:
            report = result.report
            slack = eps - report.max_deviation
            out.append(
                f"{p},{q},{format_real(eps)},{report.neighbor_count},"
                f"{format_real(report.max_deviation)},{format_real(slack)},"
                f"{'true' if report.all_bounds_hold else 'false'}"
            )
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK


def _skip_row(p: int, q: int, eps: float, reason: str) -> str:
    # keep the row parseable as CSV: reasons must not introduce columns
    reason = reason.replace(",", ";")
    return f"{p},{q},{format_real(eps)},,,,skipped: {reason}"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, HypothesisError) as exc:
        return _fail_domain(exc)


if __name__ == "__main__":
    sys.exit(main())
