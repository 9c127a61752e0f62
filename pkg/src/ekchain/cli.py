"""Command-line surface: bounds, construct, verify, roots, figure, sweep.

Machine-readable JSON on stdout, single-line diagnostics on stderr.
Exit codes: 0 success / verification pass, 1 verification failure or
annulus violation, 2 usage error, so CI suites can gate on the code alone.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys

from . import chains, figures, kakeya, roots as roots_mod, tomic
from .chains import Orientation, VerificationReport
from .errors import EkchainError, RootOfUnityError
from .polynomials import CoefficientSequence, ek_annulus

DEFAULT_TOLERANCE = 1e-9

_PI_LITERAL = re.compile(r"^([+-]?\d*)pi(?:/([1-9]\d*))?$")


class UsageError(Exception):
    pass


def parse_theta(text: str) -> float:
    """Decimal radians or an exact multiple-of-pi literal like 2pi/3."""
    t = text.strip().lower().replace(" ", "")
    m = _PI_LITERAL.match(t)
    if m:
        head = m.group(1)
        if head in ("", "+"):
            k = 1
        elif head == "-":
            k = -1
        else:
            k = int(head)
        denom = int(m.group(2)) if m.group(2) else 1
        return k * math.pi / denom
    try:
        return float(t)
    except ValueError:
        raise UsageError(
            f"--theta expects radians or a pi literal (pi, pi/2, 2pi/3, ...), got {text!r}"
        ) from None


def parse_coeffs(text: str) -> CoefficientSequence:
    """Comma-separated list or JSON array, constant term first."""
    t = text.strip()
    if t.startswith("["):
        try:
            values = json.loads(t)
        except json.JSONDecodeError as e:
            raise UsageError(f"--coeffs JSON array is malformed: {e}") from None
        if not isinstance(values, list) or not all(
            isinstance(v, (int, float)) for v in values
        ):
            raise UsageError("--coeffs JSON must be an array of numbers")
        floats = [float(v) for v in values]
    else:
        floats = []
        for i, tok in enumerate(t.split(",")):
            try:
                floats.append(float(tok))
            except ValueError:
                raise UsageError(
                    f"coefficient at index {i} could not be parsed: {tok.strip()!r}"
                ) from None
    try:
        return CoefficientSequence(floats)
    except EkchainError as e:
        raise UsageError(str(e)) from None


def _resolve_tolerance(value: float | None) -> float:
    if value is not None:
        return value
    env = os.environ.get("EK_TOLERANCE")
    if env:
        try:
            return float(env)
        except ValueError:
            raise UsageError(f"EK_TOLERANCE is not a number: {env!r}") from None
    return DEFAULT_TOLERANCE


def _orientation(name: str) -> Orientation:
    return Orientation(name)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ekchain",
        description=(
            "Root-localization annuli for positive-coefficient polynomials and "
            "interlacing-circle certificates for monotone trigonometric sums."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, theta_required=True, with_orientation=True):
        p.add_argument("--coeffs", required=True, help="comma list or JSON array, a0 first")
        if theta_required is not None:
            p.add_argument(
                "--theta",
                required=theta_required,
                help="angle in radians or a pi literal (pi/3, 2pi/3, 5pi/12, ...)",
            )
        if with_orientation:
            p.add_argument(
                "--orientation",
                choices=["external", "internal"],
                default="external",
            )
        p.add_argument(
            "--tolerance",
            type=float,
            default=None,
            help=f"residual tolerance (default {DEFAULT_TOLERANCE}, env EK_TOLERANCE)",
        )
        p.add_argument("--output", default=None, help="write output to this path")

    p_bounds = sub.add_parser("bounds", help="root-localization annulus")
    add_common(p_bounds, theta_required=None, with_orientation=False)
    p_bounds.add_argument("--format", choices=["json", "text"], default="json")

    p_construct = sub.add_parser("construct", help="build the circle chain")
    add_common(p_construct)
    p_construct.add_argument("--format", choices=["json", "text"], default="json")

    p_verify = sub.add_parser("verify", help="build and verify the circle chain")
    add_common(p_verify)
    p_verify.add_argument("--format", choices=["json", "text"], default="json")

    p_roots = sub.add_parser("roots", help="find roots and check the annulus")
    add_common(p_roots, theta_required=None, with_orientation=False)
    p_roots.add_argument("--format", choices=["json", "text"], default="json")

    p_figure = sub.add_parser("figure", help="render an SVG figure")
    add_common(p_figure, theta_required=False)
    p_figure.add_argument(
        "--annulus",
        action="store_true",
        help="render the annulus with oracle roots instead of a chain",
    )

    p_sweep = sub.add_parser("sweep", help="verify across a theta grid")
    add_common(p_sweep, theta_required=None)
    p_sweep.add_argument("--grid-points", type=int, default=720)
    p_sweep.add_argument("--format", choices=["json", "text"], default="json")

    return parser


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _emit_bytes(data: bytes, output: str | None) -> None:
    if output:
        with open(output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def _cmd_bounds(args) -> int:
    annulus = ek_annulus(parse_coeffs(args.coeffs))
    if args.format == "text":
        _emit(
            f"inner={annulus.inner!r} outer={annulus.outer!r} "
            f"degenerate={annulus.degenerate}",
            args.output,
        )
    else:
        _emit(json.dumps(annulus.to_dict()), args.output)
    return 0


def _build(args):
    coeffs = parse_coeffs(args.coeffs)
    theta = parse_theta(args.theta)
    orientation = _orientation(args.orientation)
    if orientation is Orientation.EXTERNAL:
        return kakeya.build_chain(coeffs, theta), orientation
    return tomic.build_chain_internal(coeffs, theta), orientation


def _cmd_construct(args) -> int:
    chain, _ = _build(args)
    if args.format == "text":
        lines = [f"orientation={chain.orientation.value} theta={chain.theta.canonical!r}"]
        for k, p in enumerate(chain.sums):
            lines.append(f"sum[{k}] = ({p.x!r}, {p.y!r})")
        for k, c in enumerate(chain.circles):
            lines.append(
                f"circle[{k}] center=({c.center.x!r}, {c.center.y!r}) radius={c.radius!r}"
            )
        _emit("\n".join(lines), args.output)
    else:
        _emit(chain.to_json(), args.output)
    return 0


def _cmd_verify(args) -> int:
    chain, orientation = _build(args)
    tol = _resolve_tolerance(args.tolerance)
    # raises RootOfUnityError (exit 1) when the sum cancels exactly
    coeffs = parse_coeffs(args.coeffs)
    magnitude = chains.witness_magnitude(coeffs, chain.theta, orientation)
    if chain.degenerate_axis:
        # axis case: circle identities are vacuous, the sign rules decide
        report = VerificationReport(
            tangency_residuals=[],
            membership_residuals=[],
            probe_residuals=[],
            collinearity_residuals=[],
            nonvanishing_magnitude=magnitude,
            passed=True,
        )
    elif orientation is Orientation.EXTERNAL:
        report = kakeya.verify_chain(chain, tol)
    else:
        report = tomic.verify_chain_internal(chain, tol)

    if args.format == "text":
        _emit(
            f"passed={report.passed} |endpoint|={report.nonvanishing_magnitude!r}",
            args.output,
        )
    else:
        _emit(report.to_json(), args.output)
    if not report.passed:
        print("verification failed", file=sys.stderr)
        return 1
    return 0


def _cmd_roots(args) -> int:
    coeffs = parse_coeffs(args.coeffs)
    found = roots_mod.find_roots(coeffs)
    annulus = ek_annulus(coeffs)
    tol = _resolve_tolerance(args.tolerance)
    membership = roots_mod.check_annulus_membership(found, annulus, tol)
    if args.format == "text":
        lines = [f"converged={found.converged} iterations={found.iterations}"]
        for z, res in zip(found.roots, found.residuals):
            lines.append(f"root = {z.real!r} {z.imag:+}j  residual={res:.3e}")
        _emit("\n".join(lines), args.output)
    else:
        _emit(found.to_json(), args.output)
    if not membership.passed:
        print(
            f"annulus violation: {len(membership.violations)} root(s) outside "
            f"[{membership.lower!r}, {membership.upper!r}]",
            file=sys.stderr,
        )
        return 1
    return 0


def _cmd_figure(args) -> int:
    style = figures.FigureStyle()
    if args.annulus:
        coeffs = parse_coeffs(args.coeffs)
        annulus = ek_annulus(coeffs)
        found = roots_mod.find_roots(coeffs)
        data = figures.render_annulus_svg(annulus, found, style)
    else:
        if not args.theta:
            raise UsageError("--theta is required unless --annulus is given")
        chain, _ = _build(args)
        data = figures.render_chain_svg(chain, style)
    _emit_bytes(data, args.output)
    return 0


def _cmd_sweep(args) -> int:
    coeffs = parse_coeffs(args.coeffs)
    orientation = _orientation(args.orientation)
    tol = _resolve_tolerance(args.tolerance)
    if args.grid_points < 1:
        raise UsageError("--grid-points must be >= 1")
    summary = chains.residual_sweep(
        coeffs, orientation, chains.theta_grid(args.grid_points), tol
    )
    if args.format == "text":
        _emit(
            f"grid={summary.grid_points} worst_tangency={summary.worst_tangency:.3e} "
            f"worst_membership={summary.worst_membership:.3e} "
            f"worst_probe={summary.worst_probe:.3e} "
            f"worst_collinearity={summary.worst_collinearity:.3e} "
            f"min_nonvanishing={summary.min_nonvanishing:.3e} passed={summary.passed}",
            args.output,
        )
    else:
        _emit(summary.to_json(), args.output)
    return 0 if summary.passed else 1


_HANDLERS = {
    "bounds": _cmd_bounds,
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "roots": _cmd_roots,
    "figure": _cmd_figure,
    "sweep": _cmd_sweep,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code else 0
    try:
        return _HANDLERS[args.command](args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except RootOfUnityError as e:
        print(f"root-of-unity case: {e}", file=sys.stderr)
        return 1
    except EkchainError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
