"""Deterministic SVG rendering of chains and annuli.

Model coordinates go into the SVG user space unchanged except for a single
Y negation (SVG y grows downward), so circle `r` attributes are the model
radii.  All numbers are written with fixed 6-decimal round-half-even
formatting and elements are emitted in a fixed order (axes, circles by
ascending index, segments, point markers, labels), which makes the output
byte-deterministic and golden-file testable.  Point markers are squares
(`rect` elements) so the `circle` elements of a document are exactly the
model circles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chains import ChainConstruction, Orientation
from .errors import EmptyChainError
from .geometry import Point2
from .polynomials import Annulus
from .roots import RootSet

_SVG_NS = "http://www.w3.org/2000/svg"


def _default_palette() -> dict[str, str]:
    # mirrors the usual convention: blue partial sums, yellow probes,
    # magenta centers, black circles
    return {
        "sums": "blue",
        "probes": "goldenrod",
        "centers": "magenta",
        "circles": "black",
        "axes": "gray",
    }


@dataclass(frozen=True)
class FigureStyle:
    width_px: int = 640
    height_px: int = 640
    margin_frac: float = 0.08
    palette: dict[str, str] = field(default_factory=_default_palette)
    label_toggle: bool = True
    stroke_width: float = 1.5

    def __post_init__(self) -> None:
        if self.width_px <= 0 or self.height_px <= 0:
            raise ValueError("figure dimensions must be positive")
        if not 0.0 <= self.margin_frac < 0.4:
            raise ValueError(f"margin_frac must be in [0, 0.4), got {self.margin_frac}")


def _fmt(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


class _Layout:
    """View box and derived sizes for one figure, in user coordinates."""

    def __init__(self, xs, ys_user, style: FigureStyle):
        xmin, xmax = min(xs), max(xs)
        ymin, ymax = min(ys_user), max(ys_user)
        extent = max(xmax - xmin, ymax - ymin, 1e-9)
        pad = style.margin_frac * extent
        w = xmax - xmin + 2.0 * pad
        h = ymax - ymin + 2.0 * pad
        # a flat chain has zero height; keep the view box two-dimensional
        if w <= 0.0:
            w = extent
            xmin = 0.5 * (xmin + xmax) - 0.5 * w + pad
        if h <= 0.0:
            h = extent
            ymin = 0.5 * (ymin + ymax) - 0.5 * h + pad
        self.x = xmin - pad
        self.y = ymin - pad
        self.w = w
        self.h = h
        self.stroke = style.stroke_width * max(w, h) / max(style.width_px, style.height_px)
        self.dot = 2.5 * self.stroke
        self.font = 9.0 * self.stroke


def _document(style: FigureStyle, layout: _Layout, body: list[str]) -> bytes:
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="{_SVG_NS}" version="1.1" width="{style.width_px}" '
        f'height="{style.height_px}" viewBox="{_fmt(layout.x)} {_fmt(layout.y)} '
        f'{_fmt(layout.w)} {_fmt(layout.h)}">',
    ]
    return ("\n".join(head + body + ["</svg>"]) + "\n").encode("utf-8")


def _axes(layout: _Layout, color: str) -> list[str]:
    sw = _fmt(0.5 * layout.stroke)
    return [
        f'<line x1="{_fmt(layout.x)}" y1="0.000000" x2="{_fmt(layout.x + layout.w)}" '
        f'y2="0.000000" stroke="{color}" stroke-width="{sw}" />',
        f'<line x1="0.000000" y1="{_fmt(layout.y)}" x2="0.000000" '
        f'y2="{_fmt(layout.y + layout.h)}" stroke="{color}" stroke-width="{sw}" />',
    ]


def _circle_element(cx: float, cy_user: float, r: float, color: str, sw: float) -> str:
    return (
        f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy_user)}" r="{_fmt(r)}" fill="none" '
        f'stroke="{color}" stroke-width="{_fmt(sw)}" />'
    )


def _marker(p: Point2, half: float, color: str) -> str:
    return (
        f'<rect x="{_fmt(p.x - half)}" y="{_fmt(-p.y - half)}" '
        f'width="{_fmt(2 * half)}" height="{_fmt(2 * half)}" fill="{color}" />'
    )


def _label(p: Point2, text: str, layout: _Layout, color: str) -> str:
    return (
        f'<text x="{_fmt(p.x + 2 * layout.dot)}" y="{_fmt(-p.y - 2 * layout.dot)}" '
        f'font-family="sans-serif" font-size="{_fmt(layout.font)}" '
        f'fill="{color}">{text}</text>'
    )


def render_chain_svg(chain: ChainConstruction, style: FigureStyle) -> bytes:
    """Standalone SVG document for one chain construction."""
    if not chain.sums:
        raise EmptyChainError("chain has no points to render")

    points = [Point2(0.0, 0.0)] + chain.sums + chain.probes
    points += [c.center for c in chain.circles]
    xs = [p.x for p in points]
    ys_user = [-p.y for p in points]
    for c in chain.circles:
        xs += [c.center.x - c.radius, c.center.x + c.radius]
        ys_user += [-c.center.y - c.radius, -c.center.y + c.radius]

    layout = _Layout(xs, ys_user, style)
    palette = style.palette
    body = _axes(layout, palette["axes"])

    for c in chain.circles:
        body.append(
            _circle_element(c.center.x, -c.center.y, c.radius, palette["circles"], layout.stroke)
        )

    walk = [Point2(0.0, 0.0)] + chain.sums
    d = " L ".join(f"{_fmt(p.x)} {_fmt(-p.y)}" for p in walk)
    body.append(
        f'<path d="M {d}" fill="none" stroke="{palette["circles"]}" '
        f'stroke-width="{_fmt(0.75 * layout.stroke)}" />'
    )

    for p in chain.sums:
        body.append(_marker(p, layout.dot, palette["sums"]))
    for p in chain.probes:
        body.append(_marker(p, layout.dot, palette["probes"]))
    for c in chain.circles:
        body.append(_marker(c.center, layout.dot, palette["centers"]))

    if style.label_toggle:
        sum_prefix = "R" if chain.orientation is Orientation.EXTERNAL else "Q"
        center_prefix = "C" if chain.orientation is Orientation.EXTERNAL else "O"
        for k, p in enumerate(chain.sums):
            body.append(_label(p, f"{sum_prefix}{k}", layout, palette["sums"]))
        for k, p in enumerate(chain.probes):
            body.append(_label(p, f"S{k + 1}", layout, palette["probes"]))
        for k, c in enumerate(chain.circles):
            body.append(_label(c.center, f"{center_prefix}{k}", layout, palette["centers"]))

    return _document(style, layout, body)


def render_annulus_svg(a: Annulus, roots: RootSet | None, style: FigureStyle) -> bytes:
    """Concentric bound circles around the origin plus root markers."""
    root_list = list(roots.roots) if roots is not None else []
    xs = [-a.outer, a.outer] + [z.real for z in root_list]
    ys_user = [-a.outer, a.outer] + [-z.imag for z in root_list]

    layout = _Layout(xs, ys_user, style)
    palette = style.palette
    body = _axes(layout, palette["axes"])

    radii = [a.inner] if a.degenerate else [a.inner, a.outer]
    for r in radii:
        body.append(_circle_element(0.0, 0.0, r, palette["circles"], layout.stroke))

    for z in root_list:
        body.append(_marker(Point2(z.real, z.imag), layout.dot, palette["sums"]))

    return _document(style, layout, body)
