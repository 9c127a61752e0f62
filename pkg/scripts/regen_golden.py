#!/usr/bin/env python3
"""Regenerate the golden SVG files under tests/golden/.

Run after any intentional change to the SVG emitter, then review the diff.
"""

import math
from pathlib import Path

from ekchain.figures import FigureStyle, render_chain_svg
from ekchain.kakeya import build_chain
from ekchain.tomic import build_chain_internal

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "tests" / "golden"

FIGURES = {
    "chain_external_1_2_3_pi3.svg": lambda: build_chain([1, 2, 3], math.pi / 3),
    "chain_internal_3_2p5_1p5_5pi12.svg": lambda: build_chain_internal(
        [3, 2.5, 1.5], 5 * math.pi / 12
    ),
}


def main() -> None:
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    style = FigureStyle()
    for name, make in FIGURES.items():
        path = GOLDEN_DIR / name
        path.write_bytes(render_chain_svg(make(), style))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
