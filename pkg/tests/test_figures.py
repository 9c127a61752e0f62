import math
import re
from pathlib import Path

import pytest

from ekchain.chains import ChainConstruction
from ekchain.errors import EmptyChainError
from ekchain.figures import FigureStyle, render_annulus_svg, render_chain_svg
from ekchain.kakeya import build_chain
from ekchain.polynomials import Annulus, ek_annulus
from ekchain.roots import RootSet, find_roots
from ekchain.tomic import build_chain_internal

GOLDEN_DIR = Path(__file__).parent / "golden"

CIRCLE_RE = re.compile(r'<circle [^>]*r="([0-9.]+)"')
RECT_RE = re.compile(r'<rect x="(-?[0-9.]+)" y="(-?[0-9.]+)" width="([0-9.]+)"')


def external_golden_chain():
    return build_chain([1, 2, 3], math.pi / 3)


def internal_golden_chain():
    return build_chain_internal([3, 2.5, 1.5], 5 * math.pi / 12)


class TestChainSvg:
    def test_byte_deterministic(self):
        chain = external_golden_chain()
        style = FigureStyle()
        assert render_chain_svg(chain, style) == render_chain_svg(chain, style)

    def test_circle_attributes_are_model_radii(self):
        text = render_chain_svg(external_golden_chain(), FigureStyle()).decode()
        assert CIRCLE_RE.findall(text) == ["1.000000", "2.000000", "3.000000"]

    def test_nested_chain_radii_descend(self):
        text = render_chain_svg(internal_golden_chain(), FigureStyle()).decode()
        radii = [float(r) for r in CIRCLE_RE.findall(text)]
        assert len(radii) == 3
        assert radii == sorted(radii, reverse=True)

    def test_radius_ratios_preserved(self):
        chain = external_golden_chain()
        text = render_chain_svg(chain, FigureStyle()).decode()
        rendered = [float(r) for r in CIRCLE_RE.findall(text)]
        model = [c.radius for c in chain.circles]
        for i in range(len(model)):
            for j in range(len(model)):
                assert rendered[i] / rendered[j] == pytest.approx(
                    model[i] / model[j], rel=1e-6
                )

    def test_degenerate_chain_has_no_circles(self):
        chain = build_chain([1, 2, 3], math.pi)
        text = render_chain_svg(chain, FigureStyle()).decode()
        assert CIRCLE_RE.findall(text) == []
        # every marker sits on the axis: y + half-height == 0
        for x, y, w in RECT_RE.findall(text):
            assert float(y) + float(w) / 2 == pytest.approx(0.0, abs=1e-5)

    def test_no_negative_zero(self):
        text = render_chain_svg(external_golden_chain(), FigureStyle()).decode()
        assert "-0.000000" not in text

    def test_label_toggle(self):
        chain = external_golden_chain()
        labeled = render_chain_svg(chain, FigureStyle(label_toggle=True)).decode()
        bare = render_chain_svg(chain, FigureStyle(label_toggle=False)).decode()
        assert "<text" in labeled and "R0" in labeled and "C2" in labeled
        assert "<text" not in bare

    def test_internal_labels(self):
        text = render_chain_svg(internal_golden_chain(), FigureStyle()).decode()
        assert ">Q0<" in text and ">O1<" in text and ">S1<" in text

    def test_empty_chain_rejected(self):
        from ekchain.chains import Orientation
        from ekchain.geometry import Angle

        empty = ChainConstruction(
            orientation=Orientation.EXTERNAL,
            theta=Angle(1.0),
            sums=[],
            probes=[],
            circles=[],
            coincident=[],
            degenerate_axis=False,
        )
        with pytest.raises(EmptyChainError):
            render_chain_svg(empty, FigureStyle())

    def test_bad_style_rejected(self):
        with pytest.raises(ValueError):
            FigureStyle(width_px=0)
        with pytest.raises(ValueError):
            FigureStyle(margin_frac=0.5)


class TestAnnulusSvg:
    def test_roots_between_bound_circles(self):
        annulus = ek_annulus([1, 2, 3])
        roots = find_roots([1, 2, 3])
        text = render_annulus_svg(annulus, roots, FigureStyle()).decode()
        radii = [float(r) for r in CIRCLE_RE.findall(text)]
        assert radii == pytest.approx([0.5, 2 / 3], abs=1e-6)
        markers = RECT_RE.findall(text)
        assert len(markers) == 2
        for x, y, w in markers:
            half = float(w) / 2
            modulus = math.hypot(float(x) + half, float(y) + half)
            assert 0.5 < modulus < 2 / 3

    def test_degenerate_annulus_single_circle(self):
        annulus = Annulus(1.0, 1.0, True)
        roots = RootSet(roots=[1j, -1j], residuals=[0.0, 0.0], converged=True, iterations=1)
        text = render_annulus_svg(annulus, roots, FigureStyle()).decode()
        assert len(CIRCLE_RE.findall(text)) == 1

    def test_empty_roots(self):
        annulus = ek_annulus([1, 2, 3])
        text = render_annulus_svg(annulus, None, FigureStyle()).decode()
        assert len(CIRCLE_RE.findall(text)) == 2
        assert "<rect" not in text


class TestGoldenFiles:
    @pytest.mark.parametrize(
        "name,make",
        [
            ("chain_external_1_2_3_pi3.svg", external_golden_chain),
            ("chain_internal_3_2p5_1p5_5pi12.svg", internal_golden_chain),
        ],
    )
    def test_matches_checked_in_bytes(self, name, make):
        expected = (GOLDEN_DIR / name).read_bytes()
        assert render_chain_svg(make(), FigureStyle()) == expected
