import json
import math

import pytest

from ekchain.cli import main, parse_coeffs, parse_theta


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestThetaParsing:
    @pytest.mark.parametrize(
        "text,value",
        [
            ("pi", math.pi),
            ("pi/2", math.pi / 2),
            ("pi/3", math.pi / 3),
            ("2pi/3", 2 * math.pi / 3),
            ("5pi/12", 5 * math.pi / 12),
            ("-pi/4", -math.pi / 4),
            ("2pi", 2 * math.pi),
            ("0.5", 0.5),
            ("1.2345", 1.2345),
        ],
    )
    def test_literals_exact(self, text, value):
        assert parse_theta(text) == value

    def test_rejects_garbage(self):
        from ekchain.cli import UsageError

        with pytest.raises(UsageError):
            parse_theta("three")


class TestCoeffParsing:
    def test_comma_list(self):
        assert parse_coeffs("1, 2,3").coeffs == (1.0, 2.0, 3.0)

    def test_json_array(self):
        assert parse_coeffs("[1, 2.5, 3]").coeffs == (1.0, 2.5, 3.0)

    def test_error_reports_index(self):
        from ekchain.cli import UsageError

        with pytest.raises(UsageError, match="index 1"):
            parse_coeffs("1,zz,3")


class TestBounds:
    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "bounds", "--coeffs", "1,2,3")
        assert code == 0
        assert json.loads(out) == {
            "inner": 0.5,
            "outer": 0.6666666666666666,
            "degenerate": False,
        }

    def test_usage_error_on_bad_coeffs(self, capsys):
        code, _, err = run(capsys, "bounds", "--coeffs", "1,0,3")
        assert code == 2
        assert "usage error" in err

    def test_unknown_flag_exits_2(self, capsys):
        assert main(["bounds", "--coeffs", "1,2", "--nope"]) == 2


class TestConstruct:
    def test_external_golden_circles(self, capsys):
        code, out, _ = run(
            capsys, "construct", "--coeffs", "1,2,3", "--theta", "pi/3",
            "--orientation", "external", "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert list(doc) == [
            "orientation", "theta", "sums", "probes", "circles",
            "coincident", "degenerate_axis",
        ]
        centers = [(c["center"]["x"], c["center"]["y"], c["radius"]) for c in doc["circles"]]
        expected = [(0.5, 0.8660254037, 1.0), (0.0, 1.7320508075, 2.0), (-1.0, 1.7320508075, 3.0)]
        for got, exp in zip(centers, expected):
            assert got == pytest.approx(exp, abs=1e-9)

    def test_idempotent_stdout(self, capsys):
        argv = ["construct", "--coeffs", "1,2,3", "--theta", "0.9"]
        _, out1, _ = run(capsys, *argv)
        _, out2, _ = run(capsys, *argv)
        assert out1 == out2


class TestVerify:
    def test_pass_exit_zero(self, capsys):
        code, out, _ = run(capsys, "verify", "--coeffs", "1,2,3", "--theta", "pi/3")
        assert code == 0
        assert json.loads(out)["passed"] is True

    def test_root_of_unity_exits_one(self, capsys):
        code, _, err = run(capsys, "verify", "--coeffs", "1,1,1", "--theta", "2pi/3")
        assert code == 1
        assert "root-of-unity case" in err

    def test_internal_orientation(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--coeffs", "3,2.5,1.5", "--theta", "5pi/12",
            "--orientation", "internal",
        )
        assert code == 0
        assert json.loads(out)["passed"] is True

    def test_degenerate_axis_uses_sign_rules(self, capsys):
        code, out, _ = run(capsys, "verify", "--coeffs", "1,2,3", "--theta", "pi")
        assert code == 0
        doc = json.loads(out)
        assert doc["passed"] is True
        assert doc["nonvanishing_magnitude"] == 2.0
        assert doc["tangency_residuals"] == []

    def test_non_monotone_is_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "--coeffs", "3,1,2", "--theta", "pi/3")
        assert code == 2

    def test_tolerance_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("EK_TOLERANCE", "bogus")
        code, _, err = run(capsys, "verify", "--coeffs", "1,2,3", "--theta", "pi/3")
        assert code == 2
        assert "EK_TOLERANCE" in err
        monkeypatch.setenv("EK_TOLERANCE", "1e-6")
        code, out, _ = run(capsys, "verify", "--coeffs", "1,2,3", "--theta", "pi/3")
        assert code == 0


class TestRoots:
    def test_json_and_containment(self, capsys):
        code, out, _ = run(capsys, "roots", "--coeffs", "1,2,3")
        assert code == 0
        doc = json.loads(out)
        assert doc["converged"] is True
        moduli = [math.hypot(z["re"], z["im"]) for z in doc["roots"]]
        for m in moduli:
            assert m == pytest.approx(math.sqrt(3) / 3, abs=1e-10)


class TestFigure:
    def test_writes_svg_file(self, capsys, tmp_path):
        out_path = tmp_path / "chain.svg"
        code, _, _ = run(
            capsys, "figure", "--coeffs", "1,2,3", "--theta", "pi/3",
            "--output", str(out_path),
        )
        assert code == 0
        data = out_path.read_bytes()
        assert data.startswith(b"<?xml")
        assert b"<svg" in data

    def test_annulus_figure(self, capsys, tmp_path):
        out_path = tmp_path / "annulus.svg"
        code, _, _ = run(
            capsys, "figure", "--coeffs", "1,2,3", "--annulus",
            "--output", str(out_path),
        )
        assert code == 0
        assert b"circle" in out_path.read_bytes()

    def test_chain_figure_requires_theta(self, capsys):
        code, _, err = run(capsys, "figure", "--coeffs", "1,2,3")
        assert code == 2
        assert "theta" in err


class TestSweep:
    def test_small_grid_passes(self, capsys):
        code, out, _ = run(
            capsys, "sweep", "--coeffs", "1,2,3", "--grid-points", "36"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["grid_points"] == 36
        assert doc["passed"] is True
        assert doc["worst_tangency"] < 1e-9

    def test_internal_sweep(self, capsys):
        code, out, _ = run(
            capsys, "sweep", "--coeffs", "3,2,1", "--orientation", "internal",
            "--grid-points", "24",
        )
        assert code == 0
        assert json.loads(out)["passed"] is True

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "sweep.json"
        code, _, _ = run(
            capsys, "sweep", "--coeffs", "1,2", "--grid-points", "12",
            "--output", str(path),
        )
        assert code == 0
        assert json.loads(path.read_text())["passed"] is True
