import json
import math

import pytest

from bisteklov.cli import format_number, main, render_json


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBoundCommand:
    def test_flat_example(self, capsys):
        code, out, err = run_cli(capsys, ["bound", "--dim", "3", "--ricci", "0",
                                          "--mean-curv", "1", "--inner-radius", "0.5"])
        assert code == 0 and err == ""
        assert '"q1Lower": 3.42857142857' in out
        report = json.loads(out)
        assert report["q1Lower"] == pytest.approx(24.0 / 7.0, abs=1e-9)
        assert report["classical"]["wangXia"] == pytest.approx(3.0)
        assert any(name == "q1Lower" for name, _ in report["provenance"])

    def test_hyperbolic_large_radius(self, capsys):
        code, out, _ = run_cli(capsys, ["bound", "--dim", "2", "--ricci", "-1",
                                        "--mean-curv", "1", "--inner-radius", "100"])
        assert code == 0
        value = json.loads(out)["q1Lower"]
        assert 1.0 <= value <= 1.0 + 1e-8

    def test_regime_guard_exits_2(self, capsys):
        code, out, err = run_cli(capsys, ["bound", "--dim", "2", "--ricci", "0",
                                          "--mean-curv", "2", "--inner-radius", "1"])
        assert code == 2
        assert out == ""
        assert err.startswith("error:") and err.count("\n") == 1

    def test_domain_fills_curvature_data(self, capsys):
        code, out, _ = run_cli(capsys, ["bound", "--domain", "ellipse:2,1"])
        assert code == 0
        report = json.loads(out)
        assert report["q1Lower"] == pytest.approx(8.0 / 7.0, abs=1e-9)
        assert report["isoperimetricUpper"] == pytest.approx(1.5419644251900397, rel=1e-9)
        assert report["classical"]["payne"] == pytest.approx(1.0)

    def test_explicit_flags_override_domain_fill(self, capsys):
        code, out, _ = run_cli(capsys, ["bound", "--domain", "ellipse:2,1",
                                        "--mean-curv", "0.125"])
        assert code == 0
        report = json.loads(out)
        # H overridden, R still filled from the ellipse metrics
        assert report["q1Lower"] == pytest.approx(
            2 * 0.125 / (1 - 0.875 ** 2), abs=1e-9)
        assert report["classical"]["wangXia"] == pytest.approx(0.25)

    def test_polygon_domain_carries_smoothness_note(self, capsys):
        code, out, _ = run_cli(capsys, ["bound", "--domain",
                                        "polygon:-0.5,-0.5;0.5,-0.5;0.5,0.5;-0.5,0.5"])
        assert code == 0
        report = json.loads(out)
        assert report["q1Lower"] == pytest.approx(2.0, abs=1e-9)
        assert any("piecewise smooth" in note for note in report["notes"])

    def test_missing_flags_exit_2(self, capsys):
        code, _, err = run_cli(capsys, ["bound", "--dim", "2"])
        assert code == 2 and "missing" in err


class TestSolveCommand:
    def test_disk(self, capsys):
        code, out, _ = run_cli(capsys, ["solve", "--domain", "disk:1", "--degree", "10"])
        assert code == 0
        result = json.loads(out)
        assert result["q1"] == pytest.approx(2.0, abs=1e-8)
        assert result["degree"] == 10
        assert result["residual"] < 1e-10

    def test_cylinder(self, capsys):
        code, out, _ = run_cli(capsys, ["solve", "--domain", "cylinder:6.283185,1"])
        assert code == 0
        result = json.loads(out)
        assert result["q1"] == pytest.approx(1.0, abs=1e-12)
        assert result["lower"] == result["upper"] == pytest.approx(1.0)

    def test_ellipse_sandwich(self, capsys):
        code, out, _ = run_cli(capsys, ["solve", "--domain", "ellipse:2,1",
                                        "--degree", "40"])
        assert code == 0
        result = json.loads(out)
        assert result["lower"] - 1e-9 <= result["q1"] <= result["upper"] + 1e-9

    def test_polygon_spec(self, capsys):
        code, out, _ = run_cli(capsys, ["solve", "--domain",
                                        "polygon:0,0;1,0;1,1;0,1", "--degree", "12"])
        assert code == 0
        result = json.loads(out)
        assert result["lower"] - 1e-6 <= result["q1"] <= result["upper"] + 1e-6

    def test_unparseable_spec_exits_2(self, capsys):
        for spec in ("blob:1", "ellipse:2", "disk", "polygon:1,2;3"):
            code, _, err = run_cli(capsys, ["solve", "--domain", spec])
            assert code == 2 and err.startswith("error:")


class TestVerifyCommand:
    def test_spaceform_suite_passes(self, capsys):
        code, out, _ = run_cli(capsys, ["verify", "--suite", "spaceform"])
        assert code == 0
        assert "PASS" in out and "FAIL" not in out
        assert out.strip().endswith("failed")

    def test_unknown_suite_exits_2(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "--suite", "bogus"])
        assert excinfo.value.code == 2


class TestTableCommand:
    GRID = ["table", "--grid", "n=2", "--grid", "K=0", "--grid", "H=1",
            "--grid", "R=0.1:1.0:0.1", "--columns", "mainBound,wangXia"]

    def test_grid_rows_and_dominance(self, capsys):
        code, out, _ = run_cli(capsys, self.GRID)
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "n,K,H,R,mainBound,wangXia"
        assert len(lines) == 11
        for line in lines[1:]:
            cells = line.split(",")
            assert float(cells[4]) >= float(cells[5])

    def test_deterministic_output(self, capsys):
        _, first, _ = run_cli(capsys, self.GRID)
        _, second, _ = run_cli(capsys, self.GRID)
        assert first == second

    def test_ball_parameters_make_the_columns_equal(self, capsys):
        code, out, _ = run_cli(capsys, ["table", "--grid", "n=2", "--grid", "K=-1,0,1",
                                        "--grid", "H=ball", "--grid", "R=0.5",
                                        "--columns", "mainBound,ballRatio"])
        assert code == 0
        for line in out.strip().split("\n")[1:]:
            cells = line.split(",")
            assert float(cells[4]) == pytest.approx(float(cells[5]), abs=1e-8)

    def test_single_point(self, capsys):
        code, out, _ = run_cli(capsys, ["table", "--grid", "n=3", "--grid", "K=0",
                                        "--grid", "H=1", "--grid", "R=0.5",
                                        "--columns", "mainBound"])
        assert code == 0
        lines = out.strip().split("\n")
        assert len(lines) == 2
        assert lines[1].split(",")[4] == "3.42857142857"

    def test_infinity_serialization(self, capsys):
        code, out, _ = run_cli(capsys, ["table", "--grid", "n=2", "--grid", "K=0",
                                        "--grid", "H=0", "--grid", "R=1",
                                        "--columns", "thetaFirstZero,oneOverR"])
        assert code == 0
        assert out.strip().split("\n")[1].split(",")[4] == "inf"

    def test_unix_line_endings(self, capsys):
        _, out, _ = run_cli(capsys, self.GRID)
        assert "\r" not in out

    def test_empty_grid_exits_2(self, capsys):
        code, _, err = run_cli(capsys, ["table", "--grid", "n=2", "--grid", "K=0",
                                        "--grid", "H=1", "--columns", "mainBound"])
        assert code == 2 and "empty grid" in err

    def test_unknown_column_exits_2(self, capsys):
        code, _, err = run_cli(capsys, ["table", "--grid", "n=2", "--grid", "K=0",
                                        "--grid", "H=1", "--grid", "R=0.5",
                                        "--columns", "nonsense"])
        assert code == 2 and "unknown columns" in err


class TestSerialization:
    def test_round_trip_is_idempotent(self, capsys):
        code, out, _ = run_cli(capsys, ["bound", "--dim", "3", "--ricci", "0",
                                        "--mean-curv", "1", "--inner-radius", "0.5",
                                        "--area", "3.7", "--perimeter", "14.3"])
        assert code == 0
        assert render_json(json.loads(out)) == out.strip()

    def test_twelve_significant_digits(self):
        assert format_number(24.0 / 7.0) == "3.42857142857"
        assert format_number(2.0) == "2"
        assert format_number(math.inf) == "inf"
        assert format_number(-math.inf) == "-inf"

    def test_bound_deterministic(self, capsys):
        argv = ["bound", "--domain", "ellipse:2,1"]
        _, first, _ = run_cli(capsys, argv)
        _, second, _ = run_cli(capsys, argv)
        assert first == second
