"""Command-line interface behaviour and output formats."""

import io
import json
import math
import os
from contextlib import redirect_stdout

import pytest

from thetainterp import basis, cli, interp


def run_cli(argv, env_threads=None):
    old = os.environ.get("THETA_INTERP_THREADS")
    if env_threads is not None:
        os.environ["THETA_INTERP_THREADS"] = env_threads
    try:
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = cli.main(argv)
        return code, buf.getvalue()
    finally:
        if env_threads is not None:
            if old is None:
                del os.environ["THETA_INTERP_THREADS"]
            else:
                os.environ["THETA_INTERP_THREADS"] = old


class TestCoeffs:
    def test_plain_output(self):
        code, out = run_cli(["coeffs", "--parity", "even", "--eps", "-", "--n", "3"])
        assert code == 0
        assert out.strip() == "[0, 252, -46, 1]"

    def test_json_output(self):
        code, out = run_cli([
            "coeffs", "--parity", "odd", "--eps", "+", "--n", "2",
            "--format", "json",
        ])
        assert code == 0
        data = json.loads(out)
        assert data == {
            "parity": "odd", "eps": "+", "n": 2,
            "poly": ["76/1", "-50/1", "1/1"],
        }

    def test_invalid_index_is_usage_error(self):
        code, _ = run_cli(["coeffs", "--parity", "even", "--eps", "-", "--n", "0"])
        assert code == 2


class TestEvalBasis:
    def test_csv_header_and_node_values(self):
        code, out = run_cli([
            "eval-basis", "--parity", "even", "--eps", "+", "--n", "1",
            "--grid", "0:2:2",
        ])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "x,b_1^+"
        rows = [line.split(",") for line in lines[1:]]
        assert [float(r[0]) for r in rows] == [0.0, 1.0, 2.0]
        assert abs(float(rows[1][1]) - 1.0) < 1e-8  # b_1(sqrt 1) = 1
        assert abs(float(rows[2][1])) < 1e-8  # b_1(sqrt 4) = 0

    def test_roundtrip_is_bit_exact(self):
        code, out = run_cli([
            "eval-basis", "--parity", "odd", "--eps", "+", "--n", "0",
            "--grid", "0:1:4",
        ])
        assert code == 0
        for line in out.strip().splitlines()[1:]:
            xs, vs = line.split(",")
            x = float(xs)
            assert float(vs) == basis.eval_d("+", 0, x).value

    def test_matches_closed_form(self):
        code, out = run_cli([
            "eval-basis", "--parity", "odd", "--eps", "+", "--n", "0",
            "--grid", "0:2:8",
        ])
        assert code == 0
        for line in out.strip().splitlines()[1:]:
            xs, vs = line.split(",")
            assert abs(float(vs) - basis.d0_closed_form(float(xs))) < 1e-8

    def test_bad_grid_is_usage_error(self):
        code, _ = run_cli([
            "eval-basis", "--parity", "even", "--eps", "+", "--n", "0",
            "--grid", "1:0:5",
        ])
        assert code == 2

    def test_thread_dispatch_is_deterministic(self):
        argv = ["eval-basis", "--parity", "even", "--eps", "+", "--n", "2",
                "--grid", "0:3:6"]
        _, serial = run_cli(argv, env_threads="1")
        _, parallel = run_cli(argv, env_threads="4")
        assert serial == parallel

    def test_bad_thread_env_is_usage_error(self):
        code, _ = run_cli([
            "eval-basis", "--parity", "even", "--eps", "+", "--n", "0",
            "--grid", "0:1:2",
        ], env_threads="soon")
        assert code == 2


class TestInterpolate:
    def test_gaussian_roundtrip(self, tmp_path):
        tau = 1j
        s = interp.gaussian_samples("even", tau, 30)
        path = tmp_path / "samples.json"
        path.write_text(interp.sampleset_to_json(s))
        code, out = run_cli(["interpolate", str(path), "--grid", "0:2:4"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "x,re,im,tail_bound"
        for line in lines[1:]:
            x, re, im, _ = (float(v) for v in line.split(","))
            want = math.exp(-math.pi * x * x)
            assert abs(complex(re, im) - want) < 1e-6

    def test_missing_file_is_usage_error(self, tmp_path):
        code, _ = run_cli(["interpolate", str(tmp_path / "nope.json")])
        assert code == 2

    def test_malformed_file_is_usage_error(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{\"parity\": \"even\"}")
        code, _ = run_cli(["interpolate", str(path)])
        assert code == 2


class TestVerify:
    def test_list_names(self):
        code, out = run_cli(["verify", "--list"])
        assert code == 0
        names = out.split()
        assert "exact-series" in names
        assert "gaussian-reconstruction" in names
        assert len(names) == 11

    def test_subset_passes(self):
        code, out = run_cli(["verify", "exact-series", "form-tables"])
        assert code == 0
        assert "PASS" in out
        assert "2/2 checks passed" in out

    def test_unknown_name_is_usage_error(self):
        code, _ = run_cli(["verify", "does-not-exist"])
        assert code == 2

    def test_deterministic_output(self):
        _, a = run_cli(["verify", "exact-series"])
        _, b = run_cli(["verify", "exact-series"])
        # timing column differs; compare everything else
        strip = lambda s: [
            line.split("  ")[0] + line.split("  ")[1] for line in s.splitlines()[:-1]
        ]
        assert strip(a) == strip(b)


class TestPlotData:
    def test_columns_and_symmetry(self):
        code, out = run_cli(["plot-data", "--grid=-1:1:4", "--count", "2"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "x,a_0,ahat_0,a_1,ahat_1"
        rows = [[float(v) for v in line.split(",")] for line in lines[1:]]
        assert len(rows) == 5
        # the basis combinations are even functions
        for j in range(1, 5):
            assert rows[0][j] == rows[-1][j]


class TestUsage:
    def test_no_subcommand_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            cli.main([])
        assert exc.value.code == 2
