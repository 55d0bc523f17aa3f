import json
import math
import subprocess
import sys

import numpy as np
import pytest

from fracrot import cli, rotation

HALF_PI = "1.5707963267948966"


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def result_matrix(out):
    return np.array(json.loads(out)["result"]).reshape(3, 3)


class TestMatrixCommand:
    def test_quarter_turn_closed(self, capsys):
        code, out = run_cli(capsys, "matrix", "--axis", "0,0,1", "--angle", HALF_PI, "--method", "closed")
        assert code == 0
        expected = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])
        np.testing.assert_allclose(result_matrix(out), expected, atol=1e-15)

    def test_zero_angle_is_identity(self, capsys):
        code, out = run_cli(capsys, "matrix", "--axis", "0,0,1", "--angle", "0")
        assert code == 0
        np.testing.assert_array_equal(result_matrix(out), np.eye(3))

    def test_methods_agree(self, capsys):
        mats = {}
        for method in ("closed", "fracpow", "exp-generator"):
            code, out = run_cli(
                capsys, "matrix", "--axis", "0.3,-1,0.5", "--angle", "2.2", "--method", method
            )
            assert code == 0
            mats[method] = result_matrix(out)
        for a in mats.values():
            for b in mats.values():
                assert np.linalg.norm(a - b) < 1e-8

    def test_fracpow_method_reports_estimate(self, capsys):
        code, out = run_cli(capsys, "matrix", "--axis", "0,1,0", "--angle", "0.7", "--method", "fracpow")
        assert code == 0
        envelope = json.loads(out)
        assert envelope["error-estimate"] < 1e-10

    def test_degrees_flag(self, capsys):
        _, out_deg = run_cli(capsys, "matrix", "--axis", "0,0,1", "--angle", "90", "--degrees")
        _, out_rad = run_cli(capsys, "matrix", "--axis", "0,0,1", "--angle", HALF_PI)
        np.testing.assert_allclose(result_matrix(out_deg), result_matrix(out_rad), atol=1e-15)

    def test_axis_is_normalized_in_echo(self, capsys):
        _, out = run_cli(capsys, "matrix", "--axis", "0,0,5", "--angle", "1")
        assert json.loads(out)["inputs"]["axis"] == [0.0, 0.0, 1.0]

    @pytest.mark.parametrize("theta", ["0.4", "-2.9", "7.1"])
    def test_printed_matrix_reparses_to_rotation(self, capsys, theta):
        _, out = run_cli(capsys, "matrix", "--axis", "1,2,-2", "--angle", theta)
        assert rotation.is_rotation(result_matrix(out), tol=1e-11)

    def test_full_precision_output(self, capsys):
        _, out = run_cli(capsys, "power", "--axis", "0,0,1", "--alpha", "0.5", "--method", "closed")
        assert format(math.sqrt(2.0) / 2.0, ".17g") in out

    def test_bad_axis_exits_2(self, capsys):
        code, _ = run_cli(capsys, "matrix", "--axis", "0,0,0", "--angle", "1")
        assert code == 2

    def test_unparseable_axis_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["matrix", "--axis", "0,0", "--angle", "1"])
        assert exc.value.code == 2

    def test_csv_not_supported_here(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["matrix", "--axis", "0,0,1", "--angle", "1", "--output", "csv"])
        assert exc.value.code == 2


class TestPowerCommand:
    def test_closed_half_power(self, capsys):
        code, out = run_cli(capsys, "power", "--axis", "0,0,1", "--alpha", "0.5", "--method", "closed")
        assert code == 0
        h = math.sqrt(2.0) / 2.0
        expected = np.array([[h, -h, 0.0], [h, h, 0.0], [0.0, 0.0, 1.0]])
        np.testing.assert_allclose(result_matrix(out), expected, atol=1e-15)

    def test_alpha_zero_is_identity(self, capsys):
        code, out = run_cli(capsys, "power", "--axis", "0.2,0.5,-1", "--alpha", "0")
        assert code == 0
        np.testing.assert_array_equal(result_matrix(out), np.eye(3))

    def test_quadrature_matches_closed(self, capsys):
        _, closed = run_cli(capsys, "power", "--axis", "0,0,1", "--alpha", "0.5")
        code, quad = run_cli(
            capsys, "power", "--axis", "0,0,1", "--alpha", "0.5", "--method", "quadrature", "--level", "7"
        )
        assert code == 0
        envelope = json.loads(quad)
        assert envelope["error-estimate"] < 1e-10
        assert np.linalg.norm(result_matrix(quad) - result_matrix(closed)) < 1e-8

    def test_alpha_beyond_unit_interval(self, capsys):
        code, out = run_cli(capsys, "power", "--axis", "0,0,1", "--alpha", "2.5")
        assert code == 0
        expected = rotation.rodrigues(np.array([0.0, 0.0, 1.0]), 1.25 * math.pi)
        np.testing.assert_allclose(result_matrix(out), expected, atol=1e-12)


class TestRotateCommand:
    def test_quarter_turn_of_e1(self, capsys):
        code, out = run_cli(
            capsys, "rotate", "--axis", "0,0,1", "--angle", HALF_PI, "--vector", "1,0,0"
        )
        assert code == 0
        np.testing.assert_allclose(json.loads(out)["result"], [0.0, 1.0, 0.0], atol=1e-15)


class TestInterpCommand:
    def test_csv_rows(self, capsys):
        code, out = run_cli(
            capsys, "interp", "--axis", "0,0,1", "--from", "0", "--to", HALF_PI, "--steps", "2"
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "index,theta,r11,r12,r13,r21,r22,r23,r31,r32,r33"
        assert len(lines) == 4
        mid = [float(v) for v in lines[2].split(",")]
        expected = rotation.rotation_of(np.array([0.0, 0.0, 1.0]), math.pi / 4.0)
        np.testing.assert_allclose(np.array(mid[2:]).reshape(3, 3), expected, atol=1e-15)
        assert mid[1] == pytest.approx(math.pi / 4.0)

    def test_json_output(self, capsys):
        code, out = run_cli(
            capsys, "interp", "--axis", "0,0,1", "--from", "0", "--to", "1", "--steps", "1",
            "--output", "json",
        )
        assert code == 0
        rows = json.loads(out)["result"]
        assert len(rows) == 2 and rows[0][0] == 0 and rows[1][0] == 1


class TestConvergenceCommand:
    def test_csv_table(self, capsys):
        code, out = run_cli(
            capsys, "convergence", "--axis", "0,0,1", "--alpha", "0.5", "--levels", "3,4,5,6,7,8"
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "level,nodes,frobenius-error"
        assert len(lines) == 7
        assert float(lines[-1].split(",")[2]) < 1e-10


class TestVerifyCommand:
    def test_all_suites_pass(self, capsys):
        code, out = run_cli(capsys, "verify", "--suite", "all", "--tol", "1e-8")
        assert code == 0
        assert "FAIL" not in out

    def test_json_output(self, capsys):
        code, out = run_cli(capsys, "verify", "--suite", "rotation", "--tol", "1e-8", "--output", "json")
        assert code == 0
        envelope = json.loads(out)
        assert envelope["passed"] is True
        assert all(row["status"] == "pass" for row in envelope["result"])

    def test_impossible_tolerance_fails(self, capsys):
        code, out = run_cli(capsys, "verify", "--suite", "rotation", "--tol", "1e-30")
        assert code == 1
        assert "FAIL" in out


class TestEngineErrorMapping:
    def test_log_out_of_domain_exits_3(self, capsys):
        code, out = run_cli(capsys, "log", "--axis", "0,0,1", "--angle", "3.5")
        assert code == 3
        assert json.loads(out)["error"]["type"] == "OutOfPrincipalDomain"

    def test_quadrature_not_converged_exits_3(self, capsys):
        code, out = run_cli(
            capsys, "power", "--axis", "0,0,1", "--alpha", "0.5", "--method", "quadrature",
            "--level", "1", "--tol", "1e-14",
        )
        assert code == 3
        assert json.loads(out)["error"]["type"] == "QuadratureNotConverged"


class TestOtherCommands:
    def test_log_matrix(self, capsys):
        code, out = run_cli(capsys, "log", "--axis", "0,0,1", "--angle", HALF_PI)
        assert code == 0
        expected = math.pi / 2.0 * np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
        np.testing.assert_allclose(result_matrix(out), expected, atol=1e-16)

    def test_generator_matrix(self, capsys):
        code, out = run_cli(capsys, "generator", "--axis", "0,0,1")
        assert code == 0
        expected = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
        np.testing.assert_array_equal(result_matrix(out), expected)

    def test_semigroup_matrix(self, capsys):
        code, out = run_cli(capsys, "semigroup", "--axis", "0,0,1", "--t", "1.5")
        assert code == 0
        got = result_matrix(out)
        assert got[2, 2] == pytest.approx(math.exp(1.5), rel=1e-15)
        assert got[0, 0] == pytest.approx(math.cos(1.5), rel=1e-15)


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "fracrot", "matrix", "--axis", "0,0,1", "--angle", "0"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        np.testing.assert_array_equal(
            np.array(json.loads(proc.stdout)["result"]).reshape(3, 3), np.eye(3)
        )
