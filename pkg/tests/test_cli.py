"""End-to-end tests of the command-line interface."""

import math

import pytest

from motzkinlab import cli, groundstate, hamiltonian, schmidt


def run_cli(argv, capsys):
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEntropy:
    def test_unit_point_single_site(self, capsys):
        code, out, _ = run_cli(["entropy", "--s", "1", "--t", "1", "--n", "1"], capsys)
        assert code == 0
        assert out.strip() == repr(math.log(2))

    def test_base2(self, capsys):
        code, out, _ = run_cli(
            ["entropy", "--s", "1", "--t", "1", "--n", "1", "--base2"], capsys
        )
        assert code == 0
        assert float(out) == pytest.approx(1.0)

    def test_matches_library(self, capsys):
        code, out, _ = run_cli(
            ["entropy", "--s", "2", "--t", "0.7", "--n", "40"], capsys
        )
        assert code == 0
        assert float(out) == schmidt.profile(40, 2, 0.7).entropy

    def test_invalid_n(self, capsys):
        code, _, err = run_cli(["entropy", "--s", "1", "--t", "1", "--n", "0"], capsys)
        assert code == 1
        assert "error" in err

    def test_invalid_t(self, capsys):
        code, _, err = run_cli(["entropy", "--s", "1", "--t", "-1", "--n", "3"], capsys)
        assert code == 1

    def test_unknown_flag(self, capsys):
        code, _, err = run_cli(
            ["entropy", "--s", "1", "--t", "1", "--n", "1", "--frobnicate"], capsys
        )
        assert code == 1

    def test_missing_subcommand(self, capsys):
        code, _, _ = run_cli([], capsys)
        assert code == 1


class TestSchmidtTable:
    def test_matches_profile_csv(self, capsys):
        code, out, _ = run_cli(
            ["schmidt-table", "--s", "2", "--t", "0.5", "--n", "12"], capsys
        )
        assert code == 0
        assert out == schmidt.profile_csv(schmidt.profile(12, 2, 0.5))
        assert out.splitlines()[0] == "m,logM,p"


class TestVerify:
    def test_uniform_pass(self, capsys):
        code, out, _ = run_cli(
            ["verify", "--two-n", "4", "--s", "2", "--t", "2"], capsys
        )
        assert code == 0
        assert "PASS" in out and "FAIL" not in out

    def test_angles_pass(self, capsys):
        code, out, _ = run_cli(
            ["verify", "--two-n", "6", "--angles-seed", "11"], capsys
        )
        assert code == 0
        assert "null_dim=1" in out

    def test_requires_exactly_one_mode(self, capsys):
        code, _, err = run_cli(["verify", "--two-n", "4"], capsys)
        assert code == 1
        code, _, err = run_cli(
            ["verify", "--two-n", "4", "--t", "1", "--angles-seed", "1"], capsys
        )
        assert code == 1

    def test_angles_need_s1(self, capsys):
        code, _, err = run_cli(
            ["verify", "--two-n", "4", "--s", "2", "--angles-seed", "1"], capsys
        )
        assert code == 1

    def test_odd_length_rejected(self, capsys):
        code, _, err = run_cli(["verify", "--two-n", "5", "--t", "1"], capsys)
        assert code == 1


class TestAngles:
    def test_csv_output_is_tuned(self, capsys):
        code, out, _ = run_cli(["angles", "--two-n", "8", "--seed", "5"], capsys)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "bond,phi,psi,theta"
        phi, psi, theta = [], [], []
        for line in lines[1:]:
            _, a, b, c = line.split(",")
            phi.append(float(a))
            psi.append(float(b))
            theta.append(float(c))
        ang = hamiltonian.Angles(tuple(phi), tuple(psi), tuple(theta))
        assert ang.tuning_residual() < 1e-12

    def test_seed_reproducible(self, capsys):
        _, out1, _ = run_cli(["angles", "--two-n", "6", "--seed", "9"], capsys)
        _, out2, _ = run_cli(["angles", "--two-n", "6", "--seed", "9"], capsys)
        assert out1 == out2


class TestSweepAndFit:
    def test_round_trip(self, tmp_path, capsys):
        plan = tmp_path / "plan.txt"
        plan.write_text("grid=1,1\nn=20:120:10\n")
        out = tmp_path / "sweep.csv"
        code, _, _ = run_cli(
            ["sweep", "--plan", str(plan), "--out", str(out)], capsys
        )
        assert code == 0
        assert out.exists()
        code, fit_out, _ = run_cli(
            ["fit", "--in", str(out), "--model", "log", "--s", "1", "--t", "1"],
            capsys,
        )
        assert code == 0
        assert fit_out.startswith("model=log coefficient=")
        assert "n_range=20..120" in fit_out

    def test_missing_plan_file(self, tmp_path, capsys):
        code, _, err = run_cli(
            ["sweep", "--plan", str(tmp_path / "nope"), "--out", str(tmp_path / "o")],
            capsys,
        )
        assert code == 1

    def test_fit_bad_model(self, tmp_path, capsys):
        code, _, _ = run_cli(
            ["fit", "--in", "x.csv", "--model", "cubic"], capsys
        )
        assert code == 1


class TestDumpGS:
    def test_dump_matches_library(self, tmp_path, capsys):
        out = tmp_path / "gs.txt"
        code, _, _ = run_cli(
            ["dump-gs", "--two-n", "4", "--s", "1", "--t", "2", "--out", str(out)],
            capsys,
        )
        assert code == 0
        import io

        spec = hamiltonian.uniform_spec(4, 1, 2.0)
        buf = io.StringIO()
        groundstate.build_ground_state(spec).dump(buf)
        assert out.read_text() == buf.getvalue()

    def test_invalid_dimension(self, tmp_path, capsys):
        code, _, _ = run_cli(
            ["dump-gs", "--two-n", "3", "--s", "1", "--t", "1",
             "--out", str(tmp_path / "x")],
            capsys,
        )
        assert code == 1
