import subprocess
import sys

import pytest

from b2weight import cli
from b2weight.construction import build_codebook, lower_bound_rate
from b2weight.core import CodeParameters
from b2weight.entropy_bounds import bound_diff_entropy, bound_sum_entropy
from b2weight.split_bounds import OptimizerOptions, bound_improved, bound_prefix_suffix

FAST = ["--refine", "1"]


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def parse_csv(text):
    lines = text.split("\n")
    assert lines[0] == cli.CSV_HEADER
    assert lines[-1] == ""
    return [tuple(float(x) for x in line.split(",")) for line in lines[1:-1]]


class TestTable:
    def test_default_reproduces_table(self, tmp_path, capsys):
        out = tmp_path / "t.csv"
        code, _, _ = run(["table", "--out", str(out)], capsys)
        assert code == 0
        rows = parse_csv(out.read_text())
        assert [r[0] for r in rows] == list(cli.TABLE1_WBARS)
        assert rows[0][1:] == pytest.approx((0.75, 0.75, 0.6, 0.6, 0.25), abs=2e-3)

    def test_single_half(self, capsys):
        code, text, _ = run(["table", "--wbars", "0.5"], capsys)
        assert code == 0
        (row,) = parse_csv(text)
        assert row == pytest.approx((0.5, 0.75, 0.75, 0.6, 0.6, 0.25), abs=2e-3)

    def test_quarter_lower_bound(self, capsys):
        _, text, _ = run(["table", "--wbars", "0.25", "--step", "0.01", *FAST], capsys)
        (row,) = parse_csv(text)
        assert row[5] == pytest.approx(0.25, abs=1e-6)

    def test_values_come_from_library(self, capsys):
        opts = OptimizerOptions(coarse_step=0.01, refine_rounds=1)
        _, text, _ = run(["table", "--wbars", "0.2,0.1", "--step", "0.01", *FAST], capsys)
        for row in parse_csv(text):
            w = row[0]
            direct = (
                bound_sum_entropy(w).value,
                bound_diff_entropy(w).value,
                bound_prefix_suffix(w, opts).value,
                bound_improved(w, opts).value,
                lower_bound_rate(w).value,
            )
            assert row[1:] == tuple(float(f"{x:.6f}") for x in direct)

    def test_byte_identical(self, tmp_path, capsys):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run(["table", "--wbars", "0.3", "--step", "0.01", *FAST, "--out", str(a)], capsys)
        run(["table", "--wbars", "0.3", "--step", "0.01", *FAST, "--out", str(b)], capsys)
        assert a.read_bytes() == b.read_bytes()
        assert b"\r" not in a.read_bytes()

    def test_rejects_wbar_above_half(self, capsys):
        code, _, err = run(["table", "--wbars", "0.6"], capsys)
        assert code == 2 and "wbar" in err


class TestCurve:
    def test_fifty_rows_monotone(self, capsys):
        code, text, _ = run(["curve", "--min", "0.01", "--max", "0.5", "--step", "0.01", "--opt-step", "0.02", *FAST], capsys)
        assert code == 0
        rows = parse_csv(text)
        assert len(rows) == 50
        for col in (1, 2):
            vals = [r[col] for r in rows]
            assert vals == sorted(vals)

    def test_single_point_matches_table(self, capsys):
        _, curve, _ = run(["curve", "--min", "0.1", "--max", "0.1", "--step", "0.1", "--opt-step", "0.01", *FAST], capsys)
        _, table, _ = run(["table", "--wbars", "0.1", "--step", "0.01", *FAST], capsys)
        assert curve == table

    def test_step_beyond_range(self, capsys):
        _, text, _ = run(["curve", "--min", "0.1", "--max", "0.2", "--step", "0.5", "--opt-step", "0.05", *FAST], capsys)
        rows = parse_csv(text)
        assert len(rows) == 1 and rows[0][0] == 0.1

    def test_bad_range(self, capsys):
        code, _, _ = run(["curve", "--min", "0.3", "--max", "0.2", "--step", "0.1"], capsys)
        assert code == 2


class TestConstructVerify:
    def test_construct_20_5(self, tmp_path, capsys):
        out = tmp_path / "cb.txt"
        code, _, _ = run(["construct", "--n", "20", "--omega", "5", "--out", str(out)], capsys)
        assert code == 0
        lines = out.read_text().split("\n")
        assert lines[0] == "# b2weight codebook n=20 omega=5 q=31 construction=bose"
        assert lines[-1] == ""
        assert len(lines[1:-1]) == 31
        assert all(len(l) == 20 and l.count("1") == 5 for l in lines[1:-1])

    def test_construct_12_3_stdout(self, capsys):
        code, text, _ = run(["construct", "--n", "12", "--omega", "3"], capsys)
        assert code == 0
        assert len(text.strip().split("\n")) == 1 + 7

    def test_construct_requires_divisibility(self, capsys):
        code, _, err = run(["construct", "--n", "10", "--omega", "3"], capsys)
        assert code == 2
        assert "omega must divide n" in err

    @pytest.mark.parametrize("n, omega", [(12, 3), (8, 2), (16, 4), (18, 6)])
    def test_round_trip(self, tmp_path, capsys, n, omega):
        path = tmp_path / "cb.txt"
        assert run(["construct", "--n", str(n), "--omega", str(omega), "--out", str(path)], capsys)[0] == 0
        code, text, _ = run(["verify", "--in", str(path)], capsys)
        assert code == 0 and text.startswith("ok")

    def test_verify_violation(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("# b2weight codebook n=4 omega=2 q=4 construction=manual\n1100\n0011\n1010\n0101\n")
        code, text, _ = run(["verify", "--in", str(path)], capsys)
        assert code == 1
        assert "(0, 1)" in text and "(2, 3)" in text and "1111" in text

    def test_verify_weight_failure(self, tmp_path, capsys):
        path = tmp_path / "w.txt"
        path.write_text("# b2weight codebook n=4 omega=2 q=2\n1100\n1110\n")
        code, text, _ = run(["verify", "--in", str(path)], capsys)
        assert code == 1 and "weight" in text

    def test_verify_malformed_line(self, tmp_path, capsys):
        path = tmp_path / "m.txt"
        path.write_text("# b2weight codebook n=4 omega=2 q=2\n1100\n11x0\n")
        code, _, err = run(["verify", "--in", str(path)], capsys)
        assert code == 2
        assert "line 3" in err and "11x0" in err

    def test_verify_count_mismatch(self, tmp_path, capsys):
        path = tmp_path / "c.txt"
        path.write_text("# b2weight codebook n=4 omega=2 q=3\n1100\n0011\n")
        code, _, err = run(["verify", "--in", str(path)], capsys)
        assert code == 2 and "q=3" in err

    def test_format_parse_round_trip(self):
        cb = build_codebook(CodeParameters(16, 4))
        assert cli.parse_codebook(cli.format_codebook(cb)) == cb


class TestSearch:
    def test_4_2(self, capsys):
        code, text, _ = run(["search", "--n", "4", "--omega", "2"], capsys)
        assert code == 0
        assert "max_size=4" in text and "status=exact" in text

    def test_6_1(self, capsys):
        _, text, _ = run(["search", "--n", "6", "--omega", "1"], capsys)
        assert "max_size=6" in text

    def test_node_limited(self, capsys):
        _, text, _ = run(["search", "--n", "8", "--omega", "3", "--node-limit", "100"], capsys)
        assert "lower bound" in text

    def test_scale_guard(self, capsys):
        code, _, err = run(["search", "--n", "30", "--omega", "10"], capsys)
        assert code == 2 and "exceeds" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["construct", "--n", "8"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "b2weight", "table", "--wbars", "0.5", "--step", "0.05", "--refine", "1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith(cli.CSV_HEADER)
