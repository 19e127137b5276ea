import json
import os
import subprocess
import sys

import pytest

from ptmathieu.cli import main, parse_grid


def run_cli(args):
    return subprocess.run(
        [sys.executable, "-m", "ptmathieu.cli", *args],
        capture_output=True,
        text=True,
    )


class TestParseGrid:
    def test_range_spec(self):
        grid = parse_grid("0:3:0.5")
        assert grid == [0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0]

    def test_range_spec_inclusive_endpoint(self):
        assert parse_grid("0:0.06:0.02") == pytest.approx([0.0, 0.02, 0.04, 0.06])

    def test_comma_list(self):
        assert parse_grid("0.1,0.5,2") == [0.1, 0.5, 2.0]

    def test_rejects_descending(self):
        with pytest.raises(ValueError):
            parse_grid("3,2,1")

    def test_rejects_bad_step(self):
        with pytest.raises(ValueError):
            parse_grid("0:1:-0.1")


class TestSpectrumCommand:
    def test_free_spectrum_rows(self, tmp_path):
        out = tmp_path / "spec.csv"
        code = main([
            "spectrum", "--q", "0", "--delta", "3", "--j", "2", "--bc", "neumann",
            "--k", "6", "-o", str(out),
        ])
        assert code == 0
        lines = out.read_text().splitlines()
        header = [l for l in lines if not l.startswith("#")]
        assert header[0] == "level,re,im"
        rows = [l.split(",") for l in header[1:]]
        assert [r[0] for r in rows] == ["0", "1", "2", "3", "4", "5"]
        assert [float(r[1]) for r in rows] == pytest.approx([0, 1, 4, 9, 16, 25], abs=1e-9)
        assert all(abs(float(r[2])) < 1e-9 for r in rows)

    def test_header_embeds_config(self, tmp_path):
        out = tmp_path / "spec.csv"
        main(["spectrum", "--q", "1", "--delta", "0.5", "-o", str(out)])
        text = out.read_text()
        assert "# ptmathieu spectrum" in text
        assert "# q = 1" in text
        assert "# delta = 0.5" in text
        assert "# k = 6" in text
        assert "# tol_im = 1e-07" in text

    def test_json_format(self, tmp_path):
        out = tmp_path / "spec.json"
        code = main([
            "spectrum", "--q", "0", "--delta", "1", "--k", "3",
            "--format", "json", "-o", str(out),
        ])
        assert code == 0
        doc = json.loads(out.read_text())
        assert doc["command"] == "spectrum"
        assert doc["columns"] == ["level", "re", "im"]
        assert doc["config"]["k"] == 3
        assert doc["rows"][2][1] == pytest.approx(4.0, abs=1e-9)

    def test_byte_identical_reruns(self, tmp_path):
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        argv = ["spectrum", "--q", "1.3", "--delta", "0.7", "--j", "2"]
        assert main([*argv, "-o", str(out1)]) == 0
        assert main([*argv, "-o", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()


class TestSweepCommand:
    def test_schema_and_ordering(self, tmp_path):
        out = tmp_path / "sweep.csv"
        code = main([
            "sweep", "--sweep-param", "q", "--grid", "0:0.2:0.1", "--delta", "0.3",
            "--j", "1", "--bc", "neumann", "--k", "2", "-o", str(out),
        ])
        assert code == 0
        lines = [l for l in out.read_text().splitlines() if not l.startswith("#")]
        assert lines[0] == "q,delta,level,re,im"
        rows = [l.split(",") for l in lines[1:]]
        assert [(r[0], r[2]) for r in rows] == [
            ("0", "0"), ("0", "1"), ("0.1", "0"), ("0.1", "1"), ("0.2", "0"), ("0.2", "1"),
        ]
        assert all(r[1] == "0.3" for r in rows)

    def test_missing_fixed_parameter_is_config_error(self, tmp_path):
        code = main([
            "sweep", "--sweep-param", "q", "--grid", "0:1:0.5", "--j", "1",
            "-o", str(tmp_path / "x.csv"),
        ])
        assert code == 2


class TestSurfaceCommand:
    def test_grid_product(self, tmp_path):
        out = tmp_path / "surface.csv"
        code = main([
            "surface", "--q-grid", "0:0.1:0.1", "--delta-grid", "0:1:1",
            "--k", "2", "-o", str(out),
        ])
        assert code == 0
        lines = [l for l in out.read_text().splitlines() if not l.startswith("#")]
        assert lines[0] == "q,delta,level,re,im"
        assert len(lines) - 1 == 2 * 2 * 2


@pytest.fixture(scope="module")
def trace_csv(tmp_path_factory):
    path = tmp_path_factory.mktemp("trace") / "trace.csv"
    code = main([
        "trace", "--delta-grid", "2,2.5,3,4,5,7,10", "--j", "1", "--bc", "neumann",
        "--q-max", "5", "-o", str(path),
    ])
    assert code == 0
    return path


class TestTraceAndFit:

    def test_trace_schema(self, trace_csv):
        lines = [l for l in trace_csv.read_text().splitlines() if not l.startswith("#")]
        assert lines[0] == "delta,q_crit_pos,q_crit_neg,jump_flag"
        rows = [l.split(",") for l in lines[1:]]
        assert len(rows) == 7
        for row in rows:
            assert float(row[1]) > 0
            assert float(row[2]) < 0
            assert row[3] in ("0", "1")

    def test_unbounded_serialized_empty(self, tmp_path):
        out = tmp_path / "trace.csv"
        main(["trace", "--delta-grid", "0.2,0.4", "--j", "1", "--q-max", "2", "-o", str(out)])
        rows = [
            l.split(",") for l in out.read_text().splitlines()
            if not l.startswith("#") and not l.startswith("delta")
        ]
        assert all(r[1] == "" for r in rows)  # unbounded positive side at small delta
        assert all(r[2] != "" for r in rows)  # negative side always breaks

    def test_fit_reads_trace(self, trace_csv, tmp_path):
        out = tmp_path / "fit.csv"
        code = main([
            "fit", "--input", str(trace_csv), "--delta-lo", "2", "--delta-hi", "10",
            "-o", str(out),
        ])
        assert code == 0
        lines = [l for l in out.read_text().splitlines() if not l.startswith("#")]
        assert lines[0] == "j,bc,A,alpha,residual_rms,delta_lo,delta_hi"
        row = lines[1].split(",")
        assert row[0] == "1" and row[1] == "neumann"
        assert 0.4 < float(row[2]) < 0.9  # A
        assert 0.9 < float(row[3]) < 1.4  # alpha
        assert float(row[5]) == 2 and float(row[6]) == 10

    def test_fit_missing_input_is_config_error(self, tmp_path):
        code = main(["fit", "--input", str(tmp_path / "nope.csv"), "-o", str(tmp_path / "f.csv")])
        assert code == 2


class TestConfigFile:
    def test_file_supplies_flags_and_flags_override(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("q = 0\ndelta = 3\nj = 2\nk = 4\n")
        out = tmp_path / "spec.csv"
        code = main(["spectrum", "--config", str(cfg), "--k", "2", "-o", str(out)])
        assert code == 0
        lines = [l for l in out.read_text().splitlines() if not l.startswith("#")]
        assert len(lines) - 1 == 2  # flag k=2 overrides file k=4
        assert "# j = 2" in out.read_text()

    def test_unknown_config_key_rejected(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("q = 0\ndelta = 1\nbogus = 3\n")
        code = main(["spectrum", "--config", str(cfg), "-o", str(tmp_path / "x.csv")])
        assert code == 2


class TestErrorHandling:
    def test_validation_exit_code_and_record(self, tmp_path):
        result = run_cli(["spectrum", "--q", "1", "--delta", "0", "--j", "0",
                          "-o", str(tmp_path / "x.csv")])
        assert result.returncode == 2
        record = json.loads(result.stderr.strip().splitlines()[-1])
        assert record["error"]["kind"] == "config"

    def test_io_failure_exit_code(self, tmp_path):
        result = run_cli(["spectrum", "--q", "0", "--delta", "0",
                          "-o", str(tmp_path / "missing" / "deep" / "x.csv")])
        assert result.returncode == 4
        record = json.loads(result.stderr.strip().splitlines()[-1])
        assert record["error"]["kind"] == "io"

    def test_no_partial_file_on_failure(self, tmp_path):
        target = tmp_path / "missing" / "x.csv"
        run_cli(["spectrum", "--q", "0", "--delta", "0", "-o", str(target)])
        assert not target.exists()
        assert list(tmp_path.iterdir()) == []

    def test_summary_line_on_success(self, tmp_path):
        out = tmp_path / "s.csv"
        result = run_cli(["spectrum", "--q", "0", "--delta", "0", "--k", "2", "-o", str(out)])
        assert result.returncode == 0
        assert result.stdout.strip() == f"spectrum: wrote 2 rows to {out}"


class TestWorkers:
    def test_worker_pool_output_identical(self, tmp_path):
        args = ["surface", "--q-grid", "0:0.2:0.1", "--delta-grid", "0:0.4:0.2",
                "--k", "2"]
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        env = dict(os.environ)
        r1 = subprocess.run(
            [sys.executable, "-m", "ptmathieu.cli", *args, "-o", str(out1)],
            capture_output=True, text=True, env=env,
        )
        env["PTMATHIEU_WORKERS"] = "2"
        r2 = subprocess.run(
            [sys.executable, "-m", "ptmathieu.cli", *args, "-o", str(out2)],
            capture_output=True, text=True, env=env,
        )
        assert r1.returncode == 0 and r2.returncode == 0
        assert out1.read_bytes() == out2.read_bytes()
