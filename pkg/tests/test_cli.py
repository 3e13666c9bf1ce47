import csv
import io
import json
import subprocess
import sys

from fibquad.cli import main


def run_cli(capsys, *argv):
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr)."""
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_fib_basic(capsys):
    code, out, _ = run_cli(capsys, "fib", "--n", "4")
    assert code == 0 and out.strip() == "3"
    code, out, _ = run_cli(capsys, "fib", "--n", "0")
    assert code == 0 and out.strip() == "0"


def test_fib_mod(capsys):
    code, out, _ = run_cli(capsys, "fib", "--n", "4000", "--mod", "3")
    assert code == 0 and out.strip() == "0"


def test_fib_negative_index_is_usage_error(capsys):
    code, _, _ = run_cli(capsys, "fib", "--n", "-1")
    assert code == 2


def test_fib_bad_modulus_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "fib", "--n", "5", "--mod", "1")
    assert code == 2
    assert "error" in err


def test_fib_json_uses_decimal_strings(capsys):
    code, out, _ = run_cli(capsys, "fib", "--n", "300", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == str(222232244629420445529739893461909967206666939096499764990979600)


def test_triples_table(capsys):
    code, out, _ = run_cli(capsys, "triples", "--from", "1", "--to", "1")
    assert code == 0
    assert "3" in out and "4" in out and "5" in out and "True" in out


def test_triples_gcd_flag(capsys):
    code, out, _ = run_cli(capsys, "triples", "--from", "3", "--to", "3", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows[0] == {"i": "3", "leg_a": "16", "leg_b": "30", "hyp": "34",
                       "gcd": "2", "primitive": False}


def test_triples_scaled(capsys):
    code, out, _ = run_cli(capsys, "triples", "--from", "1", "--to", "1",
                           "--scale", "2", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert (rows[0]["leg_a"], rows[0]["leg_b"], rows[0]["hyp"]) == ("6", "8", "10")
    assert rows[0]["primitive"] is False


def test_triples_from_zero_is_usage_error(capsys):
    code, _, _ = run_cli(capsys, "triples", "--from", "0", "--to", "1")
    assert code == 2


def test_triples_reversed_range_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "triples", "--from", "5", "--to", "2")
    assert code == 2


def test_triples_csv_has_header(capsys):
    code, out, _ = run_cli(capsys, "triples", "--from", "1", "--to", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["i", "leg_a", "leg_b", "hyp", "gcd", "primitive"]
    assert rows[1] == ["1", "3", "4", "5", "1", "True"]


def test_quad_build_report(capsys):
    code, out, _ = run_cli(capsys, "quad", "build", "--leg", "3", "--hyp", "5",
                           "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["roots"] == {"kind": "two-distinct", "x1": "-1", "x2": "-9"}
    assert d["integral_abs"] == "256"
    assert d["vertex_y"] == "-48"


def test_quad_build_negative_orientation(capsys):
    code, out, _ = run_cli(capsys, "quad", "build", "--leg", "3", "--hyp", "5",
                           "--neg", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["roots"] == {"kind": "two-distinct", "x1": "1", "x2": "9"}
    assert d["integral_signed"] == "256"


def test_quad_build_invalid_leg_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "quad", "build", "--leg", "2", "--hyp", "5")
    assert code == 2
    assert "perfect square" in err


def test_quad_analyze_irrational(capsys):
    code, out, _ = run_cli(capsys, "quad", "analyze", "--a", "1", "--b", "0",
                           "--c", "1", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["roots"]["kind"] == "irrational-or-complex"
    assert d["integral_signed"] is None
    assert d["breakdown"] is None


def test_quad_analyze_zero_lead_is_usage_error(capsys):
    code, _, _ = run_cli(capsys, "quad", "analyze", "--a", "0", "--b", "1", "--c", "1")
    assert code == 2


def test_family_row_n0(capsys):
    code, out, _ = run_cli(capsys, "family", "--n-max", "0", "--flavor", "f",
                           "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 1
    row = rows[0]
    assert row["analysis"]["roots"] == {"kind": "two-distinct", "x1": "-1", "x2": "-9"}
    assert row["analysis"]["vertex_y"] == "-48"
    assert row["closed_form"] == "256"
    assert row["match"] is True


def test_family_g_row(capsys):
    code, out, _ = run_cli(capsys, "family", "--n-max", "0", "--flavor", "g",
                           "--format", "json")
    rows = json.loads(out)
    assert rows[0]["closed_form"] == "144"
    assert rows[0]["analysis"]["integral_abs"] == "144"
    assert rows[0]["analysis"]["vertex_y"] == "-36"


def test_family_third_row_integral(capsys):
    code, out, _ = run_cli(capsys, "family", "--n-max", "2", "--flavor", "f",
                           "--format", "json")
    rows = json.loads(out)
    assert rows[2]["analysis"]["integral_abs"] == "20736"
    assert all(r["match"] for r in rows)


def test_family_csv_header_prefix(capsys):
    code, out, _ = run_cli(capsys, "family", "--n-max", "1", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:9] == ["n", "a", "b", "c", "x1", "x2", "vx", "vy", "integral_abs"]
    assert all(row[-1] == "True" for row in rows[1:])


def test_verify_mod3(capsys):
    code, out, _ = run_cli(capsys, "verify", "mod3", "--max", "1000")
    assert code == 0
    assert "PASS" in out


def test_verify_theorem3(capsys):
    code, out, _ = run_cli(capsys, "verify", "theorem3", "--max", "20")
    assert code == 0


def test_verify_all(capsys):
    code, out, _ = run_cli(capsys, "verify", "all", "--max", "30")
    assert code == 0
    assert out.count("PASS") == 6


def test_verify_json_reports(capsys):
    code, out, _ = run_cli(capsys, "verify", "mod3", "--max", "100", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert reports[0]["claim"] == "mod3"
    assert reports[0]["status"] == "pass"
    assert reports[0]["counterexamples"] == []


def test_verify_unknown_claim_is_usage_error(capsys):
    code, _, _ = run_cli(capsys, "verify", "theorem9")
    assert code == 2


def test_verify_counterexample_exits_1_with_json(capsys, monkeypatch):
    from fibquad import oracle
    from fibquad.report import make_report

    def failing_claim(config):
        return make_report("mod3", "forced", [{"n": "1", "problem": "forced failure"}], 0.0)

    monkeypatch.setitem(oracle.CLAIMS, "mod3", failing_claim)
    code, out, _ = run_cli(capsys, "verify", "mod3")
    assert code == 1
    assert "FAIL" in out
    payload = json.loads(out.split("\n", 1)[1])
    assert payload[0]["counterexamples"][0]["problem"] == "forced failure"


def test_verify_csv_has_header(capsys):
    code, out, _ = run_cli(capsys, "verify", "roots", "--max", "10", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["claim", "range", "status", "counterexamples", "elapsed"]


def test_plot_writes_structural_svg(tmp_path, capsys):
    out_path = tmp_path / "fig.svg"
    code, _, _ = run_cli(capsys, "plot", "--leg", "3", "--hyp", "5", "--neg",
                         "--out", str(out_path))
    assert code == 0
    svg = out_path.read_text()
    assert svg.startswith("<svg")
    assert "<polyline" in svg
    assert "<polygon" in svg
    assert svg.count("<line") >= 1
    assert "x1 = 1" in svg and "x2 = 9" in svg
    assert "vertex (5, 48)" in svg
    # 256 samples on the polyline
    polyline = svg.split("<polyline")[1].split('points="')[1].split('"')[0]
    assert len(polyline.split()) == 256


def test_plot_positive_orientation(tmp_path, capsys):
    out_path = tmp_path / "fig_pos.svg"
    code, _, _ = run_cli(capsys, "plot", "--leg", "4", "--hyp", "5", "--out", str(out_path))
    assert code == 0
    svg = out_path.read_text()
    assert "x1 = -2" in svg and "x2 = -8" in svg


def test_plot_invalid_triple_is_usage_error(tmp_path, capsys):
    code, _, _ = run_cli(capsys, "plot", "--leg", "2", "--hyp", "5",
                         "--out", str(tmp_path / "x.svg"))
    assert code == 2


def test_plot_unwritable_path_is_usage_error(tmp_path, capsys):
    target = tmp_path / "missing-dir" / "x.svg"
    code, _, err = run_cli(capsys, "plot", "--leg", "3", "--hyp", "5", "--out", str(target))
    assert code == 2


def test_plot_json_metadata(tmp_path, capsys):
    out_path = tmp_path / "fig.svg"
    code, out, _ = run_cli(capsys, "plot", "--leg", "3", "--hyp", "5",
                           "--out", str(out_path), "--format", "json")
    assert code == 0
    meta = json.loads(out)
    assert meta["samples"] == "256"
    assert out_path.exists()


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "fibquad", "fib", "--n", "10"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "55"


def test_subprocess_exit_codes():
    bad = subprocess.run([sys.executable, "-m", "fibquad", "triples", "--from", "0", "--to", "1"],
                         capture_output=True, text=True)
    assert bad.returncode == 2
