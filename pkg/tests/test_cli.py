import csv
import io
import json
import math
import subprocess
import sys

import pytest

from meixner.cli import EXIT_CHECK, EXIT_IO, EXIT_OK, EXIT_REGION, EXIT_USAGE, main, parse_z
from meixner.numerics import GaussianRational
from meixner.report import CSV_HEADER


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def data_lines(text):
    return [line for line in text.splitlines() if not line.startswith("#")]


def test_parse_z():
    assert parse_z("0.171") == GaussianRational("171/1000")
    assert parse_z("2,0.5").im == GaussianRational("1/2").re
    for bad in ("", "1,2,3", "x", "1,"):
        with pytest.raises(Exception):
            parse_z(bad)


def test_eval_both_reference_point(capsys):
    code, out, _ = run(capsys, "eval", "--z", "-1", "--method", "both", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO("\n".join(data_lines(out)))))
    assert tuple(rows[0]) == CSV_HEADER
    row = dict(zip(CSV_HEADER, rows[1]))
    assert abs(float(row["exact_log10"]) - math.log10(1.99529e233)) < 2e-6
    assert abs(float(row["asym_log10"]) - math.log10(1.99473e233)) < 2e-6
    assert row["exact_sign"] == "1"
    assert row["formula"] == "O4" and abs(float(row["rel_err"]) - 2.8e-4) < 0.05e-4


def test_eval_text_format(capsys):
    code, out, _ = run(capsys, "eval", "--z", "-1", "--method", "both", "--format", "text")
    assert code == EXIT_OK
    assert "1.99529e233" in out and "1.99473e233" in out


def test_eval_zero_degree(capsys):
    code, out, _ = run(capsys, "eval", "--z", "0", "--n", "0", "--format", "json")
    assert code == EXIT_OK
    row = json.loads(out)["rows"][0]
    assert row["exact"]["sign"] == 1 and row["exact"]["exponent"] == 0
    assert row["exact"]["mantissa"].startswith("1.000")


def test_eval_complex_band_point(capsys):
    code, out, _ = run(capsys, "eval", "--z", "2,0.5", "--method", "asym", "--delta", "0.6",
                       "--format", "json")
    assert code == EXIT_OK
    row = json.loads(out)["rows"][0]
    assert row["region"] == "BandRight" and row["asym"]["kind"] == "complex"
    assert isinstance(row["asym"]["exponent"], int)
    code, out, _ = run(capsys, "eval", "--z", "2,0.5", "--method", "asym", "--format", "json")
    assert json.loads(out)["rows"][0]["region"] == "Outer"


def test_json_schema(capsys):
    code, out, _ = run(capsys, "eval", "--z", "0.05", "--method", "both", "--format", "json")
    doc = json.loads(out)
    assert doc["meta"]["n"] == 100
    row = doc["rows"][0]
    for key in ("z_re", "z_im", "region", "formula", "exact", "asym", "rel_err", "err_estimate"):
        assert key in row
    assert row["exact"]["exponent"] == 180 and row["exact"]["sign"] == -1
    assert len(row["exact"]["mantissa"].replace(".", "")) == 15


def test_usage_errors(capsys):
    assert run(capsys, "eval", "--z", "abc")[0] == EXIT_USAGE
    assert run(capsys, "eval", "--z", "1", "--c", "1.5")[0] == EXIT_USAGE
    assert run(capsys, "eval", "--z", "1", "--beta", "2")[0] == EXIT_USAGE
    assert run(capsys, "eval", "--z", "1", "--epsilon", "0.2", "--delta", "0.1")[0] == EXIT_USAGE
    assert run(capsys, "scan", "--from", "2", "--to", "1", "--points", "3")[0] == EXIT_USAGE
    assert run(capsys, "table", "--plot")[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["eval"])
    assert exc.value.code == EXIT_USAGE


def test_region_error_exit(capsys):
    code, _, err = run(capsys, "eval", "--z", "0", "--method", "asym")
    assert code == EXIT_REGION and "error" in err


def test_io_error_exit(capsys, tmp_path):
    target = tmp_path / "missing" / "out.csv"
    assert run(capsys, "eval", "--z", "1", "--out", str(target))[0] == EXIT_IO


def test_table_flags_rows(capsys):
    code, out, _ = run(capsys, "table", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO("\n".join(data_lines(out)))))
    assert [r["z_re"] for r in rows] == ["-1", "-0.001", "0.001", "0.05", "0.171", "0.172",
                                         "2", "5.828", "5.829", "100"]
    assert all(r["bound_ok"] == "yes" for r in rows)
    assert all(r["asym_ok"] == "yes" for r in rows)
    # the stored exact value at z = 0.001 disagrees with the polynomial
    bad = [r["z_re"] for r in rows if r["exact_ok"] == "no"]
    assert bad == ["0.001"]
    assert code == EXIT_CHECK


@pytest.mark.filterwarnings("ignore::meixner.asymptotics.CancellationWarning")
def test_table_other_parameters_has_no_flags(capsys):
    code, out, _ = run(capsys, "table", "--n", "50", "--format", "csv")
    assert code == EXIT_OK
    assert "bound_ok" not in out


def test_config_precedence(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# test run\nn = 40\nformat = json\nc=0.25\n")
    code, out, _ = run(capsys, "eval", "--z", "3", "--config", str(cfg))
    meta = json.loads(out)["meta"]
    assert meta["n"] == 40 and meta["c"] == "1/4"
    code, out, _ = run(capsys, "eval", "--z", "3", "--config", str(cfg), "--n", "7",
                       "--format", "csv")
    assert "# n=7" in out and "# c=1/4" in out
    bad = tmp_path / "bad.cfg"
    bad.write_text("colour = red\n")
    assert run(capsys, "eval", "--z", "1", "--config", str(bad))[0] == EXIT_USAGE


def test_scan_strip(capsys):
    code, out, _ = run(capsys, "scan", "--from", "0.01", "--to", "0.16", "--points", "16",
                       "--epsilon", "0.01", "--method", "asym")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO("\n".join(data_lines(out)))))
    assert len(rows) == 16
    assert {r["region"] for r in rows} <= {"StripLeft", "OriginRight"}
    assert all(r["exact_sign"] == "" for r in rows)


def test_scan_across_b(capsys):
    code, out, _ = run(capsys, "scan", "--from", "5.7", "--to", "5.95", "--points", "26",
                       "--method", "asym")
    rows = list(csv.DictReader(io.StringIO("\n".join(data_lines(out)))))
    formulas = [r["formula"] for r in rows]
    collapsed = [f for i, f in enumerate(formulas) if i == 0 or f != formulas[i - 1]]
    assert collapsed == ["O3", "Ob", "O4"]
    b = 5.828427124746190
    eps = 0.042893218813452
    for r in rows:
        x = float(r["z_re"])
        assert (r["formula"] == "Ob") == (abs(x - b) <= eps)


def test_scan_band_errors(capsys):
    code, out, _ = run(capsys, "scan", "--from", "0.28", "--to", "5.2", "--points", "30")
    rows = list(csv.DictReader(io.StringIO("\n".join(data_lines(out)))))
    for r in rows:
        err, est = float(r["rel_err"]), float(r["err_estimate"])
        assert err <= est or err <= 1e-2
    # away from the zeros and from b the error stays below 1e-2
    good = [float(r["rel_err"]) for r in rows if float(r["z_re"]) < 5.2 and
            float(r["err_estimate"]) < 0.1]
    assert good and max(good) <= 1e-2


def test_output_is_deterministic(tmp_path, capsys):
    paths = []
    for k in range(2):
        out = tmp_path / f"scan{k}.csv"
        assert run(capsys, "scan", "--from", "-1", "--to", "1", "--points", "5",
                   "--out", str(out), "--plot")[0] == EXIT_OK
        paths.append(out)
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert paths[0].with_suffix(".png").read_bytes() == paths[1].with_suffix(".png").read_bytes()


def test_verify_and_fault(capsys):
    code, out, _ = run(capsys, "verify", "--n", "10", "--n", "100")
    assert code == EXIT_OK
    assert "D -> 1 as n grows" in out and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "--inject-fault", "flip-phi-tilde")
    assert code == EXIT_CHECK
    failed = [line for line in out.splitlines() if line.startswith("FAIL")]
    assert any("E,E~,H,H~ jump" in line for line in failed)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "meixner", "eval", "--z", "100", "--method",
                           "both", "--format", "text"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "2.16586e399" in proc.stdout
