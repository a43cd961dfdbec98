import csv
import io
import json
from fractions import Fraction

import pytest

from meixner.asymptotics import evaluate
from meixner.exact import MeixnerParams, eval_scaled_exact
from meixner.numerics import LogComplex
from meixner.report import CSV_HEADER, make_row, plot_rows, write_rows

P = MeixnerParams("0.5", "1.5", 100)


@pytest.fixture(scope="module")
def rows():
    out = []
    for z in ("-1", "0.05", "2", "100"):
        out.append(make_row(Fraction(z), 0, eval_scaled_exact(P, z), evaluate(z, P)))
    z = complex(3, 1)
    out.append(make_row(Fraction(3), Fraction(1), None, evaluate(z, P)))
    return out


def test_make_row(rows):
    r = rows[0]
    assert r.formula == "O4" and r.region == "Outer"
    assert abs(r.rel_err - 2.804e-4) < 1e-6
    assert rows[-1].rel_err is None and rows[-1].z == 3 + 1j


def test_csv(rows):
    buf = io.StringIO()
    write_rows(rows, "csv", buf, {"n": 100}, extra_columns=())
    lines = buf.getvalue().splitlines()
    assert lines[0] == "# n=100"
    assert lines[1] == ",".join(CSV_HEADER)
    body = list(csv.DictReader(io.StringIO("\n".join(lines[1:]))))
    assert body[1]["exact_sign"] == "-1"
    assert body[-1]["exact_sign"] == "" and body[-1]["asym_sign"] != ""
    assert float(body[3]["asym_log10"]) > 399


def test_json_and_text(rows):
    buf = io.StringIO()
    write_rows(rows, "json", buf, {"c": "1/2"})
    doc = json.loads(buf.getvalue())
    assert doc["meta"] == {"c": "1/2"}
    assert doc["rows"][3]["asym"]["exponent"] == 399
    assert doc["rows"][-1]["asym"]["kind"] == "complex" and doc["rows"][-1]["exact"] is None
    buf = io.StringIO()
    write_rows(rows, "text", buf)
    text = buf.getvalue()
    assert "2.16585e399" in text and "3+1i" in text
    with pytest.raises(ValueError):
        write_rows(rows, "xml", io.StringIO())


def test_zero_values_serialise():
    r = make_row(0, 0, LogComplex.zero(), None)
    buf = io.StringIO()
    write_rows([r], "json", buf)
    assert json.loads(buf.getvalue())["rows"][0]["exact"]["log10"] is None


def test_plot_is_deterministic(rows, tmp_path):
    a, b = tmp_path / "a.png", tmp_path / "b.png"
    plot_rows(rows, a, title="t", categorical=True)
    plot_rows(rows, b, title="t", categorical=True)
    data = a.read_bytes()
    assert data[:8] == b"\x89PNG\r\n\x1a\n"
    assert data == b.read_bytes()
    plot_rows(rows[:4], tmp_path / "c.png")
    assert (tmp_path / "c.png").stat().st_size > 1000
