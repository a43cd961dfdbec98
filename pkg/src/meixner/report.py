"""Comparison rows, their serialisation and static figures.

A :class:`ComparisonRow` pairs the exact and asymptotic value at one point.
Rows are written as CSV, JSON or aligned text; :func:`plot_rows` renders a
PNG next to the data file.  Output is byte-for-byte deterministic for a
fixed input (no timestamps, PNG metadata stripped).
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .numerics import LogComplex, ScaledReal, rel_diff

__all__ = ["CSV_HEADER", "ComparisonRow", "make_row", "write_rows", "plot_rows"]

CSV_HEADER = ("z_re", "z_im", "region", "formula", "exact_sign", "exact_log10",
              "asym_sign", "asym_log10", "rel_err", "err_estimate")


@dataclass(frozen=True)
class ComparisonRow:
    """One evaluation point.

    ``exact`` and ``asym`` are ``None`` when not computed; ``rel_err`` needs
    both.  For complex values the ``*_sign`` fields of the CSV carry the
    phase in radians.
    """

    z_re: Fraction
    z_im: Fraction
    exact: ScaledReal | LogComplex | None
    asym: ScaledReal | LogComplex | None
    region: str = ""
    formula: str = ""
    rel_err: float | None = None
    err_estimate: float | None = None
    extra: tuple = ()

    @property
    def z(self) -> complex:
        return complex(float(self.z_re), float(self.z_im))


def make_row(z_re, z_im, exact=None, result=None, extra=()) -> ComparisonRow:
    """Assemble a row from an exact value and an ``AsymptoticResult``."""
    asym = result.value if result is not None else None
    rel = rel_diff(asym, exact) if exact is not None and asym is not None else None
    return ComparisonRow(
        Fraction(z_re), Fraction(z_im), exact, asym,
        region=result.region.tag.value if result is not None else "",
        formula=result.formula if result is not None else "",
        rel_err=rel,
        err_estimate=result.err_estimate if result is not None else None,
        extra=tuple(extra),
    )


# --------------------------------------------------------------------------
# formatting helpers
# --------------------------------------------------------------------------

def _g15(x) -> str:
    if x is None:
        return ""
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.15g}"


def _dec(x: Fraction) -> str:
    """Shortest exact-ish decimal for a grid coordinate."""
    if x.denominator == 1:
        return str(x.numerator)
    return _g15(x)


def _sign_log10(v) -> tuple[str, str]:
    if v is None:
        return "", ""
    if isinstance(v, ScaledReal):
        return str(v.sign), ("-inf" if v.sign == 0 else _g15(v.log10_mag))
    if v.is_zero:
        return "0", "-inf"
    return _g15(v.phase), _g15(v.log10_mag)


def _value_json(v):
    if v is None:
        return None
    if isinstance(v, ScaledReal):
        mant = v.mantissa[:16] if v.sign else "0"
        return {"kind": "real", "sign": v.sign, "mantissa": mant, "exponent": v.exponent,
                "log10": None if v.sign == 0 else float(_g15(v.log10_mag))}
    if v.is_zero:
        return {"kind": "complex", "log10": None, "phase": 0.0}
    lg10 = v.log10_mag
    exp10 = math.floor(lg10)
    return {"kind": "complex", "mantissa": _g15(10 ** (lg10 - exp10)), "exponent": exp10,
            "log10": float(_g15(lg10)), "phase": float(_g15(v.phase))}


def _value_text(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, ScaledReal):
        return v.format(6)
    if v.is_zero:
        return "0"
    lg10 = v.log10_mag
    exp10 = math.floor(lg10)
    return f"{10 ** (lg10 - exp10):.5f}e{exp10} * exp({v.phase:+.6f}i)"


def _csv_fields(row: ComparisonRow) -> list[str]:
    es, el = _sign_log10(row.exact)
    as_, al = _sign_log10(row.asym)
    return [_dec(row.z_re), _dec(row.z_im), row.region, row.formula, es, el, as_, al,
            _g15(row.rel_err), _g15(row.err_estimate)]


def write_rows(rows, fmt: str, stream, meta: dict | None = None,
               extra_columns: tuple = ()) -> None:
    """Serialise rows as ``csv``, ``json`` or ``text`` to ``stream``.

    ``meta`` is written as ``#`` comment lines (CSV, text) or a ``meta``
    object (JSON).  ``extra_columns`` names the entries of ``row.extra``.
    """
    meta = meta or {}
    if fmt == "csv":
        for k, v in meta.items():
            stream.write(f"# {k}={v}\n")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(list(CSV_HEADER) + list(extra_columns))
        for r in rows:
            w.writerow(_csv_fields(r) + [str(x) for x in r.extra])
        stream.write(buf.getvalue())
    elif fmt == "json":
        out = []
        for r in rows:
            item = {
                "z_re": _dec(r.z_re), "z_im": _dec(r.z_im),
                "region": r.region or None, "formula": r.formula or None,
                "exact": _value_json(r.exact), "asym": _value_json(r.asym),
                "rel_err": None if r.rel_err is None else float(_g15(r.rel_err)),
                "err_estimate": None if r.err_estimate is None else float(_g15(r.err_estimate)),
            }
            for k, v in zip(extra_columns, r.extra):
                item[k] = v
            out.append(item)
        json.dump({"meta": meta, "rows": out}, stream, indent=2, sort_keys=False)
        stream.write("\n")
    elif fmt == "text":
        for k, v in meta.items():
            stream.write(f"# {k}={v}\n")
        head = ["z", "region", "formula", "exact", "asymptotic", "rel_err", "err_est"]
        head += list(extra_columns)
        lines = [head]
        for r in rows:
            z = _dec(r.z_re) if r.z_im == 0 else f"{_dec(r.z_re)}{'+' if r.z_im >= 0 else '-'}{_dec(abs(r.z_im))}i"
            lines.append([z, r.region or "-", r.formula or "-", _value_text(r.exact),
                          _value_text(r.asym),
                          "-" if r.rel_err is None else f"{r.rel_err:.3e}",
                          "-" if r.err_estimate is None else f"{r.err_estimate:.3e}"]
                         + [str(x) for x in r.extra])
        widths = [max(len(line[i]) for line in lines) for i in range(len(head))]
        for line in lines:
            stream.write("  ".join(c.ljust(wd) for c, wd in zip(line, widths)).rstrip() + "\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")


# --------------------------------------------------------------------------
# figures
# --------------------------------------------------------------------------

def _log10(v):
    if v is None:
        return math.nan
    if isinstance(v, ScaledReal):
        return v.log10_mag if v.sign else math.nan
    return v.log10_mag if not v.is_zero else math.nan


def plot_rows(rows, path, title: str = "", categorical: bool = False) -> None:
    """Two-panel PNG: ``log10 |pi_n|`` and relative errors against ``z``.

    With ``categorical`` the points are placed at equal spacing and labelled
    by their ``z`` value (used for the reference table).
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    rows = list(rows)
    if categorical:
        xs = list(range(len(rows)))
    else:
        xs = [float(r.z_re) for r in rows]
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(7.0, 6.0), sharex=True)
    ax1.plot(xs, [_log10(r.exact) for r in rows], "o-", ms=3, label="exact")
    ax1.plot(xs, [_log10(r.asym) for r in rows], "x--", ms=4, label="asymptotic")
    ax1.set_ylabel(r"$\log_{10}|\pi_n(nz-\beta/2)|$")
    ax1.legend(loc="best")
    rel = [r.rel_err if r.rel_err else math.nan for r in rows]
    est = [r.err_estimate if r.err_estimate else math.nan for r in rows]
    ax2.semilogy(xs, rel, "o", ms=3, label="relative error")
    ax2.semilogy(xs, est, "_", ms=8, label="error estimate")
    ax2.set_ylabel("relative error")
    ax2.legend(loc="best")
    if categorical:
        ax2.set_xticks(xs)
        ax2.set_xticklabels([_dec(r.z_re) for r in rows], rotation=45)
    ax2.set_xlabel("z")
    # mark formula changes along the scan
    for i in range(1, len(rows)):
        if rows[i].formula != rows[i - 1].formula:
            xm = 0.5 * (xs[i] + xs[i - 1])
            for ax in (ax1, ax2):
                ax.axvline(xm, color="0.7", lw=0.8, ls=":")
            ax1.annotate(rows[i].formula, (xs[i], 1.0), xycoords=("data", "axes fraction"),
                         fontsize=7, va="top")
    if title:
        ax1.set_title(title)
    fig.tight_layout()
    fig.savefig(path, format="png", dpi=100, metadata={"Software": None})
    plt.close(fig)
