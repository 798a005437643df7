"""Serialisation of results to JSON-ready dicts, plain tables and CSV.

Rationals are rendered as "p/q" (or "k"); floats with 12 significant digits.
Vertices are printed with their original input labels.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .bounds import BoundReport
from .curvature import CurvatureProfile
from .graph import Graph
from .rational import format_float, format_rational
from .spectral import LaplacianSpectrum
from .verify import CheckResult


def _r(value):
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return format_rational(value)
    return value


def _f(value: float) -> float:
    return float(format_float(value))


def curvature_dict(g: Graph, profile: CurvatureProfile, alpha_values: dict | None = None, alpha=None) -> dict:
    rows = []
    for (u, v), k in profile.edges.items():
        row = {"u": g.labels[u], "v": g.labels[v], "kappa_lly": _r(k)}
        if alpha_values is not None:
            row["kappa_alpha"] = _r(alpha_values[u, v])
        rows.append(row)
    return {
        "alpha": None if alpha is None else _r(alpha),
        "edges": rows,
        "summary": {
            "min": _r(profile.min),
            "max": _r(profile.max),
            "distinct": [_r(k) for k in profile.thresholds()],
        },
    }


def spectrum_dict(result: LaplacianSpectrum) -> dict:
    return {"eigenvalues": [_f(x) for x in result.eigenvalues], "lambda1": _f(result.lambda1)}


def bound_dict(rep: BoundReport) -> dict:
    out = {
        "kappa0": _r(rep.kappa0),
        "integral": _r(rep.integral.value),
        "actual_diameter": rep.actual_diameter,
        "diameter_bound": rep.diameter_bound,
        "actual_n": rep.actual_n,
        "d_max": rep.d_max,
        "moore_bound": _r(rep.moore_bound),
        "moore_bound_auto": _r(rep.moore_bound_auto),
        "actual_lambda1": _f(rep.actual_lambda1),
        "lichnerowicz_bound": _r(rep.lichnerowicz_bound),
    }
    if rep.alpha is not None:
        out.update(
            alpha=_r(rep.alpha),
            integral_alpha=_r(rep.integral_alpha.value),
            diameter_bound_alpha=rep.diameter_bound_alpha,
            lichnerowicz_bound_alpha=_r(rep.lichnerowicz_bound_alpha),
        )
    out["holds"] = dict(sorted(rep.holds.items()))
    out["notes"] = list(rep.notes)
    return out


def check_dict(results: list[CheckResult], version: str) -> dict:
    return {
        "suite": version,
        "passed": all(r.passed for r in results),
        "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
    }


def to_json(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _stringify(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, dict):
        return " ".join(f"{k}={_stringify(v)}" for k, v in value.items())
    if isinstance(value, list):
        return "; ".join(_stringify(v) for v in value)
    if value is None:
        return "-"
    return str(value)


def to_table(rows: list[dict]) -> str:
    if not rows:
        return ""
    cols = list(rows[0])
    cells = [[_stringify(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: _stringify(v) for k, v in r.items()})
    return buf.getvalue()
