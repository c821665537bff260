"""Verification harness: every value the package computes is checked
against at least one independently computed partner, and the outcome is
recorded per case.

Five suites:

    paper-constants    published closed-form constants against all three
                       computation layers (closed form, series, quadrature)
    theorem-grid       the 120-case (family, z, m) grid, three layers
                       against each other
    concluding         the alternating families against their integral
                       representations (no closed forms exist)
    specfun-identities seeded property grids for the dilogarithm and
                       Clausen identities
    beta-terms         the generating integral identity in exact rationals
                       against quadrature, k = 0..30

A record passes when the largest pairwise deviation among its available
values is at most tol * max(1, |reference|), the reference being the
closed-form value when present.  Records are produced in a fixed order
so reports are deterministic apart from timings.
"""

from __future__ import annotations

import cmath
import csv
import io
import json
import math
import random
import time
from dataclasses import dataclass

import numpy as np

from .closedform import REGISTRY, closed_sum
from .errors import DomainError, UnknownSuite
from .quadrature import beta_term_integral, series_via_quadrature, tanh_sinh
from .series import base_term, sum_series
from .specfun import catalan, clausen2, dilog, harmonic, odd_harmonic

__all__ = ["VerificationRecord", "SUITES", "run_suite", "emit_report"]

SUITES = (
    "paper-constants",
    "theorem-grid",
    "concluding",
    "specfun-identities",
    "beta-terms",
)

_DEFAULT_TOL = {
    "paper-constants": 1e-10,
    "theorem-grid": 1e-9,
    "concluding": 1e-9,
    "specfun-identities": 1e-13,
    "beta-terms": 1e-11,
}

_GRID_Z = (2.0, 3.0, -4.0, -8.0, 5.0, -2.0)
_GRID_M = (0, 1, 2, 3, 4)
_GRID_FAMILIES = ("A1", "A2", "B1", "B2")
_CONCLUDING_Z = (0.25, 0.5, 0.9)
_CONCLUDING_FAMILIES = ("C1", "C2", "C3", "C4")
_SERIES_TOL = 1e-13
_QUAD_TOL = 1e-12


@dataclass(frozen=True)
class VerificationRecord:
    id: str
    family: str | None
    z: float | None
    m: int | None
    closed: float | None
    series_oracle: float | None
    quad_oracle: float | None
    abs_diff: float
    rel_diff: float
    tol: float
    passed: bool
    runtime_ms: float


def _z_tag(z: float) -> str:
    mag = f"{abs(z):g}".replace(".", "p")
    return f"zneg{mag}" if z < 0 else f"z{mag}"


def _record(rid, family, z, m, closed, series, quad, tol, started,
            extra=(), deviation=None) -> VerificationRecord:
    values = [v for v in (closed, series, quad, *extra) if v is not None]
    if deviation is not None:
        abs_diff = float(deviation)
    elif len(values) >= 2:
        abs_diff = max(abs(a - b) for i, a in enumerate(values) for b in values[i + 1:])
    else:
        abs_diff = 0.0
    ref = closed if closed is not None else (series if series is not None else None)
    scale = max(1.0, abs(ref)) if ref is not None else 1.0
    rel_diff = abs_diff / scale
    return VerificationRecord(
        id=rid, family=family, z=z, m=m,
        closed=closed, series_oracle=series, quad_oracle=quad,
        abs_diff=abs_diff, rel_diff=rel_diff, tol=tol,
        passed=rel_diff <= tol,
        runtime_ms=(time.perf_counter() - started) * 1000.0,
    )


def _suite_constants(tol: float) -> list[VerificationRecord]:
    out = []
    for entry in REGISTRY.values():
        t0 = time.perf_counter()
        s = float(entry.scale)
        closed = s * closed_sum(entry.family, entry.z, entry.m).total
        series = s * sum_series(entry.family, entry.z, entry.m, tol=_SERIES_TOL)
        quad = s * series_via_quadrature(entry.family, entry.z, entry.m, tol=_QUAD_TOL)
        out.append(_record(
            entry.id, entry.family.value, entry.z, entry.m,
            closed, series, quad, tol, t0, extra=(entry.value(),),
        ))
    return out


def _suite_grid(tol: float) -> list[VerificationRecord]:
    out = []
    for family in _GRID_FAMILIES:
        for z in _GRID_Z:
            for m in _GRID_M:
                t0 = time.perf_counter()
                closed = closed_sum(family, z, m).total
                series = sum_series(family, z, m, tol=_SERIES_TOL)
                quad = series_via_quadrature(family, z, m, tol=_QUAD_TOL)
                rid = f"{family}-{_z_tag(z)}-m{m}"
                out.append(_record(rid, family, z, m, closed, series, quad, tol, t0))
    return out


def _suite_concluding(tol: float) -> list[VerificationRecord]:
    out = []
    for family in _CONCLUDING_FAMILIES:
        for z in _CONCLUDING_Z:
            t0 = time.perf_counter()
            series = sum_series(family, z, tol=_SERIES_TOL)
            quad = series_via_quadrature(family, z, tol=_QUAD_TOL)
            rid = f"{family}-{_z_tag(z)}"
            out.append(_record(rid, family, z, 0, None, series, quad, tol, t0))
    return out


def _identity_record(rid: str, tol: float, deviation: float, started: float):
    return _record(rid, None, None, None, None, None, None, tol, started,
                   deviation=deviation)


def _suite_identities(tol: float) -> list[VerificationRecord]:
    out = []
    pi = math.pi

    t0 = time.perf_counter()
    dev = 0.0
    for j in range(64):
        t = -2 * pi + 4 * pi * j / 63
        v = dilog(cmath.exp(1j * t))
        dev = max(dev,
                  abs(v.real - (pi * pi / 6 + (t * t - 2 * pi * abs(t)) / 4)),
                  abs(v.imag - clausen2(t)))
    out.append(_identity_record("dilog-circle-decomposition", tol, dev, t0))

    t0 = time.perf_counter()
    rng = random.Random(20260818)
    dev = 0.0
    for _ in range(50):
        x = rng.uniform(-4.0, 0.95)
        lhs = dilog(x) + dilog(x / (x - 1.0))
        rhs = -0.5 * math.log(1.0 - x) ** 2
        dev = max(dev, abs(lhs.real - rhs) / max(1.0, abs(rhs)), abs(lhs.imag))
    out.append(_identity_record("dilog-landen-real", tol, dev, t0))

    t0 = time.perf_counter()
    rng = random.Random(411)
    dev = 0.0
    done = 0
    while done < 50:
        zz = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        if abs(zz) >= 1.0:
            continue
        done += 1
        gap = dilog(zz) + dilog(-zz) - 0.5 * dilog(zz * zz)
        dev = max(dev, abs(gap))
    out.append(_identity_record("dilog-duplication", tol, dev, t0))

    rng = random.Random(907)
    thetas = [rng.uniform(-2 * pi, 2 * pi) for _ in range(50)]

    t0 = time.perf_counter()
    dev = max(abs(clausen2(pi + t) + clausen2(pi - t)) for t in thetas)
    out.append(_identity_record("clausen-reflection", tol, dev, t0))

    t0 = time.perf_counter()
    dev = max(abs(clausen2(t) + clausen2(2 * pi - t)) for t in thetas)
    out.append(_identity_record("clausen-antiperiodicity", tol, dev, t0))

    t0 = time.perf_counter()
    dev = max(abs(0.5 * clausen2(2 * t) - clausen2(t) + clausen2(pi - t))
              for t in thetas)
    out.append(_identity_record("clausen-duplication", tol, dev, t0))

    t0 = time.perf_counter()
    dev = 0.0
    for n in range(1, 201):
        even = abs(harmonic(2 * n) - (harmonic(n) / 2 + odd_harmonic(n)))
        odd = abs(harmonic(2 * n - 1) - (harmonic(n - 1) / 2 + odd_harmonic(n)))
        exact_gap = harmonic(2 * n, exact=True) - \
            harmonic(n, exact=True) / 2 - odd_harmonic(n, exact=True)
        dev = max(dev, even, odd, math.inf if exact_gap != 0 else 0.0)
    out.append(_identity_record("harmonic-even-odd-split", tol, dev, t0))

    t0 = time.perf_counter()
    dev = max(
        abs(dilog(1.0).real - pi * pi / 6),
        abs(dilog(-1.0).real + pi * pi / 12),
        abs(dilog(0.5).real - (pi * pi / 12 - math.log(2.0) ** 2 / 2)),
        abs(dilog(1j) - complex(-pi * pi / 48, catalan())),
        abs(dilog(-1j) - complex(-pi * pi / 48, -catalan())),
    )
    out.append(_identity_record("dilog-special-values", tol, dev, t0))

    t0 = time.perf_counter()
    via_integral = -tanh_sinh(lambda x, xc: np.log(x) / (1.0 + x * x), tol=_QUAD_TOL)
    out.append(_identity_record(
        "catalan-integral", tol, abs(catalan() - via_integral), t0))

    return out


def _suite_beta(tol: float) -> list[VerificationRecord]:
    out = []
    for k in range(31):
        t0 = time.perf_counter()
        exact = -base_term("A", k).exact  # integral of x^k (1-x)^{2k} log x
        closed = float(exact)
        quad = beta_term_integral(k, tol=_QUAD_TOL)
        out.append(_record(f"beta-k{k}", None, None, k, closed, None, quad, tol, t0))
    return out


_RUNNERS = {
    "paper-constants": _suite_constants,
    "theorem-grid": _suite_grid,
    "concluding": _suite_concluding,
    "specfun-identities": _suite_identities,
    "beta-terms": _suite_beta,
}


def run_suite(name: str, tol: float | None = None) -> list[VerificationRecord]:
    """Run one verification suite; tol = None uses the suite default."""
    runner = _RUNNERS.get(name)
    if runner is None:
        raise UnknownSuite(
            f"unknown suite {name!r}; available: {', '.join(SUITES)}"
        )
    if tol is None:
        tol = _DEFAULT_TOL[name]
    if not (isinstance(tol, float) and math.isfinite(tol)) or tol < 1e-13:
        raise DomainError(f"suite tolerance must be a float >= 1e-13, got {tol!r}")
    return runner(tol)


# -- report rendering -------------------------------------------------------

def _fmt(x, digits: int = 17) -> str:
    if x is None:
        return "null"
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    return format(x, f".{digits}g")


def _json_report(records, suite, tol) -> str:
    lines = ["{"]
    lines.append(f'  "suite": {json.dumps(suite) if suite else "null"},')
    lines.append(f'  "tol": {_fmt(tol)},')
    stamp = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    lines.append(f'  "generated_at": "{stamp}",')
    lines.append('  "records": [')
    body = []
    for r in records:
        row = (
            "    {"
            f'"id": {json.dumps(r.id)}, '
            f'"family": {json.dumps(r.family) if r.family else "null"}, '
            f'"z": {_fmt(r.z)}, '
            f'"m": {_fmt(r.m)}, '
            f'"closed": {_fmt(r.closed)}, '
            f'"series_oracle": {_fmt(r.series_oracle)}, '
            f'"quad_oracle": {_fmt(r.quad_oracle)}, '
            f'"abs_diff": {_fmt(r.abs_diff)}, '
            f'"rel_diff": {_fmt(r.rel_diff)}, '
            f'"tol": {_fmt(r.tol)}, '
            f'"pass": {_fmt(r.passed)}, '
            f'"runtime_ms": {r.runtime_ms:.3f}'
            "}"
        )
        body.append(row)
    lines.append(",\n".join(body))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


_CSV_COLUMNS = ["id", "family", "z", "m", "closed", "series_oracle",
                "quad_oracle", "abs_diff", "rel_diff", "tol", "pass", "runtime_ms"]


def _csv_report(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    for r in records:
        writer.writerow([
            r.id,
            r.family or "",
            "" if r.z is None else format(r.z, ".17g"),
            "" if r.m is None else r.m,
            "" if r.closed is None else format(r.closed, ".17g"),
            "" if r.series_oracle is None else format(r.series_oracle, ".17g"),
            "" if r.quad_oracle is None else format(r.quad_oracle, ".17g"),
            format(r.abs_diff, ".17g"),
            format(r.rel_diff, ".17g"),
            format(r.tol, ".17g"),
            "pass" if r.passed else "FAIL",
            f"{r.runtime_ms:.3f}",
        ])
    return buf.getvalue()


def _table_report(records) -> str:
    headers = ["id", "family", "z", "m", "closed", "series", "quadrature",
               "abs_diff", "status"]
    rows = []
    for r in records:
        rows.append([
            r.id,
            r.family or "-",
            "-" if r.z is None else f"{r.z:g}",
            "-" if r.m is None else str(r.m),
            "-" if r.closed is None else f"{r.closed:+.12e}",
            "-" if r.series_oracle is None else f"{r.series_oracle:+.12e}",
            "-" if r.quad_oracle is None else f"{r.quad_oracle:+.12e}",
            f"{r.abs_diff:.2e}",
            "pass" if r.passed else "FAIL",
        ])
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
              for i, h in enumerate(headers)]
    def line(cells):
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    sep = "  ".join("-" * w for w in widths)
    n_pass = sum(1 for r in records if r.passed)
    footer = f"{len(records)} records, {n_pass} passed, {len(records) - n_pass} failed"
    return "\n".join([line(headers), sep, *map(line, rows), sep, footer]) + "\n"


def emit_report(records, fmt: str = "table", path: str | None = None,
                suite: str | None = None, tol: float | None = None) -> str:
    """Render records as json, csv, or a fixed-width table.

    Returns the rendered text; writes it to path when one is given.
    """
    if fmt == "json":
        text = _json_report(records, suite, tol)
    elif fmt == "csv":
        text = _csv_report(records)
    elif fmt == "table":
        text = _table_report(records)
    else:
        raise DomainError(f"unknown report format {fmt!r}; use json, csv, or table")
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text
