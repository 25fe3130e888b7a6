"""Rendering of computation results as human-readable text or JSON.

Text output is line-oriented with tab-separated tables so it can be consumed
by cut/awk; JSON output is ``json.dumps(..., indent=2)`` of the documented
payload.  Both renderings are deterministic functions of the payload: any
timing information is attached by the caller and can be suppressed entirely,
which is what makes byte-for-byte output comparisons across thread counts
meaningful.
"""

from __future__ import annotations

import json
from typing import Optional

from .bounds import BoundReport


def _finish(payload: dict, elapsed: Optional[float], json_mode: bool, lines: list) -> str:
    if elapsed is not None:
        payload["elapsed_seconds"] = round(elapsed, 3)
    if json_mode:
        return json.dumps(payload, indent=2)
    if elapsed is not None:
        lines.append(f"elapsed: {payload['elapsed_seconds']}s")
    return "\n".join(lines)


def render_ring(payload: dict, json_mode: bool = False, elapsed: Optional[float] = None) -> str:
    """Render the ``ring`` subcommand payload."""
    if json_mode:
        return _finish(dict(payload), elapsed, True, [])
    ring = payload["ring"]
    lines = [
        f"ring: {ring['id']}",
        f"field: {ring['field']}",
        f"dimension: {ring['dimension']}",
        f"top degree: {ring['top_degree']}",
    ]
    results = payload.get("results", {})
    if "poincare" in results:
        lines.append("poincare: " + " ".join(str(c) for c in results["poincare"]))
    if "basis" in results:
        lines.append("basis:")
        lines.append("index\tdegree\tlabel")
        for row in results["basis"]:
            lines.append(f"{row['index']}\t{row['degree']}\t{row['label']}")
    for key in ("cl", "zcl-basic", "zcl-full"):
        if key not in results:
            continue
        res = results[key]
        exact = "exact" if res["exact"] else "lower bound (budget exhausted)"
        lines.append(f"{key}: {res['value']} ({exact}; method {res['method']})")
        if res.get("witness"):
            factors = [f"({w})" if " + " in w or " - " in w else w for w in res["witness"]]
            lines.append(f"{key} witness: " + " * ".join(factors))
        if res.get("witness_product"):
            lines.append(f"{key} witness product: {res['witness_product']}")
    for w in payload.get("warnings", []):
        lines.append(f"warning: {w}")
    return _finish(payload, elapsed, False, lines)


def render_bounds(
    report: BoundReport, json_mode: bool = False, elapsed: Optional[float] = None
) -> str:
    """Render a frame-bundle bound report."""
    payload = report.to_json()
    if json_mode:
        return _finish(payload, elapsed, True, [])
    lo, hi = report.interval
    name = report.manifold.get("name", "?")
    lines = [
        f"manifold: {name} (dim {report.manifold.get('dim')})",
        f"frame bundle: dimension {report.frame_bundle_dim}, fiber SO({report.fiber})",
        f"interval: TC(F(M)) in [{lo}, {hi if hi is not None else 'inf'}]",
        "",
        "rule\tkind\tvalue\tfield\tstatement",
    ]
    for e in report.entries:
        lines.append(
            f"{e.rule}\t{e.kind}\t{e.value}\t{e.field or '-'}\t{e.statement}"
        )
    notes = [(e.rule, n) for e in report.entries for n in (e.notes or [])]
    if notes:
        lines.append("")
        for rule, note in notes:
            lines.append(f"note ({rule}): {note}")
    if report.warnings:
        lines.append("")
        for w in report.warnings:
            lines.append(f"warning: {w}")
    return _finish(payload, elapsed, False, lines)


def render_examples(
    rows: list, json_mode: bool = False, elapsed: Optional[float] = None
) -> str:
    """Render the worked-example comparison table."""
    payload = {"examples": rows}
    if json_mode:
        return _finish(payload, elapsed, True, [])
    lines = ["key\tstated\tderived\tagrees\ttitle"]

    def fmt(iv) -> str:
        if iv is None:
            return "-"
        lo = "?" if iv[0] is None else str(iv[0])
        hi = "?" if iv[1] is None else str(iv[1])
        return f"[{lo}, {hi}]"

    for r in rows:
        agrees = {True: "yes", False: "NO", None: "-"}[r["agrees"]]
        lines.append(
            f"{r['key']}\t{fmt(r['stated'])}\t{fmt(r['derived'])}\t{agrees}\t{r['title']}"
        )
    for r in rows:
        if r.get("note"):
            lines.append(f"note ({r['key']}): {r['note']}")
        for w in r.get("warnings", []):
            lines.append(f"warning ({r['key']}): {w}")
    return _finish(payload, elapsed, False, lines)
