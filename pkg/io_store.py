from __future__ import annotations

import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional

from config import settings
from fiedler.graphs import Graph, GraphError
from fiedler.models import CellTag, Finding, VerificationResult
from fiedler.numspec import Spectrum
from fiedler.vertextypes import VertexTypeReport

logger = logging.getLogger(__name__)


def fmt_float(value: float) -> float:
    """Round to FLOAT_DIGITS significant digits; values that round to zero print as 0."""
    value = float(value)
    if abs(value) < 10.0 ** (2 - settings.FLOAT_DIGITS):
        return 0.0
    return float(f"{value:.{settings.FLOAT_DIGITS}g}")


def _cell(tag: Optional[CellTag]) -> Optional[str]:
    return str(tag) if tag is not None else None


def _clean(obj: Any) -> Any:
    """Recursively round floats and stringify tags so json.dumps is deterministic."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, CellTag):
        return str(obj)
    if isinstance(obj, Mapping):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if hasattr(obj, "value") and hasattr(obj, "name"):  # enums
        return obj.value
    if hasattr(obj, "item"):  # numpy scalars
        return _clean(obj.item())
    return obj


def dumps(payload: Any) -> str:
    return json.dumps(_clean(payload), indent=2, ensure_ascii=False)


def dumps_line(payload: Any) -> str:
    return json.dumps(_clean(payload), ensure_ascii=False)


def tolerance_header(spectrum: Optional[Spectrum] = None, **extra: Any) -> Dict[str, Any]:
    header = {
        "cluster_tol": settings.CLUSTER_TOL,
        "main_tol": settings.MAIN_TOL,
        "residual_tol": settings.RESIDUAL_TOL,
    }
    if spectrum is not None:
        header["cluster_tol"] = spectrum.cluster_tol
        header["main_tol"] = spectrum.main_tol
        header["eigen_method"] = spectrum.method
    header.update({k: v for k, v in extra.items() if v is not None})
    return header


# -------------------------------
# Graphs
# -------------------------------


def graph_to_edge_list(graph: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in graph.edges())


def graph_to_dict(graph: Graph) -> Dict[str, Any]:
    return {
        "order": graph.order,
        "edges": [list(e) for e in graph.edges()],
        "labels": [_cell(tag) for tag in graph.labels],
    }


def graph_from_dict(data: Mapping[str, Any]) -> Graph:
    try:
        order = int(data["order"])
        edges = [(int(u), int(v)) for u, v in data["edges"]]
        raw_labels = data.get("labels") or [None] * order
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from exc
    adj = [[0] * order for _ in range(order)]
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order) or u == v:
            raise GraphError(f"bad edge ({u}, {v}) for order {order}")
        adj[u][v] = adj[v][u] = 1
    labels = [CellTag.parse(t) if t else None for t in raw_labels]
    return Graph(adj, labels)


def save_graph(graph: Graph, path: Path) -> None:
    path.write_text(dumps(graph_to_dict(graph)), encoding="utf-8")


def load_graph(path: Path) -> Graph:
    if not path.exists():
        raise FileNotFoundError(f"{path} not found")
    return graph_from_dict(json.loads(path.read_text(encoding="utf-8")))


# -------------------------------
# Spectra and reports
# -------------------------------


def spectrum_to_dict(spectrum: Spectrum, exact: Optional[Mapping[str, int]] = None) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "tolerances": tolerance_header(spectrum),
        "values": [float(v) for v in spectrum.values],
        "clusters": [
            {
                "value": c.value,
                "index": c.first_index,
                "multiplicity": c.multiplicity,
                "main": c.main,
            }
            for c in spectrum.clusters
        ],
        "max_residual": spectrum.max_residual,
    }
    if exact is not None:
        data["exact_multiplicities"] = dict(exact)
    return data


def report_to_dict(report: VertexTypeReport, index: Optional[int] = None) -> Dict[str, Any]:
    lam: Dict[str, Any] = {"approx": report.eigenvalue}
    if report.minpoly is not None:
        lam["minpoly"] = report.minpoly.to_json()
        lam["minpoly_text"] = str(report.minpoly)
    if index is not None:
        lam["index"] = index
    return {
        "tolerances": tolerance_header(cluster_tol=report.cluster_tol),
        "lambda": lam,
        "k": report.k,
        "route": report.route.value,
        "vertices": [
            {"id": v, "cell": _cell(report.labels[v]), "type": kind.value}
            for v, kind in sorted(report.per_vertex.items())
        ],
        "cells": [
            {"tag": str(tag), "type": kind.value if kind is not None else "mixed"}
            for tag, kind in report.per_cell.items()
        ],
        "anomalies": list(report.anomalies),
    }


# -------------------------------
# Result streams
# -------------------------------


def results_to_lines(items: Iterable[Any]) -> str:
    """One JSON object per line for VerificationResults and Findings."""
    lines = []
    for item in items:
        payload = item.to_dict() if hasattr(item, "to_dict") else item
        lines.append(dumps_line(payload))
    return "".join(line + "\n" for line in lines)


def results_to_csv(results: Iterable[VerificationResult]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["claim", "spec", "status", "notes"])
    for r in results:
        writer.writerow([r.claim, r.spec, r.status.value, " | ".join(r.notes)])
    return buf.getvalue()


def findings_to_csv(findings: Iterable[Finding]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["kind", "spec", "index", "eigenvalue", "verdict", "vertices", "cross_validated"])
    for f in findings:
        cells = sorted({row["cell"] or str(row["id"]) for row in f.vertices})
        writer.writerow(
            [f.kind, f.spec, f.index, repr(fmt_float(f.eigenvalue)), f.verdict, " ".join(cells), f.cross_validated]
        )
    return buf.getvalue()


def summary_line(results: List[VerificationResult]) -> Dict[str, int]:
    counts = {"pass": 0, "fail": 0, "skip": 0}
    for r in results:
        counts[r.status.value] += 1
    return counts


def write_output(text: str, out: Optional[str] = None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    path.write_text(text, encoding="utf-8")
    logger.info("wrote %d bytes to %s", len(text.encode("utf-8")), path)
