"""
Writing suite and classification reports to a content-addressed output tree.

Every run lands in ``<output_dir>/<key>/`` where ``key`` is a short SHA-256 of
the canonical suite or family text, so repeated runs overwrite the same files.
"""

# Standard library imports
import csv
import hashlib
import io
import os
from typing import Dict, Iterable, List

# Third-party imports
import yaml

from subgroup_graphs.embedding import EmbeddingScheme, format_scheme
from subgroup_graphs.graphs import SimpleGraph, export_graph
from subgroup_graphs.models import ClassificationReport, SuiteReport

# Constants
KEY_LENGTH = 12
ROW_FIELDS = ("suite", "family", "label", "params", "order", "property", "computed", "expected", "status", "witness_ref", "note")


def output_key(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:KEY_LENGTH]


def suite_key(report: SuiteReport) -> str:
    return output_key(f"suite:{report.suite}:max_order={report.max_order}")


def rows_csv(report: SuiteReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(ROW_FIELDS)
    for row in report.rows:
        data = row.model_dump()
        data["params"] = ";".join(f"{k}={v}" for k, v in sorted(row.params.items()))
        writer.writerow([data[field] for field in ROW_FIELDS])
    return buffer.getvalue()


def _dump_yaml(data: dict) -> str:
    return yaml.safe_dump(data, sort_keys=False, allow_unicode=True)


def _write(path: str, content: str) -> str:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(content)
    return path


def _fixture_name(ref: str) -> str:
    return ref.replace(":", "_").replace("|", "_").replace("/", "_")


def write_suite_report(report: SuiteReport, output_dir: str, formats: Iterable[str]) -> List[str]:
    """Write rows (CSV), the structured report (YAML) and scheme fixtures; return the paths written."""
    formats = set(formats)
    directory = os.path.join(output_dir, suite_key(report))
    os.makedirs(directory, exist_ok=True)
    written = []
    if "csv" in formats:
        written.append(_write(os.path.join(directory, "rows.csv"), rows_csv(report)))
    if "report" in formats:
        summary = {
            "suite": report.suite,
            "max_order": report.max_order,
            "counts": {status: report.count(status) for status in ("pass", "fail", "flagged", "budget")},
            "rows": [row.model_dump() for row in report.rows],
        }
        written.append(_write(os.path.join(directory, "report.yaml"), _dump_yaml(summary)))
    for ref, text in sorted(report.fixtures.items()):
        written.append(_write(os.path.join(directory, _fixture_name(ref)), text))
    return written


def write_classification(
    report: ClassificationReport,
    graph: SimpleGraph,
    schemes: Dict[str, EmbeddingScheme],
    output_dir: str,
    formats: Iterable[str],
) -> List[str]:
    """Write one group's report, its scheme fixtures and any requested graph exports."""
    formats = set(formats)
    directory = os.path.join(output_dir, output_key(f"family:{report.family}"))
    os.makedirs(directory, exist_ok=True)
    written = []
    refs = {}
    for kind, scheme in sorted(schemes.items()):
        name = f"{kind}.scheme"
        written.append(_write(os.path.join(directory, name), format_scheme(scheme)))
        refs[kind] = name
    if "report" in formats:
        data = report.model_copy(
            update={
                "orientable_genus": report.orientable_genus.model_copy(update={"scheme_ref": refs.get("orientable")}),
                "nonorientable_genus": report.nonorientable_genus.model_copy(update={"scheme_ref": refs.get("nonorientable")}),
            }
        ).model_dump()
        written.append(_write(os.path.join(directory, "report.yaml"), _dump_yaml(data)))
    for fmt, suffix in (("adjacency", "adj"), ("dot", "dot")):
        if fmt in formats:
            written.append(_write(os.path.join(directory, f"graph.{suffix}"), export_graph(graph, fmt).decode("utf-8")))
    return written
