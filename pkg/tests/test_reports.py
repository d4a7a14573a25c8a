"""
Tests for report keys, CSV rows and the output tree.
"""
import os

import yaml

from subgroup_graphs.classify import analyse_group
from subgroup_graphs.models import SuiteReport, SuiteRow
from subgroup_graphs.reports import (
    ROW_FIELDS,
    output_key,
    rows_csv,
    suite_key,
    write_classification,
    write_suite_report,
)


def sample_report():
    row = SuiteRow(
        suite="toroidal",
        family="cyclic:64",
        label="Z_{p^a}",
        params={"p": 2, "a": 6},
        order=64,
        property="toroidal",
        computed="true",
        expected="true",
        status="pass",
        witness_ref="cyclic:64.orientable.scheme",
    )
    return SuiteReport(
        suite="toroidal",
        max_order=64,
        rows=[row],
        fixtures={"cyclic:64.orientable.scheme": "0: 0 1\n"},
    )


class TestKeys:
    """Test content-addressed keys."""

    def test_output_key(self):
        """Test length, hex digits and determinism."""
        key = output_key("family:cyclic:12")
        assert len(key) == 12
        assert int(key, 16) >= 0
        assert key == output_key("family:cyclic:12")
        assert key != output_key("family:cyclic:13")

    def test_suite_key_depends_on_order(self):
        """Test that the order bound is part of the suite key."""
        report = sample_report()
        assert suite_key(report) != suite_key(report.model_copy(update={"max_order": 32}))


class TestRowsCsv:
    """Test the CSV rendering of suite rows."""

    def test_header_and_params(self):
        """Test the header and the flattened parameters."""
        lines = rows_csv(sample_report()).splitlines()
        assert lines[0] == ",".join(ROW_FIELDS)
        assert "a=6;p=2" in lines[1]
        assert lines[1].startswith("toroidal,cyclic:64,Z_{p^a},")


class TestWriteSuiteReport:
    """Test the files written for a suite run."""

    def test_all_files(self, temp_dir):
        """Test rows, report and fixture files."""
        written = write_suite_report(sample_report(), temp_dir, {"csv", "report"})
        names = sorted(os.path.basename(path) for path in written)
        assert names == ["cyclic_64.orientable.scheme", "report.yaml", "rows.csv"]
        directory = os.path.join(temp_dir, suite_key(sample_report()))
        with open(os.path.join(directory, "report.yaml")) as f:
            data = yaml.safe_load(f)
        assert data["counts"] == {"pass": 1, "fail": 0, "flagged": 0, "budget": 0}
        assert data["rows"][0]["family"] == "cyclic:64"

    def test_csv_only(self, temp_dir):
        """Test that formats select the outputs; fixtures are always written."""
        written = write_suite_report(sample_report(), temp_dir, {"csv"})
        assert sorted(os.path.basename(path) for path in written) == ["cyclic_64.orientable.scheme", "rows.csv"]


class TestWriteClassification:
    """Test the files written for one group."""

    def test_files_and_scheme_refs(self, build, small_config, temp_dir):
        """Test schemes, report and graph exports for Z12."""
        analysis = analyse_group(build("cyclic:12"), small_config)
        written = write_classification(
            analysis.report, analysis.graph, analysis.schemes, temp_dir, {"report", "dot", "adjacency"}
        )
        names = sorted(os.path.basename(path) for path in written)
        assert names == ["graph.adj", "graph.dot", "nonorientable.scheme", "orientable.scheme", "report.yaml"]
        directory = os.path.join(temp_dir, output_key("family:cyclic:12"))
        with open(os.path.join(directory, "report.yaml")) as f:
            data = yaml.safe_load(f)
        assert data["orientable_genus"]["scheme_ref"] == "orientable.scheme"
        assert data["label"] == "Z_{p^2q}"
        with open(os.path.join(directory, "graph.adj")) as f:
            assert f.readline() == "4 4\n"
