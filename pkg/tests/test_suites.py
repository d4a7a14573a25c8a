"""
Tests for the verification suites over the bounded catalog.
"""
import pytest

from subgroup_graphs.catalog import build_catalog
from subgroup_graphs.errors import InvalidParameters
from subgroup_graphs.families import Cyclic, MatrixAction
from subgroup_graphs.suites import SUITE_ALIASES, SUITES, resolve_suite, run_entry, uniqueness_check, verify_claims


class TestSuiteRegistry:
    """Test suite names and dispatch."""

    def test_unknown_suite(self):
        """Test that an unknown suite name is rejected."""
        with pytest.raises(InvalidParameters):
            verify_claims("corollary", 8)

    @pytest.mark.parametrize("alias,suite", sorted(SUITE_ALIASES.items()))
    def test_aliases_resolve(self, alias, suite, small_config):
        """Test that item-numbered ids run under their descriptive names."""
        assert resolve_suite(alias) == suite
        report = verify_claims(alias, 4, small_config)
        assert report.suite == suite
        assert report.ok

    def test_aliases_name_known_suites(self):
        """Test that every alias points at a registered suite."""
        assert set(SUITE_ALIASES.values()) <= set(SUITES)
        assert not set(SUITE_ALIASES) & set(SUITES)

    def test_every_suite_runs_on_tiny_catalog(self, small_config):
        """Test that every suite produces a report up to order 4."""
        for suite in SUITES:
            report = verify_claims(suite, 4, small_config)
            assert report.suite == suite
            assert report.max_order == 4
            assert all(row.suite == suite for row in report.rows)


class TestStatuses:
    """Test pass, fail and flagged rows."""

    def test_lattice_counts_always_hold(self, small_config):
        """Test that Sylow and p-group counts pass for every catalog group."""
        report = verify_claims("lattice", 16, small_config)
        assert report.rows
        assert report.ok
        assert report.count("pass") == len(report.rows)

    def test_unique_order_p_subgroup(self, small_config):
        """Test that cyclic and generalized quaternion groups alone have one order-p subgroup."""
        report = verify_claims("lattice", 32, small_config)
        assert report.ok
        rows = {(row.family, row.property): row for row in report.rows}
        for family, count in (("genq:8", "1"), ("genq:16", "1"), ("cyclic:8", "1"), ("cyclic:27", "1"), ("abelian:4x2", "3"), ("dihedral:8", "5")):
            unique = rows[(family, "unique-order-p")]
            assert unique.computed == count
            assert unique.status == "pass"
            assert rows[(family, "order-p-dominating")].status == "pass"
        assert rows[("abelian:4x2", "order-p-dominating")].computed == "false"
        assert rows[("genq:8", "order-p-dominating")].computed == "true"
        assert not any(prop == "unique-order-p" for family, prop in rows if family == "cyclic:6")

    def test_bipartite_acyclic(self, small_config):
        """Test the triangle-free, acyclic and bipartite claims up to order 12."""
        report = verify_claims("bipartite-acyclic", 12, small_config)
        assert report.ok
        assert {row.property for row in report.rows} == {"c3-free", "acyclic", "bipartite"}

    def test_formulas_flag_listed_model(self, small_config):
        """Test that the listed Z4xZ2 model is flagged and the rest pass."""
        report = verify_claims("formulas", 12, small_config)
        flagged = [row for row in report.rows if row.status == "flagged"]
        assert [(row.family, row.property) for row in flagged] == [("abelian:4x2", "model:abelian-4-2-listed")]
        assert report.count("fail") == 0

    def test_wrong_claim_fails(self, mocker, small_config):
        """Test that a contradicted claim without a discrepancy is a failure."""
        mocker.patch("subgroup_graphs.suites.claim", return_value=False)
        report = verify_claims("planar-catalog", 8, small_config)
        planar_rows = [row for row in report.rows if row.computed == "true"]
        assert planar_rows
        assert all(row.status == "fail" for row in planar_rows)
        assert report.count("fail") == len(planar_rows)
        assert not report.ok

    def test_clique_cover_computed_text(self, small_config):
        """Test the alpha/theta column."""
        report = verify_claims("clique-cover", 8, small_config)
        row = next(r for r in report.rows if r.family == "genq:8")
        assert (row.computed, row.expected, row.status) == ("1/1", "1/1", "pass")

    def test_toroidal_fixture(self, small_config):
        """Test that a toroidal embedding is stored as a scheme fixture."""
        entry = next(e for e in build_catalog(64) if e.key == "cyclic:64")
        rows, fixtures = run_entry("toroidal", entry, small_config)
        assert rows[0].computed == "true"
        assert rows[0].status == "pass"
        assert rows[0].witness_ref == "cyclic:64.orientable.scheme"
        assert "cyclic:64.orientable.scheme" in fixtures


class TestExecution:
    """Test progress reporting and the worker pool."""

    def test_progress_in_key_order(self, small_config):
        """Test that progress sees every catalog key in sorted order."""
        seen = []
        verify_claims("lattice", 8, small_config, progress=seen.append)
        assert seen == sorted(entry.key for entry in build_catalog(8))

    def test_worker_pool(self, mocker, small_config):
        """Test that more than one worker dispatches through a process pool."""
        pool_class = mocker.patch("subgroup_graphs.suites.ProcessPoolExecutor")
        pool = pool_class.return_value.__enter__.return_value
        pool.map.return_value = [([], {"x.scheme": "0:\n"})]
        seen = []
        report = verify_claims("lattice", 4, small_config.with_overrides(workers=2), progress=seen.append)
        pool_class.assert_called_once_with(max_workers=2)
        assert report.fixtures == {"x.scheme": "0:\n"}
        assert seen == [min(entry.key for entry in build_catalog(4))]


class TestUniqueness:
    """Test intersection graph uniqueness within the catalog."""

    def test_a4_is_unique(self):
        """Test that no other group up to order 12 shares A4's graph."""
        catalog = [entry.spec for entry in build_catalog(12)]
        result = uniqueness_check(MatrixAction(p=2, m=3), catalog, 12)
        assert result.unique
        assert result.matches == ("mat:p=2,m=3",)

    def test_shared_graph(self):
        """Test that Z6 and Z10 share the graph of two isolated vertices."""
        catalog = [entry.spec for entry in build_catalog(12)]
        result = uniqueness_check(Cyclic(n=6), catalog, 12)
        assert "cyclic:10" in result.matches
        assert result.unique is False

    def test_target_outside_catalog(self):
        """Test that the target must belong to the catalog."""
        catalog = [entry.spec for entry in build_catalog(8)]
        with pytest.raises(InvalidParameters):
            uniqueness_check(Cyclic(n=30), catalog, 30)

    def test_uniqueness_suite_targets(self, small_config):
        """Test which targets exist up to order 12."""
        report = verify_claims("uniqueness", 12, small_config)
        assert {row.label for row in report.rows} == {"M8", "A4"}
