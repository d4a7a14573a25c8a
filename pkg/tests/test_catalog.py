"""
Tests for family labels and the bounded group catalog.
"""
import pytest

from subgroup_graphs.catalog import build_catalog, describe, find_entry
from subgroup_graphs.families import (
    AbelianProduct,
    Cyclic,
    Dihedral,
    GeneralizedQuaternion,
    MatrixAction,
    Modular,
    SemidirectCyclic,
    parse_family,
)


class TestDescribe:
    """Test labels and parameters of family specs."""

    @pytest.mark.parametrize("spec,label,params", [
        (Cyclic(n=8), "Z_{p^a}", {"p": 2, "a": 3}),
        (Cyclic(n=6), "Z_{pq}", {"p": 2, "q": 3}),
        (Cyclic(n=12), "Z_{p^2q}", {"p": 2, "q": 3, "a": 2}),
        (Cyclic(n=30), "Z_{pqr}", {"p": 2, "q": 3, "r": 5}),
        (Cyclic(n=36), "Z_{p^2q^2}", {"p": 2, "q": 3}),
        (Cyclic(n=60), "Z_{p^2qr}", {"p": 2, "q": 3, "r": 5}),
    ])
    def test_cyclic(self, spec, label, params):
        """Test cyclic labels by factorisation shape."""
        assert describe(spec) == (label, params)

    @pytest.mark.parametrize("factors,label,params", [
        ((2, 2), "Z_pxZ_p", {"p": 2}),
        ((4, 2), "Z_{p^2}xZ_p", {"p": 2}),
        ((6, 2), "Z_{pq}xZ_p", {"p": 2, "q": 3}),
        ((2, 2, 2), "Z_pxZ_pxZ_p", {"p": 2}),
        ((8, 2), "abelian", {}),
    ])
    def test_abelian(self, factors, label, params):
        """Test abelian product labels."""
        assert describe(AbelianProduct(factors=factors)) == (label, params)

    def test_dihedral(self):
        """Test dihedral labels."""
        assert describe(Dihedral(size=8)) == ("M8", {})
        assert describe(Dihedral(size=6)) == ("Z_q:Z_p", {"q": 3, "p": 2})
        assert describe(Dihedral(size=18)) == ("Z_{p^2}:Z_q", {"p": 3, "q": 2})
        assert describe(Dihedral(size=12)) == ("D_{2n}", {"n": 6})

    def test_p_groups(self):
        """Test quaternion and modular labels."""
        assert describe(GeneralizedQuaternion(size=8)) == ("Q8", {})
        assert describe(Modular(p=2, alpha=4)) == ("M16", {})
        assert describe(Modular(p=3, alpha=3)) == ("M_{p^3}", {"p": 3})

    @pytest.mark.parametrize("p,m,label,params", [
        (2, 3, "A4", {}),
        (3, 3, "Heis", {"p": 3}),
        (5, 3, "G1", {"p": 5, "q": 3}),
        (3, 4, "G2", {"p": 3, "q": 2}),
        (5, 6, "G_{p^2qr}", {"p": 5, "q": 2, "r": 3}),
    ])
    def test_matrix(self, p, m, label, params):
        """Test matrix action labels."""
        assert describe(MatrixAction(p=p, m=m)) == (label, params)

    def test_semidirect(self):
        """Test semidirect labels by exponent and kernel."""
        assert describe(SemidirectCyclic(q=5, p=2, alpha=2, t=2))[0] == "Z_q:2Z_{p^2}"
        assert describe(SemidirectCyclic(q=3, p=2, alpha=2, t=1))[0] == "Z_q:Z_{p^2}"

    def test_product(self):
        """Test the Z3 x A4 label."""
        assert describe(parse_family("prod:cyclic:3|alt:4")) == ("Z3xA4", {})


class TestBuildCatalog:
    """Test catalog generation."""

    def test_bounded_and_sorted(self):
        """Test the order bound and the (order, key) ordering."""
        catalog = build_catalog(24)
        assert all(entry.order <= 24 for entry in catalog)
        assert catalog == sorted(catalog, key=lambda e: (e.order, e.key))

    def test_keys_unique(self):
        """Test that no group appears twice."""
        keys = [entry.key for entry in build_catalog(64)]
        assert len(keys) == len(set(keys))

    def test_no_prime_cyclic(self):
        """Test that cyclic groups of prime order are left out."""
        keys = {entry.key for entry in build_catalog(20)}
        assert "cyclic:7" not in keys
        assert "cyclic:8" in keys

    def test_small_catalog(self):
        """Test the groups of order at most 8."""
        keys = {entry.key for entry in build_catalog(8)}
        assert keys == {
            "cyclic:4",
            "cyclic:6",
            "cyclic:8",
            "abelian:2x2",
            "abelian:4x2",
            "abelian:2x2x2",
            "dihedral:6",
            "dihedral:8",
            "genq:8",
        }

    def test_entry_properties(self):
        """Test the order and cyclic shortcuts."""
        entry = find_entry(build_catalog(12), "Z_{p^2q}")
        assert entry.key == "cyclic:12"
        assert entry.order == 12
        assert entry.cyclic

    def test_find_entry_with_params(self):
        """Test parameter filtering."""
        entry = find_entry(build_catalog(16), "Z_pxZ_p", p=3)
        assert entry.key == "abelian:3x3"

    def test_find_entry_missing(self):
        """Test an unknown label."""
        with pytest.raises(KeyError):
            find_entry(build_catalog(8), "G3")
