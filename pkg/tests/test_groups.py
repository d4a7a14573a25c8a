"""
Tests for group construction and the group axioms.
"""
import numpy as np
import pytest

from subgroup_graphs.errors import InvalidParameters, OrderBudgetExceeded
from subgroup_graphs.families import Cyclic, Dihedral, SemidirectCyclic, parse_family
from subgroup_graphs.groups import (
    FiniteGroup,
    build_family,
    center,
    direct_product,
    element_order,
    element_orders,
    is_abelian,
    verify_group_axioms,
)


class TestBuildFamily:
    """Test construction of each family."""

    @pytest.mark.parametrize("text", [
        "cyclic:6",
        "abelian:4x2",
        "dihedral:12",
        "genq:16",
        "modular:2,4",
        "modular:3,3",
        "sd:q=5,p=2,a=2,t=2",
        "mat:p=2,m=3",
        "mat:p=3,m=3",
        "g3:p=7,q=2,r=3",
        "meta:n=9,m=2,r=8",
        "sym:4",
        "prod:cyclic:3|alt:4",
    ])
    def test_axioms_hold(self, text):
        """Test that every built group passes the exhaustive axiom check."""
        g = build_family(parse_family(text))
        report = verify_group_axioms(g)
        assert report.ok
        assert report.witness is None
        assert g.identity == 0

    def test_deterministic(self):
        """Test that the same spec gives the identical table."""
        spec = parse_family("g3:p=7,q=2,r=3")
        assert np.array_equal(build_family(spec).table, build_family(spec).table)

    def test_cyclic_generator(self):
        """Test that element 1 generates Z6."""
        g = build_family(Cyclic(n=6))
        assert element_order(g, 1) == 6
        assert is_abelian(g)

    def test_quaternion_unique_involution(self):
        """Test that Q8 has exactly one element of order 2."""
        g = build_family(parse_family("genq:8"))
        assert int((element_orders(g) == 2).sum()) == 1

    def test_matrix_action_order_150(self):
        """Test the order-150 matrix action group."""
        g = build_family(parse_family("mat:p=5,m=6"))
        assert g.order == 150
        assert not is_abelian(g)

    def test_semidirect_nonabelian(self):
        """Test that Z3 acted on by Z4 is nonabelian of order 12."""
        g = build_family(SemidirectCyclic(q=3, p=2, alpha=2, t=1))
        assert g.order == 12
        assert not is_abelian(g)

    def test_trivial_action_is_cyclic(self):
        """Test that t=0 gives a cyclic group."""
        g = build_family(SemidirectCyclic(q=3, p=2, alpha=2, t=0))
        assert is_abelian(g)
        assert int(element_orders(g).max()) == 12

    def test_dihedral_nonabelian(self):
        """Test that dihedral groups are nonabelian from D6 on."""
        for size in (6, 8, 10, 12):
            assert not is_abelian(build_family(Dihedral(size=size)))

    def test_order_budget(self):
        """Test the configured maximum order."""
        with pytest.raises(OrderBudgetExceeded):
            build_family(Cyclic(n=600))
        with pytest.raises(OrderBudgetExceeded):
            build_family(Cyclic(n=20), max_order=16)

    def test_invalid_parameters(self):
        """Test that side conditions are enforced before building."""
        with pytest.raises(InvalidParameters):
            build_family(SemidirectCyclic(q=7, p=2, alpha=2, t=2))


class TestElementOrders:
    """Test element orders."""

    def test_identity_order(self):
        """Test that the identity has order 1."""
        g = build_family(parse_family("sym:4"))
        assert element_order(g, 0) == 1

    def test_z12(self):
        """Test that 8 has order 3 in Z12."""
        assert element_order(build_family(Cyclic(n=12)), 8) == 3

    def test_orders_divide_group_order(self):
        """Test Lagrange on every element of M16."""
        g = build_family(parse_family("modular:2,4"))
        orders = element_orders(g)
        assert all(16 % int(k) == 0 for k in orders)
        assert int(orders.max()) == 8

    def test_modular_reflection(self):
        """Test that b (id 8 in the a^r b^s numbering) has order 2 in M16."""
        g = build_family(parse_family("modular:2,4"))
        assert element_order(g, 8) == 2


class TestProducts:
    """Test direct products."""

    def test_klein_four(self):
        """Test Z2 x Z2."""
        z2 = build_family(Cyclic(n=2))
        g = direct_product(z2, z2)
        assert g.order == 4
        assert sorted(element_orders(g).tolist()) == [1, 2, 2, 2]

    def test_exponent_nine(self):
        """Test that Z9 x Z3 is abelian of order 27 and exponent 9."""
        g = direct_product(build_family(Cyclic(n=9)), build_family(Cyclic(n=3)))
        assert g.order == 27
        assert is_abelian(g)
        assert int(element_orders(g).max()) == 9

    def test_z3_times_a4(self):
        """Test the order of Z3 x A4 and its family tag."""
        g = direct_product(build_family(Cyclic(n=3)), build_family(parse_family("alt:4")))
        assert g.order == 36
        assert g.family is not None
        assert verify_group_axioms(g).ok

    def test_product_budget(self):
        """Test that products respect the order budget."""
        z10 = build_family(Cyclic(n=10))
        with pytest.raises(OrderBudgetExceeded):
            direct_product(z10, z10, max_order=50)


class TestAxiomsAndCenter:
    """Test the axiom report and the center."""

    def test_corrupted_table(self):
        """Test that one corrupted entry breaks associativity with a witness."""
        g = build_family(Cyclic(n=5))
        table = g.table.copy()
        table[2, 3] = 1
        broken = FiniteGroup(order=5, table=table, family=None, name="broken")
        report = verify_group_axioms(broken)
        assert not report.associativity
        assert report.witness is not None
        assert not report.ok

    def test_dihedral_center(self):
        """Test that D12 has a center of order 2."""
        assert len(center(build_family(Dihedral(size=12)))) == 2

    def test_abelian_center(self):
        """Test that an abelian group is its own center."""
        assert len(center(build_family(parse_family("abelian:4x2")))) == 8
