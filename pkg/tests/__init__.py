"""
Test suite for subgroup-graphs.

This test suite verifies:
1. Group construction for every supported family and the group axioms
2. Subgroup lattice enumeration and its counting invariants
3. Graph constructors, model expressions, isomorphism and subgraph search
4. Face tracing, planarity and exact genus / crosscap search
5. Certificates, classification reports and verification suites
6. Configuration loading, report writing and the command-line interface
"""

__version__ = "0.1.0"
