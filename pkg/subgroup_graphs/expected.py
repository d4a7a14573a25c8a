"""
Closed-form intersection graph models, classification claims and the registry
of claims that direct computation contradicts.

Everything here is keyed by the catalog family labels from ``catalog.describe``;
parameters (p, q, r, a, ...) come from the same place.
"""

# Standard library imports
from typing import Callable, Dict, FrozenSet, List, NamedTuple, Optional, Tuple

from subgroup_graphs.catalog import Params, describe
from subgroup_graphs.families import FamilySpec
from subgroup_graphs.graphs import (
    CopiesOf,
    DisjointUnion,
    GraphExpr,
    Join,
    K,
    Kbar,
    Kmn,
    PendantsAt,
)

Predicate = Callable[[str, Params], bool]


class ExpectedModel(NamedTuple):
    name: str
    label: str
    applies: Callable[[Params], bool]
    build: Callable[[Params], GraphExpr]
    source: str


class Discrepancy(NamedTuple):
    label: str
    properties: FrozenSet[str]
    applies: Callable[[Params], bool]
    note: str


def _always(_: Params) -> bool:
    return True


def _pendant_per_vertex(p: int) -> GraphExpr:
    """K_{p+2} with one pendant on each of its first p vertices."""
    expr: GraphExpr = K(p + 2)
    for vertex in range(p):
        expr = PendantsAt(expr, vertex, 1)
    return expr


EXPECTED: Tuple[ExpectedModel, ...] = (
    ExpectedModel("cyclic-prime-power", "Z_{p^a}", _always, lambda x: K(x["a"] - 1), "K_{a-1}"),
    ExpectedModel("cyclic-pq", "Z_{pq}", _always, lambda x: Kbar(2), "Kbar_2"),
    ExpectedModel("cyclic-p2q", "Z_{p^2q}", _always, lambda x: Join(K(1), DisjointUnion(K(2), K(1))), "K1 + (K2 u K1)"),
    ExpectedModel("cyclic-p3q", "Z_{p^3q}", _always, lambda x: Join(K(2), DisjointUnion(K(3), K(1))), "K2 + (K3 u K1)"),
    ExpectedModel("cyclic-p4q", "Z_{p^4q}", _always, lambda x: Join(K(3), DisjointUnion(K(4), K(1))), "K3 + (K4 u K1)"),
    ExpectedModel("elementary-p2", "Z_pxZ_p", _always, lambda x: Kbar(x["p"] + 1), "Kbar_{p+1}"),
    ExpectedModel(
        "abelian-p2-p",
        "Z_{p^2}xZ_p",
        _always,
        lambda x: Join(K(1), DisjointUnion(K(x["p"] + 1), Kbar(x["p"]))),
        "K1 + (K_{p+1} u Kbar_p)",
    ),
    ExpectedModel(
        "abelian-4-2-listed",
        "Z_{p^2}xZ_p",
        lambda x: x["p"] == 2,
        lambda x: Join(K(1), DisjointUnion(K(4), Kbar(2))),
        "K1 + (K4 u Kbar_2) as listed for Z4xZ2",
    ),
    ExpectedModel("quaternion-8", "Q8", _always, lambda x: K(4), "K4"),
    ExpectedModel("semidirect-qp", "Z_q:Z_p", _always, lambda x: Kbar(x["q"] + 1), "Kbar_{q+1}"),
    ExpectedModel(
        "semidirect-q-2p2",
        "Z_q:2Z_{p^2}",
        _always,
        lambda x: Join(K(1), DisjointUnion(K(1), CopiesOf(x["q"], K(2)))),
        "K1 + (K1 u qK2)",
    ),
    ExpectedModel("alternating-4", "A4", _always, lambda x: DisjointUnion(Kmn(1, 3), Kbar(4)), "K_{1,3} u Kbar_4"),
    ExpectedModel(
        "matrix-irreducible-prime",
        "G1",
        _always,
        lambda x: DisjointUnion(Kmn(1, x["p"] + 1), Kbar(x["p"] ** 2)),
        "K_{1,p+1} u Kbar_{p^2}",
    ),
    ExpectedModel(
        "matrix-irreducible-square",
        "G2",
        _always,
        lambda x: Join(K(1), DisjointUnion(Kmn(1, x["p"] + 1), CopiesOf(x["p"] ** 2, K(2)))),
        "K1 + (K_{1,p+1} u p^2 K2)",
    ),
    ExpectedModel(
        "modular-p3",
        "M_{p^3}",
        _always,
        lambda x: Join(K(1), DisjointUnion(K(x["p"] + 1), Kbar(x["p"]))),
        "K1 + (K_{p+1} u Kbar_p)",
    ),
    ExpectedModel("modular-16-listed", "M16", _always, lambda x: Join(K(1), DisjointUnion(K(6), Kbar(2))), "K1 + (K6 u Kbar_2)"),
    ExpectedModel(
        "semidirect-q-p2",
        "Z_q:Z_{p^2}",
        _always,
        lambda x: Join(K(1), DisjointUnion(K(1), K(x["q"] + 1))),
        "K1 + (K1 u K_{q+1})",
    ),
    ExpectedModel(
        "metacyclic-p2-q-prose",
        "Z_{p^2}:Z_q",
        _always,
        lambda x: _pendant_per_vertex(x["p"]),
        "K_{p+2} with a single pendant at p vertices",
    ),
)


def models_for_label(label: str, params: Params) -> List[ExpectedModel]:
    return [m for m in EXPECTED if m.label == label and m.applies(params)]


def expected_model_for(spec: FamilySpec) -> Optional[GraphExpr]:
    """The closed-form model for the family of ``spec``, or None when there is none."""
    label, params = describe(spec)
    models = models_for_label(label, params)
    if not models:
        return None
    return models[0].build(params)


# Claims: family membership per property


def _labels(*names: str) -> Predicate:
    chosen = frozenset(names)
    return lambda label, params: label in chosen


def _prime_power(*exponents: int) -> Predicate:
    return lambda label, params: label == "Z_{p^a}" and params.get("a") in exponents


def _any(*predicates: Predicate) -> Predicate:
    return lambda label, params: any(pred(label, params) for pred in predicates)


def _where(label_name: str, **values) -> Predicate:
    def check(label: str, params: Params) -> bool:
        if label != label_name:
            return False
        for key, allowed in values.items():
            options = allowed if isinstance(allowed, (tuple, list, set, frozenset)) else (allowed,)
            if params.get(key) not in options:
                return False
        return True

    return check


_PLANAR_CYCLIC = _any(_prime_power(2, 3, 4, 5), _labels("Z_{pq}", "Z_{p^2q}", "Z_{pqr}"))

_C3_FREE = _any(_prime_power(2, 3), _labels("Z_{pq}", "Z_pxZ_p", "Z_q:Z_p", "A4", "G1"))

CLAIMS: Dict[str, Predicate] = {
    "planar": _any(
        _PLANAR_CYCLIC,
        _labels("Z_pxZ_p", "Q8", "M8", "Z_q:Z_p", "Z_q:2Z_{p^2}", "A4", "G1", "G2"),
        _where("Z_{p^2}xZ_p", p=2),
        _where("Z_{pq}xZ_p", p=2, q=3),
    ),
    "toroidal": _any(
        _prime_power(6, 7, 8),
        _labels("Z_{p^3q}", "Z_{p^4q}", "Z_{p^2q^2}", "Z_{p^2qr}", "M16"),
        _where("Z_{p^2}xZ_p", p=(3, 5)),
        _where("Z_{pq}xZ_p", p=3),
        _where("M_{p^3}", p=(3, 5)),
        _where("Z_q:Z_{p^2}", p=2, q=(3, 5)),
        _where("Z_{p^2}:Z_q", p=(3, 5), q=2),
        _where("G_{p^2qr}", p=5, q=2, r=3),
    ),
    "projective-planar": _any(
        _prime_power(6, 7),
        _labels("Z_{p^3q}"),
        _where("Z_{p^2}xZ_p", p=3),
        _where("Z_{pq}xZ_p", p=3),
        _where("M_{p^3}", p=3),
        _where("Z_q:Z_{p^2}", p=2, q=3),
        _where("Z_{p^2}:Z_q", p=3, q=2),
    ),
    # non-cyclic groups only; cyclic groups are K5-free exactly when planar
    "k5-free": _any(
        _labels("Z_pxZ_p", "Q8", "M8", "Z_q:Z_p", "Z_q:2Z_{p^2}", "A4", "G1", "G2", "G3", "G_{p^2qr}"),
        _where("Z_{p^2}xZ_p", p=2),
        _where("Z_{pq}xZ_p", p=2, q=3),
    ),
    "k5-free-cyclic": _PLANAR_CYCLIC,
    "c3-free": _C3_FREE,
    "acyclic": _C3_FREE,
    "bipartite": _C3_FREE,
    "unicyclic": _any(_prime_power(4), _labels("Z_{p^2q}")),
    "cycle": _prime_power(4),
    "path": _prime_power(3),
    "c5-free": _any(
        _prime_power(2, 3, 4, 5),
        _labels("Z_{pq}", "Z_{p^2q}", "Z_pxZ_p", "Q8", "Z_q:Z_p", "Z_q:2Z_{p^2}", "A4", "G1", "G2"),
        _where("Z_{p^2}xZ_p", p=2),
    ),
    "c4-free": _any(
        _prime_power(2, 3, 4),
        _labels("Z_{pq}", "Z_{p^2q}", "Z_pxZ_p", "Z_q:Z_p", "Z_q:2Z_{p^2}", "A4", "G1"),
    ),
    "p4-free": _any(
        _prime_power(2, 3, 4, 5),
        _labels("Z_{pq}", "Z_{p^2q}", "Q8", "Z_pxZ_p", "Z_q:Z_p", "G1", "A4"),
    ),
    "p3-free": _any(_prime_power(2, 3, 4), _labels("Z_{pq}", "Z_pxZ_p", "Z_q:Z_p", "A4", "G1")),
    "p2-free": _any(_prime_power(2, 3), _labels("Z_{pq}", "Z_pxZ_p", "Z_q:Z_p")),
    "totally-disconnected": _any(_prime_power(2), _labels("Z_{pq}", "Z_pxZ_p", "Z_q:Z_p")),
    "k23-free": _any(
        _prime_power(2, 3, 4, 5),
        _labels("Z_{pq}", "Z_{p^2q}", "Z_{pqr}", "Z_pxZ_p", "Q8", "Z_q:Z_p", "Z_q:2Z_{p^2}", "A4", "G1"),
        _where("Z_{p^2}xZ_p", p=2),
    ),
    "k4-free": _any(
        _prime_power(2, 3, 4),
        _labels("Z_{pq}", "Z_{p^2q}", "Z_{pqr}", "Z_pxZ_p", "Z_q:Z_p", "Z_q:2Z_{p^2}", "A4", "G1"),
    ),
    "k14-free": _any(
        _prime_power(2, 3, 4, 5),
        _labels("Z_{pq}", "Z_{p^2q}", "Z_pxZ_p", "Q8", "Z_q:Z_p", "A4"),
    ),
    "claw-free": _any(_prime_power(2, 3, 4), _labels("Z_{pq}", "Z_pxZ_p", "Z_q:Z_p")),
    "tree": _prime_power(2, 3),
    "star": _prime_power(2, 3),
    "complete-bipartite": _prime_power(2, 3),
    "girth-infinite": _C3_FREE,
}

# Groups whose intersection graph should be realised by no other catalog group
UNIQUENESS_TARGETS: Tuple[Tuple[str, Params], ...] = (
    ("M8", {}),
    ("Z_q:2Z_{p^2}", {}),
    ("G1", {"p": 5, "q": 3}),
    ("A4", {}),
    ("G3", {}),
    ("G2", {"p": 3, "q": 2}),
    ("G_{p^2qr}", {"p": 5, "q": 2, "r": 3}),
)


def claim(prop: str, label: str, params: Params) -> bool:
    return CLAIMS[prop](label, params)


def _p(value: int) -> Callable[[Params], bool]:
    return lambda x: x.get("p") == value


DISCREPANCIES: Tuple[Discrepancy, ...] = (
    Discrepancy(
        "Z_{p^2qr}",
        frozenset({"toroidal"}),
        _always,
        "listed as toroidal, but the edge count already forces genus >= 2",
    ),
    Discrepancy("Z_pxZ_pxZ_p", frozenset({"toroidal"}), _p(2), "Z2^3 embeds on the torus but is not listed"),
    Discrepancy("abelian", frozenset({"toroidal"}), _always, "Z8xZ2 embeds on the torus but is not listed"),
    Discrepancy("D_{2n}", frozenset({"toroidal"}), lambda x: x.get("n") == 6, "D12 embeds on the torus but is not listed"),
    Discrepancy("M16", frozenset({"model:modular-16-listed"}), _always, "the two non-central involutions each lie in two subgroups, so the graph is K7 with two degree-2 vertices"),
    Discrepancy(
        "Z_{p^2}xZ_p",
        frozenset({"model:abelian-4-2-listed"}),
        _p(2),
        "Z4xZ2 has six proper subgroups; K1 + (K3 u Kbar_2) is the correct graph",
    ),
    Discrepancy(
        "Heis",
        frozenset({"toroidal", "projective-planar"}),
        _p(3),
        "exponent-3 group of order 27: K5 plus pendants, toroidal and projective-planar",
    ),
    Discrepancy("Heis", frozenset({"toroidal"}), _p(5), "exponent-5 group of order 125: K7 plus pendants, toroidal"),
    Discrepancy(
        "G_{p^2qr}",
        frozenset({"toroidal", "k5-free", "uniqueness"}),
        _always,
        "the matrix of even order squares to -I, which adds subgroups the closed form omits",
    ),
    Discrepancy(
        "G2",
        frozenset({"planar", "k5-free", "c5-free", "uniqueness", "model:matrix-irreducible-square"}),
        lambda x: x.get("q") == 2,
        "the matrix of order 4 squares to -I, which adds subgroups the closed form omits",
    ),
    Discrepancy("M8", frozenset({"c5-free", "k23-free"}), _always, "M8 is C5-free and K_{2,3}-free but is not listed"),
    Discrepancy("G3", frozenset({"k4-free", "uniqueness"}), _always, "G3 is K4-free but not listed; its uniqueness claim names another group"),
    Discrepancy("Z_q:2Z_{p^2}", frozenset({"uniqueness"}), _always, "another catalog group shares this intersection graph"),
    Discrepancy(
        "Z_{p^2}:Z_q",
        frozenset({"model:metacyclic-p2-q-prose"}),
        _always,
        "each non-normal subgroup of order pq carries p pendants, not one",
    ),
)


def discrepancy_for(label: str, params: Params, prop: str) -> Optional[Discrepancy]:
    for entry in DISCREPANCIES:
        if entry.label == label and prop in entry.properties and entry.applies(params):
            return entry
    return None
