"""
Intersection graphs of subgroups and the full property report for one group.

``classify`` runs the cheap certificates first (cliques, bicliques, disjoint
nonplanar pieces, Euler bounds) and only falls back to the exact genus search
when none of them settles toroidality or projective-planarity.
"""

# Standard library imports
import math
from typing import Dict, List, NamedTuple, Optional, Tuple

from subgroup_graphs.catalog import Params, describe
from subgroup_graphs.certificates import Witness, k5_witness, nonprojectivity_certificate, nontoroidality_certificate
from subgroup_graphs.cliques import clique_cover_number, independence_number
from subgroup_graphs.config import RunConfig
from subgroup_graphs.embedding import EmbeddingScheme, is_planar, sorted_scheme, trace_faces
from subgroup_graphs.errors import SearchBudgetExceeded
from subgroup_graphs.expected import DISCREPANCIES
from subgroup_graphs.families import format_family
from subgroup_graphs.genus import BOUNDS, GenusResult, nonorientable_genus, orientable_genus, twisted_scheme
from subgroup_graphs.graphs import SimpleGraph, girth, make_graph, structural_predicates, x_free_record
from subgroup_graphs.groups import FiniteGroup
from subgroup_graphs.lattice import SubgroupLattice, enumerate_subgroups, prime_order_count
from subgroup_graphs.models import ClassificationReport, GenusSummary, WitnessRecord

# Constants
GENUS_CEILING = 1


class Analysis(NamedTuple):
    """Everything computed for one group; ``schemes`` holds the embedding witnesses."""

    lattice: SubgroupLattice
    graph: SimpleGraph
    report: ClassificationReport
    schemes: Dict[str, EmbeddingScheme]


def intersection_graph(lat: SubgroupLattice) -> SimpleGraph:
    """
    One vertex per proper nontrivial subgroup, in lattice order; two vertices
    are adjacent when the subgroups share a non-identity element.
    """
    proper = lat.proper_subgroups()
    edges: List[Tuple[int, int]] = []
    for i, a in enumerate(proper):
        for j in range(i + 1, len(proper)):
            # bit 0 is the identity
            if (a.mask & proper[j].mask) & ~1:
                edges.append((i, j))
    labels = []
    for index, sub in zip(lat.proper_nontrivial, proper):
        gens = ",".join(str(x) for x in lat.generators[index])
        labels.append(f"|H|={sub.order} <{gens}>")
    return make_graph(len(proper), edges, labels)


def _record(witness: Witness) -> WitnessRecord:
    return WitnessRecord(kind=witness.kind, vertices=list(witness.vertices), detail=witness.detail)


def _summary(result: GenusResult) -> GenusSummary:
    return GenusSummary(
        status=result.status,
        lower=result.lower,
        upper=result.upper,
        obstruction=result.obstruction,
        nodes_explored=result.nodes_explored,
    )


def _certified(g: SimpleGraph, witness: Witness, orientable: bool) -> GenusResult:
    """
    Bounds(2, upper) backed by a certificate. The upper bound is traced from the
    sorted rotation, with one edge twisted in the nonorientable case.
    """
    scheme = sorted_scheme(g)
    if orientable:
        upper = trace_faces(g, scheme).genus
    else:
        scheme, upper, _ = twisted_scheme(g, scheme)
    return GenusResult(BOUNDS, 2, upper, scheme, witness.kind, 0)


def decide_genus(g: SimpleGraph, orientable: bool, budget: int, planar: Optional[bool] = None) -> Tuple[GenusResult, Optional[Witness]]:
    """
    Decide whether ``g`` has (orientable or nonorientable) genus at most one.

    A certificate short-circuits to ``bounds`` with lower bound 2; otherwise
    the exact search runs with a ceiling of one.
    """
    if planar is None:
        planar = is_planar(g).planar
    certificate = None
    if not planar:
        certificate = nontoroidality_certificate(g) if orientable else nonprojectivity_certificate(g)
    if certificate is not None:
        return _certified(g, certificate, orientable), certificate
    search = orientable_genus if orientable else nonorientable_genus
    return search(g, budget=budget, ceiling=GENUS_CEILING), None


def _flag_notes(label: str, params: Params) -> List[str]:
    return [entry.note for entry in DISCREPANCIES if entry.label == label and entry.applies(params)]


def analyse_group(group: FiniteGroup, config: Optional[RunConfig] = None) -> Analysis:
    """Build the lattice and intersection graph of ``group`` and decide every reported property."""
    config = config or RunConfig()
    lat = enumerate_subgroups(group, config.max_order)
    graph = intersection_graph(lat)
    if group.family is not None:
        family = format_family(group.family)
        label, params = describe(group.family)
    else:
        family, label, params = group.name, "unknown", {}

    witnesses: List[WitnessRecord] = []
    planarity = is_planar(graph)
    if not planarity.planar:
        witnesses.append(
            WitnessRecord(
                kind=f"kuratowski-{planarity.kind}",
                vertices=sorted({v for edge in planarity.kuratowski.edges for v in edge}),
                detail=f"{planarity.kind} subdivision",
            )
        )
    orientable, cert_torus = decide_genus(graph, True, config.genus_node_budget, planarity.planar)
    nonorientable, cert_projective = decide_genus(graph, False, config.genus_node_budget, planarity.planar)
    for certificate in (cert_torus, cert_projective, k5_witness(graph)):
        if certificate is not None:
            witnesses.append(_record(certificate))

    oriented_summary = _summary(orientable)
    twisted_summary = _summary(nonorientable)
    toroidal = oriented_summary.equals(1)
    projective = twisted_summary.equals(1)
    budget_exceeded = toroidal is None or projective is None

    alpha: Optional[int]
    theta: Optional[int]
    try:
        alpha = independence_number(graph, config.search_node_budget)
        theta = clique_cover_number(graph, config.search_node_budget)
    except SearchBudgetExceeded:
        alpha = theta = None
        budget_exceeded = True

    shortest = girth(graph)
    report = ClassificationReport(
        name=group.name,
        family=family,
        label=label,
        order=group.order,
        vertices=graph.n,
        edges=graph.m,
        planar=planarity.planar,
        orientable_genus=oriented_summary,
        nonorientable_genus=twisted_summary,
        toroidal=toroidal,
        projective_planar=projective,
        girth=None if shortest == math.inf else int(shortest),
        structural=structural_predicates(graph)._asdict(),
        x_free=x_free_record(graph),
        alpha=alpha,
        theta=theta,
        prime_order_subgroups=prime_order_count(lat),
        witnesses=witnesses,
        budget_exceeded=budget_exceeded,
        flagged=_flag_notes(label, params),
    )
    schemes = {}
    if orientable.scheme is not None:
        schemes["orientable"] = orientable.scheme
    if nonorientable.scheme is not None:
        schemes["nonorientable"] = nonorientable.scheme
    return Analysis(lattice=lat, graph=graph, report=report, schemes=schemes)


def classify(group: FiniteGroup, config: Optional[RunConfig] = None) -> ClassificationReport:
    """The classification report of ``group``'s intersection graph."""
    return analyse_group(group, config).report
