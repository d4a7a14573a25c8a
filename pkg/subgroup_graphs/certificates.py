"""
Sufficient certificates that a graph is not toroidal or not projective-planar.

Each detector returns a named witness or None. A witness proves the lower
bound; None proves nothing and leaves the question to the exact search.
"""

# Standard library imports
from itertools import combinations
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple

# Third-party imports
import networkx as nx

from subgroup_graphs.genus import genus_lower_bound, nonplanar_block_count
from subgroup_graphs.graphs import SimpleGraph, find_biclique, find_clique, to_networkx

# Constants
MAX_K5_CANDIDATES = 200


class Witness(NamedTuple):
    kind: str
    vertices: Tuple[int, ...]
    detail: str


def _clique_witness(g: SimpleGraph, k: int) -> Optional[Witness]:
    found = find_clique(g, k)
    if found is None:
        return None
    return Witness(f"K{k}", tuple(found), f"K{k} subgraph on {list(found)}")


def _biclique_witness(g: SimpleGraph, s: int, t: int) -> Optional[Witness]:
    found = find_biclique(g, s, t)
    if found is None:
        return None
    left, right = found
    return Witness(f"K{s},{t}", tuple(sorted(left + right)), f"K{s},{t} subgraph with sides {left} and {right}")


def _k5_candidates(h: nx.Graph) -> List[Tuple[int, ...]]:
    seen = set()
    out: List[Tuple[int, ...]] = []
    for clique in sorted(sorted(c) for c in nx.find_cliques(h) if len(c) >= 5):
        for five in combinations(clique, 5):
            if five not in seen:
                seen.add(five)
                out.append(five)
            if len(out) >= MAX_K5_CANDIDATES:
                return out
    return out


def _kuratowski_vertices(h: nx.Graph) -> Optional[Tuple[int, ...]]:
    planar, certificate = nx.check_planarity(h, counterexample=True)
    if planar:
        return None
    return tuple(sorted(v for v in certificate.nodes if certificate.degree(v) > 0))


def two_disjoint_nonplanar(g: SimpleGraph, only_k5: bool = False) -> Optional[Witness]:
    """
    Two vertex-disjoint nonplanar subgraphs.

    Candidates for the first one are K5 cliques and the Kuratowski subgraph
    networkx reports; the rest of the graph is then tested for planarity.
    """
    h = to_networkx(g)
    candidates = _k5_candidates(h)
    if not only_k5:
        first = _kuratowski_vertices(h)
        if first is not None:
            candidates.append(first)
    for first in candidates:
        rest = h.copy()
        rest.remove_nodes_from(first)
        if only_k5:
            second = next((c for c in _k5_candidates(rest)), None)
        else:
            second = _kuratowski_vertices(rest)
        if second is not None:
            vertices = tuple(sorted(first + second))
            kind = "2K5" if only_k5 else "two-disjoint-nonplanar"
            return Witness(kind, vertices, f"disjoint nonplanar subgraphs on {list(first)} and {list(second)}")
    return None


def _euler_witness(g: SimpleGraph, orientable: bool) -> Optional[Witness]:
    gamma, euler = genus_lower_bound(g)
    bound = gamma if orientable else euler
    if bound >= 2:
        what = "genus" if orientable else "Euler genus"
        return Witness("euler-bound", (), f"edge count forces {what} >= {bound} on the reduced core")
    blocks = nonplanar_block_count(g)
    if blocks >= 2:
        return Witness("nonplanar-blocks", (), f"{blocks} nonplanar blocks in the reduced core")
    return None


def _first(detectors: Sequence[Callable[[], Optional[Witness]]]) -> Optional[Witness]:
    for detect in detectors:
        witness = detect()
        if witness is not None:
            return witness
    return None


def nontoroidality_certificate(g: SimpleGraph) -> Optional[Witness]:
    """A witness that the orientable genus of ``g`` is at least 2."""
    return _first(
        [
            lambda: _clique_witness(g, 8),
            lambda: _biclique_witness(g, 4, 5),
            lambda: _biclique_witness(g, 3, 7),
            lambda: two_disjoint_nonplanar(g, only_k5=True),
            lambda: _euler_witness(g, orientable=True),
        ]
    )


def nonprojectivity_certificate(g: SimpleGraph) -> Optional[Witness]:
    """A witness that the nonorientable genus of ``g`` is at least 2."""
    return _first(
        [
            lambda: _clique_witness(g, 7),
            lambda: _biclique_witness(g, 3, 5),
            lambda: _biclique_witness(g, 4, 4),
            lambda: two_disjoint_nonplanar(g),
            lambda: _euler_witness(g, orientable=False),
        ]
    )


def k5_witness(g: SimpleGraph) -> Optional[Witness]:
    return _clique_witness(g, 5)
