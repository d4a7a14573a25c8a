"""
Embedding schemes: signed rotation systems, face tracing and planarity.

A scheme lists, for every vertex, the incident edge ids in cyclic order, and a
sign (+1 or -1) for every edge. Face tracing walks (vertex, edge, orientation)
states; each face is met twice, once per orientation.
"""

# Standard library imports
import math
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

# Third-party imports
import networkx as nx

from subgroup_graphs.errors import InvalidScheme, OutOfRange
from subgroup_graphs.graphs import SimpleGraph, make_graph, to_networkx

Endpoints = Sequence[Tuple[int, int]]

# Constants
CLOSED_FORM_KINDS = ("Kn-genus", "Kmn-genus", "Kn-crosscap", "Kmn-crosscap")


class EmbeddingScheme(NamedTuple):
    rotation: Tuple[Tuple[int, ...], ...]
    signature: Tuple[int, ...]

    @property
    def all_positive(self) -> bool:
        return all(sign == 1 for sign in self.signature)


class FaceTrace(NamedTuple):
    faces: int
    euler_genus: int
    orientable: bool

    @property
    def genus(self) -> int:
        """Surface genus: handles if orientable, crosscaps otherwise."""
        return self.euler_genus // 2 if self.orientable else self.euler_genus


class PlanarityResult(NamedTuple):
    planar: bool
    scheme: Optional[EmbeddingScheme]
    kuratowski: Optional[SimpleGraph]
    kind: Optional[str]


def _check_scheme(n: int, endpoints: Endpoints, scheme: EmbeddingScheme) -> None:
    if len(scheme.rotation) != n:
        raise InvalidScheme(f"rotation covers {len(scheme.rotation)} vertices, graph has {n}")
    if len(scheme.signature) != len(endpoints):
        raise InvalidScheme(f"signature covers {len(scheme.signature)} edges, graph has {len(endpoints)}")
    incident: List[List[int]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(endpoints):
        incident[u].append(e)
        incident[v].append(e)
    for v in range(n):
        if sorted(scheme.rotation[v]) != sorted(incident[v]):
            raise InvalidScheme(f"rotation at vertex {v} is not a permutation of its incident edges")
    for e, sign in enumerate(scheme.signature):
        if sign not in (1, -1):
            raise InvalidScheme(f"edge {e} has sign {sign}, expected +1 or -1")


def trace_rotation(n: int, endpoints: Endpoints, scheme: EmbeddingScheme) -> FaceTrace:
    """Face-trace a signed rotation system on a loopless multigraph."""
    _check_scheme(n, endpoints, scheme)
    position: List[Dict[int, int]] = [{e: i for i, e in enumerate(scheme.rotation[v])} for v in range(n)]
    seen = set()
    component_of = _components(n, endpoints)
    orbits = [0] * n
    for v in range(n):
        for e in scheme.rotation[v]:
            for f in (1, -1):
                start = (v, e, f)
                if start in seen:
                    continue
                orbits[component_of[v]] += 1
                state = start
                while state not in seen:
                    seen.add(state)
                    state = _next_state(state, endpoints, scheme, position)
    euler = 0
    vertex_count = [0] * n
    edge_count = [0] * n
    for v in range(n):
        vertex_count[component_of[v]] += 1
    for u, _ in endpoints:
        edge_count[component_of[u]] += 1
    faces_total = 0
    for c in set(component_of):
        faces = orbits[c] // 2 if edge_count[c] else 1
        faces_total += faces
        euler += 2 - vertex_count[c] + edge_count[c] - faces
    return FaceTrace(faces=faces_total, euler_genus=euler, orientable=signature_is_balanced(n, endpoints, scheme.signature))


def _next_state(state, endpoints, scheme, position):
    v, e, f = state
    u, w = endpoints[e]
    other = w if u == v else u
    f2 = f * scheme.signature[e]
    rot = scheme.rotation[other]
    i = position[other][e]
    step = 1 if f2 == 1 else -1
    return other, rot[(i + step) % len(rot)], f2


def _components(n: int, endpoints: Endpoints) -> List[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in endpoints:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    return [find(v) for v in range(n)]


def signature_is_balanced(n: int, endpoints: Endpoints, signature: Sequence[int]) -> bool:
    """True iff the signature is switching-equivalent to all positive (2-colouring test)."""
    adj: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(endpoints):
        flip = 0 if signature[e] == 1 else 1
        adj[u].append((v, flip))
        adj[v].append((u, flip))
    side = [-1] * n
    for root in range(n):
        if side[root] >= 0:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            x = stack.pop()
            for y, flip in adj[x]:
                want = side[x] ^ flip
                if side[y] < 0:
                    side[y] = want
                    stack.append(y)
                elif side[y] != want:
                    return False
    return True


def trace_faces(g: SimpleGraph, s: EmbeddingScheme) -> FaceTrace:
    """Faces, Euler genus and orientability of scheme ``s`` on ``g``."""
    return trace_rotation(g.n, g.edges, s)


# Conversions between neighbour rotations and edge-id schemes


def edge_index(g: SimpleGraph) -> Dict[Tuple[int, int], int]:
    return {edge: i for i, edge in enumerate(g.edges)}


def scheme_from_neighbours(
    g: SimpleGraph,
    rotation: Sequence[Sequence[int]],
    signs: Optional[Dict[Tuple[int, int], int]] = None,
) -> EmbeddingScheme:
    """Build a scheme from per-vertex neighbour orders and signs keyed by (min, max)."""
    index = edge_index(g)
    try:
        rot = tuple(tuple(index[(min(v, w), max(v, w))] for w in rotation[v]) for v in range(g.n))
    except KeyError as exc:
        raise InvalidScheme(f"rotation names a non-edge {exc.args[0]}") from exc
    signs = signs or {}
    signature = tuple(int(signs.get(edge, 1)) for edge in g.edges)
    return EmbeddingScheme(rotation=rot, signature=signature)


def neighbours_from_scheme(g: SimpleGraph, s: EmbeddingScheme) -> Tuple[List[List[int]], Dict[Tuple[int, int], int]]:
    rotation = []
    for v in range(g.n):
        order = []
        for e in s.rotation[v]:
            u, w = g.edges[e]
            order.append(w if u == v else u)
        rotation.append(order)
    signs = {edge: s.signature[i] for i, edge in enumerate(g.edges)}
    return rotation, signs


def sorted_scheme(g: SimpleGraph) -> EmbeddingScheme:
    """Rotation by increasing neighbour, all edges positive."""
    adj = g.adjacency()
    return scheme_from_neighbours(g, [sorted(adj[v]) for v in range(g.n)])


# Planarity


def planar_rotation(h: nx.Graph) -> Optional[Dict[int, List[int]]]:
    """Clockwise neighbour orders of a planar embedding, or None."""
    planar, embedding = nx.check_planarity(h)
    if not planar:
        return None
    return {v: list(embedding.neighbors_cw_order(v)) for v in h.nodes}


def is_planar(g: SimpleGraph) -> PlanarityResult:
    """Planarity with a planar scheme or a Kuratowski subgraph as witness."""
    h = to_networkx(g)
    planar, certificate = nx.check_planarity(h, counterexample=True)
    if planar:
        rotation = [list(certificate.neighbors_cw_order(v)) for v in range(g.n)]
        return PlanarityResult(True, scheme_from_neighbours(g, rotation), None, None)
    witness = make_graph(g.n, certificate.edges)
    branch = sorted(d for _, d in certificate.degree() if d >= 3)
    kind = "K5" if len(branch) == 5 else "K3,3"
    return PlanarityResult(False, None, witness, kind)


# Fixture text format


def format_scheme(s: EmbeddingScheme) -> str:
    """One ``v: e1 e2 ...`` line per vertex, then one ``eid: +1|-1`` line per edge."""
    lines = [f"{v}:" + "".join(f" {e}" for e in order) for v, order in enumerate(s.rotation)]
    lines.extend(f"{e}: {'+1' if sign == 1 else '-1'}" for e, sign in enumerate(s.signature))
    return "\n".join(lines) + "\n"


def read_scheme(text: str) -> EmbeddingScheme:
    rotation: List[Tuple[int, ...]] = []
    signature: List[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise InvalidScheme(f"missing ':' in scheme line {raw!r}")
        tokens = rest.split()
        try:
            index = int(key)
            if len(tokens) == 1 and tokens[0][0] in "+-":
                if index != len(signature):
                    raise InvalidScheme(f"edge line {index} out of order")
                signature.append(int(tokens[0]))
                continue
            if signature:
                raise InvalidScheme("vertex lines must precede edge lines")
            if index != len(rotation):
                raise InvalidScheme(f"vertex line {index} out of order")
            rotation.append(tuple(int(tok) for tok in tokens))
        except ValueError as exc:
            raise InvalidScheme(f"bad token in scheme line {raw!r}") from exc
    return EmbeddingScheme(rotation=tuple(rotation), signature=tuple(signature))


# Closed forms


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def closed_form_genus(kind: str, params: Sequence[int]) -> int:
    """Genus and crosscap number of complete and complete bipartite graphs."""
    if kind not in CLOSED_FORM_KINDS:
        raise OutOfRange(f"unknown closed form {kind!r}")
    if kind.startswith("Kn-"):
        if len(params) != 1 or params[0] < 3:
            raise OutOfRange(f"{kind} needs n >= 3, got {list(params)}")
        n = params[0]
        if kind == "Kn-genus":
            return _ceil_div((n - 3) * (n - 4), 12)
        if n == 7:
            return 3
        return _ceil_div((n - 3) * (n - 4), 6)
    if len(params) != 2 or min(params) < 2:
        raise OutOfRange(f"{kind} needs m, n >= 2, got {list(params)}")
    m, n = params
    if kind == "Kmn-genus":
        return _ceil_div((m - 2) * (n - 2), 4)
    return _ceil_div((m - 2) * (n - 2), 2)


def euler_genus_lower_bound(vertices: int, edges: int, girth: float) -> int:
    """Euler-formula lower bound for one connected graph: faces are at most 2E / girth."""
    if edges == 0 or girth == math.inf:
        return 0
    return max(0, 2 - vertices + edges - (2 * edges) // int(girth))
