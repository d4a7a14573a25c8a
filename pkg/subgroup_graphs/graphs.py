"""
Simple graphs, model expressions, isomorphism, subgraph search and
structural predicates.

``SimpleGraph`` is an immutable value (vertex count, sorted edge tuple, labels);
networkx does the heavy lifting through ``to_networkx``.
"""

# Standard library imports
import math
import re
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

# Third-party imports
import networkx as nx
from networkx.algorithms import isomorphism as nx_iso

from subgroup_graphs.errors import MalformedExpression, UnsupportedFormat

Edge = Tuple[int, int]

# Constants
EXPORT_FORMATS = ("adjacency", "dot")


class SimpleGraph(NamedTuple):
    n: int
    edges: Tuple[Edge, ...]
    labels: Optional[Tuple[str, ...]] = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> List[set]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> List[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


def make_graph(n: int, edges: Iterable[Sequence[int]], labels: Optional[Sequence[str]] = None) -> SimpleGraph:
    """Normalise edges (u < v, sorted, deduplicated) and validate endpoints."""
    normal = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise MalformedExpression(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedExpression(f"edge ({u}, {v}) outside 0..{n - 1}")
        normal.add((min(u, v), max(u, v)))
    if labels is not None and len(labels) != n:
        raise MalformedExpression(f"{len(labels)} labels for {n} vertices")
    return SimpleGraph(n=n, edges=tuple(sorted(normal)), labels=tuple(labels) if labels is not None else None)


def complete(n: int) -> SimpleGraph:
    return make_graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def empty(n: int) -> SimpleGraph:
    return make_graph(n, ())


def complete_bipartite(m: int, n: int) -> SimpleGraph:
    return make_graph(m + n, ((u, m + v) for u in range(m) for v in range(n)))


def cycle(n: int) -> SimpleGraph:
    return make_graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(edge_count: int) -> SimpleGraph:
    return make_graph(edge_count + 1, ((i, i + 1) for i in range(edge_count)))


def disjoint_union(a: SimpleGraph, b: SimpleGraph) -> SimpleGraph:
    shifted = [(u + a.n, v + a.n) for u, v in b.edges]
    return make_graph(a.n + b.n, list(a.edges) + shifted)


def join(a: SimpleGraph, b: SimpleGraph) -> SimpleGraph:
    union = disjoint_union(a, b)
    cross = [(u, a.n + v) for u in range(a.n) for v in range(b.n)]
    return make_graph(union.n, list(union.edges) + cross)


def complement(g: SimpleGraph) -> SimpleGraph:
    present = set(g.edges)
    return make_graph(g.n, ((u, v) for u in range(g.n) for v in range(u + 1, g.n) if (u, v) not in present))


def copies_of(k: int, g: SimpleGraph) -> SimpleGraph:
    result = empty(0)
    for _ in range(k):
        result = disjoint_union(result, g)
    return result


def pendants_at(g: SimpleGraph, vertex: int, k: int) -> SimpleGraph:
    """Attach k new pendant vertices to ``vertex``."""
    if not 0 <= vertex < g.n:
        raise MalformedExpression(f"pendant anchor {vertex} outside 0..{g.n - 1}")
    extra = [(vertex, g.n + i) for i in range(k)]
    return make_graph(g.n + k, list(g.edges) + extra)


# Model expressions


class K(NamedTuple):
    n: int


class Kbar(NamedTuple):
    n: int


class Kmn(NamedTuple):
    m: int
    n: int


class C(NamedTuple):
    n: int


class P(NamedTuple):
    """Path with ``edges`` edges."""

    edges: int


class DisjointUnion(NamedTuple):
    left: "GraphExpr"
    right: "GraphExpr"


class Join(NamedTuple):
    left: "GraphExpr"
    right: "GraphExpr"


class Complement(NamedTuple):
    inner: "GraphExpr"


class CopiesOf(NamedTuple):
    k: int
    inner: "GraphExpr"


class PendantsAt(NamedTuple):
    inner: "GraphExpr"
    vertex: int
    k: int


GraphExpr = Union[K, Kbar, Kmn, C, P, DisjointUnion, Join, Complement, CopiesOf, PendantsAt]


def eval_expr(e: GraphExpr) -> SimpleGraph:
    """Evaluate an expression; left subtrees are numbered first, pendants last."""
    if isinstance(e, K):
        _positive(e.n, "K")
        return complete(e.n)
    if isinstance(e, Kbar):
        _positive(e.n, "Kbar")
        return empty(e.n)
    if isinstance(e, Kmn):
        _positive(e.m, "Kmn")
        _positive(e.n, "Kmn")
        return complete_bipartite(e.m, e.n)
    if isinstance(e, C):
        if e.n < 3:
            raise MalformedExpression(f"C({e.n}) needs at least 3 vertices")
        return cycle(e.n)
    if isinstance(e, P):
        _positive(e.edges, "P")
        return path(e.edges)
    if isinstance(e, DisjointUnion):
        return disjoint_union(eval_expr(e.left), eval_expr(e.right))
    if isinstance(e, Join):
        return join(eval_expr(e.left), eval_expr(e.right))
    if isinstance(e, Complement):
        return complement(eval_expr(e.inner))
    if isinstance(e, CopiesOf):
        _positive(e.k, "N")
        return copies_of(e.k, eval_expr(e.inner))
    if isinstance(e, PendantsAt):
        if e.k < 0:
            raise MalformedExpression(f"negative pendant count {e.k}")
        return pendants_at(eval_expr(e.inner), e.vertex, e.k)
    raise MalformedExpression(f"not a graph expression: {e!r}")


def _positive(value: int, name: str) -> None:
    if not isinstance(value, int) or value < 1:
        raise MalformedExpression(f"{name} needs a positive size, got {value!r}")


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z]+)|(?P<num>\d+)|(?P<punct>[(),]))")
_LEAVES = {"K": (K, 1), "Kbar": (Kbar, 1), "Kmn": (Kmn, 2), "C": (C, 1), "P": (P, 1)}


def _tokenize(text: str) -> List[str]:
    tokens, pos = [], 0
    text = text.strip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match or match.end() == pos:
            raise MalformedExpression(f"unexpected character at {pos} in {text!r}")
        tokens.append(match.group("name") or match.group("num") or match.group("punct"))
        pos = match.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


def parse_expr(text: str) -> GraphExpr:
    """Parse ``J(K(1),U(K(4),Kbar(2)))`` style text."""
    tokens = _tokenize(text)
    expr, pos = _parse(tokens, 0)
    if pos != len(tokens):
        raise MalformedExpression(f"trailing input in {text!r}")
    return expr


def _expect(tokens: List[str], pos: int, token: str) -> int:
    if pos >= len(tokens) or tokens[pos] != token:
        raise MalformedExpression(f"expected {token!r} at token {pos}")
    return pos + 1


def _number(tokens: List[str], pos: int) -> Tuple[int, int]:
    if pos >= len(tokens) or not tokens[pos].isdigit():
        raise MalformedExpression(f"expected a number at token {pos}")
    return int(tokens[pos]), pos + 1


def _parse(tokens: List[str], pos: int) -> Tuple[GraphExpr, int]:
    if pos >= len(tokens):
        raise MalformedExpression("unexpected end of expression")
    name = tokens[pos]
    pos = _expect(tokens, pos + 1, "(")
    if name in _LEAVES:
        cls, arity = _LEAVES[name]
        args = []
        for i in range(arity):
            if i:
                pos = _expect(tokens, pos, ",")
            value, pos = _number(tokens, pos)
            args.append(value)
        return cls(*args), _expect(tokens, pos, ")")
    if name in ("U", "J"):
        left, pos = _parse(tokens, pos)
        pos = _expect(tokens, pos, ",")
        right, pos = _parse(tokens, pos)
        node = DisjointUnion(left, right) if name == "U" else Join(left, right)
        return node, _expect(tokens, pos, ")")
    if name == "Co":
        inner, pos = _parse(tokens, pos)
        return Complement(inner), _expect(tokens, pos, ")")
    if name == "N":
        k, pos = _number(tokens, pos)
        pos = _expect(tokens, pos, ",")
        inner, pos = _parse(tokens, pos)
        return CopiesOf(k, inner), _expect(tokens, pos, ")")
    if name == "Pend":
        inner, pos = _parse(tokens, pos)
        pos = _expect(tokens, pos, ",")
        vertex, pos = _number(tokens, pos)
        pos = _expect(tokens, pos, ",")
        k, pos = _number(tokens, pos)
        return PendantsAt(inner, vertex, k), _expect(tokens, pos, ")")
    raise MalformedExpression(f"unknown constructor {name!r}")


def format_expr(e: GraphExpr) -> str:
    if isinstance(e, K):
        return f"K({e.n})"
    if isinstance(e, Kbar):
        return f"Kbar({e.n})"
    if isinstance(e, Kmn):
        return f"Kmn({e.m},{e.n})"
    if isinstance(e, C):
        return f"C({e.n})"
    if isinstance(e, P):
        return f"P({e.edges})"
    if isinstance(e, DisjointUnion):
        return f"U({format_expr(e.left)},{format_expr(e.right)})"
    if isinstance(e, Join):
        return f"J({format_expr(e.left)},{format_expr(e.right)})"
    if isinstance(e, Complement):
        return f"Co({format_expr(e.inner)})"
    if isinstance(e, CopiesOf):
        return f"N({e.k},{format_expr(e.inner)})"
    if isinstance(e, PendantsAt):
        return f"Pend({format_expr(e.inner)},{e.vertex},{e.k})"
    raise MalformedExpression(f"not a graph expression: {e!r}")


# networkx bridges


def to_networkx(g: SimpleGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_networkx(h: nx.Graph) -> SimpleGraph:
    """Relabel nodes to 0..n-1 in sorted order; original names become labels."""
    nodes = sorted(h.nodes, key=str) if not all(isinstance(v, int) for v in h.nodes) else sorted(h.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    labels = None if nodes == list(range(len(nodes))) else [str(v) for v in nodes]
    return make_graph(len(nodes), ((index[u], index[v]) for u, v in h.edges), labels)


def induced_subgraph(g: SimpleGraph, vertices: Iterable[int]) -> SimpleGraph:
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    return make_graph(len(keep), ((index[u], index[v]) for u, v in g.edges if u in index and v in index))


# Isomorphism and subgraph search


def is_isomorphic(a: SimpleGraph, b: SimpleGraph) -> Tuple[bool, Optional[Dict[int, int]]]:
    """Decide isomorphism; the witness maps vertices of a to vertices of b."""
    if a.n != b.n or a.m != b.m or sorted(a.degrees()) != sorted(b.degrees()):
        return False, None
    mapping = nx.vf2pp_isomorphism(to_networkx(a), to_networkx(b))
    if mapping is None:
        return False, None
    return True, {int(k): int(v) for k, v in sorted(mapping.items())}


def _is_complete(pattern: SimpleGraph) -> bool:
    return pattern.m == pattern.n * (pattern.n - 1) // 2


def _bipartition_if_complete_bipartite(pattern: SimpleGraph) -> Optional[Tuple[List[int], List[int]]]:
    if pattern.n < 2 or pattern.m == 0:
        return None
    h = to_networkx(pattern)
    if not nx.is_connected(h) or not nx.is_bipartite(h):
        return None
    left, right = nx.bipartite.sets(h)
    if pattern.m != len(left) * len(right):
        return None
    return sorted(left), sorted(right)


def find_clique(host: SimpleGraph, k: int) -> Optional[List[int]]:
    """Some k-clique of host (lexicographically first maximal clique order), or None."""
    if k <= 0:
        return []
    if k == 1:
        return [0] if host.n else None
    for clique in sorted(sorted(c) for c in nx.find_cliques(to_networkx(host))):
        if len(clique) >= k:
            return clique[:k]
    return None


def find_biclique(host: SimpleGraph, s: int, t: int) -> Optional[Tuple[List[int], List[int]]]:
    """Disjoint vertex sets X (|X|=s) and Y (|Y|=t) with every X-Y pair adjacent."""
    if s > t:
        found = find_biclique(host, t, s)
        return (found[1], found[0]) if found else None
    adj = host.adjacency()
    order = sorted(range(host.n), key=lambda v: (-len(adj[v]), v))
    candidates = [v for v in order if len(adj[v]) >= t]

    def extend(chosen: List[int], common: set, start: int) -> Optional[Tuple[List[int], List[int]]]:
        if len(chosen) == s:
            rest = sorted(common - set(chosen))
            return (sorted(chosen), rest[:t]) if len(rest) >= t else None
        for i in range(start, len(candidates)):
            v = candidates[i]
            narrowed = common & adj[v] if chosen else set(adj[v])
            narrowed -= set(chosen) | {v}
            if len(narrowed) < t:
                continue
            found = extend(chosen + [v], narrowed, i + 1)
            if found:
                return found
        return None

    return extend([], set(), 0)


def has_subgraph(host: SimpleGraph, pattern: SimpleGraph) -> Tuple[bool, Optional[Dict[int, int]]]:
    """Non-induced subgraph containment; the witness maps pattern vertices into host."""
    if pattern.n > host.n or pattern.m > host.m:
        return False, None
    if pattern.n == 0:
        return True, {}
    if _is_complete(pattern):
        clique = find_clique(host, pattern.n)
        if clique is None:
            return False, None
        return True, {i: v for i, v in enumerate(clique)}
    parts = _bipartition_if_complete_bipartite(pattern)
    if parts is not None:
        left, right = parts
        found = find_biclique(host, len(left), len(right))
        if found is None:
            return False, None
        mapping = {p: h for p, h in zip(left, found[0])}
        mapping.update({p: h for p, h in zip(right, found[1])})
        return True, dict(sorted(mapping.items()))
    matcher = nx_iso.GraphMatcher(to_networkx(host), to_networkx(pattern))
    for host_to_pattern in matcher.subgraph_monomorphisms_iter():
        return True, dict(sorted((p, h) for h, p in host_to_pattern.items()))
    return False, None


def girth(g: SimpleGraph) -> Union[int, float]:
    """Shortest cycle length, ``math.inf`` when acyclic."""
    value = nx.girth(to_networkx(g))
    return math.inf if value == math.inf else int(value)


class StructuralFlags(NamedTuple):
    bipartite: bool
    complete_bipartite: bool
    tree: bool
    star: bool
    acyclic: bool
    unicyclic: bool
    path: bool
    cycle: bool
    totally_disconnected: bool


def structural_predicates(g: SimpleGraph) -> StructuralFlags:
    """Whole-graph shape flags; isolated extras break path, cycle, star and tree."""
    if g.n == 0:
        return StructuralFlags(True, False, False, False, True, False, False, False, True)
    h = to_networkx(g)
    components = nx.number_connected_components(h)
    connected = components == 1
    bipartite = nx.is_bipartite(h)
    acyclic = g.m == g.n - components
    degrees = g.degrees()
    max_degree = max(degrees)
    tree = connected and acyclic
    complete_bip = False
    if connected and bipartite:
        if g.n == 1:
            complete_bip = True
        else:
            left, right = nx.bipartite.sets(h)
            complete_bip = g.m == len(left) * len(right)
    return StructuralFlags(
        bipartite=bipartite,
        complete_bipartite=complete_bip,
        tree=tree,
        star=tree and (g.n <= 2 or max_degree == g.n - 1),
        acyclic=acyclic,
        unicyclic=g.m == g.n - components + 1,
        path=tree and g.n >= 2 and max_degree <= 2,
        cycle=connected and g.n >= 3 and all(d == 2 for d in degrees),
        totally_disconnected=g.m == 0,
    )


X_FREE_PATTERNS: Dict[str, GraphExpr] = {
    "K5": K(5),
    "K4": K(4),
    "C4": C(4),
    "C5": C(5),
    "P2": P(2),
    "P3": P(3),
    "P4": P(4),
    "K13": Kmn(1, 3),
    "K14": Kmn(1, 4),
    "K23": Kmn(2, 3),
}


def x_free(g: SimpleGraph, x: Union[GraphExpr, SimpleGraph]) -> bool:
    pattern = x if isinstance(x, SimpleGraph) else eval_expr(x)
    return not has_subgraph(g, pattern)[0]


def x_free_record(g: SimpleGraph) -> Dict[str, bool]:
    return {name: x_free(g, expr) for name, expr in X_FREE_PATTERNS.items()}


# Text formats


def format_adjacency(g: SimpleGraph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_adjacency(text: str) -> SimpleGraph:
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise MalformedExpression("adjacency text must start with 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(u), int(v)) for u, v in rows[1:]]
    except ValueError as exc:
        raise MalformedExpression(f"non-integer token in adjacency text: {exc}") from exc
    if len(edges) != m:
        raise MalformedExpression(f"header announces {m} edges, found {len(edges)}")
    graph = make_graph(n, edges)
    if graph.m != m:
        raise MalformedExpression("adjacency text repeats an edge")
    return graph


def format_dot(g: SimpleGraph, name: str = "G") -> str:
    lines = [f"graph {_dot_id(name)} {{"]
    for v in range(g.n):
        label = f' [label="{g.labels[v]}"]' if g.labels else ""
        lines.append(f"  {v}{label};")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_id(name: str) -> str:
    return name if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name) else '"' + name.replace('"', '\\"') + '"'


def export_graph(g: SimpleGraph, fmt: str, name: str = "G") -> bytes:
    """Serialise a graph as adjacency text or DOT."""
    if fmt == "adjacency":
        return format_adjacency(g).encode("utf-8")
    if fmt == "dot":
        return format_dot(g, name).encode("utf-8")
    raise UnsupportedFormat(f"unsupported export format {fmt!r}; choose one of {', '.join(EXPORT_FORMATS)}")
