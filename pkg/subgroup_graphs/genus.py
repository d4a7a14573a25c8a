"""
Exact orientable and nonorientable genus.

The input graph is reduced (isolated vertices, pendants and degree-2 vertices
removed), split into blocks, and every nonplanar block is searched by branch
and bound over rotation systems, with edge signs as extra branches in the
nonorientable case. Block embeddings are glued at cut vertices and the
reduction is replayed backwards, so every returned scheme embeds the input
graph and is re-verified by face tracing.
"""

# Standard library imports
import sys
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

# Third-party imports
import networkx as nx

from subgroup_graphs.embedding import (
    EmbeddingScheme,
    euler_genus_lower_bound,
    planar_rotation,
    scheme_from_neighbours,
    trace_faces,
)
from subgroup_graphs.errors import InvalidScheme
from subgroup_graphs.graphs import SimpleGraph, make_graph, to_networkx

Rotation = Dict[int, List[int]]
Signs = Dict[Tuple[int, int], int]

# Constants
DEFAULT_GENUS_BUDGET = 10**8
EXACT = "exact"
BOUNDS = "bounds"


class GenusResult(NamedTuple):
    status: str
    lower: int
    upper: int
    scheme: Optional[EmbeddingScheme]
    obstruction: Optional[str]
    nodes_explored: int

    @property
    def exact(self) -> bool:
        return self.status == EXACT

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.exact else None


class ReductionStep(NamedTuple):
    op: str
    vertex: int
    neighbours: Tuple[int, ...]


class Reduction(NamedTuple):
    core: nx.Graph
    steps: Tuple[ReductionStep, ...]


class _BudgetSpent(Exception):
    pass


class _Counter:
    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetSpent()


def _key(u: int, v: int) -> Tuple[int, int]:
    return (u, v) if u < v else (v, u)


# Reduction


def reduce_graph(g: SimpleGraph) -> Reduction:
    """
    Strip isolated vertices, pendants and degree-2 vertices until none remain.

    A degree-2 vertex between non-adjacent neighbours is smoothed into an edge;
    one between adjacent neighbours is deleted, as a path parallel to an edge
    never changes the Euler genus. Steps are recorded for ``lift_rotation``.
    """
    h = to_networkx(g)
    steps: List[ReductionStep] = []
    pending = sorted(h.nodes)
    while pending:
        queued = set()
        for x in pending:
            if x not in h:
                continue
            degree = h.degree(x)
            if degree > 2:
                continue
            neighbours = tuple(sorted(h.neighbors(x)))
            if degree == 0:
                steps.append(ReductionStep("isolated", x, ()))
            elif degree == 1:
                steps.append(ReductionStep("pendant", x, neighbours))
            else:
                u, w = neighbours
                op = "parallel" if h.has_edge(u, w) else "subdivide"
                steps.append(ReductionStep(op, x, neighbours))
                if op == "subdivide":
                    h.add_edge(u, w)
            h.remove_node(x)
            queued.update(neighbours)
        pending = sorted(v for v in queued if v in h)
    return Reduction(core=h, steps=tuple(steps))


def lift_rotation(
    steps: Sequence[ReductionStep],
    rotation: Rotation,
    signs: Signs,
    allow_twists: bool = False,
) -> Tuple[Rotation, Signs]:
    """Replay reduction steps backwards on a neighbour rotation of the core."""
    rotation = {v: list(order) for v, order in rotation.items()}
    signs = dict(signs)
    for step in reversed(steps):
        x = step.vertex
        if step.op == "isolated":
            rotation[x] = []
        elif step.op == "pendant":
            (u,) = step.neighbours
            rotation[u].append(x)
            rotation[x] = [u]
            signs[_key(u, x)] = 1
        elif step.op == "subdivide":
            u, w = step.neighbours
            rotation[u][rotation[u].index(w)] = x
            rotation[w][rotation[w].index(u)] = x
            rotation[x] = [u, w]
            signs[_key(u, x)] = signs.pop(_key(u, w))
            signs[_key(x, w)] = 1
        elif step.op == "parallel":
            _lift_parallel(rotation, signs, x, step.neighbours, allow_twists)
        else:
            raise InvalidScheme(f"unknown reduction step {step.op!r}")
    return rotation, signs


def _rotation_graph(rotation: Rotation, signs: Signs) -> Tuple[SimpleGraph, EmbeddingScheme, List[int]]:
    nodes = sorted(rotation)
    index = {v: i for i, v in enumerate(nodes)}
    edges = {_key(index[v], index[w]) for v in nodes for w in rotation[v]}
    graph = make_graph(len(nodes), edges)
    local = [[index[w] for w in rotation[v]] for v in nodes]
    local_signs = {_key(index[u], index[w]): s for (u, w), s in signs.items()}
    return graph, scheme_from_neighbours(graph, local, local_signs), nodes


def _euler_genus(rotation: Rotation, signs: Signs) -> Tuple[int, bool]:
    graph, scheme, _ = _rotation_graph(rotation, signs)
    trace = trace_faces(graph, scheme)
    return trace.euler_genus, trace.orientable


def _lift_parallel(rotation: Rotation, signs: Signs, x: int, neighbours: Tuple[int, int], allow_twists: bool) -> None:
    u, w = neighbours
    before, _ = _euler_genus(rotation, signs)
    rotation[x] = [u, w]
    sign_choices = (1, -1) if allow_twists else (1,)
    for offset_u in (1, 0):
        for offset_w in (0, 1):
            for sign in sign_choices:
                trial_u = list(rotation[u])
                trial_u.insert(trial_u.index(w) + offset_u, x)
                trial_w = list(rotation[w])
                trial_w.insert(trial_w.index(u) + offset_w, x)
                old_u, old_w = rotation[u], rotation[w]
                rotation[u], rotation[w] = trial_u, trial_w
                signs[_key(u, x)] = sign
                signs[_key(x, w)] = 1
                if _euler_genus(rotation, signs)[0] == before:
                    return
                rotation[u], rotation[w] = old_u, old_w
    raise InvalidScheme(f"no placement keeps the Euler genus when restoring vertex {x}")


# Block search


class _BlockSearch:
    """
    Branch and bound over rotations (and signs) of one 2-connected block.

    Darts are 2e (from the smaller endpoint) and 2e+1; a face-tracing state is
    a dart in orientable mode and a (dart, orientation) pair otherwise. Partial
    face permutations are kept as chains; the bound counts closed faces plus
    the most faces the open chains could still form given the girth.
    """

    def __init__(self, block: nx.Graph, orientable: bool, counter: _Counter):
        self.nodes = sorted(block.nodes)
        self.index = {v: i for i, v in enumerate(self.nodes)}
        self.edges = sorted(_key(self.index[u], self.index[v]) for u, v in block.edges)
        self.n = len(self.nodes)
        self.m = len(self.edges)
        self.orientable = orientable
        self.counter = counter
        local = nx.Graph(self.edges)
        self.girth = int(nx.girth(local))
        self.tail = [0] * (2 * self.m)
        self.head = [0] * (2 * self.m)
        self.darts_at: List[List[int]] = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            self.tail[2 * e], self.head[2 * e] = u, v
            self.tail[2 * e + 1], self.head[2 * e + 1] = v, u
            self.darts_at[u].append(2 * e)
            self.darts_at[v].append(2 * e + 1)
        self._order_vertices()

    def _order_vertices(self) -> None:
        degree = [len(d) for d in self.darts_at]
        first = max(range(self.n), key=lambda v: (degree[v], -v))
        order = [first]
        placed = {first}
        seen_count = [0] * self.n
        for d in self.darts_at[first]:
            seen_count[self.head[d]] += 1
        while len(order) < self.n:
            v = max((v for v in range(self.n) if v not in placed), key=lambda v: (seen_count[v], degree[v], -v))
            order.append(v)
            placed.add(v)
            for d in self.darts_at[v]:
                seen_count[self.head[d]] += 1
        self.order = order
        rank = {v: i for i, v in enumerate(order)}
        self.rank = rank
        parent_edge = {}
        for v in order[1:]:
            earlier = [(rank[self.head[d]], d >> 1) for d in self.darts_at[v] if rank[self.head[d]] < rank[v]]
            parent_edge[v] = min(earlier)[1]
        # spanning tree edges stay positive; only cotree signs are branched on
        self.tree = set(parent_edge.values())
        self.cotree_total = self.m - len(self.tree)

    # chain bookkeeping

    def _state(self, dart: int, sign: int) -> int:
        return 2 * dart + (0 if sign == 1 else 1)

    def _dart(self, state: int) -> int:
        return state if self.orientable else state >> 1

    def _weight(self, head_state: int, tail_state: int, length: int) -> int:
        closable = self.tail[self._dart(head_state)] == self.head[self._dart(tail_state)]
        return max(0, length + (0 if closable else 1) - self.girth)

    def _link(self, x: int, y: int) -> None:
        hx = self.other_end[x]
        ty = self.other_end[y]
        self.undo.append((x, hx, ty, self.other_end[hx], self.other_end[ty], self.length[hx], self.length[ty], self.closed, self.open, self.weight))
        self.nxt[x] = y
        if hx == y:
            length = self.length[x]
            self.closed += 1
            self.open -= length
            self.weight -= self._weight(hx, x, length)
        else:
            la, lb = self.length[x], self.length[y]
            self.weight -= self._weight(hx, x, la) + self._weight(y, ty, lb)
            total = la + lb
            self.other_end[hx] = ty
            self.other_end[ty] = hx
            self.length[hx] = total
            self.length[ty] = total
            self.weight += self._weight(hx, ty, total)

    def _unlink(self) -> None:
        x, hx, ty, end_h, end_t, len_h, len_t, closed, open_states, weight = self.undo.pop()
        self.nxt[x] = -1
        self.length[ty] = len_t
        self.length[hx] = len_h
        self.other_end[ty] = end_t
        self.other_end[hx] = end_h
        self.closed, self.open, self.weight = closed, open_states, weight

    def _faces_upper(self) -> int:
        orbits = self.closed + (self.open - self.weight) // self.girth
        return orbits if self.orientable else orbits // 2

    def _rotate(self, a: int, b: int) -> int:
        """Record succ(a) = b at their common vertex; returns the number of links made."""
        if self.orientable:
            self._link(a ^ 1, b)
            return 1
        sa = self.sign[a >> 1]
        sb = self.sign[b >> 1]
        self._link(self._state(a ^ 1, sa), self._state(b, 1))
        self._link(self._state(b ^ 1, -sb), self._state(a, -1))
        return 2

    def _undo_links(self, count: int) -> None:
        for _ in range(count):
            self._unlink()

    # search

    def search(self, euler_target: int) -> Optional[Tuple[Rotation, Signs]]:
        """A rotation of Euler genus at most ``euler_target`` (nonorientable if so configured)."""
        states = 2 * self.m if self.orientable else 4 * self.m
        self.target_faces = max(1, self.m - self.n + 2 - euler_target)
        self.nxt = [-1] * states
        self.other_end = list(range(states))
        self.length = [1] * states
        self.closed = 0
        self.open = states
        self.weight = sum(self._weight(s, s, 1) for s in range(states))
        self.undo: List[tuple] = []
        self.sign = [1] * self.m
        self.decided = [e in self.tree for e in range(self.m)]
        self.minus = 0
        self.cotree_done = 0
        self.succ: Dict[int, int] = {}
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 10 * self.m + 1000))
        try:
            if self._place(0):
                return self._result()
            return None
        finally:
            sys.setrecursionlimit(limit)

    def _result(self) -> Tuple[Rotation, Signs]:
        rotation: Rotation = {}
        for v in range(self.n):
            darts = self.darts_at[v]
            order = [darts[0]]
            while len(order) < len(darts):
                order.append(self.succ[order[-1]])
            rotation[self.nodes[v]] = [self.nodes[self.head[d]] for d in order]
        signs = {
            _key(self.nodes[u], self.nodes[v]): self.sign[e] for e, (u, v) in enumerate(self.edges)
        }
        return rotation, signs

    def _place(self, i: int) -> bool:
        if i == self.n:
            if not self.orientable and self.minus == 0:
                return False
            return self.closed // (1 if self.orientable else 2) >= self.target_faces
        v = self.order[i]
        darts = self.darts_at[v]
        first = darts[0]
        return self._signed(first >> 1, lambda: self._extend(i, v, first, first, darts[1:]))

    def _signed(self, e: int, then) -> bool:
        """Branch on the sign of cotree edge ``e`` the first time one of its darts is placed."""
        if self.orientable or self.decided[e]:
            return then()
        self.decided[e] = True
        self.cotree_done += 1
        # the last free sign must be negative if every other one is positive
        choices = (-1,) if self.cotree_done == self.cotree_total and self.minus == 0 else (1, -1)
        for sign in choices:
            self.counter.tick()
            self.sign[e] = sign
            self.minus += sign == -1
            if then():
                return True
            self.minus -= sign == -1
        self.sign[e] = 1
        self.cotree_done -= 1
        self.decided[e] = False
        return False

    def _extend(self, i: int, v: int, first: int, last: int, remaining: List[int]) -> bool:
        if not remaining:
            if i == 0 and len(self.darts_at[v]) >= 3 and not last > self.succ[first]:
                return False
            made = self._rotate(last, first)
            self.succ[last] = first
            ok = self._faces_upper() >= self.target_faces and self._place(i + 1)
            if not ok:
                del self.succ[last]
                self._undo_links(made)
            return ok
        for k, b in enumerate(remaining):
            if i == 0 and last == first and len(remaining) >= 2 and b == max(remaining):
                continue
            rest = remaining[:k] + remaining[k + 1:]
            if self._signed(b >> 1, lambda b=b, rest=rest: self._step(i, v, first, last, b, rest)):
                return True
        return False

    def _step(self, i: int, v: int, first: int, last: int, b: int, rest: List[int]) -> bool:
        self.counter.tick()
        made = self._rotate(last, b)
        self.succ[last] = b
        if self._faces_upper() >= self.target_faces and self._extend(i, v, first, b, rest):
            return True
        del self.succ[last]
        self._undo_links(made)
        return False


# Block bookkeeping


class _BlockOutcome(NamedTuple):
    euler: int
    rotation: Rotation
    signs: Signs
    twist_gap: Optional[int]


def _blocks(core: nx.Graph) -> List[nx.Graph]:
    found = []
    for component_edges in nx.biconnected_component_edges(core):
        block = nx.Graph(list(component_edges))
        found.append(block)
    found.sort(key=lambda b: (b.number_of_edges(), sorted(b.nodes)))
    return found


def _sorted_rotation(block: nx.Graph) -> Rotation:
    return {v: sorted(block.neighbors(v)) for v in block.nodes}


def _block_lower_bound(block: nx.Graph) -> int:
    value = euler_genus_lower_bound(block.number_of_nodes(), block.number_of_edges(), nx.girth(block))
    return max(1, value)


def _twist(rotation: Rotation, signs: Signs, target: int) -> Optional[Signs]:
    """Flip one edge sign to obtain a nonorientable scheme of Euler genus ``target``."""
    for edge in sorted(signs):
        trial = dict(signs)
        trial[edge] = -trial[edge]
        euler, orientable = _euler_genus(rotation, trial)
        if euler == target and not orientable:
            return trial
    return None


def _combine(outcomes: Sequence[Tuple[Rotation, Signs]], core_nodes: Sequence[int]) -> Tuple[Rotation, Signs]:
    rotation: Rotation = {v: [] for v in core_nodes}
    signs: Signs = {}
    for block_rotation, block_signs in outcomes:
        for v, order in block_rotation.items():
            rotation[v].extend(order)
        signs.update(block_signs)
    return rotation, signs


def _finish(g: SimpleGraph, reduction: Reduction, parts, allow_twists: bool) -> Tuple[EmbeddingScheme, int, bool]:
    rotation, signs = _combine(parts, sorted(reduction.core.nodes))
    rotation, signs = lift_rotation(reduction.steps, rotation, signs, allow_twists)
    full = [rotation.get(v, []) for v in range(g.n)]
    scheme = scheme_from_neighbours(g, full, signs)
    trace = trace_faces(g, scheme)
    return scheme, trace.euler_genus, trace.orientable


def _trivial_scheme(g: SimpleGraph) -> Optional[EmbeddingScheme]:
    rotation = planar_rotation(to_networkx(g))
    if rotation is None:
        return None
    return scheme_from_neighbours(g, [rotation[v] for v in range(g.n)])


def orientable_genus(g: SimpleGraph, budget: int = DEFAULT_GENUS_BUDGET, ceiling: Optional[int] = None) -> GenusResult:
    """
    Minimum genus of an orientable surface ``g`` embeds in.

    With a ``ceiling`` the search only decides values up to it: anything larger
    is reported as ``bounds`` with ``lower = ceiling + 1``. Running out of
    ``budget`` search nodes also yields ``bounds``.
    """
    planar_scheme = _trivial_scheme(g)
    if planar_scheme is not None:
        return GenusResult(EXACT, 0, 0, planar_scheme, None, 0)
    counter = _Counter(budget)
    reduction = reduce_graph(g)
    plans = [(block, planar_rotation(block)) for block in _blocks(reduction.core)]
    lower = {i: (_block_lower_bound(block) + 1) // 2 for i, (block, rotation) in enumerate(plans) if rotation is None}
    lower_total = sum(lower.values())
    obstruction = "euler-bound" if lower_total >= 2 else "nonplanar"
    parts: List[Tuple[Rotation, Signs]] = []
    exact = True
    for i, (block, rotation) in enumerate(plans):
        plus = {_key(u, v): 1 for u, v in block.edges}
        if rotation is not None:
            parts.append((rotation, plus))
            continue
        found = None
        if exact:
            own = lower[i]
            cap = None if ceiling is None else ceiling - (lower_total - own)
            found, reached = _deepen_orientable(block, own, cap, counter)
            lower_total += reached - own
            if reached > own and obstruction != "euler-bound":
                obstruction = "search"
        if found is None:
            exact = False
            found = (_sorted_rotation(block), plus)
        parts.append(found)
    scheme, euler, _ = _finish(g, reduction, parts, allow_twists=False)
    upper = euler // 2
    if exact:
        return GenusResult(EXACT, upper, upper, scheme, obstruction, counter.nodes)
    return GenusResult(BOUNDS, min(lower_total, upper), upper, scheme, obstruction, counter.nodes)


def _deepen_orientable(block: nx.Graph, start: int, cap: Optional[int], counter: _Counter) -> Tuple[Optional[Tuple[Rotation, Signs]], int]:
    """Search genus start, start+1, ...; returns (solution or None, genus reached or proven lower bound)."""
    search = _BlockSearch(block, orientable=True, counter=counter)
    genus = start
    while cap is None or genus <= cap:
        try:
            found = search.search(2 * genus)
        except _BudgetSpent:
            return None, genus
        if found is not None:
            return found, genus
        genus += 1
    return None, genus


def _deepen_euler(block: nx.Graph, start: int, cap: Optional[int], counter: _Counter):
    """
    Smallest Euler genus k of a block, and whether a nonorientable embedding attains it.

    Returns (k, nonorientable solution or None, orientable solution or None, complete flag).
    """
    twisted = _BlockSearch(block, orientable=False, counter=counter)
    straight = _BlockSearch(block, orientable=True, counter=counter)
    k = start
    while cap is None or k <= cap:
        try:
            found_n = twisted.search(k)
            found_o = straight.search(k) if k % 2 == 0 else None
        except _BudgetSpent:
            return k, None, None, False
        if found_n is not None or found_o is not None:
            return k, found_n, found_o, True
        k += 1
    return k, None, None, False


def nonorientable_genus(g: SimpleGraph, budget: int = DEFAULT_GENUS_BUDGET, ceiling: Optional[int] = None) -> GenusResult:
    """
    Minimum number of crosscaps of a nonorientable surface ``g`` embeds in.

    Planar graphs get 0 by convention. The Euler genus is additive over blocks
    and at least one block must be embedded nonorientably, so the answer is the
    sum of block Euler genera plus the smallest extra cost of twisting a block.
    """
    planar_scheme = _trivial_scheme(g)
    if planar_scheme is not None:
        return GenusResult(EXACT, 0, 0, planar_scheme, None, 0)
    counter = _Counter(budget)
    reduction = reduce_graph(g)
    plans = [(block, planar_rotation(block)) for block in _blocks(reduction.core)]
    lower = {i: _block_lower_bound(block) for i, (block, rotation) in enumerate(plans) if rotation is None}
    lower_total = sum(lower.values())
    obstruction = "euler-bound" if lower_total >= 2 else "nonplanar"
    outcomes: List[_BlockOutcome] = []
    exact = True
    for i, (block, rotation) in enumerate(plans):
        plus = {_key(u, v): 1 for u, v in block.edges}
        if rotation is not None:
            # bridges cannot carry a crosscap, planar cyclic blocks pay one
            gap = None if block.number_of_edges() == 1 else 1
            outcomes.append(_BlockOutcome(0, rotation, plus, gap))
            continue
        found_n = found_o = None
        if exact:
            own = lower[i]
            cap = None if ceiling is None else ceiling - (lower_total - own)
            k, found_n, found_o, exact = _deepen_euler(block, own, cap, counter)
            lower_total += k - own
            if k > own and obstruction != "euler-bound":
                obstruction = "search"
        if found_n is not None:
            outcomes.append(_BlockOutcome(k, found_n[0], found_n[1], 0))
        elif found_o is not None:
            outcomes.append(_BlockOutcome(k, found_o[0], found_o[1], 1))
        else:
            outcomes.append(_BlockOutcome(lower.get(i, 0), _sorted_rotation(block), plus, None))
    if exact:
        gap = min(o.twist_gap for o in outcomes if o.twist_gap is not None)
        chosen = next(i for i, o in enumerate(outcomes) if o.twist_gap == gap)
        parts = []
        for i, outcome in enumerate(outcomes):
            signs = outcome.signs
            if i == chosen and gap == 1:
                signs = _twist(outcome.rotation, outcome.signs, outcome.euler + 1)
                if signs is None:
                    raise InvalidScheme("could not twist a block into a nonorientable embedding")
            parts.append((outcome.rotation, signs))
        scheme, euler, orientable = _finish(g, reduction, parts, allow_twists=True)
        total = lower_total + gap
        if euler != total or orientable:
            raise InvalidScheme(f"lifted scheme has Euler genus {euler}, expected {total}")
        return GenusResult(EXACT, total, total, scheme, obstruction, counter.nodes)
    parts = [(o.rotation, o.signs) for o in outcomes]
    scheme, euler, _ = _fallback_nonorientable(g, reduction, parts)
    return GenusResult(BOUNDS, min(lower_total, euler), euler, scheme, obstruction, counter.nodes)


def twisted_scheme(g: SimpleGraph, base: EmbeddingScheme) -> Tuple[EmbeddingScheme, int, bool]:
    """
    Flip the sign of the first non-bridge edge of ``base`` whose flip makes the
    scheme nonorientable. Returns the scheme with its traced Euler genus.
    """
    bridges = {_key(u, v) for u, v in nx.bridges(to_networkx(g))}
    for i, edge in enumerate(g.edges):
        if edge in bridges:
            continue
        signature = list(base.signature)
        signature[i] = -signature[i]
        scheme = EmbeddingScheme(rotation=base.rotation, signature=tuple(signature))
        trace = trace_faces(g, scheme)
        if not trace.orientable:
            return scheme, trace.euler_genus, False
    trace = trace_faces(g, base)
    return base, trace.euler_genus, trace.orientable


def _fallback_nonorientable(g: SimpleGraph, reduction: Reduction, parts) -> Tuple[EmbeddingScheme, int, bool]:
    """Any nonorientable scheme for an upper bound."""
    rotation, signs = _combine(parts, sorted(reduction.core.nodes))
    rotation, signs = lift_rotation(reduction.steps, rotation, signs, allow_twists=True)
    full = [rotation.get(v, []) for v in range(g.n)]
    return twisted_scheme(g, scheme_from_neighbours(g, full, signs))


def genus_lower_bound(g: SimpleGraph) -> Tuple[int, int]:
    """Cheap (orientable, nonorientable) lower bounds from blocks of the reduced core."""
    if _trivial_scheme(g) is not None:
        return 0, 0
    core = reduce_graph(g).core
    gamma = 0
    euler = 0
    for block in _blocks(core):
        if planar_rotation(block) is None:
            bound = _block_lower_bound(block)
            gamma += (bound + 1) // 2
            euler += bound
    return gamma, euler


def nonplanar_block_count(g: SimpleGraph) -> int:
    core = reduce_graph(g).core
    return sum(1 for block in _blocks(core) if planar_rotation(block) is None)
