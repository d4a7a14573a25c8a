"""Exact independence number and clique cover number by branch and bound."""

# Standard library imports
from typing import List, Optional, Tuple

from subgroup_graphs.errors import SearchBudgetExceeded
from subgroup_graphs.graphs import SimpleGraph, complement

# Constants
DEFAULT_SEARCH_BUDGET = 10**7


class _Counter:
    def __init__(self, budget: int, what: str):
        self.budget = budget
        self.what = what
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(f"{self.what} exceeded {self.budget} search nodes", self.nodes)


def _masks(g: SimpleGraph) -> List[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _bits(mask: int) -> List[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _color_sort(candidates: int, adj: List[int]) -> Tuple[List[int], List[int]]:
    """Greedy colour classes over ``candidates``; returns vertices and running class bounds."""
    order: List[int] = []
    bounds: List[int] = []
    remaining = candidates
    color = 0
    while remaining:
        color += 1
        available = remaining
        while available:
            low = available & -available
            v = low.bit_length() - 1
            order.append(v)
            bounds.append(color)
            remaining &= ~low
            available &= ~low & ~adj[v]
    return order, bounds


def maximum_clique(g: SimpleGraph, budget: int = DEFAULT_SEARCH_BUDGET) -> List[int]:
    """A maximum clique of ``g`` (bitset branch and bound with a colouring bound)."""
    adj = _masks(g)
    counter = _Counter(budget, "maximum clique")
    best: List[int] = []

    def expand(chosen: List[int], candidates: int) -> None:
        nonlocal best
        counter.tick()
        order, bounds = _color_sort(candidates, adj)
        for i in range(len(order) - 1, -1, -1):
            if len(chosen) + bounds[i] <= len(best):
                return
            v = order[i]
            grown = chosen + [v]
            narrowed = candidates & adj[v]
            if narrowed:
                expand(grown, narrowed)
            elif len(grown) > len(best):
                best = sorted(grown)
            candidates &= ~(1 << v)

    if g.n:
        expand([], (1 << g.n) - 1)
    return best


def maximum_independent_set(g: SimpleGraph, budget: int = DEFAULT_SEARCH_BUDGET) -> List[int]:
    return maximum_clique(complement(g), budget)


def independence_number(g: SimpleGraph, budget: int = DEFAULT_SEARCH_BUDGET) -> int:
    """Exact alpha(g)."""
    return len(maximum_independent_set(g, budget))


def _dsatur_greedy(n: int, adj: List[int]) -> List[int]:
    colors = [-1] * n
    for _ in range(n):
        v = _pick_dsatur(n, adj, colors)
        used = {colors[u] for u in _bits(adj[v]) if colors[u] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


def _pick_dsatur(n: int, adj: List[int], colors: List[int]) -> int:
    best_v, best_key = -1, None
    for v in range(n):
        if colors[v] >= 0:
            continue
        neighbours = _bits(adj[v])
        saturation = len({colors[u] for u in neighbours if colors[u] >= 0})
        free_degree = sum(1 for u in neighbours if colors[u] < 0)
        key = (saturation, free_degree, -v)
        if best_key is None or key > best_key:
            best_v, best_key = v, key
    return best_v


def chromatic_coloring(g: SimpleGraph, budget: int = DEFAULT_SEARCH_BUDGET, lower: Optional[int] = None) -> List[int]:
    """
    An optimal proper colouring of ``g`` (DSATUR branch and bound).

    ``lower`` is a known lower bound on the chromatic number (for instance the
    clique number); the search stops as soon as a colouring meets it.
    """
    n = g.n
    if n == 0:
        return []
    adj = _masks(g)
    if lower is None:
        lower = len(maximum_clique(g, budget))
    best = _dsatur_greedy(n, adj)
    best_count = max(best) + 1
    if best_count <= lower:
        return best
    counter = _Counter(budget, "clique cover")
    colors = [-1] * n

    def search(colored: int, used: int) -> bool:
        nonlocal best, best_count
        counter.tick()
        if colored == n:
            if used < best_count:
                best, best_count = list(colors), used
            return best_count <= lower
        v = _pick_dsatur(n, adj, colors)
        blocked = {colors[u] for u in _bits(adj[v]) if colors[u] >= 0}
        for c in range(min(used + 1, best_count - 1)):
            if c >= best_count - 1:
                break
            if c in blocked:
                continue
            colors[v] = c
            if search(colored + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    search(0, 0)
    return best


def minimum_clique_cover(g: SimpleGraph, budget: int = DEFAULT_SEARCH_BUDGET) -> List[List[int]]:
    """Cliques of ``g`` covering every vertex, as few as possible."""
    lower = independence_number(g, budget)
    colors = chromatic_coloring(complement(g), budget, lower=lower)
    classes: dict = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    return sorted(classes.values())


def clique_cover_number(g: SimpleGraph, budget: int = DEFAULT_SEARCH_BUDGET) -> int:
    """Exact theta(g), the chromatic number of the complement."""
    return len(minimum_clique_cover(g, budget))
