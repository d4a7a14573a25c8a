"""
Subgroup lattice enumeration and the counting invariants built on it.

Subgroups are stored as sorted element tuples plus an integer bitmask, so
intersection and containment tests are single integer operations.
"""

# Standard library imports
import csv
import io
from collections import Counter
from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple, Union

# Third-party imports
import numpy as np
import sympy

from subgroup_graphs.errors import AmbientMismatch, InvalidParameters, NotADivisor, OrderBudgetExceeded
from subgroup_graphs.groups import DEFAULT_MAX_ORDER, FiniteGroup, inverses

# Constants
LATTICE_CSV_HEADER = ("index", "order", "is_normal", "elements")


class Subgroup(NamedTuple):
    elements: Tuple[int, ...]
    parent_order: int
    mask: int

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        return isinstance(x, (int, np.integer)) and bool(self.mask >> int(x) & 1)


class SubgroupLattice(NamedTuple):
    group: FiniteGroup
    all: Tuple[Subgroup, ...]
    proper_nontrivial: Tuple[int, ...]
    generators: Tuple[Tuple[int, ...], ...]

    def proper_subgroups(self) -> List[Subgroup]:
        return [self.all[i] for i in self.proper_nontrivial]


def make_subgroup(elements: Iterable[int], parent_order: int) -> Subgroup:
    ordered = tuple(sorted({int(x) for x in elements}))
    mask = 0
    for x in ordered:
        mask |= 1 << x
    return Subgroup(elements=ordered, parent_order=parent_order, mask=mask)


def _closure(table: np.ndarray, start: np.ndarray, gens: Sequence[int]) -> np.ndarray:
    """Close a boolean membership vector under right multiplication by ``gens``."""
    inside = start.copy()
    frontier = np.flatnonzero(inside)
    gens = np.asarray(list(gens), dtype=np.int64)
    if len(gens) == 0:
        return inside
    while len(frontier):
        reached = np.unique(table[frontier][:, gens])
        fresh = reached[~inside[reached]]
        inside[fresh] = True
        frontier = fresh
    return inside


def generated_subgroup(g: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``seed``."""
    gens = sorted({int(x) for x in seed})
    start = np.zeros(g.order, dtype=bool)
    start[0] = True
    inside = _closure(g.table, start, gens)
    return make_subgroup(np.flatnonzero(inside), g.order)


def enumerate_subgroups(g: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER) -> SubgroupLattice:
    """
    Every subgroup of ``g``, canonically ordered by (order, elements).

    Starts from the cyclic subgroups and keeps joining a known subgroup with a
    cyclic one it does not contain until nothing new appears. Every subgroup is
    reached because it is generated by adding one element at a time.
    """
    if g.order > max_order:
        raise OrderBudgetExceeded(f"{g.name} has order {g.order} > {max_order}")
    table = g.table
    known: Dict[int, Tuple[np.ndarray, Tuple[int, ...]]] = {}
    cyclic: List[Tuple[int, int]] = []
    for x in range(g.order):
        start = np.zeros(g.order, dtype=bool)
        start[0] = True
        inside = _closure(table, start, [x])
        mask = _mask_of(inside)
        if mask not in known:
            known[mask] = (inside, (x,) if x else ())
            cyclic.append((x, mask))
    queue = list(known)
    position = 0
    while position < len(queue):
        mask = queue[position]
        position += 1
        inside, gens = known[mask]
        for z, z_mask in cyclic:
            if z_mask & ~mask == 0:
                continue
            joined = _closure(table, inside, gens + (z,))
            joined_mask = _mask_of(joined)
            if joined_mask not in known:
                known[joined_mask] = (joined, gens + (z,))
                queue.append(joined_mask)
    entries = []
    for mask, (inside, gens) in known.items():
        entries.append((make_subgroup(np.flatnonzero(inside), g.order), gens))
    entries.sort(key=lambda item: (item[0].order, item[0].elements))
    subgroups = tuple(sub for sub, _ in entries)
    proper = tuple(i for i, sub in enumerate(subgroups) if 1 < sub.order < g.order)
    return SubgroupLattice(group=g, all=subgroups, proper_nontrivial=proper, generators=tuple(gens for _, gens in entries))


def _mask_of(inside: np.ndarray) -> int:
    packed = np.packbits(inside, bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def intersect_subgroups(a: Subgroup, b: Subgroup) -> Subgroup:
    if a.parent_order != b.parent_order:
        raise AmbientMismatch(f"subgroups of groups of order {a.parent_order} and {b.parent_order}")
    elements = [x for x in a.elements if b.mask >> x & 1]
    return make_subgroup(elements, a.parent_order)


def prime_order_count(lat: SubgroupLattice) -> int:
    """Number of proper nontrivial subgroups of prime order."""
    return sum(1 for sub in lat.proper_subgroups() if sympy.isprime(sub.order))


def sylow_count(lat: SubgroupLattice, p: int) -> int:
    """n_p: the number of subgroups of the maximal p-power order."""
    if not sympy.isprime(p):
        raise InvalidParameters(f"{p} is not prime")
    n = lat.group.order
    if n % p:
        raise NotADivisor(f"{p} does not divide {n}")
    sylow = 1
    while n % (sylow * p) == 0:
        sylow *= p
    return sum(1 for sub in lat.all if sub.order == sylow)


def subgroup_counts_by_order(lat: SubgroupLattice) -> Dict[int, int]:
    return dict(sorted(Counter(sub.order for sub in lat.all).items()))


def is_normal(g: FiniteGroup, h: Subgroup) -> bool:
    """True iff x h x^-1 lies in h for every x in g."""
    elements = np.asarray(h.elements, dtype=np.int64)
    inv = inverses(g)
    ids = np.arange(g.order)
    conjugates = g.table[g.table[ids[:, None], elements[None, :]], inv[:, None]]
    member = np.zeros(g.order, dtype=bool)
    member[elements] = True
    return bool(member[conjugates].all())


def normal_flags(lat: SubgroupLattice) -> List[bool]:
    return [is_normal(lat.group, sub) for sub in lat.all]


def minimal_generators(g: FiniteGroup, h: Union[Subgroup, Sequence[int]]) -> Tuple[int, ...]:
    """A short generating set for h, chosen greedily from its largest-order elements."""
    elements = h.elements if isinstance(h, Subgroup) else tuple(sorted(h))
    target = len(elements)
    cyclic_sizes = {x: generated_subgroup(g, [x]).order for x in elements}
    chosen: List[int] = []
    current = generated_subgroup(g, [])
    for x in sorted(elements, key=lambda e: (-cyclic_sizes[e], e)):
        if current.order == target:
            break
        if x in current:
            continue
        chosen.append(x)
        current = generated_subgroup(g, chosen)
    return tuple(chosen)


def generators_label(g: FiniteGroup, h: Subgroup) -> str:
    gens = minimal_generators(g, h)
    return f"|H|={h.order} <{','.join(str(x) for x in gens)}>"


def export_lattice_csv(lat: SubgroupLattice) -> str:
    """One row per subgroup: index, order, normality flag and space-free comma-joined elements."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(LATTICE_CSV_HEADER)
    for index, (sub, normal) in enumerate(zip(lat.all, normal_flags(lat))):
        writer.writerow([index, sub.order, int(normal), ",".join(str(x) for x in sub.elements)])
    return buffer.getvalue()
