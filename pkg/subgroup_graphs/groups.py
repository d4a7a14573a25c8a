"""
Concrete finite groups as multiplication tables.

Every group is a ``FiniteGroup`` whose ``table[x, y]`` is the identifier of
``x * y``; element 0 is the identity. Product-shaped families use little-endian
mixed-radix identifiers, so ``a^r b^s`` is element ``r + |a| * s``.
"""

# Standard library imports
from typing import Callable, List, NamedTuple, Optional, Tuple

# Third-party imports
import numpy as np

from subgroup_graphs.errors import InvalidParameters, OrderBudgetExceeded
from subgroup_graphs.families import (
    AbelianProduct,
    Cyclic,
    Dihedral,
    DirectProduct,
    FamilySpec,
    G3,
    GeneralizedQuaternion,
    MatrixAction,
    Metacyclic,
    Modular,
    Permutation,
    SemidirectCyclic,
)

# Constants
DEFAULT_MAX_ORDER = 512


class FiniteGroup(NamedTuple):
    order: int
    table: np.ndarray
    family: Optional[FamilySpec]
    name: str

    @property
    def identity(self) -> int:
        return 0

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])


class AxiomReport(NamedTuple):
    closure: bool
    identity: bool
    inverses: bool
    associativity: bool
    witness: Optional[Tuple[int, int, int]]

    @property
    def ok(self) -> bool:
        return self.closure and self.identity and self.inverses and self.associativity


def _table_from_pairs(n: int, product: Callable[[np.ndarray, np.ndarray], np.ndarray]) -> np.ndarray:
    """Evaluate ``product`` on all (x, y) id pairs and return an int64 table."""
    ids = np.arange(n, dtype=np.int64)
    return product(ids[:, None], ids[None, :]).astype(np.int64)


def _split_product_table(n: int, m: int, exponent_of: Callable[[np.ndarray], np.ndarray], reduce_n: int) -> np.ndarray:
    """Table for a^r b^s * a^t b^u = a^(r + t*k(s)) b^(s+u) with ids r + n*s."""

    def product(x: np.ndarray, y: np.ndarray) -> np.ndarray:
        r, s = x % n, x // n
        t, u = y % n, y // n
        return (r + t * exponent_of(s)) % reduce_n + n * ((s + u) % m)

    return _table_from_pairs(n * m, product)


def _unit_powers(base: int, count: int, modulus: int) -> np.ndarray:
    return np.array([pow(base, k, modulus) for k in range(count)], dtype=np.int64)


def cyclic_table(n: int) -> np.ndarray:
    ids = np.arange(n, dtype=np.int64)
    return np.add.outer(ids, ids) % n


def dihedral_table(n: int) -> np.ndarray:
    """D_2n with rotation r (id 1) and reflection s (id n)."""
    signs = np.array([1, -1], dtype=np.int64)
    return _split_product_table(n, 2, lambda s: signs[s], n)


def quaternion_table(size: int) -> np.ndarray:
    m = size // 2
    half = m // 2
    signs = np.array([1, -1], dtype=np.int64)

    def product(x: np.ndarray, y: np.ndarray) -> np.ndarray:
        r, s = x % m, x // m
        t, u = y % m, y // m
        extra = half * (s & u)
        return (r + t * signs[s] + extra) % m + m * (s ^ u)

    return _table_from_pairs(size, product)


def metacyclic_table(n: int, m: int, r: int) -> np.ndarray:
    """<a, b | a^n = b^m = 1, bab^-1 = a^r>."""
    powers = _unit_powers(r, m, n)
    return _split_product_table(n, m, lambda s: powers[s], n)


def matrix_action_table(p: int, m: int, matrix: Tuple[int, int, int, int]) -> np.ndarray:
    """(Z_p x Z_p) semidirect Z_m; element v0 + p*v1 + p^2*k."""
    a, b, c, d = matrix
    base = np.array([[a, b], [c, d]], dtype=np.int64)
    powers = [np.eye(2, dtype=np.int64)]
    for _ in range(1, m):
        powers.append((powers[-1] @ base) % p)
    powers = np.stack(powers)
    size = p * p * m
    ids = np.arange(size, dtype=np.int64)
    vec = np.stack([ids % p, (ids // p) % p], axis=1)
    ks = ids // (p * p)
    acted = np.einsum("aij,bj->abi", powers[ks], vec) % p
    total = (vec[:, None, :] + acted) % p
    k_sum = (ks[:, None] + ks[None, :]) % m
    return total[..., 0] + p * total[..., 1] + p * p * k_sum


def g3_table(p: int, q: int, r: int, mu: int, v: int) -> np.ndarray:
    """a^x b^y c^z with b a b^-1 = a^(mu^-1) and c a c^-1 = a^(v^-1); id x + p*(y + q*z)."""
    mu_inv = pow(mu, -1, p)
    v_inv = pow(v, -1, p)
    phi = np.array(
        [[pow(mu_inv, y, p) * pow(v_inv, z, p) % p for z in range(r)] for y in range(q)],
        dtype=np.int64,
    )

    def product(x: np.ndarray, w: np.ndarray) -> np.ndarray:
        ax, hx = x % p, x // p
        aw, hw = w % p, w // p
        y1, z1 = hx % q, hx // q
        y2, z2 = hw % q, hw // q
        a = (ax + aw * phi[y1, z1]) % p
        return a + p * (((y1 + y2) % q) + q * ((z1 + z2) % r))

    return _table_from_pairs(p * q * r, product)


def permutation_table(spec: Permutation) -> np.ndarray:
    """Table for a permutation group; elements sorted by array form, identity first."""
    group = spec.sympy_group()
    forms = np.array(sorted(perm.array_form for perm in group.generate()), dtype=np.int64)
    degree = spec.degree
    weights = degree ** np.arange(degree - 1, -1, -1, dtype=np.int64)
    codes = forms @ weights
    # x * y applies x first, then y (sympy convention)
    ys = np.arange(len(forms))[None, :, None]
    composed = forms[ys, forms[:, None, :]]
    return np.searchsorted(codes, composed @ weights).astype(np.int64)


def _product_table(g_table: np.ndarray, h_table: np.ndarray) -> np.ndarray:
    n1 = g_table.shape[0]
    n2 = h_table.shape[0]
    ids = np.arange(n1 * n2, dtype=np.int64)
    xs, ys = ids % n1, ids // n1
    return g_table[xs[:, None], xs[None, :]] + n1 * h_table[ys[:, None], ys[None, :]]


def direct_product(g: FiniteGroup, h: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Componentwise product; element x + |g|*y stands for (x, y)."""
    order = g.order * h.order
    if order > max_order:
        raise OrderBudgetExceeded(f"{g.name} x {h.name} has order {order} > {max_order}")
    family = None
    if g.family is not None and h.family is not None:
        family = DirectProduct(left=g.family, right=h.family)
    return FiniteGroup(order=order, table=_product_table(g.table, h.table), family=family, name=f"{g.name}x{h.name}")


def _table_for(spec: FamilySpec) -> np.ndarray:
    if isinstance(spec, Cyclic):
        return cyclic_table(spec.n)
    if isinstance(spec, AbelianProduct):
        table = cyclic_table(spec.factors[0])
        for factor in spec.factors[1:]:
            table = _product_table(table, cyclic_table(factor))
        return table
    if isinstance(spec, Dihedral):
        return dihedral_table(spec.n)
    if isinstance(spec, GeneralizedQuaternion):
        return quaternion_table(spec.size)
    if isinstance(spec, Modular):
        n = spec.p ** (spec.alpha - 1)
        return metacyclic_table(n, spec.p, 1 + spec.p ** (spec.alpha - 2))
    if isinstance(spec, SemidirectCyclic):
        return metacyclic_table(spec.q, spec.p ** spec.alpha, spec.multiplier)
    if isinstance(spec, Metacyclic):
        return metacyclic_table(spec.n, spec.m, spec.r)
    if isinstance(spec, MatrixAction):
        return matrix_action_table(spec.p, spec.m, spec.resolved_matrix)
    if isinstance(spec, G3):
        mu, v = spec.units
        return g3_table(spec.p, spec.q, spec.r, mu, v)
    if isinstance(spec, Permutation):
        return permutation_table(spec)
    if isinstance(spec, DirectProduct):
        return _product_table(_table_for(spec.left), _table_for(spec.right))
    raise InvalidParameters(f"cannot build family {spec!r}")


def build_family(spec: FamilySpec, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Build the group described by ``spec`` after validating its parameters."""
    spec.check()
    order = spec.order
    if order > max_order:
        raise OrderBudgetExceeded(f"{spec.display_name} has order {order} > {max_order}")
    table = _table_for(spec)
    if table.shape != (order, order):
        raise InvalidParameters(f"{spec.display_name}: built table {table.shape} does not match order {order}")
    return FiniteGroup(order=order, table=table, family=spec, name=spec.display_name)


def element_order(g: FiniteGroup, x: int) -> int:
    """Smallest k >= 1 with x^k equal to the identity."""
    power, k = x, 1
    while power != 0:
        power = int(g.table[power, x])
        k += 1
    return k


def element_orders(g: FiniteGroup) -> np.ndarray:
    """Orders of all elements at once."""
    ids = np.arange(g.order)
    orders = np.zeros(g.order, dtype=np.int64)
    power = ids.copy()
    k = 1
    while not orders.all():
        orders[(power == 0) & (orders == 0)] = k
        power = g.table[power, ids]
        k += 1
    return orders


def inverses(g: FiniteGroup) -> np.ndarray:
    return np.argmax(g.table == 0, axis=1)


def is_abelian(g: FiniteGroup) -> bool:
    return bool((g.table == g.table.T).all())


def center(g: FiniteGroup) -> List[int]:
    commuting = g.table == g.table.T
    return [int(x) for x in np.flatnonzero(commuting.all(axis=1))]


def verify_group_axioms(g: FiniteGroup) -> AxiomReport:
    """Exhaustively check closure, identity, inverses and associativity."""
    table = np.asarray(g.table)
    n = g.order
    closure = table.shape == (n, n) and bool(((table >= 0) & (table < n)).all())
    if not closure:
        return AxiomReport(False, False, False, False, None)
    ids = np.arange(n)
    identity = bool((table[0] == ids).all() and (table[:, 0] == ids).all())
    has_right = (table == 0).any(axis=1)
    inv = np.argmax(table == 0, axis=1)
    inverses_ok = bool(has_right.all() and (table[inv, ids] == 0).all())
    witness = None
    for a in range(n):
        left = table[table[a]]
        right = table[a][table]
        bad = np.argwhere(left != right)
        if len(bad):
            b, c = bad[0]
            witness = (a, int(b), int(c))
            break
    return AxiomReport(closure, identity, inverses_ok, witness is None, witness)
