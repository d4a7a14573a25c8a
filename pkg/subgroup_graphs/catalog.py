"""
The bounded group catalog the suites sweep over.

Every entry is built from one FamilySpec and carries the family label used by
the classification claims (``Z_{p^2q}``, ``Z_q:2Z_{p^2}``, ``G1`` ...) plus the
primes and exponents that instantiate it. No group appears twice.
"""

# Standard library imports
from typing import Dict, List, NamedTuple, Tuple

# Third-party imports
import sympy

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
    alternating_spec,
    companion_matrix,
    format_family,
    smallest_unit_of_order,
    symmetric_spec,
)
from subgroup_graphs.groups import DEFAULT_MAX_ORDER

Params = Dict[str, int]


class CatalogEntry(NamedTuple):
    key: str
    spec: FamilySpec
    label: str
    params: Params

    @property
    def order(self) -> int:
        return self.spec.order

    @property
    def cyclic(self) -> bool:
        return isinstance(self.spec, Cyclic)


def _prime_exponents(n: int) -> List[Tuple[int, int]]:
    """(prime, exponent) pairs, larger exponents first, then smaller primes."""
    return sorted(sympy.factorint(n).items(), key=lambda item: (-item[1], item[0]))


def _describe_cyclic(n: int) -> Tuple[str, Params]:
    factors = _prime_exponents(n)
    shape = tuple(e for _, e in factors)
    primes = [p for p, _ in factors]
    if len(shape) == 1:
        return "Z_{p^a}", {"p": primes[0], "a": shape[0]}
    if shape == (1, 1):
        return "Z_{pq}", {"p": primes[0], "q": primes[1]}
    if len(shape) == 2 and shape[1] == 1:
        a = shape[0]
        label = f"Z_{{p^{a}q}}" if a <= 4 else "Z_{p^aq}"
        return label, {"p": primes[0], "q": primes[1], "a": a}
    if shape == (2, 2):
        return "Z_{p^2q^2}", {"p": primes[0], "q": primes[1]}
    if shape == (1, 1, 1):
        return "Z_{pqr}", {"p": primes[0], "q": primes[1], "r": primes[2]}
    if shape == (2, 1, 1):
        return "Z_{p^2qr}", {"p": primes[0], "q": primes[1], "r": primes[2]}
    return "Z_n", {"n": n}


def _describe_abelian(factors: Tuple[int, ...]) -> Tuple[str, Params]:
    if len(factors) == 3 and len(set(factors)) == 1 and sympy.isprime(factors[0]):
        return "Z_pxZ_pxZ_p", {"p": factors[0]}
    if len(factors) == 2:
        a, b = factors
        if sympy.isprime(b) and a % b == 0:
            p = b
            rest = a // p
            if rest == 1:
                return "Z_pxZ_p", {"p": p}
            if rest == p:
                return "Z_{p^2}xZ_p", {"p": p}
            if sympy.isprime(rest):
                return "Z_{pq}xZ_p", {"p": p, "q": rest}
    return "abelian", {}


def _describe_matrix(spec: MatrixAction) -> Tuple[str, Params]:
    p, m = spec.p, spec.m
    if (p, m) == (2, 3):
        return "A4", {}
    if m == p:
        return "Heis", {"p": p}
    if (p + 1) % m == 0:
        factors = sympy.factorint(m)
        if len(factors) == 1 and sum(factors.values()) == 1:
            return "G1", {"p": p, "q": m}
        if len(factors) == 1 and sum(factors.values()) == 2:
            return "G2", {"p": p, "q": next(iter(factors))}
        if len(factors) == 2 and all(e == 1 for e in factors.values()):
            q, r = sorted(factors)
            return "G_{p^2qr}", {"p": p, "q": q, "r": r}
    return "mat", {"p": p, "m": m}


def describe(spec: FamilySpec) -> Tuple[str, Params]:
    """Family label and parameters of a spec, as used by the claim registries."""
    if isinstance(spec, Cyclic):
        return _describe_cyclic(spec.n)
    if isinstance(spec, AbelianProduct):
        return _describe_abelian(spec.factors)
    if isinstance(spec, Dihedral):
        n = spec.n
        if n == 4:
            return "M8", {}
        if sympy.isprime(n) and n > 2:
            return "Z_q:Z_p", {"q": n, "p": 2}
        root = sympy.integer_nthroot(n, 2)
        if root[1] and sympy.isprime(root[0]) and root[0] > 2:
            return "Z_{p^2}:Z_q", {"p": int(root[0]), "q": 2}
        return "D_{2n}", {"n": n}
    if isinstance(spec, GeneralizedQuaternion):
        if spec.size == 8:
            return "Q8", {}
        return "Q_{2^n}", {"a": spec.size.bit_length() - 1}
    if isinstance(spec, Modular):
        if spec.p == 2 and spec.alpha == 3:
            return "M8", {}
        if spec.p == 2 and spec.alpha == 4:
            return "M16", {}
        if spec.alpha == 3:
            return "M_{p^3}", {"p": spec.p}
        return "M_{p^a}", {"p": spec.p, "a": spec.alpha}
    if isinstance(spec, SemidirectCyclic):
        params = {"q": spec.q, "p": spec.p}
        if (spec.alpha, spec.t) == (1, 1):
            return "Z_q:Z_p", params
        if (spec.alpha, spec.t) == (2, 2):
            return "Z_q:2Z_{p^2}", params
        if (spec.alpha, spec.t) == (2, 1):
            return "Z_q:Z_{p^2}", params
        return "Z_q:tZ_{p^a}", {**params, "a": spec.alpha, "t": spec.t}
    if isinstance(spec, MatrixAction):
        return _describe_matrix(spec)
    if isinstance(spec, G3):
        return "G3", {"p": spec.p, "q": spec.q, "r": spec.r}
    if isinstance(spec, Metacyclic):
        root = sympy.integer_nthroot(spec.n, 2)
        if root[1] and sympy.isprime(root[0]) and sympy.isprime(spec.m) and spec.r % spec.n != 1:
            return "Z_{p^2}:Z_q", {"p": int(root[0]), "q": spec.m}
        return "meta", {"n": spec.n, "m": spec.m, "r": spec.r}
    if isinstance(spec, Permutation):
        return spec.label or "perm", {}
    if isinstance(spec, DirectProduct):
        left, _ = describe(spec.left)
        right, _ = describe(spec.right)
        if isinstance(spec.left, Cyclic) and spec.left.n == 3 and right == "A4":
            return "Z3xA4", {}
        return "prod", {}
    return "unknown", {}


def _entry(spec: FamilySpec) -> CatalogEntry:
    label, params = describe(spec)
    return CatalogEntry(key=format_family(spec), spec=spec, label=label, params=params)


def _primes_upto(limit: int) -> List[int]:
    return list(sympy.primerange(2, limit + 1))


def _cyclic_specs(max_order: int) -> List[FamilySpec]:
    return [Cyclic(n=n) for n in range(4, max_order + 1) if not sympy.isprime(n)]


def _abelian_specs(max_order: int) -> List[FamilySpec]:
    specs: List[FamilySpec] = []
    for b in range(2, max_order + 1):
        for a in range(b, max_order // b + 1, b):
            specs.append(AbelianProduct(factors=(a, b)))
    for p in (2, 3):
        if p ** 3 <= max_order:
            specs.append(AbelianProduct(factors=(p, p, p)))
    return specs


def _dihedral_specs(max_order: int) -> List[FamilySpec]:
    return [Dihedral(size=2 * n) for n in range(3, max_order // 2 + 1)]


def _quaternion_specs(max_order: int) -> List[FamilySpec]:
    specs: List[FamilySpec] = []
    size = 8
    while size <= max_order:
        specs.append(GeneralizedQuaternion(size=size))
        size *= 2
    return specs


def _modular_specs(max_order: int) -> List[FamilySpec]:
    specs: List[FamilySpec] = []
    for p in _primes_upto(max_order):
        alpha = 4 if p == 2 else 3
        while p ** alpha <= max_order:
            specs.append(Modular(p=p, alpha=alpha))
            alpha += 1
    return specs


def _semidirect_specs(max_order: int) -> List[FamilySpec]:
    specs: List[FamilySpec] = []
    for q in _primes_upto(max_order // 2):
        if q == 2:
            continue
        for p in _primes_upto(q - 1):
            alpha = 1
            while q * p ** alpha <= max_order:
                for t in range(1, alpha + 1):
                    if (q - 1) % p ** t:
                        break
                    if (p, alpha, t) == (2, 1, 1):
                        continue
                    specs.append(SemidirectCyclic(q=q, p=p, alpha=alpha, t=t))
                alpha += 1
    return specs


def _matrix_specs(max_order: int) -> List[FamilySpec]:
    specs: List[FamilySpec] = []
    for p in _primes_upto(max_order):
        if p * p * 3 > max_order and p * p * p > max_order:
            break
        for m in sorted(set(sympy.divisors(p + 1)) | ({p} if p > 2 else set())):
            if m < 3 or p * p * m > max_order:
                continue
            if companion_matrix(p, m) is not None:
                specs.append(MatrixAction(p=p, m=m))
    return specs


def _g3_specs(max_order: int) -> List[FamilySpec]:
    specs: List[FamilySpec] = []
    for p in _primes_upto(max_order):
        divisors = [d for d in sympy.primefactors(p - 1)]
        for i, q in enumerate(divisors):
            for r in divisors[i + 1:]:
                if p * q * r <= max_order:
                    specs.append(G3(p=p, q=q, r=r))
    return specs


def _metacyclic_specs(max_order: int) -> List[FamilySpec]:
    specs: List[FamilySpec] = []
    for p in _primes_upto(max_order):
        if p * p * 3 > max_order:
            break
        for q in sympy.primefactors(p - 1):
            if q == 2 or p * p * q > max_order:
                continue
            r = smallest_unit_of_order(q, p * p)
            if r is not None:
                specs.append(Metacyclic(n=p * p, m=q, r=r))
    return specs


def _sporadic_specs(max_order: int) -> List[FamilySpec]:
    candidates: List[FamilySpec] = [
        symmetric_spec(4),
        alternating_spec(5),
        DirectProduct(left=Cyclic(n=3), right=alternating_spec(4)),
    ]
    return [spec for spec in candidates if spec.order <= max_order]


def build_catalog(max_order: int = DEFAULT_MAX_ORDER) -> List[CatalogEntry]:
    """All catalog groups of order at most ``max_order``, sorted by (order, key)."""
    specs: List[FamilySpec] = []
    for generate in (
        _cyclic_specs,
        _abelian_specs,
        _dihedral_specs,
        _quaternion_specs,
        _modular_specs,
        _semidirect_specs,
        _matrix_specs,
        _g3_specs,
        _metacyclic_specs,
        _sporadic_specs,
    ):
        specs.extend(generate(max_order))
    entries = {}
    for spec in specs:
        entry = _entry(spec)
        entries.setdefault(entry.key, entry)
    return sorted(entries.values(), key=lambda e: (e.order, e.key))


def find_entry(catalog: List[CatalogEntry], label: str, **params: int) -> CatalogEntry:
    """Smallest catalog entry with ``label`` whose parameters include ``params``."""
    for entry in catalog:
        if entry.label == label and all(entry.params.get(k) == v for k, v in params.items()):
            return entry
    raise KeyError(f"no catalog entry {label} {params}")
