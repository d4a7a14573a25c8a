"""
Family specifications for the finite groups the library can build.

Each family is a pydantic model tagged by ``kind``; ``FamilySpec`` is the
discriminated union over all of them. Field constraints cover simple ranges,
``check()`` enforces the arithmetic side conditions, and the text syntax
(``cyclic:64``, ``sd:q=3,p=2,a=2,t=1``, ``prod:<spec>|<spec>``) is handled by
``parse_family`` and ``format_family``.
"""

# Standard library imports
import math
import re
from typing import Annotated, Dict, List, Literal, Optional, Tuple, Union

# Third-party imports
import sympy
from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError

from subgroup_graphs.errors import InvalidParameters

# Constants
ALIAS_MAX_DEGREE = 6
CYCLE_PATTERN = re.compile(r"\(([^()]*)\)")


def multiplicative_order(x: int, modulus: int) -> int:
    """Order of x in the unit group modulo a prime power or prime."""
    if math.gcd(x, modulus) != 1:
        return 0
    return int(sympy.n_order(x % modulus, modulus)) if modulus > 1 else 1


def smallest_unit_of_order(order: int, modulus: int) -> Optional[int]:
    """Smallest i in 1..modulus-1 with multiplicative order exactly ``order``."""
    for i in range(1, modulus):
        if multiplicative_order(i, modulus) == order:
            return i
    return None


class _Family(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    def check(self) -> None:
        """Raise InvalidParameters if the arithmetic side conditions fail."""

    @property
    def order(self) -> int:
        raise NotImplementedError

    @property
    def display_name(self) -> str:
        return format_family(self)


class Cyclic(_Family):
    kind: Literal["cyclic"] = "cyclic"
    n: int = Field(ge=1)

    @property
    def order(self) -> int:
        return self.n

    @property
    def display_name(self) -> str:
        return f"Z{self.n}"


class AbelianProduct(_Family):
    kind: Literal["abelian"] = "abelian"
    factors: Tuple[int, ...] = Field(min_length=1)

    def check(self) -> None:
        if any(f < 1 for f in self.factors):
            raise InvalidParameters("abelian factors must be positive")

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def display_name(self) -> str:
        return "x".join(f"Z{f}" for f in self.factors)


class Dihedral(_Family):
    """Dihedral group of order ``size`` = 2n."""

    kind: Literal["dihedral"] = "dihedral"
    size: int = Field(ge=4)

    def check(self) -> None:
        if self.size % 2:
            raise InvalidParameters(f"dihedral order must be even, got {self.size}")

    @property
    def n(self) -> int:
        return self.size // 2

    @property
    def order(self) -> int:
        return self.size

    @property
    def display_name(self) -> str:
        return f"D{self.size}"


class GeneralizedQuaternion(_Family):
    kind: Literal["genq"] = "genq"
    size: int = Field(ge=8)

    def check(self) -> None:
        if self.size & (self.size - 1):
            raise InvalidParameters(f"quaternion order must be a power of 2, got {self.size}")

    @property
    def order(self) -> int:
        return self.size

    @property
    def display_name(self) -> str:
        return f"Q{self.size}"


class Modular(_Family):
    """M_{p^alpha} = <a, b | a^{p^(alpha-1)} = b^p = 1, bab^-1 = a^{1+p^(alpha-2)}>."""

    kind: Literal["modular"] = "modular"
    p: int = Field(ge=2)
    alpha: int = Field(ge=3)

    def check(self) -> None:
        if not sympy.isprime(self.p):
            raise InvalidParameters(f"modular group needs a prime, got {self.p}")

    @property
    def order(self) -> int:
        return self.p ** self.alpha

    @property
    def display_name(self) -> str:
        return f"M{self.order}"


class SemidirectCyclic(_Family):
    """Z_q semidirect Z_{p^alpha}, the generator acting by a unit of order p^t."""

    kind: Literal["sd"] = "sd"
    q: int = Field(ge=2)
    p: int = Field(ge=2)
    alpha: int = Field(ge=1)
    t: int = Field(ge=0)

    def check(self) -> None:
        if not (sympy.isprime(self.q) and sympy.isprime(self.p)):
            raise InvalidParameters(f"sd needs primes q and p, got q={self.q}, p={self.p}")
        if self.t > self.alpha:
            raise InvalidParameters(f"t={self.t} exceeds alpha={self.alpha}")
        if (self.q - 1) % (self.p ** self.t):
            raise InvalidParameters(
                f"no unit of order {self.p}^{self.t} modulo {self.q}: {self.p ** self.t} does not divide {self.q - 1}"
            )

    @property
    def order(self) -> int:
        return self.q * self.p ** self.alpha

    @property
    def multiplier(self) -> int:
        return smallest_unit_of_order(self.p ** self.t, self.q) or 1

    @property
    def display_name(self) -> str:
        return f"Z{self.q}:{self.t}Z{self.p ** self.alpha}"


class MatrixAction(_Family):
    """(Z_p x Z_p) semidirect Z_m with the generator acting by a matrix of order m."""

    kind: Literal["mat"] = "mat"
    p: int = Field(ge=2)
    m: int = Field(ge=1)
    matrix: Optional[Tuple[int, int, int, int]] = None

    def check(self) -> None:
        if not sympy.isprime(self.p):
            raise InvalidParameters(f"matrix action needs a prime, got {self.p}")
        if self.matrix is not None:
            if matrix_order(self.matrix, self.p) != self.m:
                raise InvalidParameters(
                    f"matrix {list(self.matrix)} does not have order {self.m} in GL2({self.p})"
                )
        elif companion_matrix(self.p, self.m) is None:
            raise InvalidParameters(f"no companion matrix of order {self.m} in GL2({self.p})")

    @property
    def order(self) -> int:
        return self.p * self.p * self.m

    @property
    def resolved_matrix(self) -> Tuple[int, int, int, int]:
        if self.matrix is not None:
            return tuple(x % self.p for x in self.matrix)
        found = companion_matrix(self.p, self.m)
        if found is None:
            raise InvalidParameters(f"no companion matrix of order {self.m} in GL2({self.p})")
        return found

    @property
    def display_name(self) -> str:
        return f"(Z{self.p}xZ{self.p}):Z{self.m}"


class G3(_Family):
    """Z_p semidirect (Z_q x Z_r), b and c acting by units mu and v."""

    kind: Literal["g3"] = "g3"
    p: int = Field(ge=2)
    q: int = Field(ge=2)
    r: int = Field(ge=2)
    mu: Optional[int] = None
    v: Optional[int] = None

    def check(self) -> None:
        if not all(sympy.isprime(x) for x in (self.p, self.q, self.r)):
            raise InvalidParameters("g3 needs primes p, q, r")
        if (self.p - 1) % self.q or (self.p - 1) % self.r:
            raise InvalidParameters(f"q={self.q} and r={self.r} must both divide p-1={self.p - 1}")
        mu, v = self.units
        if mu % self.p == 1 or pow(mu, self.q, self.p) != 1:
            raise InvalidParameters(f"mu={mu} must be a nontrivial q-th root of unity mod {self.p}")
        if v % self.p == 1 or pow(v, self.r, self.p) != 1:
            raise InvalidParameters(f"v={v} must be a nontrivial r-th root of unity mod {self.p}")

    @property
    def units(self) -> Tuple[int, int]:
        mu = self.mu if self.mu is not None else smallest_unit_of_order(self.q, self.p) or 1
        v = self.v if self.v is not None else smallest_unit_of_order(self.r, self.p) or 1
        return mu, v

    @property
    def order(self) -> int:
        return self.p * self.q * self.r

    @property
    def display_name(self) -> str:
        return f"G3({self.p},{self.q},{self.r})"


class Permutation(_Family):
    """Permutation group on 1..degree given by generator cycle strings."""

    kind: Literal["perm"] = "perm"
    degree: int = Field(ge=1)
    generators: Tuple[str, ...] = Field(min_length=1)
    label: Optional[str] = None

    def check(self) -> None:
        for text in self.generators:
            parse_cycles(text, self.degree)

    def sympy_group(self) -> "sympy.combinatorics.PermutationGroup":
        from sympy.combinatorics import Permutation as SymPermutation
        from sympy.combinatorics import PermutationGroup

        perms = [SymPermutation(parse_cycles(text, self.degree), size=self.degree) for text in self.generators]
        return PermutationGroup(perms)

    @property
    def order(self) -> int:
        self.check()
        return int(self.sympy_group().order())

    @property
    def display_name(self) -> str:
        return self.label or f"Perm{self.degree}<{';'.join(self.generators)}>"


class Metacyclic(_Family):
    """<a, b | a^n = b^m = 1, bab^-1 = a^r> with r^m = 1 mod n."""

    kind: Literal["meta"] = "meta"
    n: int = Field(ge=1)
    m: int = Field(ge=1)
    r: int = Field(ge=0)

    def check(self) -> None:
        if math.gcd(self.r, self.n) != 1 and self.n > 1:
            raise InvalidParameters(f"r={self.r} is not a unit modulo {self.n}")
        if pow(self.r, self.m, self.n) != 1 % self.n:
            raise InvalidParameters(f"r^m = {self.r}^{self.m} is not 1 modulo {self.n}")

    @property
    def order(self) -> int:
        return self.n * self.m

    @property
    def display_name(self) -> str:
        return f"Z{self.n}:Z{self.m}"


class DirectProduct(_Family):
    kind: Literal["prod"] = "prod"
    left: "FamilySpec"
    right: "FamilySpec"

    def check(self) -> None:
        self.left.check()
        self.right.check()

    @property
    def order(self) -> int:
        return self.left.order * self.right.order

    @property
    def display_name(self) -> str:
        return f"{self.left.display_name}x{self.right.display_name}"


FamilySpec = Annotated[
    Union[
        Cyclic,
        AbelianProduct,
        Dihedral,
        GeneralizedQuaternion,
        Modular,
        SemidirectCyclic,
        MatrixAction,
        G3,
        Permutation,
        Metacyclic,
        DirectProduct,
    ],
    Field(discriminator="kind"),
]

DirectProduct.model_rebuild()
FAMILY_ADAPTER = TypeAdapter(FamilySpec)


def matrix_order(matrix: Tuple[int, int, int, int], p: int) -> int:
    """Multiplicative order of a 2x2 matrix over F_p, 0 if singular."""
    a, b, c, d = (x % p for x in matrix)
    if (a * d - b * c) % p == 0:
        return 0
    cur = (a, b, c, d)
    limit = (p * p - 1) * (p * p - p)
    for k in range(1, limit + 1):
        if cur == (1, 0, 0, 1):
            return k
        w, x, y, z = cur
        cur = ((w * a + x * c) % p, (w * b + x * d) % p, (y * a + z * c) % p, (y * b + z * d) % p)
    return 0


def companion_matrix(p: int, m: int) -> Optional[Tuple[int, int, int, int]]:
    """Smallest [[0,-1],[1,l]] over F_p with order m, row major."""
    for l in range(p):
        candidate = (0, (-1) % p, 1, l)
        if matrix_order(candidate, p) == m:
            return candidate
    return None


def parse_cycles(text: str, degree: int) -> List[List[int]]:
    """Parse cycle notation like ``(123)(45)`` or ``(1,2,3)`` into 0-based cycles."""
    stripped = text.strip()
    if not stripped or stripped == "()":
        return []
    cycles = CYCLE_PATTERN.findall(stripped)
    if "".join(f"({c})" for c in cycles).replace(" ", "") != stripped.replace(" ", ""):
        raise InvalidParameters(f"malformed cycle string: {text!r}")
    result = []
    seen = set()
    for body in cycles:
        body = body.strip()
        if not body:
            continue
        if "," in body or " " in body:
            points = [int(tok) for tok in re.split(r"[,\s]+", body) if tok]
        else:
            points = [int(ch) for ch in body]
        for point in points:
            if point < 1 or point > degree:
                raise InvalidParameters(f"point {point} outside 1..{degree} in {text!r}")
            if point in seen:
                raise InvalidParameters(f"point {point} repeated in {text!r}")
            seen.add(point)
        result.append([point - 1 for point in points])
    return result


def alternating_spec(n: int) -> Permutation:
    """A_n generated by the 3-cycles (1 2 k)."""
    if n < 3 or n > ALIAS_MAX_DEGREE:
        raise InvalidParameters(f"alt:n supports 3 <= n <= {ALIAS_MAX_DEGREE}, got {n}")
    gens = tuple(f"(1,2,{k})" for k in range(3, n + 1))
    return Permutation(degree=n, generators=gens, label=f"A{n}")


def symmetric_spec(n: int) -> Permutation:
    """S_n generated by (1 2 ... n) and (1 2)."""
    if n < 2 or n > ALIAS_MAX_DEGREE:
        raise InvalidParameters(f"sym:n supports 2 <= n <= {ALIAS_MAX_DEGREE}, got {n}")
    long_cycle = "(" + ",".join(str(k) for k in range(1, n + 1)) + ")"
    return Permutation(degree=n, generators=(long_cycle, "(1,2)"), label=f"S{n}")


def _split_top_level(text: str, sep: str) -> List[str]:
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return parts


def _key_values(body: str) -> Dict[str, str]:
    """Parse ``k=v,k=v``; comma-separated pieces without '=' extend the previous value."""
    values: Dict[str, str] = {}
    last = None
    for piece in body.split(","):
        if "=" in piece:
            key, _, value = piece.partition("=")
            last = key.strip()
            values[last] = value.strip()
        elif last is not None:
            values[last] += "," + piece.strip()
        else:
            raise InvalidParameters(f"expected key=value in {body!r}")
    return values


def _int(values: Dict[str, str], key: str, default: Optional[int] = None) -> Optional[int]:
    if key not in values:
        if default is None:
            raise InvalidParameters(f"missing parameter {key!r}")
        return default
    try:
        return int(values[key])
    except ValueError as exc:
        raise InvalidParameters(f"parameter {key}={values[key]!r} is not an integer") from exc


def _build(data: dict) -> "FamilySpec":
    try:
        spec = FAMILY_ADAPTER.validate_python(data)
    except ValidationError as exc:
        raise InvalidParameters(f"invalid family parameters {data}: {exc.errors()[0]['msg']}") from exc
    spec.check()
    return spec


def parse_family(text: str) -> "FamilySpec":
    """Parse the canonical text syntax into a validated FamilySpec."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        return parse_family(text[1:-1])
    kind, sep, body = text.partition(":")
    if not sep:
        raise InvalidParameters(f"family text must look like kind:params, got {text!r}")
    kind = kind.strip().lower()
    body = body.strip()
    try:
        if kind == "cyclic":
            return _build({"kind": "cyclic", "n": int(body)})
        if kind == "abelian":
            return _build({"kind": "abelian", "factors": tuple(int(f) for f in body.lower().split("x"))})
        if kind == "dihedral":
            return _build({"kind": "dihedral", "size": int(body)})
        if kind == "genq":
            return _build({"kind": "genq", "size": int(body)})
        if kind == "modular":
            p, alpha = (int(x) for x in body.split(","))
            return _build({"kind": "modular", "p": p, "alpha": alpha})
        if kind == "alt":
            return alternating_spec(int(body))
        if kind == "sym":
            return symmetric_spec(int(body))
    except ValueError as exc:
        raise InvalidParameters(f"cannot parse {text!r}: {exc}") from exc
    if kind == "sd":
        kv = _key_values(body)
        return _build({"kind": "sd", "q": _int(kv, "q"), "p": _int(kv, "p"), "alpha": _int(kv, "a", 1), "t": _int(kv, "t", 1)})
    if kind == "mat":
        kv = _key_values(body)
        matrix = None
        if "M" in kv:
            try:
                matrix = tuple(int(x) for x in kv["M"].split(","))
            except ValueError as exc:
                raise InvalidParameters(f"matrix entries must be integers: {kv['M']!r}") from exc
            if len(matrix) != 4:
                raise InvalidParameters("M needs four entries a,b,c,d")
        return _build({"kind": "mat", "p": _int(kv, "p"), "m": _int(kv, "m"), "matrix": matrix})
    if kind == "g3":
        kv = _key_values(body)
        data = {"kind": "g3", "p": _int(kv, "p"), "q": _int(kv, "q"), "r": _int(kv, "r")}
        if "mu" in kv:
            data["mu"] = _int(kv, "mu")
        if "v" in kv:
            data["v"] = _int(kv, "v")
        return _build(data)
    if kind == "meta":
        kv = _key_values(body)
        return _build({"kind": "meta", "n": _int(kv, "n"), "m": _int(kv, "m"), "r": _int(kv, "r")})
    if kind == "perm":
        kv = _key_values(body)
        if "gens" not in kv:
            raise InvalidParameters("perm needs gens=...")
        gens = tuple(g.strip() for g in kv["gens"].split(";") if g.strip())
        return _build({"kind": "perm", "degree": _int(kv, "deg"), "generators": gens})
    if kind == "prod":
        parts = _split_top_level(body, "|")
        if len(parts) != 2:
            raise InvalidParameters(f"prod needs exactly two factors separated by '|': {text!r}")
        left, right = (parse_family(part) for part in parts)
        return DirectProduct(left=left, right=right)
    raise InvalidParameters(f"unknown family kind {kind!r}")


def format_family(spec: "FamilySpec") -> str:
    """Canonical text for a FamilySpec; parse_family(format_family(s)) == s."""
    if isinstance(spec, Cyclic):
        return f"cyclic:{spec.n}"
    if isinstance(spec, AbelianProduct):
        return "abelian:" + "x".join(str(f) for f in spec.factors)
    if isinstance(spec, Dihedral):
        return f"dihedral:{spec.size}"
    if isinstance(spec, GeneralizedQuaternion):
        return f"genq:{spec.size}"
    if isinstance(spec, Modular):
        return f"modular:{spec.p},{spec.alpha}"
    if isinstance(spec, SemidirectCyclic):
        return f"sd:q={spec.q},p={spec.p},a={spec.alpha},t={spec.t}"
    if isinstance(spec, MatrixAction):
        text = f"mat:p={spec.p},m={spec.m}"
        if spec.matrix is not None:
            text += ",M=" + ",".join(str(x) for x in spec.matrix)
        return text
    if isinstance(spec, G3):
        text = f"g3:p={spec.p},q={spec.q},r={spec.r}"
        if spec.mu is not None:
            text += f",mu={spec.mu}"
        if spec.v is not None:
            text += f",v={spec.v}"
        return text
    if isinstance(spec, Permutation):
        if spec.label and spec.label[0] in "AS" and spec.label[1:].isdigit():
            n = int(spec.label[1:])
            alias = alternating_spec(n) if spec.label[0] == "A" else symmetric_spec(n)
            if alias == spec:
                return ("alt:" if spec.label[0] == "A" else "sym:") + str(n)
        return f"perm:deg={spec.degree},gens=" + ";".join(spec.generators)
    if isinstance(spec, Metacyclic):
        return f"meta:n={spec.n},m={spec.m},r={spec.r}"
    if isinstance(spec, DirectProduct):
        parts = []
        for part in (spec.left, spec.right):
            text = format_family(part)
            parts.append(f"({text})" if isinstance(part, DirectProduct) else text)
        return "prod:" + "|".join(parts)
    raise InvalidParameters(f"unknown family {spec!r}")
