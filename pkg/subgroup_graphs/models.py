"""Serializable report models shared by classification, suites and the CLI."""

# Standard library imports
from typing import Dict, List, Optional

# Third-party imports
from pydantic import BaseModel, ConfigDict, Field

# Constants
ROW_STATUSES = ("pass", "fail", "flagged", "budget")


class WitnessRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: str
    vertices: List[int] = Field(default_factory=list)
    detail: str = ""


class GenusSummary(BaseModel):
    """A genus result without its scheme; the scheme goes to a fixture file."""

    model_config = ConfigDict(frozen=True)

    status: str
    lower: int
    upper: int
    obstruction: Optional[str] = None
    nodes_explored: int = 0
    scheme_ref: Optional[str] = None

    @property
    def exact(self) -> bool:
        return self.status == "exact"

    def equals(self, value: int) -> Optional[bool]:
        """True/False when decided, None when the bounds straddle ``value``."""
        if self.exact:
            return self.lower == value
        if self.lower > value or self.upper < value:
            return False
        return None


class ClassificationReport(BaseModel):
    name: str
    family: str
    label: str
    order: int
    vertices: int
    edges: int
    planar: bool
    orientable_genus: GenusSummary
    nonorientable_genus: GenusSummary
    toroidal: Optional[bool]
    projective_planar: Optional[bool]
    girth: Optional[int] = Field(None, description="None when the graph is acyclic")
    structural: Dict[str, bool]
    x_free: Dict[str, bool]
    alpha: Optional[int]
    theta: Optional[int]
    prime_order_subgroups: int
    witnesses: List[WitnessRecord] = Field(default_factory=list)
    budget_exceeded: bool = False
    flagged: List[str] = Field(default_factory=list)

    @property
    def weakly_alpha_perfect(self) -> Optional[bool]:
        if self.alpha is None or self.theta is None:
            return None
        return self.alpha == self.theta == self.prime_order_subgroups


class SuiteRow(BaseModel):
    suite: str
    family: str
    label: str
    params: Dict[str, int] = Field(default_factory=dict)
    order: int
    property: str
    computed: str
    expected: str
    status: str
    witness_ref: str = ""
    note: str = ""


class SuiteReport(BaseModel):
    suite: str
    max_order: int
    rows: List[SuiteRow] = Field(default_factory=list)
    fixtures: Dict[str, str] = Field(default_factory=dict)

    def count(self, status: str) -> int:
        return sum(1 for row in self.rows if row.status == status)

    @property
    def ok(self) -> bool:
        return self.count("fail") == 0
