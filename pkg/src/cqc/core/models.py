# Copyright 2021 - 2024 Universität Tübingen, DKFZ, EMBL, and Universität zu Köln
# for the German Human Genome-Phenome Archive (GHGA)
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Report models emitted by the analyzer. JSON is the canonical rendering; the
tabular formats are flat projections of it.
"""

import json
from enum import StrEnum
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict, Field


def flatten(document: dict[str, Any], prefix: str = "") -> dict[str, Any]:
    """Flatten nested objects into dotted keys; lists become compact JSON text."""
    flat: dict[str, Any] = {}
    for key, value in document.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(flatten(value, prefix=f"{name}."))
        elif isinstance(value, list):
            flat[name] = json.dumps(value, separators=(",", ":"))
        else:
            flat[name] = value
    return flat


class ReportModel(BaseModel):
    """Base of all emitted reports"""

    model_config = ConfigDict(frozen=True)

    def table_rows(self) -> list[dict[str, Any]]:
        """Rows of the tabular projection."""
        return [flatten(self.model_dump(mode="json"))]


class Provenance(BaseModel):
    """Where a report came from"""

    model_config = ConfigDict(frozen=True)

    tool_version: str
    command: str
    seed: int | None = None
    strategy: str | None = None


class BallVertex(BaseModel):
    """A vertex of a ball together with its distance to the center"""

    model_config = ConfigDict(frozen=True)

    vertex: int
    depth: int


class BallView(ReportModel):
    """The subgraph induced by all vertices within ``radius`` of ``center``"""

    center: int
    radius: int
    vertices: list[BallVertex]
    edges: list[tuple[int, int]]


class FormulaId(StrEnum):
    """The closed-form bounds that can be evaluated"""

    THEOREM = "theorem-5"
    COROLLARY = "corollary-5"
    K_LAYER = "lemma-k-layer"
    SIMPLE = "simple"
    STIRLING = "stirling-floor"
    PAIRS = "corollary-2-sets"
    ODD_TRIPLES = "corollary-odd-3-sets"
    QUADRUPLES = "corollary-4-sets"


class BoundReport(ReportModel):
    """Evaluation of one lower bound formula.

    If ``exact`` the value is ``value_numerator / value_denominator_or_precision``,
    otherwise it is ``value_numerator / 10**value_denominator_or_precision``, a value
    rounded down from the true one.
    """

    formula_id: FormulaId
    n: int
    t_or_d: int | None
    M: int
    value_numerator: int
    value_denominator_or_precision: int
    exact: bool
    decimal: str
    validity_note: str
    exceeds_exponential: bool | None = Field(
        default=None,
        description="Whether the value reached e^sqrt(n/2); reported, never asserted.",
    )

    @property
    def value(self) -> Fraction:
        """The (possibly rounded down) value as a fraction."""
        if self.exact:
            return Fraction(self.value_numerator, self.value_denominator_or_precision)
        return Fraction(self.value_numerator, 10**self.value_denominator_or_precision)


class DistanceStatus(StrEnum):
    """How much is known about a distance"""

    EXACT = "exact"
    LOWER_BOUNDED = "lower-bounded-by-cap"
    NONE_EXISTS = "none-exists"
    UNDEFINED = "undefined-K-zero"


class ClassicalParams(ReportModel):
    """Parameters ``[n, k, d]`` of a classical binary code"""

    n: int
    k: int
    d: int | None
    d_status: DistanceStatus
    d_lower_bound: int | None = None


class QuantumParams(ReportModel):
    """Parameters ``[[N, K, D]]`` of the quantum code of a generator matrix.

    ``d`` is the column-dependency distance of the generator matrix, ``d_perp`` the
    least weight of a nonzero pseudo-border (kernel vector of the adjacency matrix).
    """

    r: int
    n: int
    N: int
    K: int
    d: int | None
    d_status: DistanceStatus
    d_perp: int | None
    d_perp_status: DistanceStatus
    D: int | None
    D_status: DistanceStatus
    D_lower_bound: int | None
    degenerate: bool | None
    bound: BoundReport | None
    witness: list[int] | None
    simple_bound_applies: bool
    provenance: Provenance | None = None


class PseudoBorderReport(ReportModel):
    """Smallest t-pseudo-border found for the hypercube on ``[n]``"""

    n: int
    t: int
    mode: str
    status: str
    size: int | None
    size_lower_bound: int | None
    witness: list[list[int]] | None
    bound: BoundReport
    margin: str | None
    simple_bound_holds: bool | None
    provenance: Provenance | None = None


class CheckResult(BaseModel):
    """Outcome of one check of a verification suite"""

    model_config = ConfigDict(frozen=True)

    suite: str
    check: str
    checked: int
    failures: int
    counterexamples: list[str] = Field(default_factory=list)
    informational: bool = False

    @property
    def passed(self) -> bool:
        """Informational checks never fail."""
        return self.informational or self.failures == 0


class VerificationReport(ReportModel):
    """All check results of a verification run"""

    suite: str
    seed: int
    passed: bool
    checks: list[CheckResult]
    provenance: Provenance | None = None

    def table_rows(self) -> list[dict[str, Any]]:
        """One row per check."""
        return [flatten(check.model_dump(mode="json")) for check in self.checks]
