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

"""Parameters of classical codes and of the CSS code built from a Cayley graph."""

import logging
from dataclasses import dataclass
from typing import Any, NamedTuple

from cqc.core import bounds
from cqc.core.border import min_pseudo_border_not_border
from cqc.core.cayley import (
    DEFAULT_DENSE_MAX_R,
    DEFAULT_MAX_R,
    GeneratorSpec,
    build_graph,
    classical_distance,
)
from cqc.core.exceptions import OddGeneratorCountError, TheoremViolationError
from cqc.core.gf2 import (
    DEFAULT_TABLE_LIMIT,
    BitMatrix,
    CosetSearchResult,
    SearchStatus,
    SearchStrategy,
    kernel_basis,
    min_weight_in_coset,
    rank,
)
from cqc.core.models import BoundReport, ClassicalParams, DistanceStatus, QuantumParams

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchLimits:
    """Size limits and search knobs shared by all exact computations."""

    max_r: int = DEFAULT_MAX_R
    dense_max_r: int = DEFAULT_DENSE_MAX_R
    table_limit: int = DEFAULT_TABLE_LIMIT
    candidate_budget: int | None = None
    strategy: SearchStrategy = SearchStrategy.AUTO

    def search_options(self) -> dict[str, Any]:
        """Keyword arguments for ``min_weight_in_coset``."""
        return {
            "strategy": self.strategy,
            "table_limit": self.table_limit,
            "candidate_budget": self.candidate_budget,
        }


def distance_status(search: CosetSearchResult) -> DistanceStatus:
    """Translate a search outcome into the status of the distance it measures."""
    return {
        SearchStatus.FOUND: DistanceStatus.EXACT,
        SearchStatus.CAP_EXHAUSTED: DistanceStatus.LOWER_BOUNDED,
        SearchStatus.NONE_EXISTS: DistanceStatus.NONE_EXISTS,
    }[search.status]


def kernel_code_params(
    parity_check: BitMatrix, cap: int | None = None, **search_options
) -> ClassicalParams:
    """``[n, k, d]`` of the code ``{x : parity_check · x = 0}``."""
    search = min_weight_in_coset(
        parity_check, BitMatrix.zeros(0, parity_check.cols), cap, **search_options
    )
    return ClassicalParams(
        n=parity_check.cols,
        k=parity_check.cols - rank(parity_check),
        d=search.weight,
        d_status=distance_status(search),
        d_lower_bound=search.lower_bound,
    )


def generated_code_params(
    generator: BitMatrix, cap: int | None = None, **search_options
) -> ClassicalParams:
    """``[n, k, d]`` of the code spanned by the rows of ``generator``."""
    return kernel_code_params(kernel_basis(generator), cap, **search_options)


def _effective_d(search: CosetSearchResult) -> int | None:
    """Proven lower bound on ``d``, ``None`` when no column dependency exists."""
    if search.status is SearchStatus.NONE_EXISTS:
        return None
    return search.lower_bound


def _distance_bound(
    n: int, search: CosetSearchResult, digits: int
) -> BoundReport | None:
    d = _effective_d(search)
    if d is not None and d < 5:
        return None
    return bounds.corollary_bound(n, d, digits=digits)


def quantum_params(
    spec: GeneratorSpec,
    cap: int | None = None,
    *,
    distance_cap: int | None = None,
    limits: SearchLimits | None = None,
    digits: int = bounds.DEFAULT_DIGITS,
) -> QuantumParams:
    """``[[N, K, D]]`` of the quantum code of ``spec``.

    ``cap`` bounds the search for ``D`` and ``d_perp`` (default ``2 + n``),
    ``distance_cap`` the search for the column-dependency distance ``d``.
    """
    if spec.n % 2:
        error = OddGeneratorCountError(n=spec.n)
        log.error(error)
        raise error
    limits = limits or SearchLimits()
    options = limits.search_options()
    cap = spec.n + 2 if cap is None else cap

    graph = build_graph(spec, max_r=limits.max_r, dense_max_r=limits.dense_max_r)
    adjacency = graph.adjacency_matrix()
    adjacency_rank = rank(adjacency)
    N = graph.vertex_count
    K = N - 2 * adjacency_rank
    if K < 0:
        raise RuntimeError(f"Adjacency rank {adjacency_rank} exceeds N / 2 = {N // 2}.")
    log.info(f"Quantum code of length N = {N} with K = {K} logical qubits.")

    d_search = classical_distance(spec, distance_cap, **options)
    d_perp_search = min_weight_in_coset(
        adjacency, BitMatrix.zeros(0, N), cap, **options
    )
    bound = _distance_bound(spec.n, d_search, digits)
    d_effective = _effective_d(d_search)
    simple_applies = d_effective is None or d_effective >= 7

    D: int | None = None
    D_status = DistanceStatus.UNDEFINED
    D_lower: int | None = None
    witness: list[int] | None = None
    if K > 0:
        border_search = min_pseudo_border_not_border(graph, cap, **options)
        D = border_search.size
        D_lower = border_search.search.lower_bound
        D_status = distance_status(border_search.search)
        if border_search.witness is not None:
            witness = border_search.witness.vertices()
        _check_bounds(D, bound, simple_applies, spec.n)

    degenerate = None
    if D is not None and d_perp_search.weight is not None:
        degenerate = D > d_perp_search.weight
    return QuantumParams(
        r=spec.r,
        n=spec.n,
        N=N,
        K=K,
        d=d_search.weight,
        d_status=distance_status(d_search),
        d_perp=d_perp_search.weight,
        d_perp_status=distance_status(d_perp_search),
        D=D,
        D_status=D_status,
        D_lower_bound=D_lower,
        degenerate=degenerate,
        bound=bound,
        witness=witness,
        simple_bound_applies=simple_applies,
    )


def _check_bounds(
    D: int | None, bound: BoundReport | None, simple_applies: bool, n: int
):
    if D is None:
        return
    if bound is not None and D < bound.value:
        error = TheoremViolationError(quantity="D", value=D, bound=bound.decimal)
        log.critical(error)
        raise error
    if simple_applies and not bounds.counting_floor_holds(D, n):
        error = TheoremViolationError(quantity="D", value=D, bound=f"1 + {n}/2")
        log.critical(error)
        raise error


class DegeneracyReport(NamedTuple):
    """Dual distance against quantum distance."""

    d_perp: int | None
    D: int | None
    degenerate: bool | None


def degeneracy_report(
    spec: GeneratorSpec,
    cap: int | None = None,
    *,
    limits: SearchLimits | None = None,
) -> DegeneracyReport:
    """Whether the quantum distance exceeds the least weight of a pseudo-border."""
    params = quantum_params(spec, cap, limits=limits)
    return DegeneracyReport(
        d_perp=params.d_perp, D=params.D, degenerate=params.degenerate
    )
