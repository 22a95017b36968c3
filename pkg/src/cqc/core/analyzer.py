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

"""The service orchestrating code analysis, pseudo-border searches, verification and
bound evaluation.
"""

import logging
from fractions import Fraction

import numpy as np
from pydantic import Field, NonNegativeInt, PositiveInt
from pydantic_settings import BaseSettings

from cqc import __version__
from cqc.core import bounds, models
from cqc.core.cayley import (
    DEFAULT_DENSE_MAX_R,
    DEFAULT_DISTANCE_CAP,
    DEFAULT_MAX_R,
    GeneratorSpec,
)
from cqc.core.csscode import SearchLimits, quantum_params
from cqc.core.exceptions import ParameterRangeError
from cqc.core.gf2 import DEFAULT_TABLE_LIMIT, SearchStatus, SearchStrategy
from cqc.core.hypercube import (
    DEFAULT_COLUMN_LIMIT,
    DEFAULT_FLIP_BUDGET,
    flip_descent,
    minimal_t_pseudo_border,
    random_t_pseudo_border,
)
from cqc.core.models import DistanceStatus
from cqc.core.verification import VerificationContext, run_suite, suite_names
from cqc.ports.inbound.analyzer import CodeAnalyzerPort

log = logging.getLogger(__name__)

DEFAULT_SEED = 20240229


class CodeAnalyzerConfig(BaseSettings):
    """Config parameters needed for the CodeAnalyzer."""

    classical_distance_cap: PositiveInt = Field(
        DEFAULT_DISTANCE_CAP,
        description="Largest weight searched for the classical distance d of the"
        + " generator matrix.",
        examples=[20],
    )
    quantum_distance_cap: PositiveInt | None = Field(
        None,
        description="Largest weight searched for D and d_perp. If unset, 2 + n is"
        + " used.",
        examples=[None, 12],
    )
    max_graph_r: PositiveInt = Field(
        DEFAULT_MAX_R,
        description="Largest number of rows r of an accepted generator matrix.",
        examples=[20],
    )
    dense_matrix_max_r: PositiveInt = Field(
        DEFAULT_DENSE_MAX_R,
        description="Largest r for which the dense 2^r x 2^r adjacency matrix is"
        + " built.",
        examples=[14],
    )
    syndrome_table_limit: PositiveInt = Field(
        DEFAULT_TABLE_LIMIT,
        description="Memory in bytes the syndrome table search may use before the"
        + " enumeration strategy takes over.",
        examples=[134217728],
    )
    search_candidate_budget: PositiveInt | None = Field(
        None,
        description="Number of candidates the enumeration strategy checks before"
        + " giving up. Unlimited if unset.",
        examples=[None, 1000000],
    )
    search_strategy: SearchStrategy = Field(
        SearchStrategy.AUTO,
        description="Strategy of the exact minimum weight searches.",
        examples=["auto", "enumerate", "syndrome-table"],
    )
    ball_column_limit: PositiveInt = Field(
        DEFAULT_COLUMN_LIMIT,
        description="Largest number of hypercube subsets in a t-pseudo-border search.",
        examples=[4096],
    )
    flip_budget: PositiveInt = Field(
        DEFAULT_FLIP_BUDGET,
        description="Largest number of flips of the heuristic pseudo-border descent.",
        examples=[10000],
    )
    default_seed: NonNegativeInt = Field(
        DEFAULT_SEED,
        description="Seed of randomized sweeps and heuristics when none is given.",
        examples=[DEFAULT_SEED],
    )
    verify_sample_size: PositiveInt | None = Field(
        None,
        description="Number of random r = 4 generator matrices in the quantum distance"
        + " verification suite. If unset, one matrix of every class of r = 4 matrices"
        + " equal up to an invertible linear map is checked.",
        examples=[None, 60],
    )
    decimal_digits: PositiveInt = Field(
        bounds.DEFAULT_DIGITS,
        description="Decimals of rounded down bound values.",
        examples=[12],
    )


class CodeAnalyzer(CodeAnalyzerPort):
    """Computes code parameters, pseudo-borders, bounds and verification reports."""

    def __init__(self, *, config: CodeAnalyzerConfig):
        self._config = config

    @property
    def limits(self) -> SearchLimits:
        """Search limits derived from the config."""
        return SearchLimits(
            max_r=self._config.max_graph_r,
            dense_max_r=self._config.dense_matrix_max_r,
            table_limit=self._config.syndrome_table_limit,
            candidate_budget=self._config.search_candidate_budget,
            strategy=self._config.search_strategy,
        )

    def _provenance(self, command: str, seed: int | None = None) -> models.Provenance:
        return models.Provenance(
            tool_version=__version__,
            command=command,
            seed=seed,
            strategy=str(self._config.search_strategy),
        )

    def analyze(
        self, *, spec: GeneratorSpec, cap: int | None = None
    ) -> models.QuantumParams:
        """Compute ``[[N, K, D]]`` together with ``d``, ``d_perp``, the degeneracy flag
        and the applicable distance bound.

        Raises IncompleteSearchError when ``D`` is only lower-bounded; the partial
        report is attached.
        """
        params = quantum_params(
            spec,
            cap if cap is not None else self._config.quantum_distance_cap,
            distance_cap=self._config.classical_distance_cap,
            limits=self.limits,
            digits=self._config.decimal_digits,
        )
        report = params.model_copy(update={"provenance": self._provenance("analyze")})
        if report.D_status is DistanceStatus.LOWER_BOUNDED:
            error = self.IncompleteSearchError(
                what="the quantum distance D", report=report
            )
            log.error(error)
            raise error
        return report

    def _exact_pseudoborder(
        self, n: int, t: int, cap: int | None
    ) -> tuple[str, int | None, int | None, list[list[int]] | None]:
        search = minimal_t_pseudo_border(
            n,
            t,
            cap,
            column_limit=self._config.ball_column_limit,
            **self.limits.search_options(),
        )
        witness = None if search.witness is None else search.witness.to_json()
        return str(search.status), search.size, search.lower_bound, witness

    def _heuristic_pseudoborder(
        self, n: int, t: int, seed: int
    ) -> tuple[str, int | None, int | None, list[list[int]] | None]:
        rng = np.random.default_rng(seed)
        start = random_t_pseudo_border(
            n, t, rng, column_limit=self._config.ball_column_limit
        )
        if start is None:
            return str(SearchStatus.NONE_EXISTS), None, None, None
        family = flip_descent(start, t, self._config.flip_budget)
        return "upper-bound", len(family), None, family.to_json()

    def pseudoborder(
        self,
        *,
        n: int,
        t: int,
        cap: int | None = None,
        heuristic: bool = False,
        seed: int | None = None,
    ) -> models.PseudoBorderReport:
        """Find a smallest t-pseudo-border exactly, or an upper bound by flip descent
        when ``heuristic`` is set.

        Raises IncompleteSearchError if the exact search exhausts its cap.
        """
        if not 1 <= t < n:
            error = ParameterRangeError(
                name="t", value=t, requirement=f"1 <= t < n = {n}"
            )
            log.error(error)
            raise error
        bound = bounds.theorem_bound(n, t, digits=self._config.decimal_digits)
        if heuristic:
            seed = self._config.default_seed if seed is None else seed
            status, size, lower, witness = self._heuristic_pseudoborder(n, t, seed)
        else:
            seed = None
            status, size, lower, witness = self._exact_pseudoborder(n, t, cap)

        margin = None
        simple_holds = None
        if size is not None:
            margin = bounds.floor_decimal(
                Fraction(size) - bound.value, self._config.decimal_digits
            )
            if t >= 3:
                simple_holds = bounds.counting_floor_holds(size, n)
        report = models.PseudoBorderReport(
            n=n,
            t=t,
            mode="heuristic" if heuristic else "exact",
            status=status,
            size=size,
            size_lower_bound=lower,
            witness=witness,
            bound=bound,
            margin=margin,
            simple_bound_holds=simple_holds,
            provenance=self._provenance("pseudoborder", seed),
        )
        if status == SearchStatus.CAP_EXHAUSTED:
            error = self.IncompleteSearchError(
                what=f"a smallest {t}-pseudo-border for n = {n}", report=report
            )
            log.error(error)
            raise error
        return report

    def verify(
        self, *, suite: str, seed: int | None = None
    ) -> models.VerificationReport:
        """Run a verification suite."""
        if suite not in suite_names():
            error = self.UnknownSuiteError(suite=suite, known=suite_names())
            log.error(error)
            raise error
        seed = self._config.default_seed if seed is None else seed
        context = VerificationContext(
            seed=seed,
            limits=self.limits,
            sample_size=self._config.verify_sample_size,
            column_limit=self._config.ball_column_limit,
        )
        checks = run_suite(suite, context)
        passed = all(check.passed for check in checks)
        if not passed:
            failed = [check.check for check in checks if not check.passed]
            log.warning(f"Verification suite {suite} failed: {failed}")
        return models.VerificationReport(
            suite=suite,
            seed=seed,
            passed=passed,
            checks=checks,
            provenance=self._provenance("verify", seed),
        )

    def bound(
        self, *, n: int, t: int | None = None, d: int | None = None
    ) -> models.BoundReport:
        """Evaluate the t-pseudo-border bound for ``t`` or the distance bound for
        ``d``.
        """
        if (t is None) == (d is None):
            error = self.MissingParameterError(
                command="bound", requirement="exactly one of t and d"
            )
            log.error(error)
            raise error
        digits = self._config.decimal_digits
        if t is not None:
            report = bounds.theorem_bound(n, t, digits=digits)
        else:
            report = bounds.corollary_bound(n, d, digits=digits)
        log.info(f"{report.formula_id} for n = {n}: {report.decimal}")
        return report
