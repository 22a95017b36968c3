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

"""Interface of the service computing code parameters, pseudo-borders and bounds."""

from abc import ABC, abstractmethod

from cqc.core import models
from cqc.core.cayley import GeneratorSpec


class CodeAnalyzerPort(ABC):
    """A service analyzing the quantum codes of Cayley graphs."""

    class IncompleteSearchError(RuntimeError):
        """Raised when a search ran out of its cap or budget without a certificate.
        The partial report is attached.
        """

        def __init__(self, *, what: str, report: models.ReportModel):
            self.report = report
            message = (
                f"The search for {what} stopped at its cap or budget without a"
                + " certificate."
            )
            super().__init__(message)

    class UnknownSuiteError(RuntimeError):
        """Raised when a verification suite name is not known."""

        def __init__(self, *, suite: str, known: list[str]):
            self.suite = suite
            message = f"Unknown verification suite {suite}, choose one of: " + (
                ", ".join(known)
            )
            super().__init__(message)

    class MissingParameterError(RuntimeError):
        """Raised when a command lacks the parameters it needs."""

        def __init__(self, *, command: str, requirement: str):
            message = f"The {command} command needs {requirement}."
            super().__init__(message)

    @abstractmethod
    def analyze(
        self, *, spec: GeneratorSpec, cap: int | None = None
    ) -> models.QuantumParams:
        """Compute ``[[N, K, D]]`` together with ``d``, ``d_perp``, the degeneracy flag
        and the applicable distance bound.
        """
        ...

    @abstractmethod
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
        ...

    @abstractmethod
    def verify(
        self, *, suite: str, seed: int | None = None
    ) -> models.VerificationReport:
        """Run a verification suite."""
        ...

    @abstractmethod
    def bound(
        self, *, n: int, t: int | None = None, d: int | None = None
    ) -> models.BoundReport:
        """Evaluate the t-pseudo-border bound for ``t`` or the distance bound for
        ``d``.
        """
        ...
