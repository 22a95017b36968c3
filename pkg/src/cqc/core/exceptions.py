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

"""Domain specific exceptions"""


class KnownError(RuntimeError):
    """Base class for all errors the package raises on purpose"""


class DimensionMismatchError(KnownError):
    """Thrown when vectors or matrices of incompatible shapes are combined"""

    def __init__(self, *, expected: int, observed: int, what: str = "length"):
        self.expected = expected
        self.observed = observed
        message = f"Expected {what} {expected}, got {observed}."
        super().__init__(message)


class StructuralError(KnownError):
    """Thrown when a row of the excluded matrix is not inside the kernel of the
    parity matrix
    """

    def __init__(self, *, row: int):
        self.row = row
        message = (
            f"Row {row} of the excluded matrix is not in the kernel of the parity"
            + " matrix, the quotient is not defined."
        )
        super().__init__(message)


class GeneratorValidationError(KnownError):
    """Thrown when a parity-check matrix does not describe a valid generating set"""

    def __init__(self, *, reason: str, column: int | None = None):
        self.column = column
        self.reason = reason
        prefix = "Invalid generator matrix" if column is None else f"Column {column}"
        super().__init__(f"{prefix}: {reason}")


class OddGeneratorCountError(KnownError):
    """Thrown when a quantum code is requested for an odd number of generators"""

    def __init__(self, *, n: int):
        self.n = n
        message = (
            f"The generator matrix has n = {n} columns. The adjacency matrix of the"
            + " Cayley graph only generates a self-orthogonal code when n is even."
        )
        super().__init__(message)


class ResourceLimitError(KnownError):
    """Thrown when a computation would exceed a configured size limit"""

    def __init__(self, *, what: str, size: int, limit: int, advice: str = ""):
        self.size = size
        self.limit = limit
        message = f"{what} of size {size} exceeds the configured limit {limit}."
        if advice:
            message += f" {advice}"
        super().__init__(message)


class ParameterRangeError(KnownError):
    """Thrown when a numeric parameter is outside the range an operation supports"""

    def __init__(self, *, name: str, value: int, requirement: str):
        self.name = name
        self.value = value
        message = f"Parameter {name} = {value} is out of range: {requirement}."
        super().__init__(message)


class PreconditionError(KnownError):
    """Thrown when an input does not satisfy the hypothesis of an operation"""


class TheoremViolationError(KnownError):
    """Thrown when an exact value contradicts a proven bound"""

    def __init__(self, *, quantity: str, value: object, bound: object):
        message = f"{quantity} = {value} violates the proven lower bound {bound}."
        super().__init__(message)
