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

"""Reader for generator matrices in the plain text format.

The first meaningful line holds ``r n``, followed by ``r`` lines of ``n``
whitespace-separated 0/1 entries. Blank lines and lines starting with ``#`` are
ignored.
"""

import logging
from pathlib import Path

from cqc.core.cayley import GeneratorSpec
from cqc.core.exceptions import KnownError
from cqc.core.gf2 import BitMatrix, BitVector

log = logging.getLogger(__name__)


class MatrixParseError(KnownError):
    """Thrown when a matrix file does not follow the text format"""

    def __init__(self, *, line: int, column: int | None = None, reason: str):
        self.line = line
        self.column = column
        self.reason = reason
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"Malformed matrix at {where}: {reason}")


def _meaningful_lines(text: str) -> list[tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            lines.append((number, stripped))
    return lines


def _parse_header(number: int, line: str) -> tuple[int, int]:
    tokens = line.split()
    if len(tokens) != 2:
        raise MatrixParseError(
            line=number, reason=f"expected the header 'r n', got {line!r}"
        )
    values = []
    for position, token in enumerate(tokens, start=1):
        if not (token.isascii() and token.isdigit()) or int(token) < 1:
            raise MatrixParseError(
                line=number,
                column=position,
                reason=f"expected a positive integer, got {token!r}",
            )
        values.append(int(token))
    return values[0], values[1]


def _parse_row(number: int, line: str, n: int) -> BitVector:
    tokens = line.split()
    for position, token in enumerate(tokens, start=1):
        if token not in ("0", "1"):
            raise MatrixParseError(
                line=number, column=position, reason=f"expected 0 or 1, got {token!r}"
            )
    if len(tokens) != n:
        raise MatrixParseError(
            line=number, reason=f"expected {n} entries, got {len(tokens)}"
        )
    return BitVector.from_bits(int(token) for token in tokens)


def parse_matrix(text: str) -> BitMatrix:
    """Parse the text format into a matrix without validating it as a generator
    matrix.
    """
    lines = _meaningful_lines(text)
    if not lines:
        raise MatrixParseError(line=1, reason="the header 'r n' is missing")
    header_line, header = lines[0]
    r, n = _parse_header(header_line, header)
    rows = [_parse_row(number, line, n) for number, line in lines[1 : r + 1]]
    if len(rows) < r:
        last = len(text.splitlines()) + 1
        raise MatrixParseError(line=last, reason=f"expected {r} rows, got {len(rows)}")
    if len(lines) > r + 1:
        number, _ = lines[r + 1]
        raise MatrixParseError(line=number, reason=f"expected only {r} rows")
    return BitMatrix.from_rows(rows, cols=n)


def parse_generator_spec(text: str) -> GeneratorSpec:
    """Parse and validate a generator matrix."""
    return GeneratorSpec(parse_matrix(text))


def read_generator_spec(path: Path) -> GeneratorSpec:
    """Read and validate the generator matrix stored at ``path``."""
    log.debug(f"Reading generator matrix from {path}.")
    spec = parse_generator_spec(path.read_text(encoding="utf-8"))
    log.info(f"Read a {spec.r} x {spec.n} generator matrix from {path}.")
    return spec
