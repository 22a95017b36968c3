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

"""Tests for the plain text matrix format."""

import pytest

from cqc.adapters.inbound.matrix_text import (
    MatrixParseError,
    parse_matrix,
    read_generator_spec,
)
from cqc.core.exceptions import GeneratorValidationError
from tests.fixtures.utils import MATRIX_DIR


@pytest.mark.parametrize(
    "name, columns",
    [
        ("hamming.txt", (1, 2, 3, 4, 5, 6, 7)),
        ("identity2.txt", (1, 2)),
        ("identity4.txt", (1, 2, 4, 8)),
        ("k44.txt", (1, 2, 4, 7)),
    ],
)
def test_read_fixtures(name: str, columns: tuple[int, ...]):
    """Comments and blank lines are skipped; row i holds bit i - 1 of a column."""
    spec = read_generator_spec(MATRIX_DIR / name)
    assert spec.columns == columns


def test_bad_entry_names_line_and_column():
    """Entries other than 0 and 1 are located."""
    with pytest.raises(MatrixParseError) as error:
        read_generator_spec(MATRIX_DIR / "bad_entry.txt")
    assert (error.value.line, error.value.column) == (3, 2)
    assert str(error.value).startswith("Malformed matrix at line 3, column 2")


def test_duplicate_column_is_a_validation_error():
    """Well formed text can still describe an invalid generator matrix."""
    with pytest.raises(GeneratorValidationError) as error:
        read_generator_spec(MATRIX_DIR / "duplicate_column.txt")
    assert error.value.column == 4


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("", 1, None),
        ("# only a comment\n", 1, None),
        ("3\n1 0 0\n", 1, None),
        ("2 x\n1 0\n", 1, 2),
        ("0 2\n", 1, 1),
        ("2 \u00b2\n1 0\n0 1\n", 1, 2),
        ("\u0662 2\n1 0\n0 1\n", 1, 1),
        ("2 2\n1 0\n", 3, None),
        ("2 2\n1 0\n0 1 1\n", 3, None),
        ("2 2\n1 0\n0 1\n1 1\n", 4, None),
    ],
)
def test_malformed_text(text: str, line: int, column: int | None):
    """Header, row length and row count errors."""
    with pytest.raises(MatrixParseError) as error:
        parse_matrix(text)
    assert error.value.line == line
    assert error.value.column == column


def test_parse_matrix_keeps_rows():
    """Rows are read in order."""
    matrix = parse_matrix("2 3\n1 1 0\n0 1 1\n")
    assert (matrix.rows, matrix.cols) == (2, 3)
    assert [str(row) for row in matrix] == ["110", "011"]
