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

"""Tests edge cases not covered by the typical journey test."""

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from cqc.cli import (
    EXIT_INCOMPLETE,
    EXIT_RESOURCE,
    EXIT_USAGE,
    EXIT_VALIDATION,
    cli,
    exit_code_for,
)
from cqc.core.exceptions import TheoremViolationError
from cqc.ports.inbound.analyzer import CodeAnalyzerPort
from tests.fixtures.joint import *  # noqa: F403
from tests.fixtures.joint import JointFixture
from tests.fixtures.utils import MATRIX_DIR


@pytest.mark.parametrize(
    "args, exit_code",
    [
        (["analyze", "--input", str(MATRIX_DIR / "hamming.txt")], EXIT_VALIDATION),
        (["analyze", "--input", str(MATRIX_DIR / "bad_entry.txt")], EXIT_USAGE),
        (["analyze", "--input", str(MATRIX_DIR / "missing.txt")], EXIT_USAGE),
        (["analyze", "--input", str(MATRIX_DIR)], EXIT_USAGE),
        (
            ["analyze", "--input", str(MATRIX_DIR / "duplicate_column.txt")],
            EXIT_VALIDATION,
        ),
        (["bound", "--n", "8"], EXIT_USAGE),
        (["bound", "--n", "8", "--t", "3", "--d", "7"], EXIT_USAGE),
        (["bound", "--n", "7", "--d", "5"], EXIT_VALIDATION),
        (["pseudoborder", "--n", "4", "--t", "4"], EXIT_VALIDATION),
        (["verify", "--suite", "nonexistent"], EXIT_USAGE),
    ],
)
def test_exit_codes(
    cli_runner: CliRunner, joint_fixture: JointFixture, args: list[str], exit_code: int
):
    """Every known error maps to its stable exit code and a message."""
    result = cli_runner.invoke(cli, [*args, *joint_fixture.config_option])
    assert result.exit_code == exit_code
    assert "Error:" in result.output


def test_non_ascii_digits_in_header(
    cli_runner: CliRunner, joint_fixture: JointFixture, tmp_path: Path
):
    """Digits outside ASCII are a parse error, not an internal one."""
    matrix = tmp_path / "superscript.txt"
    matrix.write_text("2 \u00b2\n1 0\n0 1\n", encoding="utf-8")
    result = cli_runner.invoke(
        cli, ["analyze", "--input", str(matrix), *joint_fixture.config_option]
    )
    assert result.exit_code == EXIT_USAGE
    assert "line 1" in result.output


def test_missing_config_file(cli_runner: CliRunner, tmp_path: Path):
    """A config path that does not exist is a usage error."""
    result = cli_runner.invoke(
        cli, ["bound", "--n", "8", "--t", "3", "--config", str(tmp_path / "none.yaml")]
    )
    assert result.exit_code == EXIT_USAGE


def test_invalid_config_value(cli_runner: CliRunner, joint_fixture: JointFixture):
    """Config values are validated."""
    result = cli_runner.invoke(
        cli,
        ["bound", "--n", "8", "--t", "3", *joint_fixture.config_option],
        env={"CQC_DECIMAL_DIGITS": "0"},
    )
    assert result.exit_code == EXIT_USAGE


def test_graph_size_limit(cli_runner: CliRunner, joint_fixture: JointFixture):
    """Generator matrices with more rows than configured are refused."""
    result = cli_runner.invoke(
        cli,
        ["analyze", "--input", str(MATRIX_DIR / "identity4.txt")]
        + joint_fixture.config_option,
        env={"CQC_MAX_GRAPH_R": "3"},
    )
    assert result.exit_code == EXIT_RESOURCE


def test_capped_pseudoborder_writes_partial_report(
    cli_runner: CliRunner, joint_fixture: JointFixture, tmp_path: Path
):
    """A cap below the minimum exits with 5 after writing the lower bound."""
    output = tmp_path / "partial.json"
    result = cli_runner.invoke(
        cli,
        ["pseudoborder", "--n", "8", "--t", "3", "--cap", "2", "--output", str(output)]
        + joint_fixture.config_option,
    )
    assert result.exit_code == EXIT_INCOMPLETE
    report = json.loads(output.read_text(encoding="utf-8"))
    assert report["status"] == "cap-exhausted"
    assert report["size"] is None
    assert report["size_lower_bound"] == 3
    assert report["witness"] is None
    assert report["bound"]["decimal"] == "5.000000000000"


def test_capped_analyze_writes_partial_report(
    cli_runner: CliRunner, joint_fixture: JointFixture, tmp_path: Path
):
    """A cap below D exits with 5 after writing the lower bound."""
    output = tmp_path / "partial.json"
    result = cli_runner.invoke(
        cli,
        ["analyze", "--input", str(MATRIX_DIR / "k44.txt"), "--cap", "1"]
        + ["--output", str(output)]
        + joint_fixture.config_option,
    )
    assert result.exit_code == EXIT_INCOMPLETE
    report = json.loads(output.read_text(encoding="utf-8"))
    assert report["D"] is None
    assert report["D_status"] == "lower-bounded-by-cap"
    assert report["D_lower_bound"] == 2
    assert report["K"] == 4


def test_enumeration_budget(cli_runner: CliRunner, joint_fixture: JointFixture):
    """A budget too small to certify the minimum leaves the search incomplete."""
    result = cli_runner.invoke(
        cli,
        ["pseudoborder", "--n", "8", "--t", "3", "--budget", "1"]
        + ["--strategy", "enumerate"]
        + joint_fixture.config_option,
    )
    assert result.exit_code == EXIT_INCOMPLETE


def test_incomplete_search_keeps_the_report(joint_fixture: JointFixture):
    """The analyzer attaches the partial report to the error."""
    with pytest.raises(CodeAnalyzerPort.IncompleteSearchError) as error:
        joint_fixture.analyzer.pseudoborder(n=8, t=3, cap=2)
    assert error.value.report.status == "cap-exhausted"


def test_heuristic_without_pseudo_borders(joint_fixture: JointFixture):
    """Odd n has no t-pseudo-border for the heuristic either."""
    report = joint_fixture.analyzer.pseudoborder(n=5, t=3, heuristic=True, seed=1)
    assert report.status == "none-exists"
    assert report.size is None
    assert report.margin is None


def test_bound_needs_exactly_one_parameter(joint_fixture: JointFixture):
    """Neither t nor d is a missing parameter."""
    with pytest.raises(CodeAnalyzerPort.MissingParameterError):
        joint_fixture.analyzer.bound(n=8)


def test_unexpected_errors_are_internal():
    """Errors without a stable code exit with 1, including a violated bound."""
    assert exit_code_for(RuntimeError("unexpected")) == 1
    assert exit_code_for(TheoremViolationError(quantity="D", value=1, bound=2)) == 1
