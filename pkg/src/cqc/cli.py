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

"""Entrypoint of the package"""

from collections.abc import Generator
from contextlib import contextmanager
from pathlib import Path
from typing import Annotated

import typer
from hexkit.config import ConfigYamlDoesNotExist
from pydantic import ValidationError

from cqc.adapters.inbound.matrix_text import MatrixParseError
from cqc.adapters.outbound.report import ReportFormat
from cqc.core.exceptions import (
    DimensionMismatchError,
    GeneratorValidationError,
    OddGeneratorCountError,
    ParameterRangeError,
    PreconditionError,
    ResourceLimitError,
)
from cqc.core.gf2 import SearchStrategy
from cqc.main import load_config, run_analyze, run_bound, run_pseudoborder, run_verify
from cqc.ports.inbound.analyzer import CodeAnalyzerPort

EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_RESOURCE = 4
EXIT_INCOMPLETE = 5

EXIT_CODES: list[tuple[tuple[type[Exception], ...], int]] = [
    (
        (
            MatrixParseError,
            CodeAnalyzerPort.UnknownSuiteError,
            CodeAnalyzerPort.MissingParameterError,
            ConfigYamlDoesNotExist,
            ValidationError,
            FileNotFoundError,
            IsADirectoryError,
        ),
        EXIT_USAGE,
    ),
    (
        (
            GeneratorValidationError,
            OddGeneratorCountError,
            ParameterRangeError,
            DimensionMismatchError,
            PreconditionError,
        ),
        EXIT_VALIDATION,
    ),
    ((ResourceLimitError,), EXIT_RESOURCE),
    ((CodeAnalyzerPort.IncompleteSearchError,), EXIT_INCOMPLETE),
]

cli = typer.Typer()

ConfigOption = Annotated[
    Path | None,
    typer.Option("--config", help="YAML config file; defaults to ~/.cqc.yaml."),
]
FormatOption = Annotated[
    ReportFormat | None, typer.Option("--format", help="Report format.")
]
OutputOption = Annotated[
    Path | None,
    typer.Option("--output", help="Write the report here instead of standard output."),
]
CapOption = Annotated[
    int | None, typer.Option("--cap", min=0, help="Largest weight searched.")
]
BudgetOption = Annotated[
    int | None,
    typer.Option("--budget", min=1, help="Candidates the enumeration may check."),
]
StrategyOption = Annotated[
    SearchStrategy | None,
    typer.Option("--strategy", help="Strategy of exact minimum weight searches."),
]
FlipBudgetOption = Annotated[
    int | None,
    typer.Option("--flip-budget", min=1, help="Flips the heuristic descent may make."),
]
SeedOption = Annotated[
    int | None, typer.Option("--seed", min=0, help="Seed of randomized steps.")
]


def exit_code_for(error: Exception) -> int:
    """The stable exit code of an error."""
    for types, code in EXIT_CODES:
        if isinstance(error, types):
            return code
    return EXIT_INTERNAL


@contextmanager
def translate_errors() -> Generator[None, None, None]:
    """Print errors to stderr and exit with their stable exit code."""
    try:
        yield
    except typer.Exit:
        raise
    except Exception as error:
        typer.echo(f"Error: {error}", err=True)
        raise typer.Exit(exit_code_for(error)) from error


@cli.command(name="analyze")
def sync_analyze(
    input_path: Annotated[
        Path, typer.Option("--input", help="Generator matrix in the text format.")
    ],
    cap: CapOption = None,
    budget: BudgetOption = None,
    strategy: StrategyOption = None,
    report_format: FormatOption = None,
    output: OutputOption = None,
    config_yaml: ConfigOption = None,
):
    """Compute [[N, K, D]] of the quantum code of a generator matrix."""
    with translate_errors():
        config = load_config(
            config_yaml=config_yaml,
            report_format=report_format,
            search_candidate_budget=budget,
            search_strategy=strategy,
        )
        run_analyze(config=config, input_path=input_path, cap=cap, output=output)


@cli.command(name="pseudoborder")
def sync_pseudoborder(
    n: Annotated[int, typer.Option("--n", help="Dimension of the hypercube.")],
    t: Annotated[int, typer.Option("--t", help="Radius of the pseudo-border.")],
    cap: CapOption = None,
    budget: BudgetOption = None,
    strategy: StrategyOption = None,
    heuristic: Annotated[
        bool,
        typer.Option("--heuristic", help="Flip descent from a random start instead."),
    ] = False,
    flip_budget: FlipBudgetOption = None,
    seed: SeedOption = None,
    report_format: FormatOption = None,
    output: OutputOption = None,
    config_yaml: ConfigOption = None,
):
    """Find a smallest t-pseudo-border of the hypercube on [n]."""
    with translate_errors():
        config = load_config(
            config_yaml=config_yaml,
            report_format=report_format,
            search_candidate_budget=budget,
            search_strategy=strategy,
            flip_budget=flip_budget,
        )
        run_pseudoborder(
            config=config,
            n=n,
            t=t,
            cap=cap,
            heuristic=heuristic,
            seed=seed,
            output=output,
        )


@cli.command(name="verify")
def sync_verify(
    suite: Annotated[
        str, typer.Option("--suite", help="Suite to run, or all.")
    ] = "all",
    seed: SeedOption = None,
    strategy: StrategyOption = None,
    report_format: FormatOption = None,
    output: OutputOption = None,
    config_yaml: ConfigOption = None,
):
    """Run a verification suite; exits with 1 if any check fails."""
    with translate_errors():
        config = load_config(
            config_yaml=config_yaml,
            report_format=report_format,
            search_strategy=strategy,
        )
        passed = run_verify(config=config, suite=suite, seed=seed, output=output)
    if not passed:
        raise typer.Exit(EXIT_INTERNAL)


@cli.command(name="bound")
def sync_bound(
    n: Annotated[int, typer.Option("--n", help="Number of generators.")],
    t: Annotated[
        int | None, typer.Option("--t", help="Radius of the pseudo-border.")
    ] = None,
    d: Annotated[
        int | None, typer.Option("--d", help="Classical distance of the matrix.")
    ] = None,
    report_format: FormatOption = None,
    output: OutputOption = None,
    config_yaml: ConfigOption = None,
):
    """Evaluate the pseudo-border bound for --t or the distance bound for --d."""
    with translate_errors():
        config = load_config(config_yaml=config_yaml, report_format=report_format)
        run_bound(config=config, n=n, t=t, d=d, output=output)
