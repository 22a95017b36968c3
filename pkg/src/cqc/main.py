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

"""In this module object construction and dependency injection is carried out."""

from pathlib import Path
from typing import Any

from hexkit.log import configure_logging

from cqc.adapters.inbound.matrix_text import read_generator_spec
from cqc.config import Config
from cqc.inject import prepare_command
from cqc.ports.inbound.analyzer import CodeAnalyzerPort


def load_config(*, config_yaml: Path | None = None, **overrides: Any) -> Config:
    """Load the config, letting every override that is not None take precedence."""
    present = {key: value for key, value in overrides.items() if value is not None}
    config = Config(config_yaml=config_yaml, **present)  # type: ignore
    configure_logging(config=config)
    return config


def run_analyze(
    *, config: Config, input_path: Path, cap: int | None, output: Path | None
):
    """Analyze the quantum code of the generator matrix at ``input_path``."""
    spec = read_generator_spec(input_path)
    with prepare_command(config=config) as (analyzer, writer):
        try:
            report = analyzer.analyze(spec=spec, cap=cap)
        except CodeAnalyzerPort.IncompleteSearchError as error:
            writer.write(report=error.report, output=output)
            raise
        writer.write(report=report, output=output)


def run_pseudoborder(
    *,
    config: Config,
    n: int,
    t: int,
    cap: int | None,
    heuristic: bool,
    seed: int | None,
    output: Path | None,
):
    """Search a smallest t-pseudo-border of the hypercube on [n]."""
    with prepare_command(config=config) as (analyzer, writer):
        try:
            report = analyzer.pseudoborder(
                n=n, t=t, cap=cap, heuristic=heuristic, seed=seed
            )
        except CodeAnalyzerPort.IncompleteSearchError as error:
            writer.write(report=error.report, output=output)
            raise
        writer.write(report=report, output=output)


def run_verify(
    *, config: Config, suite: str, seed: int | None, output: Path | None
) -> bool:
    """Run a verification suite and report whether every check passed."""
    with prepare_command(config=config) as (analyzer, writer):
        report = analyzer.verify(suite=suite, seed=seed)
        writer.write(report=report, output=output)
    return report.passed


def run_bound(
    *, config: Config, n: int, t: int | None, d: int | None, output: Path | None
):
    """Evaluate a closed-form bound."""
    with prepare_command(config=config) as (analyzer, writer):
        report = analyzer.bound(n=n, t=t, d=d)
        writer.write(report=report, output=output)
