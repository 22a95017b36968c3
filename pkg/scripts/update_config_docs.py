#!/usr/bin/env python3

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

"""Generates the example config YAML from the Config class of cqc (or checks
whether it is up to date).
"""

import json
import sys
from difflib import unified_diff
from pathlib import Path
from typing import Annotated

import typer
import yaml

from cqc.config import Config

HERE = Path(__file__).parent.resolve()
REPO_ROOT_DIR = HERE.parent
EXAMPLE_CONFIG_YAML = REPO_ROOT_DIR / "example_config.yaml"


class ValidationError(RuntimeError):
    """Raised when validation of config documentation fails."""


def get_example() -> str:
    """Returns the example config YAML holding the default of every option.

    The defaults are taken without reading a config file or the environment.
    """
    defaults = Config.model_construct()
    return yaml.dump(json.loads(defaults.model_dump_json()))


def get_schema() -> str:
    """Returns the JSON schema of the Config class."""
    return json.dumps(Config.model_json_schema(), indent=2)


def check_docs():
    """Check whether the example config is up to date.

    Raises:
        ValidationError: if not up to date.
    """
    expected = get_example()
    observed = EXAMPLE_CONFIG_YAML.read_text(encoding="utf-8")
    if expected != observed:
        typer.secho("Differences in Config YAML:", fg=typer.colors.RED)
        for line in unified_diff(
            expected.splitlines(keepends=True),
            observed.splitlines(keepends=True),
            fromfile="expected",
            tofile="observed",
        ):
            typer.echo(f"    {line.rstrip()}")
        raise ValidationError(
            f"Example config YAML at '{EXAMPLE_CONFIG_YAML}' is not up to date."
        )


def main(
    check: Annotated[
        bool, typer.Option(help="Only check, do not write.")
    ] = False,
    schema: Annotated[
        bool, typer.Option(help="Print the JSON schema of the config.")
    ] = False,
):
    """Update or check the example config."""
    if schema:
        typer.echo(get_schema())
        return

    if check:
        try:
            check_docs()
        except ValidationError as error:
            typer.secho(f"Validation failed: {error}", fg=typer.colors.RED)
            sys.exit(1)
        typer.secho("Config docs are up to date.", fg=typer.colors.GREEN)
        return

    EXAMPLE_CONFIG_YAML.write_text(get_example(), encoding="utf-8")
    typer.secho("Successfully updated the config docs.", fg=typer.colors.GREEN)


if __name__ == "__main__":
    typer.run(main)
