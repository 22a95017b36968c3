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

"""Module hosting the dependency injection container."""

from collections.abc import Generator
from contextlib import contextmanager, nullcontext

from cqc.adapters.outbound.report import ReportWriter
from cqc.config import Config
from cqc.core.analyzer import CodeAnalyzer
from cqc.ports.inbound.analyzer import CodeAnalyzerPort
from cqc.ports.outbound.report import ReportWriterPort


@contextmanager
def prepare_core(*, config: Config) -> Generator[CodeAnalyzerPort, None, None]:
    """Constructs and initializes all core components."""
    yield CodeAnalyzer(config=config)


def prepare_core_with_override(
    *,
    config: Config,
    analyzer_override: CodeAnalyzerPort | None = None,
):
    """Resolve the analyzer context manager based on config and override (if any)."""
    return (
        nullcontext(analyzer_override)
        if analyzer_override
        else prepare_core(config=config)
    )


@contextmanager
def prepare_command(
    *,
    config: Config,
    analyzer_override: CodeAnalyzerPort | None = None,
) -> Generator[tuple[CodeAnalyzerPort, ReportWriterPort], None, None]:
    """Construct the analyzer and the report writer a command needs.
    By default, the core is prepared from the config but you can also provide it
    using the analyzer_override parameter.
    """
    with prepare_core_with_override(
        config=config, analyzer_override=analyzer_override
    ) as analyzer:
        yield analyzer, ReportWriter(config=config)
