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

"""Interface for emitting reports."""

from abc import ABC, abstractmethod
from pathlib import Path

from cqc.core.models import ReportModel


class ReportWriterPort(ABC):
    """Renders reports and writes them to a file or standard output."""

    @abstractmethod
    def render(self, *, report: ReportModel) -> str:
        """Render ``report`` in the configured format, newline-terminated."""
        ...

    @abstractmethod
    def write(self, *, report: ReportModel, output: Path | None = None):
        """Write the rendered report to ``output``, or to standard output if omitted."""
        ...
