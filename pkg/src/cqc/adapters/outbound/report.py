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

"""Adapter rendering reports as JSON, CSV or an aligned text table."""

import csv
import io
import json
import logging
import sys
from enum import StrEnum
from pathlib import Path
from typing import Any

from pydantic import Field, NonNegativeInt
from pydantic_settings import BaseSettings

from cqc.core.models import ReportModel
from cqc.ports.outbound.report import ReportWriterPort

log = logging.getLogger(__name__)


class ReportFormat(StrEnum):
    """Supported renderings; CSV and table are flat projections of the JSON."""

    JSON = "json"
    CSV = "csv"
    TABLE = "table"


class ReportWriterConfig(BaseSettings):
    """Config for emitting reports."""

    report_format: ReportFormat = Field(
        ReportFormat.JSON,
        description="Rendering of emitted reports. JSON is the canonical form, csv and"
        + " table are flat projections of it.",
        examples=["json", "csv", "table"],
    )
    json_indent: NonNegativeInt = Field(
        2,
        description="Indentation of JSON reports.",
        examples=[2, 0],
    )


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _columns(rows: list[dict[str, Any]]) -> list[str]:
    columns: list[str] = []
    for row in rows:
        columns.extend(key for key in row if key not in columns)
    return columns


class ReportWriter(ReportWriterPort):
    """Writes reports in the configured format."""

    def __init__(self, *, config: ReportWriterConfig):
        self._config = config

    @property
    def report_format(self) -> ReportFormat:
        """The format reports are rendered in."""
        return self._config.report_format

    def _render_json(self, report: ReportModel) -> str:
        indent = self._config.json_indent or None
        return json.dumps(
            report.model_dump(mode="json"), indent=indent, ensure_ascii=False
        )

    def _render_csv(self, report: ReportModel) -> str:
        rows = report.table_rows()
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=_columns(rows), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({key: _cell(value) for key, value in row.items()})
        return buffer.getvalue().rstrip("\n")

    def _render_table(self, report: ReportModel) -> str:
        rows = report.table_rows()
        columns = _columns(rows)
        cells = [[_cell(row.get(column)) for column in columns] for row in rows]
        widths = [
            max([len(column), *(len(line[i]) for line in cells)])
            for i, column in enumerate(columns)
        ]
        lines = [
            "  ".join(
                column.ljust(width)
                for column, width in zip(columns, widths, strict=True)
            ),
            "  ".join("-" * width for width in widths),
        ]
        for line in cells:
            lines.append(
                "  ".join(
                    cell.ljust(width) for cell, width in zip(line, widths, strict=True)
                )
            )
        return "\n".join(text.rstrip() for text in lines)

    def render(self, *, report: ReportModel) -> str:
        """Render ``report`` in the configured format, newline-terminated."""
        renderers = {
            ReportFormat.JSON: self._render_json,
            ReportFormat.CSV: self._render_csv,
            ReportFormat.TABLE: self._render_table,
        }
        return renderers[self.report_format](report) + "\n"

    def write(self, *, report: ReportModel, output: Path | None = None):
        """Write the rendered report to ``output``, or to standard output if omitted."""
        text = self.render(report=report)
        if output is None:
            sys.stdout.write(text)
            sys.stdout.flush()
            return
        output.write_text(text, encoding="utf-8")
        log.info(f"Wrote {self.report_format} report to {output}.")
