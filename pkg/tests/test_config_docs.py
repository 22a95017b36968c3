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

"""Test that the example config documents the current Config class."""

import yaml

from cqc.adapters.outbound.report import ReportWriterConfig
from cqc.config import Config
from cqc.core.analyzer import CodeAnalyzerConfig
from scripts.update_config_docs import EXAMPLE_CONFIG_YAML, get_example, get_schema


def test_example_config_is_up_to_date():
    """Every documented option carries its current default."""
    documented = yaml.safe_load(EXAMPLE_CONFIG_YAML.read_text(encoding="utf-8"))
    generated = yaml.safe_load(get_example())
    assert {key: generated[key] for key in documented} == documented
    own_fields = {*CodeAnalyzerConfig.model_fields, *ReportWriterConfig.model_fields}
    assert own_fields <= set(documented)


def test_example_config_loads():
    """The example is a valid config file."""
    config = Config(config_yaml=EXAMPLE_CONFIG_YAML)
    assert config.service_name == "cqc"
    assert config.classical_distance_cap == 20
    assert "search_strategy" in get_schema()
