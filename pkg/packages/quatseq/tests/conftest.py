# Copyright 2025 Google LLC.
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
"""
Global pytest configuration and fixtures.

Property suites run with the hypothesis profile named by HYPOTHESIS_PROFILE;
`exhaustive` raises every property to 10^4 examples.
"""

import os
from unittest.mock import patch

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=100, deadline=None)
settings.register_profile(
    "exhaustive",
    max_examples=10_000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(autouse=True)
def clean_env(tmp_path, monkeypatch):
    """
    Clear environment variables and change to a temporary directory so tests
    never pick up the host environment or a local .env file.
    """
    monkeypatch.chdir(tmp_path)
    with patch.dict(os.environ, {}, clear=True):
        yield


@pytest.fixture
def create_test_file(tmp_path):
    """
    Fixture that returns a helper function to create files in tmp_path.
    Usage: create_test_file("path/to/file.txt", "content")
    """

    def _create(filename, content):
        path = tmp_path / filename
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8")
        return path

    return _create
