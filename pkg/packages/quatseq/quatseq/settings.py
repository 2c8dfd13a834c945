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
Settings module for quatseq.
"""

from .data_models.settings import QuatSeqSettings


def get_settings() -> QuatSeqSettings:
    """
    Get quatseq settings from environment variables.

    Automatically loads from .env file if present.

    Returns:
        QuatSeqSettings object containing the configuration

    Raises:
        pydantic.ValidationError: If a configured value is invalid
    """
    return QuatSeqSettings()
