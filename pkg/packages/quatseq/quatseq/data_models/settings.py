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
Pydantic settings for the search oracle, catalog verifier and CLI.
"""

import logging
import os
from typing import Any

from pydantic import Field, field_validator
from pydantic_core import PydanticUseDefault
from pydantic_settings import BaseSettings

_MODEL_CONFIG = {"env_file": ".env", "extra": "ignore"}

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _default_threads() -> int:
    return os.cpu_count() or 1


class QuatSeqSettings(BaseSettings):
    """Runtime configuration read from the environment and `.env`."""

    model_config = _MODEL_CONFIG

    threads: int = Field(
        default_factory=_default_threads,
        alias="QUATSEQ_THREADS",
        ge=1,
        description="Worker threads for search partitions and catalog verification",
    )

    search_cap: int = Field(
        default=10_000,
        alias="QUATSEQ_SEARCH_CAP",
        ge=1,
        description="Default number of results listed by a search (the count stays exact)",
    )

    log_level: str = Field(
        default="WARNING",
        alias="QUATSEQ_LOG_LEVEL",
        description="Root log level used by the CLI",
    )

    catalog_path: str | None = Field(
        default=None,
        alias="QUATSEQ_CATALOG_PATH",
        description="Catalog verified when no file is given (defaults to the shipped appendix)",
    )

    @field_validator("threads", "search_cap", mode="before")
    @classmethod
    def parse_blank_int(cls, v: Any) -> Any:  # noqa: ANN401
        """Treat a blank variable as unset."""
        if isinstance(v, str) and not v.strip():
            raise PydanticUseDefault
        return v

    @field_validator("log_level", mode="before")
    @classmethod
    def normalize_log_level(cls, v: Any) -> str:  # noqa: ANN401
        level = str(v).strip().upper() or "WARNING"
        if level not in _LOG_LEVELS:
            raise ValueError(f"log level must be one of {', '.join(_LOG_LEVELS)}")
        return level

    @field_validator("catalog_path", mode="before")
    @classmethod
    def parse_optional_path(cls, v: Any) -> str | None:  # noqa: ANN401
        if v is None or not str(v).strip():
            return None
        return str(v).strip()

    @property
    def logging_level(self) -> int:
        return logging.getLevelNamesMapping()[self.log_level]
