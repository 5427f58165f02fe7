import os
import json
import logging
import sys
from pathlib import Path

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError

# load .env file
load_dotenv()

TOOL_VERSION = "0.1.0"


# --- Logger Setup Function ---
def setup_logging(level: int = logging.WARNING):
    """Configures the root logger with a single stderr handler.

    stdout is reserved for primary outputs (exports, reports, verdicts), which
    must stay byte-identical across runs.
    """
    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    if root_logger.hasHandlers():
        root_logger.handlers.clear()

    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )

    stderr_handler = logging.StreamHandler(sys.stderr)
    stderr_handler.setLevel(level)
    stderr_handler.setFormatter(formatter)

    root_logger.addHandler(stderr_handler)


# --- End Logger Setup Function ---

# Logger for this module (config.py)
config_logger = logging.getLogger(__name__)


class SearchLimits(BaseModel):
    """Caps and budgets shared by graph construction and the search kernels."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    point_cap: int = Field(default=1_000_000, ge=1)
    aut_vertex_cap: int = Field(default=64, ge=1)
    closure_cap: int = Field(default=1_000_000, ge=1)
    node_budget: int = Field(default=2_000_000, ge=1)
    survey_workers: int = Field(default=1, ge=1)


DEFAULT_LIMITS = SearchLimits()


class Config:
    """Manages application settings, loading search limits from a JSON file."""

    _DEFAULT_LIMITS_PATH = "search_limits.json"
    _DEFAULT_CACHE_DIR = ".torus_cayley_cache"

    def __init__(self):
        """Initializes the Config object."""
        self.limits_json_path = self._get_config_path(
            "TORUS_CAYLEY_LIMITS_PATH", self._DEFAULT_LIMITS_PATH
        )
        self.limits: SearchLimits = self._load_limits_from_json()
        self.cache_dir = self._get_config_path(
            "TORUS_CAYLEY_CACHE_DIR", self._DEFAULT_CACHE_DIR
        )
        self.tool_version = TOOL_VERSION

    def _get_config_path(self, env_var: str, default_path: str) -> Path:
        """Determines the configuration file path to use."""
        config_path_str = os.environ.get(env_var, default_path)
        return Path(config_path_str)

    def _load_limits_from_json(self) -> SearchLimits:
        """Loads search limits from the configuration file path."""
        try:
            with open(self.limits_json_path, "r", encoding="utf-8") as f:
                data = json.load(f)
            return SearchLimits(**data.get("limits", {}))

        except FileNotFoundError:
            config_logger.warning(
                f"Limits file not found: {self.limits_json_path}, using defaults"
            )
        except json.JSONDecodeError:
            config_logger.error(
                f"Failed to parse limits file: {self.limits_json_path}"
            )
        except ValidationError as e:
            config_logger.error(
                f"Invalid limits in {self.limits_json_path}: {e}"
            )
        except Exception as e:
            config_logger.exception(
                f"An unexpected error occurred while reading the limits file {self.limits_json_path}: {e}"
            )

        return SearchLimits()
