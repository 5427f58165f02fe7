"""Per-pair survey results persisted under the cache directory.

Entries are keyed by (m, n, tool version). An entry written by any other
version is ignored, never partially reused.
"""

import json
import logging
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ValidationError

from config import TOOL_VERSION
from utils.errors import ReportWriteError

logger = logging.getLogger(__name__)


class CacheEntry(BaseModel):
    tool_version: str
    row: dict


class VerdictCache:
    def __init__(self, directory: Path, tool_version: str = TOOL_VERSION):
        self.directory = Path(directory)
        self.tool_version = tool_version

    def path_for(self, m: int, n: int) -> Path:
        return self.directory / f"trc4c8_m{m}_n{n}_v{self.tool_version}.json"

    def get(self, m: int, n: int) -> Optional[dict]:
        path = self.path_for(m, n)
        try:
            entry = CacheEntry.model_validate_json(path.read_text(encoding="utf-8"))
        except FileNotFoundError:
            return None
        except (OSError, ValidationError) as e:
            logger.warning(f"Ignoring unreadable cache entry {path}: {e}")
            return None
        if entry.tool_version != self.tool_version:
            logger.debug(f"Cache entry {path} is from version {entry.tool_version}")
            return None
        return entry.row

    def put(self, m: int, n: int, row: dict):
        path = self.path_for(m, n)
        entry = CacheEntry(tool_version=self.tool_version, row=row)
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            tmp.write_text(json.dumps(entry.model_dump(), sort_keys=True) + "\n", encoding="utf-8")
            tmp.replace(path)
        except OSError as e:
            raise ReportWriteError(f"Cannot write cache entry {path}: {e}") from e
