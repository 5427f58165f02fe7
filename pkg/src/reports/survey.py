"""Parameter sweep over (m, n) with per-pair caching."""

import asyncio
import csv
import logging
import time
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from cayley.verdict import CayleyAnswer, decide_cayley
from config import Config, SearchLimits
from reports.cache import VerdictCache
from torus.graph import torus_params
from utils.errors import ReportWriteError, TorusCayleyError

logger = logging.getLogger(__name__)

CSV_HEADER = ["m", "n", "order", "size", "vertex_transitive", "aut_order", "is_cayley", "wall_time_ms"]


class SurveyRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    m: int
    n: int
    order: int
    size: int
    vertex_transitive: Optional[bool] = None
    aut_order: Optional[int] = None
    is_cayley: CayleyAnswer
    wall_time_ms: int

    def csv_fields(self) -> List[str]:
        def cell(value) -> str:
            if value is None:
                return ""
            if isinstance(value, bool):
                return "true" if value else "false"
            return str(value)

        return [cell(getattr(self, name)) for name in CSV_HEADER]


def compute_row(m: int, n: int, budget: int, limits: SearchLimits) -> SurveyRow:
    """One survey row; runs inside a worker process, so it must stay module-level."""
    params = torus_params(m, n)
    started = time.perf_counter()
    try:
        verdict = decide_cayley(params, budget, limits, with_aut=True)
        answer = verdict.is_cayley
        vertex_transitive, aut_order = verdict.vertex_transitive, verdict.aut_order
    except TorusCayleyError as e:
        logger.warning(f"[{m},{n}] recorded as inconclusive: {e}")
        answer, vertex_transitive, aut_order = CayleyAnswer.INCONCLUSIVE, None, None
    elapsed = int((time.perf_counter() - started) * 1000)
    return SurveyRow(
        m=m,
        n=n,
        order=params.order,
        size=params.size,
        vertex_transitive=vertex_transitive,
        aut_order=aut_order,
        is_cayley=answer,
        wall_time_ms=elapsed,
    )


class SurveyController:
    def __init__(self, config: Config, budget: int):
        self.config = config
        self.budget = budget
        self.cache = VerdictCache(config.cache_dir, config.tool_version)
        self._asyncio_lock = asyncio.Lock()
        self._executor: Optional[Executor] = None
        self._initialized = False

    async def initialize(self):
        async with self._asyncio_lock:
            workers = self.config.limits.survey_workers
            if workers > 1:
                self._executor = ProcessPoolExecutor(max_workers=workers)
            else:
                # one pair at a time, in process
                self._executor = ThreadPoolExecutor(max_workers=1)
            self._initialized = True

    def is_initialized(self) -> bool:
        return self._initialized

    async def shutdown(self):
        async with self._asyncio_lock:
            if self._executor is not None:
                self._executor.shutdown(wait=True)
                self._executor = None
            self._initialized = False

    async def run_pair(self, m: int, n: int) -> SurveyRow:
        cached = self.cache.get(m, n)
        if cached is not None:
            logger.debug(f"[{m},{n}] served from cache")
            return SurveyRow.model_validate(cached)

        loop = asyncio.get_running_loop()
        row = await loop.run_in_executor(
            self._executor, compute_row, m, n, self.budget, self.config.limits
        )
        if row.is_cayley != CayleyAnswer.INCONCLUSIVE:
            async with self._asyncio_lock:
                self.cache.put(m, n, row.model_dump(mode="json"))
        logger.info(f"TRC4C8[{m},{n}]: is_cayley={row.is_cayley}")
        return row

    async def run(self, pairs: List[Tuple[int, int]]) -> List[SurveyRow]:
        rows = await asyncio.gather(*(self.run_pair(m, n) for m, n in pairs))
        return sorted(rows, key=lambda row: (row.m, row.n))


def write_survey_csv(rows: List[SurveyRow], out_path: Path):
    try:
        with open(out_path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            for row in rows:
                writer.writerow(row.csv_fields())
    except OSError as e:
        raise ReportWriteError(f"Cannot write survey to {out_path}: {e}") from e


async def _survey(pairs: List[Tuple[int, int]], budget: int, config: Config) -> List[SurveyRow]:
    controller = SurveyController(config, budget)
    await controller.initialize()
    try:
        return await controller.run(pairs)
    finally:
        await controller.shutdown()


def survey(
    m_range: Tuple[int, int],
    n_range: Tuple[int, int],
    out_path: Path,
    budget: Optional[int] = None,
    config: Optional[Config] = None,
) -> List[SurveyRow]:
    """Decide every (m, n) in the inclusive ranges and write the CSV."""
    config = config or Config()
    budget = budget or config.limits.node_budget
    pairs = [
        (m, n)
        for m in range(m_range[0], m_range[1] + 1)
        for n in range(n_range[0], n_range[1] + 1)
    ]
    if not pairs:
        raise ValueError(f"Empty survey ranges {m_range} x {n_range}")
    rows = asyncio.run(_survey(pairs, budget, config))
    write_survey_csv(rows, out_path)
    logger.info(f"Survey of {len(rows)} pairs written to {out_path}")
    return rows
