# coding=utf-8
"""
Application context

Wraps every configuration-dependent operation so that no module reads
global configuration state.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional

from knotradar.core.config import resolve_jobs, resolve_output_format
from knotradar.jobs import (
    BatchSummary,
    CommandRegistry,
    JobContext,
    JobRunner,
    JobSpec,
    ResultCache,
    ResultRecord,
    get_cache,
    get_default_registry,
    render,
    render_summary,
    run_batch,
)
from knotradar.utils.errors import InvalidParameterError

logger = logging.getLogger(__name__)


class AppContext:
    """
    Configuration-bound entry point

    Usage:
        config = load_config()
        ctx = AppContext(config, cache_enabled=False)
        record = ctx.run(JobSpec.create("hfk11", ["fixtures/trefoil.od"]))
        print(ctx.render(record))
    """

    def __init__(
        self,
        config: Dict[str, Any],
        cache_dir: Optional[str] = None,
        cache_enabled: Optional[bool] = None,
        jobs: Optional[int] = None,
        output_format: Optional[str] = None,
        version: Optional[str] = None,
    ):
        """
        Args:
            config: dict from load_config
            cache_dir, cache_enabled, jobs, output_format: CLI overrides
            version: toolkit version mixed into cache digests
        """
        from knotradar import __version__

        self.config = config
        self._cache_dir = cache_dir
        self._cache_enabled = cache_enabled
        self._jobs = jobs
        self._format = output_format
        self.version = version or __version__
        self._runner: Optional[JobRunner] = None

    # === configuration ===

    @property
    def cache_enabled(self) -> bool:
        if self._cache_enabled is not None:
            return self._cache_enabled
        return bool(self.config.get("CACHE", {}).get("ENABLED", True))

    @property
    def cache_dir(self) -> str:
        return self._cache_dir or self.config.get("CACHE", {}).get("DIR", ".knotradar-cache")

    @property
    def jobs(self) -> int:
        return resolve_jobs(self._jobs, self.config.get("BATCH", {}).get("JOBS"))

    @property
    def output_format(self) -> str:
        return resolve_output_format(self._format, self.config.get("APP", {}).get("FORMAT"))

    @property
    def det_method(self) -> str:
        return self.config.get("FOX", {}).get("DET_METHOD", "bird")

    @property
    def extra_periods(self) -> int:
        extra = self.config.get("HEEGAARD", {}).get("EXTRA_PERIODS", 0)
        if isinstance(extra, bool) or not isinstance(extra, int) or extra < 0:
            raise InvalidParameterError(f"heegaard.extra_periods must be a non-negative integer, got {extra!r}")
        return extra

    # === jobs ===

    def get_cache(self) -> Optional[ResultCache]:
        return get_cache(self.cache_dir) if self.cache_enabled else None

    def get_registry(self) -> CommandRegistry:
        return get_default_registry()

    def job_context(self) -> JobContext:
        return JobContext(det_method=self.det_method, extra_periods=self.extra_periods, config=self.config)

    def get_runner(self) -> JobRunner:
        if self._runner is None:
            self._runner = JobRunner(self.get_registry(), self.job_context(), self.version, self.get_cache())
        return self._runner

    def run(self, job: JobSpec) -> ResultRecord:
        return self.get_runner().run(job)

    def batch(self, directory: str) -> BatchSummary:
        """
        Run a directory of job files, writing records and the summary table

        Raises:
            InvalidParameterError: directory does not exist
        """
        root = Path(directory)
        if not root.is_dir():
            raise InvalidParameterError(f"not a directory: {directory}")
        batch_config = self.config.get("BATCH", {})
        record_dir = batch_config.get("RECORD_DIR", ".knotradar")
        summary = run_batch(self.get_runner(), root, self.jobs, record_dir)
        summary_path = root / record_dir / batch_config.get("SUMMARY_FILE", "summary.txt")
        summary_path.write_text(render_summary(summary, "text"), encoding="utf-8")
        logger.info("batch.done dir=%s jobs=%d exit_code=%d", directory, len(summary.records), summary.exit_code)
        return summary

    # === output ===

    def render(self, record: ResultRecord) -> str:
        return render(record, self.output_format)

    def render_summary(self, summary: BatchSummary) -> str:
        return render_summary(summary, self.output_format)
