"""
Job execution

A job is digested from its command, options, input names and input bytes
together with the toolkit version; a cached record with the same digest is
returned as is. Failures are captured per job and never abort a batch.
"""

from __future__ import annotations

import hashlib
import json
import logging
import time
from multiprocessing.pool import ThreadPool
from pathlib import Path
from typing import List, Optional, Sequence

from knotradar.utils.errors import KnotRadarError

from .base import EXIT_INPUT, JobContext, JobSpec, ResultRecord
from .cache import ResultCache
from .registry import CommandRegistry

logger = logging.getLogger(__name__)


def job_digest(job: JobSpec, version: str) -> str:
    """
    sha256 over the job description and the bytes of every input

    Raises:
        OSError: an input cannot be read
    """
    h = hashlib.sha256()
    header = {"command": job.command, "options": [list(item) for item in job.options], "version": version}
    h.update(json.dumps(header, sort_keys=True, default=str).encode("utf-8"))
    for name in job.inputs:
        path = Path(name)
        h.update(b"\0" + path.name.encode("utf-8") + b"\0")
        h.update(path.read_bytes())
    return h.hexdigest()


class JobRunner:
    def __init__(
        self,
        registry: CommandRegistry,
        ctx: JobContext,
        version: str,
        cache: Optional[ResultCache] = None,
    ):
        self.registry = registry
        self.ctx = ctx
        self.version = version
        self.cache = cache

    def run(self, job: JobSpec) -> ResultRecord:
        started_at = time.time()
        source = Path(job.label).name
        try:
            digest = job_digest(job, self.version)
        except OSError as e:
            logger.warning("jobs.run unreadable source=%s error=%s", source, e)
            return self._failure(job, "", source, {"code": "INPUT_UNREADABLE", "message": str(e)})

        if self.cache is not None:
            hit = self.cache.get(digest)
            if hit is not None:
                logger.debug("jobs.run cache_hit command=%s source=%s", job.command, source)
                return ResultRecord.from_dict(hit, cached=True)

        try:
            command = self.registry.get(job.command)
            status, output = command.run(job, self.ctx)
        except KnotRadarError as e:
            logger.info("jobs.run failed command=%s source=%s code=%s", job.command, source, e.code)
            return self._failure(job, digest, source, e.to_dict())
        except OSError as e:
            return self._failure(job, digest, source, {"code": "INPUT_UNREADABLE", "message": str(e)})

        record = ResultRecord(digest, job.command, source, status, output, self.version)
        if self.cache is not None:
            self.cache.set(digest, record.to_dict())
        duration_ms = int((time.time() - started_at) * 1000)
        logger.info(
            "jobs.run done command=%s source=%s status=%d duration_ms=%d",
            job.command, source, status, duration_ms,
        )
        return record

    def _failure(self, job: JobSpec, digest: str, source: str, error: dict) -> ResultRecord:
        return ResultRecord(digest, job.command, source, EXIT_INPUT, {"error": error}, self.version)

    def run_many(self, jobs: Sequence[JobSpec], workers: int = 1) -> List[ResultRecord]:
        """Results in job order whatever the worker count"""
        if workers <= 1 or len(jobs) <= 1:
            return [self.run(job) for job in jobs]
        with ThreadPool(min(workers, len(jobs))) as pool:
            return pool.map(self.run, jobs)
