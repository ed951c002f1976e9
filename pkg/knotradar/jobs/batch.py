"""
Batch runs over a directory of job files
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Tuple

from .base import EXIT_OK, JobSpec, ResultRecord
from .runner import JobRunner

logger = logging.getLogger(__name__)

# extension -> commands run on each file, in this order
BATCH_COMMANDS: Dict[str, Tuple[str, ...]] = {
    ".gp": ("torsion",),
    ".od": ("hfk11", "crosscheck"),
    ".gre": ("decomp",),
    ".det": ("detect",),
}


@dataclass(frozen=True)
class BatchSummary:
    directory: str
    records: Tuple[ResultRecord, ...]

    @property
    def exit_code(self) -> int:
        return max((r.status for r in self.records), default=EXIT_OK)

    def counts(self) -> Dict[str, int]:
        out: Dict[str, int] = {}
        for r in self.records:
            out[r.status_name] = out.get(r.status_name, 0) + 1
        return dict(sorted(out.items()))


def batch_jobs(directory: Path) -> List[JobSpec]:
    """Jobs for every recognised file directly under directory, ordered by file name"""
    jobs: List[JobSpec] = []
    for path in sorted(p for p in directory.iterdir() if p.is_file()):
        commands = BATCH_COMMANDS.get(path.suffix)
        if commands is None:
            logger.debug("batch.skip file=%s", path.name)
            continue
        jobs.extend(JobSpec.create(command, [path]) for command in commands)
    return jobs


def record_name(record: ResultRecord) -> str:
    return f"{record.source}.{record.command}.json"


def run_batch(
    runner: JobRunner,
    directory: Path,
    workers: int = 1,
    record_dir: str = ".knotradar",
) -> BatchSummary:
    """
    Run every job file in directory and write one record per job

    Records land in <directory>/<record_dir>/; the summary table is written
    by the caller since it depends on the output format.
    """
    jobs = batch_jobs(directory)
    records = runner.run_many(jobs, workers)
    out_dir = directory / record_dir
    out_dir.mkdir(parents=True, exist_ok=True)
    for record in records:
        text = json.dumps(record.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
        (out_dir / record_name(record)).write_text(text, encoding="utf-8")
        logger.info("batch.job done file=%s command=%s status=%s", record.source, record.command, record.status_name)
    return BatchSummary(str(directory), tuple(records))
