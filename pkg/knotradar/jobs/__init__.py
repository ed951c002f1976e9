"""
Command registry, job runner, result cache and report rendering
"""

from knotradar.jobs.base import (
    COMMANDS,
    EXIT_OK,
    EXIT_VIOLATION,
    EXIT_INCONSISTENT,
    EXIT_INPUT,
    JobSpec,
    JobContext,
    ResultRecord,
)
from knotradar.jobs.registry import CommandRegistry, get_default_registry
from knotradar.jobs.cache import ResultCache, get_cache
from knotradar.jobs.runner import JobRunner, job_digest
from knotradar.jobs.batch import BATCH_COMMANDS, BatchSummary, batch_jobs, run_batch
from knotradar.jobs.render import render, render_kv, render_text, render_summary

__all__ = [
    "COMMANDS",
    "EXIT_OK",
    "EXIT_VIOLATION",
    "EXIT_INCONSISTENT",
    "EXIT_INPUT",
    "JobSpec",
    "JobContext",
    "ResultRecord",
    "CommandRegistry",
    "get_default_registry",
    "ResultCache",
    "get_cache",
    "JobRunner",
    "job_digest",
    "BATCH_COMMANDS",
    "BatchSummary",
    "batch_jobs",
    "run_batch",
    "render",
    "render_kv",
    "render_text",
    "render_summary",
]
