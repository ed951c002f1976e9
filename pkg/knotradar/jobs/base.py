# coding=utf-8
"""
Job and result types shared by the command registry, runner and cache
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Optional, Protocol, Tuple

COMMANDS = ("torsion", "hfk11", "decomp", "detect", "window", "crosscheck")

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INCONSISTENT = 2
EXIT_INPUT = 3

STATUS_NAMES = {
    EXIT_OK: "ok",
    EXIT_VIOLATION: "violation",
    EXIT_INCONSISTENT: "inconsistent",
    EXIT_INPUT: "input-error",
}


@dataclass(frozen=True)
class JobSpec:
    command: str
    inputs: Tuple[str, ...] = ()
    options: Tuple[Tuple[str, Any], ...] = ()

    @classmethod
    def create(cls, command: str, inputs=(), options: Optional[Mapping[str, Any]] = None) -> "JobSpec":
        items = tuple(sorted((options or {}).items()))
        return cls(command, tuple(str(p) for p in inputs), items)

    def option(self, name: str, default: Any = None) -> Any:
        for key, value in self.options:
            if key == name:
                return value
        return default

    @property
    def label(self) -> str:
        return self.inputs[0] if self.inputs else self.command


@dataclass(frozen=True)
class JobContext:
    """Computation settings handed to every command."""

    det_method: str = "bird"
    extra_periods: int = 0
    config: Dict[str, Any] = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class ResultRecord:
    digest: str
    command: str
    source: str
    status: int
    output: Dict[str, Any]
    version: str
    cached: bool = field(default=False, compare=False)

    @property
    def status_name(self) -> str:
        return STATUS_NAMES.get(self.status, str(self.status))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "digest": self.digest,
            "command": self.command,
            "source": self.source,
            "status": self.status,
            "output": self.output,
            "version": self.version,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any], cached: bool = False) -> "ResultRecord":
        return cls(
            digest=data["digest"],
            command=data["command"],
            source=data["source"],
            status=int(data["status"]),
            output=dict(data["output"]),
            version=data["version"],
            cached=cached,
        )


class Command(Protocol):
    name: str

    def run(self, job: JobSpec, ctx: JobContext) -> Tuple[int, Dict[str, Any]]:
        ...
