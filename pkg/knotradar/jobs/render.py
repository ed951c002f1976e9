"""
Report rendering

Text reports come from the Jinja2 templates under knotradar/templates; kv
output is the record flattened to sorted key=value lines. Both are pure
functions of the record.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, List

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from knotradar.utils.validators import validate_format

from .base import EXIT_INPUT, ResultRecord
from .batch import BatchSummary, record_name

TEMPLATE_DIR = Path(__file__).resolve().parent.parent / "templates"

_env = Environment(
    loader=FileSystemLoader(str(TEMPLATE_DIR)),
    undefined=StrictUndefined,
    keep_trailing_newline=True,
    trim_blocks=True,
    lstrip_blocks=True,
    autoescape=False,
)


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _flatten(prefix: str, value: Any, out: List[str]) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, out)
    elif isinstance(value, (list, tuple)):
        for i, v in enumerate(value):
            _flatten(f"{prefix}.{i}", v, out)
    else:
        out.append(f"{prefix}={_scalar(value)}")


_env.filters["scalar"] = _scalar


def render_kv(record: ResultRecord) -> str:
    """
    Examples:
        >>> r = ResultRecord("d", "window", "window", 0, {"valid": True, "bounds": [["+", 1, -1]]}, "0.3.0")
        >>> print(render_kv(r), end="")
        bounds.0.0=+
        bounds.0.1=1
        bounds.0.2=-1
        command=window
        source=window
        status=0
        status_name=ok
        valid=true
    """
    lines: List[str] = []
    _flatten("", record.output, lines)
    lines.extend([
        f"command={record.command}",
        f"source={record.source}",
        f"status={record.status}",
        f"status_name={record.status_name}",
    ])
    return "\n".join(sorted(lines)) + "\n"


def render_text(record: ResultRecord) -> str:
    name = "error.txt.j2" if record.status == EXIT_INPUT else f"{record.command}.txt.j2"
    return _env.get_template(name).render(record=record, output=record.output)


def render(record: ResultRecord, fmt: str = "text") -> str:
    fmt = validate_format(fmt)
    return render_kv(record) if fmt == "kv" else render_text(record)


def render_summary(summary: BatchSummary, fmt: str = "text") -> str:
    fmt = validate_format(fmt)
    rows = [
        {
            "source": r.source,
            "command": r.command,
            "status": r.status_name,
            "record": record_name(r),
            "detail": (r.output.get("error") or {}).get("code", "") if r.status == EXIT_INPUT else "",
        }
        for r in summary.records
    ]
    if fmt == "kv":
        lines = [f"jobs={len(rows)}", f"exit_code={summary.exit_code}"]
        lines.extend(f"count.{k}={v}" for k, v in summary.counts().items())
        for i, row in enumerate(rows):
            lines.extend(f"job.{i}.{k}={_scalar(v)}" for k, v in row.items())
        return "\n".join(sorted(lines)) + "\n"
    return _env.get_template("summary.txt.j2").render(summary=summary, rows=rows, counts=summary.counts())
