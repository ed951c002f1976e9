"""
Parameter validation helpers

Shared checks for CLI flags, config values and job inputs.
"""

from pathlib import Path
from typing import Dict, List, Optional

from .errors import InvalidParameterError


# file extension -> commands that accept it
EXTENSION_COMMANDS: Dict[str, List[str]] = {
    ".gp": ["torsion"],
    ".od": ["hfk11", "crosscheck", "detect"],
    ".gre": ["decomp"],
    ".det": ["detect"],
}


def validate_positive_int(value: Optional[int], name: str, default: Optional[int] = None) -> int:
    """
    Validate a strictly positive integer parameter

    Args:
        value: the value to check, None selects the default
        name: parameter name used in messages
        default: value returned for None

    Returns:
        the validated integer

    Raises:
        InvalidParameterError: value missing, not an integer, or not positive
    """
    if value is None:
        if default is None:
            raise InvalidParameterError(f"{name} is required")
        return default

    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidParameterError(f"{name} must be an integer")

    if value <= 0:
        raise InvalidParameterError(f"{name} must be positive, got {value}")

    return value


def validate_non_negative_int(value: int, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidParameterError(f"{name} must be an integer")
    if value < 0:
        raise InvalidParameterError(f"{name} must be non-negative, got {value}")
    return value


def validate_jobs(jobs: Optional[int], default: int = 1, max_jobs: int = 64) -> int:
    """
    Validate the worker count for batch runs

    Raises:
        InvalidParameterError: jobs out of range
    """
    jobs = validate_positive_int(jobs, "jobs", default)
    if jobs > max_jobs:
        raise InvalidParameterError(
            f"jobs cannot exceed {max_jobs}",
            suggestion="lower --jobs"
        )
    return jobs


def validate_mode(mode: Optional[str], valid_modes: List[str], default: str) -> str:
    """
    Validate a mode string against its allowed values

    Raises:
        InvalidParameterError: unknown mode
    """
    if mode is None:
        return default

    if not isinstance(mode, str):
        raise InvalidParameterError("mode must be a string")

    if mode not in valid_modes:
        raise InvalidParameterError(
            f"invalid mode: {mode}",
            suggestion=f"supported: {', '.join(valid_modes)}"
        )

    return mode


def validate_format(fmt: Optional[str], default: str = "text") -> str:
    return validate_mode(fmt, ["text", "kv"], default)


def validate_input_file(path: str, command: str) -> Path:
    """
    Check that a job input exists and has an extension the command reads

    Raises:
        InvalidParameterError: missing file or wrong extension
    """
    fp = Path(path)
    if not fp.is_file():
        raise InvalidParameterError(f"input file not found: {path}")

    accepted = [ext for ext, commands in EXTENSION_COMMANDS.items() if command in commands]
    if fp.suffix not in accepted:
        raise InvalidParameterError(
            f"{command} cannot read {fp.suffix or 'extensionless'} files",
            suggestion=f"expected one of: {', '.join(accepted)}"
        )
    return fp
