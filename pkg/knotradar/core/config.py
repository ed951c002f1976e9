# coding=utf-8
"""
Small pure helpers shared by the CLI and the configuration layer
"""

from typing import Dict, List, Optional, Union

from knotradar.utils.errors import InvalidParameterError
from knotradar.utils.validators import validate_format, validate_jobs


def resolve_jobs(flag: Optional[int], configured: Optional[int]) -> int:
    """
    Worker count: the CLI flag wins over the configured value

    Examples:
        >>> resolve_jobs(None, 4)
        4
        >>> resolve_jobs(2, 4)
        2
        >>> resolve_jobs(None, None)
        1
    """
    if flag is not None:
        return validate_jobs(flag)
    return validate_jobs(configured or None)


def resolve_output_format(flag: Optional[str], configured: Optional[str]) -> str:
    """
    Examples:
        >>> resolve_output_format(None, "kv")
        'kv'
        >>> resolve_output_format("text", "kv")
        'text'
    """
    return validate_format(flag if flag is not None else configured)


def parse_tau_assignments(values: Optional[List[str]]) -> Dict[Union[int, str], int]:
    """
    Parse ``j=v`` pairs for the window corrections

    Args:
        values: items such as "+=0", "-=-1" or "3=-1"

    Returns:
        mapping surface index -> correction

    Raises:
        InvalidParameterError: malformed item

    Examples:
        >>> parse_tau_assignments(["+=0", "-=-1", "3=-1"])
        {'+': 0, '-': -1, 3: -1}
        >>> parse_tau_assignments(None)
        {}
    """
    out: Dict[Union[int, str], int] = {}
    for item in values or []:
        key, sep, value = item.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            raise InvalidParameterError(f"tau assignment {item!r} is not j=v", suggestion="e.g. --tau 1=-1")
        try:
            index: Union[int, str] = key if key in ("+", "-") else int(key)
            out[index] = int(value)
        except ValueError:
            raise InvalidParameterError(f"tau assignment {item!r} is not j=v", suggestion="e.g. --tau 1=-1") from None
    return out
