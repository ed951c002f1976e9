from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional

from knotradar.utils.errors import InvalidParameterError

from .base import Command


@dataclass
class CommandRegistry:
    _commands: Dict[str, Command]

    def __init__(self):
        self._commands = {}

    def register(self, command: Command) -> None:
        name = getattr(command, "name", None)
        if not isinstance(name, str) or not name.strip():
            raise ValueError("command.name must be a non-empty string")
        if name in self._commands:
            raise ValueError(f"command already registered: {name}")
        self._commands[name] = command

    def get(self, name: str) -> Command:
        if name not in self._commands:
            raise InvalidParameterError(
                f"unknown command: {name}",
                suggestion=f"supported: {', '.join(sorted(self._commands))}",
            )
        return self._commands[name]

    def maybe_get(self, name: str) -> Optional[Command]:
        return self._commands.get(name)

    def all(self) -> Dict[str, Command]:
        return dict(self._commands)


_default_registry: Optional[CommandRegistry] = None


def get_default_registry() -> CommandRegistry:
    global _default_registry
    if _default_registry is None:
        from .commands import register_builtin_commands

        registry = CommandRegistry()
        register_builtin_commands(registry)
        _default_registry = registry
    return _default_registry
