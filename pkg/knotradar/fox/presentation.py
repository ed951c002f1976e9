# coding=utf-8
"""
Group presentations and the .gp file format

    # comment
    gens: x y
    rel: x y x Y X Y
    meridian: x

Letters are separated by whitespace; the upper-case name is the inverse.
Words are freely reduced on read.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from knotradar.utils.errors import FileParseError

from .words import FreeWord


@dataclass(frozen=True)
class GroupPresentation:
    n_generators: int
    relators: Tuple[FreeWord, ...] = ()
    meridian: FreeWord = field(default_factory=FreeWord)
    names: Tuple[str, ...] = ()

    def __post_init__(self):
        names = tuple(self.names) or tuple(_default_names(self.n_generators))
        if len(names) != self.n_generators:
            raise ValueError(f"{len(names)} names for {self.n_generators} generators")
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "relators", tuple(self.relators))
        for w in self.relators + (self.meridian,):
            if any(g >= self.n_generators or g < 0 for g in w.generators()):
                raise ValueError(f"word uses a generator outside 0..{self.n_generators - 1}")

    @property
    def deficiency(self) -> int:
        return self.n_generators - len(self.relators)

    def meridian_generator(self) -> Optional[int]:
        """Index j when the meridian is x_j or x_j^-1."""
        if len(self.meridian) == 1:
            return self.meridian.letters[0][0]
        return None


def _default_names(n: int) -> List[str]:
    base = ["x", "y", "z", "w", "v", "u"]
    return base[:n] if n <= len(base) else [f"g{i}" for i in range(n)]


def parse_presentation(text: str, file_path: str = "<string>") -> GroupPresentation:
    """
    Examples:
        >>> p = parse_presentation("gens: x y\\nrel: x y x Y X Y\\nmeridian: x\\n")
        >>> p.n_generators, len(p.relators), p.meridian_generator()
        (2, 1, 0)
    """
    names: Optional[List[str]] = None
    rel_lines: List[Tuple[int, str]] = []
    meridian_line: Optional[Tuple[int, str]] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise FileParseError(file_path, lineno, 1, "expected 'key: value'")
        key, value = (part.strip() for part in line.split(":", 1))
        if key == "gens":
            if names is not None:
                raise FileParseError(file_path, lineno, 1, "duplicate gens line")
            names = value.split()
            for name in names:
                if not name.isidentifier() or name.upper() == name:
                    raise FileParseError(file_path, lineno, raw.find(name) + 1, f"bad generator name {name!r}")
        elif key == "rel":
            rel_lines.append((lineno, value))
        elif key == "meridian":
            meridian_line = (lineno, value)
        else:
            raise FileParseError(file_path, lineno, 1, f"unknown key {key!r}")

    if names is None:
        raise FileParseError(file_path, 1, 1, "missing gens line")

    def _word(lineno: int, value: str) -> FreeWord:
        try:
            return FreeWord.parse(value, names)
        except ValueError as e:
            raise FileParseError(file_path, lineno, 1, str(e)) from None

    relators = tuple(_word(n, v) for n, v in rel_lines)
    meridian = _word(*meridian_line) if meridian_line else FreeWord()
    if meridian_line is None and names:
        meridian = FreeWord.generator(0)
    return GroupPresentation(len(names), relators, meridian, tuple(names))


def format_presentation(p: GroupPresentation) -> str:
    lines = [f"gens: {' '.join(p.names)}"]
    lines.extend(f"rel: {w.format(p.names)}" for w in p.relators)
    lines.append(f"meridian: {p.meridian.format(p.names)}")
    return "\n".join(lines) + "\n"


def load_presentation(path: Union[str, Path]) -> GroupPresentation:
    fp = Path(path)
    return parse_presentation(fp.read_text(encoding="utf-8"), str(fp))


# === Tietze moves ===

def conjugate_relator(p: GroupPresentation, i: int, word: FreeWord) -> GroupPresentation:
    """Replace relator i by word * r_i * word^-1."""
    relators = list(p.relators)
    relators[i] = word * relators[i] * word.inverse()
    return replace(p, relators=tuple(relators))


def invert_relator(p: GroupPresentation, i: int) -> GroupPresentation:
    relators = list(p.relators)
    relators[i] = relators[i].inverse()
    return replace(p, relators=tuple(relators))


def multiply_relators(p: GroupPresentation, i: int, j: int) -> GroupPresentation:
    """Replace relator i by r_i * r_j."""
    if i == j:
        raise ValueError("cannot multiply a relator by itself")
    relators = list(p.relators)
    relators[i] = relators[i] * relators[j]
    return replace(p, relators=tuple(relators))


def substitute_generator(p: GroupPresentation, j: int, word: FreeWord) -> GroupPresentation:
    """
    Apply the free automorphism x_j -> x_j * word to relators and meridian

    word must not involve x_j.
    """
    if j in word.generators():
        raise ValueError(f"substitution word must not use generator {p.names[j]}")
    images = {j: FreeWord.generator(j) * word}
    return replace(
        p,
        relators=tuple(r.substitute(images) for r in p.relators),
        meridian=p.meridian.substitute(images),
    )


def presentation_from_words(names: Sequence[str], relators: Sequence[str], meridian: str) -> GroupPresentation:
    """Convenience constructor from word strings."""
    return GroupPresentation(
        len(names),
        tuple(FreeWord.parse(r, names) for r in relators),
        FreeWord.parse(meridian, names),
        tuple(names),
    )
