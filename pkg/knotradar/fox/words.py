# coding=utf-8
"""
Free group words and the free differential calculus

Words are freely reduced tuples of (generator index, +1 or -1). Elements
of the free group ring are dicts word -> integer coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

Letter = Tuple[int, int]
FreeCombination = Dict["FreeWord", int]


def _reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack: List[Letter] = []
    for gen, exp in letters:
        if exp not in (1, -1):
            raise ValueError(f"letter exponent must be +-1, got {exp}")
        if stack and stack[-1][0] == gen and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((gen, exp))
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce((int(g), int(e)) for g, e in self.letters))

    @classmethod
    def generator(cls, j: int, exp: int = 1) -> "FreeWord":
        if exp == 0:
            return cls()
        letter = (j, 1 if exp > 0 else -1)
        return cls((letter,) * abs(exp))

    @classmethod
    def parse(cls, text: str, names: Sequence[str]) -> "FreeWord":
        """
        Whitespace separated letters; an upper-case name is the inverse

        Examples:
            >>> FreeWord.parse("x y X", ["x", "y"]).letters
            ((0, 1), (1, 1), (0, -1))
            >>> FreeWord.parse("x X", ["x"]).letters
            ()
        """
        index = {name: i for i, name in enumerate(names)}
        inverse = {name.upper(): i for i, name in enumerate(names) if name.upper() != name}
        letters = []
        for token in text.split():
            if token == "1":
                continue
            if token in index:
                letters.append((index[token], 1))
            elif token in inverse:
                letters.append((inverse[token], -1))
            else:
                raise ValueError(f"unknown letter {token!r}")
        return cls(tuple(letters))

    def format(self, names: Sequence[str]) -> str:
        if not self.letters:
            return "1"
        return " ".join(names[g] if e > 0 else names[g].upper() for g, e in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "FreeWord":
        base = self if n >= 0 else self.inverse()
        return FreeWord(base.letters * abs(n))

    def exponent_sums(self, n_generators: int) -> List[int]:
        sums = [0] * n_generators
        for g, e in self.letters:
            sums[g] += e
        return sums

    def generators(self) -> set:
        return {g for g, _ in self.letters}

    def substitute(self, images: Dict[int, "FreeWord"]) -> "FreeWord":
        """Replace each generator j by images[j] (others unchanged)."""
        out: List[Letter] = []
        for g, e in self.letters:
            if g in images:
                w = images[g] if e > 0 else images[g].inverse()
                out.extend(w.letters)
            else:
                out.append((g, e))
        return FreeWord(tuple(out))


def _add(comb: FreeCombination, word: FreeWord, coeff: int) -> None:
    v = comb.get(word, 0) + coeff
    if v:
        comb[word] = v
    else:
        comb.pop(word, None)


def fox_derivative(w: FreeWord, j: int) -> FreeCombination:
    """
    Free derivative d w / d x_j

    Each occurrence of x_j contributes +prefix, each x_j^-1 contributes
    -(prefix * x_j^-1).

    Examples:
        >>> x, y = FreeWord.generator(0), FreeWord.generator(1)
        >>> d = fox_derivative(x * y * x.inverse() * y.inverse(), 0)
        >>> sorted((w.letters, c) for w, c in d.items())
        [((), 1), (((0, 1), (1, 1), (0, -1)), -1)]
    """
    out: FreeCombination = {}
    for k, (g, e) in enumerate(w.letters):
        if g != j:
            continue
        if e > 0:
            _add(out, FreeWord(w.letters[:k]), 1)
        else:
            _add(out, FreeWord(w.letters[: k + 1]), -1)
    return out


def right_multiply(comb: FreeCombination, word: FreeWord, coeff: int = 1) -> FreeCombination:
    out: FreeCombination = {}
    for w, c in comb.items():
        _add(out, w * word, c * coeff)
    return out


def fundamental_identity_residual(w: FreeWord, n_generators: int) -> FreeCombination:
    """
    sum_j (d w / d x_j)(x_j - 1) - (w - 1), which is zero in the free group ring
    """
    total: FreeCombination = {}
    for j in range(n_generators):
        d = fox_derivative(w, j)
        for word, c in right_multiply(d, FreeWord.generator(j)).items():
            _add(total, word, c)
        for word, c in d.items():
            _add(total, word, -c)
    _add(total, w, -1)
    _add(total, FreeWord(), 1)
    return total
