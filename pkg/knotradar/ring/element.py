# coding=utf-8
"""
Group ring elements

GroupRingElem is an immutable finite sum of coefficient * group element
over a FinAbGroup. Coefficients are integers, or halves of integers when
allow_half is set. Keys are stored internally as exponent vectors with the
torsion part reduced.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from knotradar.abelian import FinAbGroup, GroupElem, GroupHom
from knotradar.utils.errors import GroupMismatchError

Coeff = Union[int, Fraction]
Vector = Tuple[int, ...]


def _normalize_coeff(c: Coeff, allow_half: bool) -> Coeff:
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c.numerator)
        if not allow_half or c.denominator != 2:
            raise ValueError(f"coefficient {c} not allowed (allow_half={allow_half})")
        return c
    if isinstance(c, bool) or not isinstance(c, int):
        raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")
    return c


def _reduce(group: FinAbGroup, vec: Vector) -> Vector:
    if not group.torsion:
        return vec
    r = group.rank
    return vec[:r] + tuple(b % d for b, d in zip(vec[r:], group.torsion))


class GroupRingElem:
    __slots__ = ("group", "allow_half", "_terms", "_hash")

    def __init__(
        self,
        group: FinAbGroup,
        terms: Optional[Mapping[GroupElem, Coeff]] = None,
        allow_half: bool = False,
    ):
        self.group = group
        self.allow_half = allow_half
        acc: Dict[Vector, Coeff] = {}
        for g, c in (terms or {}).items():
            if not isinstance(g, GroupElem):
                raise TypeError(f"term key must be GroupElem, got {type(g).__name__}")
            if g.group != group:
                raise GroupMismatchError(f"term {g} is not in {group}")
            acc[g.vector] = acc.get(g.vector, 0) + c
        self._terms = {k: _normalize_coeff(c, allow_half) for k, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _from_vectors(cls, group: FinAbGroup, terms: Dict[Vector, Coeff], allow_half: bool = False) -> "GroupRingElem":
        out = cls.__new__(cls)
        out.group = group
        out.allow_half = allow_half
        out._terms = {k: _normalize_coeff(c, allow_half) for k, c in terms.items() if c != 0}
        out._hash = None
        return out

    @classmethod
    def from_vectors(cls, group: FinAbGroup, terms: Mapping[Vector, Coeff], allow_half: bool = False) -> "GroupRingElem":
        acc: Dict[Vector, Coeff] = {}
        for vec, c in terms.items():
            key = _reduce(group, tuple(vec))
            if len(key) != group.dim:
                raise ValueError(f"vector {vec} does not fit {group}")
            acc[key] = acc.get(key, 0) + c
        return cls._from_vectors(group, acc, allow_half)

    @classmethod
    def zero(cls, group: FinAbGroup) -> "GroupRingElem":
        return cls._from_vectors(group, {})

    @classmethod
    def one(cls, group: FinAbGroup) -> "GroupRingElem":
        return cls.monomial(group.identity())

    @classmethod
    def monomial(cls, g: GroupElem, coeff: Coeff = 1) -> "GroupRingElem":
        return cls._from_vectors(g.group, {g.vector: coeff}, isinstance(coeff, Fraction))

    # === access ===

    def items(self) -> Iterator[Tuple[GroupElem, Coeff]]:
        """Terms in ascending key order."""
        for vec in sorted(self._terms):
            yield self.group.from_vector(vec), self._terms[vec]

    def vector_items(self) -> List[Tuple[Vector, Coeff]]:
        return sorted(self._terms.items())

    def support(self) -> List[GroupElem]:
        return [g for g, _ in self.items()]

    def coefficient(self, g: GroupElem) -> Coeff:
        if g.group != self.group:
            raise GroupMismatchError(f"{g} is not in {self.group}")
        return self._terms.get(g.vector, 0)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # === comparison ===

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            if other == 0:
                return self.is_zero
            return self == GroupRingElem.one(self.group) * other
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        return self.group == other.group and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.group, frozenset(self._terms.items())))
        return self._hash

    def sort_key(self) -> Tuple:
        return tuple((vec, Fraction(c)) for vec, c in sorted(self._terms.items()))

    # === arithmetic ===

    def _check(self, other: "GroupRingElem") -> None:
        if not isinstance(other, GroupRingElem):
            raise TypeError(f"expected GroupRingElem, got {type(other).__name__}")
        if other.group != self.group:
            raise GroupMismatchError(f"{self.group} vs {other.group}")

    def _coerce(self, other) -> "GroupRingElem":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return GroupRingElem.monomial(self.group.identity(), other)
        self._check(other)
        return other

    def __add__(self, other) -> "GroupRingElem":
        other = self._coerce(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return GroupRingElem._from_vectors(self.group, acc, self.allow_half or other.allow_half)

    __radd__ = __add__

    def __neg__(self) -> "GroupRingElem":
        return GroupRingElem._from_vectors(self.group, {k: -c for k, c in self._terms.items()}, self.allow_half)

    def __sub__(self, other) -> "GroupRingElem":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "GroupRingElem":
        return self._coerce(other) - self

    def __mul__(self, other) -> "GroupRingElem":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            allow = self.allow_half or isinstance(other, Fraction)
            return GroupRingElem._from_vectors(self.group, {k: c * other for k, c in self._terms.items()}, allow)
        self._check(other)
        group = self.group
        r = group.rank
        tors = group.torsion
        acc: Dict[Vector, Coeff] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                free = tuple(a + b for a, b in zip(k1[:r], k2[:r]))
                tor = tuple((a + b) % d for a, b, d in zip(k1[r:], k2[r:], tors))
                key = free + tor
                acc[key] = acc.get(key, 0) + c1 * c2
        return GroupRingElem._from_vectors(group, acc, self.allow_half or other.allow_half)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "GroupRingElem":
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use translate")
        out = GroupRingElem.one(self.group)
        for _ in range(n):
            out = out * self
        return out

    def translate(self, g: GroupElem) -> "GroupRingElem":
        """Multiply by the monomial g."""
        if g.group != self.group:
            raise GroupMismatchError(f"{g} is not in {self.group}")
        shift = g.vector
        acc = {
            _reduce(self.group, tuple(a + b for a, b in zip(k, shift))): c
            for k, c in self._terms.items()
        }
        return GroupRingElem._from_vectors(self.group, acc, self.allow_half)

    # === invariants ===

    def norm(self) -> Coeff:
        """Sum of absolute values of the coefficients."""
        return sum((abs(c) for c in self._terms.values()), 0)

    def augmentation(self) -> Coeff:
        """Sum of the coefficients, the image under H -> 0."""
        return sum(self._terms.values(), 0)

    def involution(self) -> "GroupRingElem":
        """Invert every group element."""
        acc = {_reduce(self.group, tuple(-a for a in k)): c for k, c in self._terms.items()}
        return GroupRingElem._from_vectors(self.group, acc, self.allow_half)

    def is_symmetric(self) -> bool:
        return self.involution() == self

    def pushforward(self, f: GroupHom) -> "GroupRingElem":
        if f.source != self.group:
            raise GroupMismatchError(f"hom from {f.source} applied to element over {self.group}")
        acc: Dict[Vector, Coeff] = {}
        for g, c in self.items():
            key = f.apply(g).vector
            acc[key] = acc.get(key, 0) + c
        return GroupRingElem._from_vectors(f.target, acc, self.allow_half)

    def coset_split(self, f: GroupHom) -> Dict[GroupElem, "GroupRingElem"]:
        """Partition terms by their image under f."""
        if f.source != self.group:
            raise GroupMismatchError(f"hom from {f.source} applied to element over {self.group}")
        parts: Dict[GroupElem, Dict[Vector, Coeff]] = {}
        for g, c in self.items():
            parts.setdefault(f.apply(g), {})[g.vector] = c
        return {
            s: GroupRingElem._from_vectors(self.group, terms, self.allow_half)
            for s, terms in sorted(parts.items(), key=lambda kv: kv[0].sort_key())
        }

    def map_keys(self, target: FinAbGroup, fn) -> "GroupRingElem":
        """Re-key every term through fn: GroupElem -> GroupElem of target."""
        acc: Dict[Vector, Coeff] = {}
        for g, c in self.items():
            key = fn(g).vector
            acc[key] = acc.get(key, 0) + c
        return GroupRingElem._from_vectors(target, acc, self.allow_half)

    def __repr__(self) -> str:
        return f"GroupRingElem({self})"

    def __str__(self) -> str:
        from .literal import format_ring_element

        return format_ring_element(self)


def norm(x: GroupRingElem) -> Coeff:
    return x.norm()


def pushforward(x: GroupRingElem, f: GroupHom) -> GroupRingElem:
    return x.pushforward(f)


def coset_split(x: GroupRingElem, f: GroupHom) -> Dict[GroupElem, GroupRingElem]:
    return x.coset_split(f)


def sum_elements(group: FinAbGroup, parts: Iterable[GroupRingElem]) -> GroupRingElem:
    out = GroupRingElem.zero(group)
    for p in parts:
        out = out + p
    return out
