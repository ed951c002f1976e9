# coding=utf-8
"""
Finitely generated abelian groups

A group is stored in invariant-factor form Z^r + Z/d1 + ... + Z/dk with
d1 | d2 | ... | dk, so two groups are equal exactly when their fields are.
Elements are exponent vectors (free part, then torsion part) and are written
additively; homomorphisms are integer matrices acting on column vectors.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

from knotradar.utils.errors import (
    FiniteOrderElementError,
    GroupMismatchError,
    InvalidHomomorphismError,
)

from .smith import IntMatrix, identity_matrix, matvec, smith_normal_form, solve_integer_system


@dataclass(frozen=True)
class FinAbGroup:
    rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        torsion = tuple(int(d) for d in self.torsion)
        for i, d in enumerate(torsion):
            if d < 2:
                raise ValueError(f"torsion divisor must be >= 2, got {d}")
            if i and d % torsion[i - 1]:
                raise ValueError(f"divisor chain broken: {torsion[i - 1]} does not divide {d}")
        object.__setattr__(self, "torsion", torsion)

    @property
    def dim(self) -> int:
        """Length of an exponent vector."""
        return self.rank + len(self.torsion)

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def order(self) -> Optional[int]:
        """Number of elements, None for infinite groups."""
        if self.rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def identity(self) -> "GroupElem":
        return GroupElem(self, (0,) * self.rank, (0,) * len(self.torsion))

    def element(self, free: Sequence[int] = (), torsion: Sequence[int] = ()) -> "GroupElem":
        return GroupElem(self, tuple(free), tuple(torsion))

    def from_vector(self, vec: Sequence[int]) -> "GroupElem":
        vec = tuple(vec)
        if len(vec) != self.dim:
            raise ValueError(f"vector of length {len(vec)} does not fit group of dimension {self.dim}")
        return GroupElem(self, vec[: self.rank], vec[self.rank:])

    def basis(self) -> List["GroupElem"]:
        """Standard generators: free generators first, then torsion generators."""
        out = []
        for i in range(self.dim):
            vec = [0] * self.dim
            vec[i] = 1
            out.append(self.from_vector(vec))
        return out

    def torsion_elements(self) -> Iterator["GroupElem"]:
        """All elements of the torsion subgroup in lexicographic order."""
        zeros = (0,) * self.rank
        for tors in itertools.product(*[range(d) for d in self.torsion]):
            yield GroupElem(self, zeros, tors)

    def relation_rows(self) -> IntMatrix:
        """Defining relations d_i * e_{r+i} as rows over Z^dim."""
        rows = []
        for i, d in enumerate(self.torsion):
            row = [0] * self.dim
            row[self.rank + i] = d
            rows.append(row)
        return rows

    def __str__(self) -> str:
        from .literal import format_group

        return format_group(self)


@dataclass(frozen=True)
class GroupElem:
    group: FinAbGroup
    free: Tuple[int, ...] = ()
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        free = tuple(int(a) for a in self.free)
        torsion = tuple(int(b) for b in self.torsion)
        if len(free) != self.group.rank or len(torsion) != len(self.group.torsion):
            raise ValueError(
                f"element ({len(free)} | {len(torsion)}) does not fit {self.group}"
            )
        torsion = tuple(b % d for b, d in zip(torsion, self.group.torsion))
        object.__setattr__(self, "free", free)
        object.__setattr__(self, "torsion", torsion)

    @property
    def vector(self) -> Tuple[int, ...]:
        return self.free + self.torsion

    @property
    def is_identity(self) -> bool:
        return not any(self.free) and not any(self.torsion)

    @property
    def has_infinite_order(self) -> bool:
        return any(self.free)

    def sort_key(self) -> Tuple[int, ...]:
        return self.vector

    def _check(self, other: "GroupElem") -> None:
        if not isinstance(other, GroupElem):
            raise TypeError(f"expected GroupElem, got {type(other).__name__}")
        if other.group != self.group:
            raise GroupMismatchError(f"{self.group} vs {other.group}")

    def __add__(self, other: "GroupElem") -> "GroupElem":
        self._check(other)
        return GroupElem(
            self.group,
            tuple(a + b for a, b in zip(self.free, other.free)),
            tuple(a + b for a, b in zip(self.torsion, other.torsion)),
        )

    def __neg__(self) -> "GroupElem":
        return GroupElem(self.group, tuple(-a for a in self.free), tuple(-b for b in self.torsion))

    def __sub__(self, other: "GroupElem") -> "GroupElem":
        return self + (-other)

    def __mul__(self, k: int) -> "GroupElem":
        if not isinstance(k, int):
            return NotImplemented
        return GroupElem(self.group, tuple(k * a for a in self.free), tuple(k * b for b in self.torsion))

    __rmul__ = __mul__

    def order(self) -> Optional[int]:
        """Order of the element, None when infinite."""
        if self.has_infinite_order:
            return None
        n = 1
        for b, d in zip(self.torsion, self.group.torsion):
            if b:
                n = math.lcm(n, d // math.gcd(b, d))
        return n

    def __str__(self) -> str:
        from .literal import format_element

        return format_element(self)


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism source -> target; matrix has target.dim rows and source.dim columns."""

    source: FinAbGroup
    target: FinAbGroup
    matrix: Tuple[Tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        matrix = tuple(tuple(int(v) for v in row) for row in self.matrix)
        if len(matrix) != self.target.dim or any(len(row) != self.source.dim for row in matrix):
            raise InvalidHomomorphismError(
                f"matrix shape does not match {self.source} -> {self.target}"
            )
        object.__setattr__(self, "matrix", matrix)
        for rel in self.source.relation_rows():
            image = self.target.from_vector(matvec(matrix, rel)) if matrix else self.target.identity()
            if not image.is_identity:
                raise InvalidHomomorphismError(
                    f"relation {rel} of {self.source} maps to {image}, not to zero"
                )

    @classmethod
    def identity(cls, group: FinAbGroup) -> "GroupHom":
        return cls(group, group, tuple(map(tuple, identity_matrix(group.dim))))

    @classmethod
    def zero(cls, source: FinAbGroup, target: FinAbGroup) -> "GroupHom":
        return cls(source, target, tuple((0,) * source.dim for _ in range(target.dim)))

    def apply(self, g: GroupElem) -> GroupElem:
        if g.group != self.source:
            raise GroupMismatchError(f"element of {g.group} passed to hom from {self.source}")
        if not self.target.dim:
            return self.target.identity()
        return self.target.from_vector(matvec(self.matrix, g.vector))

    __call__ = apply

    def compose(self, inner: "GroupHom") -> "GroupHom":
        """self after inner."""
        if inner.target != self.source:
            raise GroupMismatchError(f"cannot compose {inner.target} -> with {self.source} ->")
        rows = []
        for row in self.matrix:
            rows.append(tuple(
                sum(row[k] * inner.matrix[k][j] for k in range(self.source.dim))
                for j in range(inner.source.dim)
            ))
        return GroupHom(inner.source, self.target, tuple(rows))

    def is_zero(self) -> bool:
        return all(self.apply(g).is_identity for g in self.source.basis())

    def preimage(self, g: GroupElem) -> Optional[GroupElem]:
        """Some x with self(x) = g, or None when g is not in the image."""
        if g.group != self.target:
            raise GroupMismatchError(f"element of {g.group} is not in {self.target}")
        if not self.target.dim:
            return self.source.identity()
        # M x + D u = g, where D holds the target torsion relations as columns
        relations = self.target.relation_rows()
        augmented = [
            list(self.matrix[i]) + [rel[i] for rel in relations]
            for i in range(self.target.dim)
        ]
        solution = solve_integer_system(augmented, list(g.vector))
        if solution is None:
            return None
        return self.source.from_vector(solution[: self.source.dim])


def group_from_relations(n_generators: int, relations: Sequence[Sequence[int]]) -> Tuple[FinAbGroup, GroupHom]:
    """
    Present Z^n / rowspan(relations) in canonical form

    Returns:
        (group, quotient hom from Z^n)

    Examples:
        >>> group_from_relations(2, [[0, 5]])[0]
        FinAbGroup(rank=1, torsion=(5,))
        >>> group_from_relations(2, [[1, 1]])[0]
        FinAbGroup(rank=1, torsion=())
    """
    free_source = FinAbGroup(n_generators, ())
    rows = [list(r) for r in relations if any(r)]
    for r in rows:
        if len(r) != n_generators:
            raise ValueError(f"relation {r} does not have {n_generators} columns")
    if not rows:
        return free_source, GroupHom.identity(free_source)

    diag, _left, right = smith_normal_form(rows)
    # row vectors x map to x * right; coordinate i lives mod diag[i]
    moduli = [diag[i] if i < len(diag) else 0 for i in range(n_generators)]
    torsion_idx = [i for i, d in enumerate(moduli) if d > 1]
    free_idx = [i for i, d in enumerate(moduli) if d == 0]
    group = FinAbGroup(len(free_idx), tuple(moduli[i] for i in torsion_idx))
    matrix = tuple(
        tuple(right[k][i] for k in range(n_generators))
        for i in free_idx + torsion_idx
    )
    return group, GroupHom(free_source, group, matrix)


def quotient_by_element(group: FinAbGroup, g: GroupElem) -> Tuple[FinAbGroup, GroupHom]:
    """
    H / <g> with its quotient hom

    Examples:
        >>> H = FinAbGroup(1, (5,))
        >>> quotient_by_element(H, H.element((1,), (0,)))[0]
        FinAbGroup(rank=0, torsion=(5,))
    """
    if g.group != group:
        raise GroupMismatchError(f"element of {g.group} is not in {group}")
    rows = group.relation_rows() + [list(g.vector)]
    quotient, q = group_from_relations(group.dim, rows)
    return quotient, GroupHom(group, quotient, q.matrix)


def free_projection(group: FinAbGroup) -> GroupHom:
    """H -> Z^r killing torsion."""
    target = FinAbGroup(group.rank, ())
    matrix = tuple(
        tuple(1 if j == i else 0 for j in range(group.dim))
        for i in range(group.rank)
    )
    return GroupHom(group, target, matrix)


def inclusion_of_torsion(group: FinAbGroup) -> GroupHom:
    """Tors(H) -> H."""
    source = FinAbGroup(0, group.torsion)
    k = len(group.torsion)
    matrix = tuple(
        tuple(1 if (i >= group.rank and i - group.rank == j) else 0 for j in range(k))
        for i in range(group.dim)
    )
    return GroupHom(source, group, matrix)


def meridian_splitting(group: FinAbGroup, m: GroupElem) -> Tuple[FinAbGroup, GroupHom, bool]:
    """
    H_1(Y) = H / <m> and whether H is Z + H_1(Y)

    The split case is the null-homologous one: m then has free part +-1 and
    the m-coordinate retracts H onto Z.
    """
    if not m.has_infinite_order:
        raise FiniteOrderElementError(f"meridian {m} has finite order")
    quotient, q = quotient_by_element(group, m)
    splits = FinAbGroup(quotient.rank + 1, quotient.torsion) == group
    return quotient, q, splits


def m_coordinate(group: FinAbGroup, m: GroupElem) -> GroupHom:
    """
    Retraction H -> Z sending m to 1, for a split meridian

    Raises:
        FiniteOrderElementError: m is torsion
        InvalidHomomorphismError: H does not split along m
    """
    _, _, splits = meridian_splitting(group, m)
    if not splits or group.rank != 1 or abs(m.free[0]) != 1:
        raise InvalidHomomorphismError(f"{group} does not split along {m}")
    sign = m.free[0]
    row = tuple([sign] + [0] * len(group.torsion))
    return GroupHom(group, FinAbGroup(1, ()), (row,))


@dataclass(frozen=True)
class HalfLattice:
    """
    H extended by a square root of m

    group is <H, mu | 2 mu = m>; embed sends H into it and root is mu. Keys
    over this group carry half-integer exponents along m.
    """

    base: FinAbGroup
    axis: GroupElem
    group: FinAbGroup
    embed: GroupHom
    root: GroupElem

    def split(self, g: GroupElem) -> Tuple[GroupElem, int]:
        """Write g = embed(h) + e * root with e in {0, 1}."""
        for e in (0, 1):
            h = self.embed.preimage(g - self.root * e)
            if h is not None:
                return h, e
        raise GroupMismatchError(f"{g} is not in the half lattice of {self.base}")

    def lift(self, h: GroupElem, halves: int = 0) -> GroupElem:
        """embed(h) + halves * root"""
        return self.embed(h) + self.root * halves


def half_extension(group: FinAbGroup, m: GroupElem) -> HalfLattice:
    """
    Adjoin mu with 2 mu = m

    Examples:
        >>> Z = FinAbGroup(1, ())
        >>> lat = half_extension(Z, Z.element((1,)))
        >>> lat.group, lat.root.free
        (FinAbGroup(rank=1, torsion=()), (1,))
    """
    if m.group != group:
        raise GroupMismatchError(f"element of {m.group} is not in {group}")
    if not m.has_infinite_order:
        raise FiniteOrderElementError(f"cannot take a square root along torsion element {m}")
    n = group.dim + 1
    rows = [rel + [0] for rel in group.relation_rows()]
    rows.append([-v for v in m.vector] + [2])
    extended, q = group_from_relations(n, rows)
    embed_matrix = tuple(row[: group.dim] for row in q.matrix)
    embed = GroupHom(group, extended, embed_matrix)
    mu = [0] * n
    mu[-1] = 1
    root = q.apply(FinAbGroup(n, ()).from_vector(mu))
    return HalfLattice(base=group, axis=m, group=extended, embed=embed, root=root)
