# coding=utf-8
"""
Unknot and genus-one fibred detection from per-coset data

Input is, for every class s of H_1(Y), the dimension of the knot homology
in the spin^c structures over s and the Euler characteristic chi_s, an
element of Z[H] supported on the <m>-coset of s. The rules transcribe the
detection arguments:

(a) chi_s is nonzero and chi_s - lift(s) is divisible by (m - 1)^2, where
    lift(s) is the element over s with m-coordinate zero
(b) all dimensions 1: the knot bounds a disk
(c) total |H_1(Y)| + 2: one coset of dimension 3 whose chi is
    (m^n - 1 + m^-n) lift(s); n = 1 is forced by the nonvanishing of the
    next-to-top grading, giving a genus-one fibred knot

Failures of (a) or (c) are Inconsistent verdicts named after the step
that breaks; patterns outside both theorems are Unknown.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING, Dict, List, Optional, Sequence, Tuple, Union

from knotradar.abelian import (
    FinAbGroup,
    GroupElem,
    GroupHom,
    format_group,
    m_coordinate,
    meridian_splitting,
    parse_group,
)
from knotradar.ring import GroupRingElem, default_names, format_ring_element, parse_ring_element, try_divide_exact
from knotradar.utils.errors import (
    FileParseError,
    InvalidHomomorphismError,
    KnotRadarError,
    MalformedInputError,
)

if TYPE_CHECKING:
    from knotradar.heegaard.complex import HFKResult

logger = logging.getLogger(__name__)

THEORIES = ("instanton", "heegaard")

UNKNOT = "Unknot"
GENUS_ONE_FIBRED = "GenusOneFibred"
FIBRED_GENUS_N = "FibredGenusN"
FIBRED = "Fibred"
INCONSISTENT = "Inconsistent"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class DetectionInput:
    group: FinAbGroup
    meridian: GroupElem
    h1_order: int
    per_coset: Dict[GroupElem, Tuple[int, GroupRingElem]]
    quotient: Optional[GroupHom] = None
    theory: str = "instanton"
    names: Tuple[str, ...] = field(default=(), compare=False)

    @property
    def total(self) -> int:
        return sum(dim for dim, _ in self.per_coset.values())


@dataclass(frozen=True)
class Verdict:
    kind: str
    genus: Optional[int] = None
    reason: str = ""
    notes: Tuple[str, ...] = ()
    theory: str = "instanton"

    def __str__(self) -> str:
        if self.kind == FIBRED_GENUS_N:
            return f"{self.kind}({self.genus})"
        if self.kind == INCONSISTENT:
            return f"{self.kind}({self.reason})"
        return self.kind


def detection_input(result: HFKResult, theory: str = "instanton") -> DetectionInput:
    """
    Per H_1(Y)-coset dimensions and Euler characteristics of a computed HFK

    Raises:
        MalformedInputError: the knot is not null-homologous, or its
            Alexander grading has no integral symmetric normalisation
    """
    group, m = result.group, result.meridian
    quotient, q, splits = meridian_splitting(group, m)
    if not splits:
        raise MalformedInputError(
            f"meridian {m} does not split H = {group}; detection needs a null-homologous knot"
        )
    form = result.canonical
    if form is None or form.is_half or result.table is None:
        raise MalformedInputError("no integral symmetric Alexander grading for this diagram")
    dims: Dict[GroupElem, int] = {s: 0 for s in quotient.torsion_elements()}
    for h, dim in result.table.items():
        dims[q(h)] += dim
    parts = form.element.coset_split(q)
    per_coset = {
        s: (dims[s], parts.get(s, GroupRingElem.zero(group)))
        for s in dims
    }
    return DetectionInput(group, m, quotient.order, per_coset, q, theory)


def _lift(s: GroupElem, q: GroupHom, rho: GroupHom, m: GroupElem) -> GroupElem:
    h = q.preimage(s)
    if h is None:
        raise MalformedInputError(f"coset {s} is not in H_1(Y)")
    return h - m * rho(h).free[0]


def _check_input(inp: DetectionInput, q: GroupHom, quotient: FinAbGroup) -> Dict[GroupElem, Tuple[int, GroupRingElem]]:
    if inp.theory not in THEORIES:
        raise MalformedInputError(f"unknown theory {inp.theory!r}", suggestion=f"one of {', '.join(THEORIES)}")
    if inp.h1_order != quotient.order:
        raise MalformedInputError(f"|H_1(Y)| given as {inp.h1_order}, but H / <m> = {format_group(quotient)}")
    data: Dict[GroupElem, Tuple[int, GroupRingElem]] = {}
    for s in quotient.torsion_elements():
        data[s] = (0, GroupRingElem.zero(inp.group))
    for s, (dim, chi) in inp.per_coset.items():
        if s.group != quotient:
            raise MalformedInputError(f"coset {s} is not an element of {format_group(quotient)}")
        if chi.group != inp.group:
            raise MalformedInputError(f"chi of coset {s} lives over {chi.group}, expected {inp.group}")
        if dim < 0:
            raise MalformedInputError(f"negative dimension {dim} for coset {s}")
        for key in chi.support():
            if q(key) != s:
                raise MalformedInputError(f"chi of coset {s} has a term outside it: {key}")
        n = chi.norm()
        if n > dim or (dim - n) % 2:
            raise MalformedInputError(
                f"coset {s}: |chi| = {n} is not at most dim = {dim} with the same parity"
            )
        data[s] = (dim, chi)
    return data


def _exponents(x: GroupRingElem, rho: GroupHom) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for key, c in x.items():
        k = rho(key).free[0]
        out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


def classify(inp: DetectionInput, next_to_top: bool = True) -> Verdict:
    """
    Run the detection case analysis

    Args:
        inp: per-coset dimensions and Euler characteristics
        next_to_top: apply the nonvanishing of the next-to-top Alexander
            grading of fibred knots, which rules out n >= 2

    Raises:
        MalformedInputError: the data violates its own consistency rules or
            the meridian does not split H
    """
    group, m = inp.group, inp.meridian
    quotient, q, splits = meridian_splitting(group, m)
    if not splits:
        raise MalformedInputError(f"meridian {m} does not split {format_group(group)}")
    try:
        rho = m_coordinate(group, m)
    except InvalidHomomorphismError as e:
        raise MalformedInputError(e.message) from None
    data = _check_input(inp, q, quotient)
    theory = inp.theory

    lifts = {s: _lift(s, q, rho, m) for s in data}
    for s, (_, chi) in data.items():
        if chi.is_zero:
            return Verdict(
                INCONSISTENT,
                reason="nonvanishing",
                notes=(f"chi vanishes over coset {s}",),
                theory=theory,
            )
        diff = chi - GroupRingElem.monomial(lifts[s])
        if try_divide_exact(diff, m, 2) is None:
            return Verdict(
                INCONSISTENT,
                reason="divisibility",
                notes=(f"chi - lift over coset {s} is not divisible by (m - 1)^2",),
                theory=theory,
            )

    n_cosets = quotient.order
    total = sum(dim for dim, _ in data.values())
    dims = {s: dim for s, (dim, _) in data.items()}
    logger.debug("decomp.classify cosets=%d total=%d", n_cosets, total)

    if all(dim == 1 for dim in dims.values()):
        return Verdict(UNKNOT, genus=0, notes=("every coset is one-dimensional",), theory=theory)

    if total == n_cosets + 2:
        big = [s for s, dim in dims.items() if dim == 3]
        if len(big) == 1 and all(dim == 1 for s, dim in dims.items() if s != big[0]):
            return _genus_one(big[0], data[big[0]][1], lifts[big[0]], rho, next_to_top, theory)

    if total == n_cosets + 4:
        big = [s for s, dim in dims.items() if dim == 5]
        if len(big) == 1 and all(dim == 1 for s, dim in dims.items() if s != big[0]):
            verdict = _fibred(data[big[0]][1], lifts[big[0]], rho, theory)
            if verdict is not None:
                return verdict

    return Verdict(UNKNOWN, notes=(f"dimension pattern {sorted(dims.values())} fits no detection rule",), theory=theory)


def _genus_one(
    s: GroupElem,
    chi: GroupRingElem,
    lift: GroupElem,
    rho: GroupHom,
    next_to_top: bool,
    theory: str,
) -> Verdict:
    if chi.norm() == 1:
        return Verdict(
            INCONSISTENT,
            reason="symmetry",
            notes=(
                f"coset {s} has dimension 3 but chi is a monomial",
                "a one-dimensional symmetric summand forces the unknot, whose cosets are all one-dimensional",
            ),
            theory=theory,
        )
    exps = _exponents(chi.translate(-lift), rho)
    n = max(exps)
    if not (n >= 1 and exps == {n: 1, 0: -1, -n: 1}):
        return Verdict(
            INCONSISTENT,
            reason="symmetry",
            notes=(f"chi over coset {s} is not of the form m^n - 1 + m^-n",),
            theory=theory,
        )
    if n == 1:
        return Verdict(GENUS_ONE_FIBRED, genus=1, notes=("fibred of genus one",), theory=theory)
    if next_to_top:
        return Verdict(
            INCONSISTENT,
            reason="next-to-top",
            notes=(f"fibred of genus {n} would need a nonzero next-to-top grading",),
            theory=theory,
        )
    return Verdict(
        FIBRED_GENUS_N,
        genus=n,
        notes=("excluded once the next-to-top grading is known to be nonzero",),
        theory=theory,
    )


def _fibred(chi: GroupRingElem, lift: GroupElem, rho: GroupHom, theory: str) -> Optional[Verdict]:
    if chi.norm() != 5:
        return None
    exps = _exponents(chi.translate(-lift), rho)
    top, bottom = max(exps), min(exps)
    if abs(exps[top]) != 1 or abs(exps[bottom]) != 1 or top != -bottom:
        return None
    return Verdict(
        FIBRED,
        notes=("top and bottom gradings are one-dimensional", "the genus is not determined"),
        theory=theory,
    )


# ---------------------------------------------------------------------------
# .det files
# ---------------------------------------------------------------------------

_KEY_RE = re.compile(r"^([a-z-]+):\s*(.*)$")


def parse_detection(text: str, file_path: str = "<string>") -> Tuple[DetectionInput, bool]:
    """
    Parse the ``.det`` format

    Header lines ``group:``, optional ``names:``, ``meridian:`` (a monomial
    literal), optional ``theory:`` and ``next-to-top: yes|no``, then one
    ``coset: <monomial> | <dim> | <chi literal>`` line per coset.

    Returns:
        the input and the next-to-top switch

    Raises:
        FileParseError: malformed line or literal
    """
    header: Dict[str, Tuple[int, str]] = {}
    rows: List[Tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        match = _KEY_RE.match(line)
        if not match:
            raise FileParseError(file_path, lineno, 1, f"expected 'key: value', got {line!r}")
        key, value = match.group(1), match.group(2).strip()
        if key == "coset":
            rows.append((lineno, value))
        elif key in ("group", "names", "meridian", "theory", "next-to-top"):
            if key in header:
                raise FileParseError(file_path, lineno, 1, f"duplicate {key} line")
            header[key] = (lineno, value)
        else:
            raise FileParseError(file_path, lineno, 1, f"unknown key {key!r}")

    for key in ("group", "meridian"):
        if key not in header:
            raise FileParseError(file_path, 1, 1, f"missing '{key}:' line")

    lineno, value = header["group"]
    try:
        group = parse_group(value)
    except ValueError as e:
        raise FileParseError(file_path, lineno, 1, str(e)) from None
    names: Sequence[str] = default_names(group)
    if "names" in header:
        lineno, value = header["names"]
        names = value.split()
        if len(names) != group.dim:
            raise FileParseError(file_path, lineno, 1, f"{len(names)} names for a group of dimension {group.dim}")

    def monomial(lineno: int, text: str) -> GroupElem:
        try:
            x = parse_ring_element(text, group, names)
        except ValueError as e:
            raise FileParseError(file_path, lineno, 1, str(e)) from None
        items = list(x.items())
        if len(items) != 1 or items[0][1] != 1:
            raise FileParseError(file_path, lineno, 1, f"{text!r} is not a monomial")
        return items[0][0]

    lineno, value = header["meridian"]
    m = monomial(lineno, value)
    theory = header.get("theory", (0, "instanton"))[1]
    next_to_top = header.get("next-to-top", (0, "yes"))[1].lower() not in ("no", "false", "0")

    try:
        quotient, q, _ = meridian_splitting(group, m)
    except KnotRadarError as e:
        raise FileParseError(file_path, header["meridian"][0], 1, e.message) from None
    per_coset: Dict[GroupElem, Tuple[int, GroupRingElem]] = {}
    for lineno, value in rows:
        fields = [f.strip() for f in value.split("|")]
        if len(fields) != 3:
            raise FileParseError(file_path, lineno, 1, "expected '<coset> | <dim> | <chi>'")
        s = q(monomial(lineno, fields[0]))
        if not fields[1].isdigit():
            raise FileParseError(file_path, lineno, 1, f"dimension {fields[1]!r} is not a non-negative integer")
        try:
            chi = parse_ring_element(fields[2], group, names)
        except ValueError as e:
            raise FileParseError(file_path, lineno, 1, str(e)) from None
        if s in per_coset:
            raise FileParseError(file_path, lineno, 1, f"coset {s} listed twice")
        per_coset[s] = (int(fields[1]), chi)

    inp = DetectionInput(group, m, quotient.order, per_coset, q, theory, tuple(names))
    return inp, next_to_top


def load_detection(path: Union[str, Path]) -> Tuple[DetectionInput, bool]:
    path = Path(path)
    return parse_detection(path.read_text(encoding="utf-8"), str(path))


def format_detection(inp: DetectionInput, next_to_top: bool = True) -> str:
    names = list(inp.names) or default_names(inp.group)
    q = inp.quotient
    if q is None:
        _, q, _ = meridian_splitting(inp.group, inp.meridian)
    lines = [
        f"group: {format_group(inp.group)}",
        f"names: {' '.join(names)}",
        f"meridian: {format_ring_element(GroupRingElem.monomial(inp.meridian), names)}",
        f"theory: {inp.theory}",
        f"next-to-top: {'yes' if next_to_top else 'no'}",
    ]
    for s in sorted(inp.per_coset, key=lambda g: g.sort_key()):
        dim, chi = inp.per_coset[s]
        rep = q.preimage(s)
        rep_text = format_ring_element(GroupRingElem.monomial(rep), names)
        lines.append(f"coset: {rep_text} | {dim} | {format_ring_element(chi, names)}")
    return "\n".join(lines) + "\n"
