# coding=utf-8
import random

import pytest

from knotradar.abelian import FinAbGroup, GroupHom
from knotradar.decomp import (
    FIBRED_GENUS_N,
    GENUS_ONE_FIBRED,
    INCONSISTENT,
    UNKNOT,
    UNKNOWN,
    BoundCheck,
    EnhancedChi,
    bound_chain,
    classify,
    difference_test,
    format_detection,
    format_gre,
    load_detection,
    load_gre,
    parse_detection,
    parse_gre,
    report,
)
from knotradar.ring import GroupRingElem, PmClass, parse_ring_element
from knotradar.utils.errors import FileParseError, GroupMismatchError, MalformedInputError

EXAMPLE = "1 + r + t + r*t + r^2*t - r^3*t - r^4*t + r*t^2 + r^2*t^2"


def gre_text(element, compare=None, meridian="t", group="Z", names="t"):
    lines = [f"group: {group}", f"names: {names}", f"meridian: {meridian}", f"element: {element}"]
    if compare is not None:
        lines.append(f"compare: {compare}")
    return "\n".join(lines) + "\n"


def det_text(*rows, group="Z", names="t", meridian="t"):
    lines = [f"group: {group}", f"names: {names}", f"meridian: {meridian}"]
    lines.extend(f"coset: {row}" for row in rows)
    return "\n".join(lines) + "\n"


class TestReport:
    def test_example(self, fixtures_dir):
        gre = load_gre(fixtures_dir / "example14.gre")
        rep = report(gre.chi)
        assert rep.norm_en == 9
        assert rep.norm_gr == 5
        assert rep.chi_gr == PmClass(parse_ring_element("2 + t + 2*t^2", FinAbGroup(1, ())))
        assert len(rep.torsion_split) == 5
        assert sum(x.norm() for x in rep.torsion_split.values()) == 9
        assert rep.h1_split is None

    def test_h1_split_needs_meridian(self, Z5):
        x = parse_ring_element(EXAMPLE, Z5)
        rep = report(EnhancedChi.of(x, Z5.element((1,), (0,))))
        assert rep.h1_split is not None
        assert len(rep.h1_split) == 5

    def test_projection_never_increases_norm(self, Z5):
        rng = random.Random(4)
        for _ in range(25):
            terms = {
                Z5.element((rng.randint(-3, 3),), (rng.randrange(5),)): rng.choice([-1, 1])
                for _ in range(6)
            }
            rep = report(EnhancedChi.of(GroupRingElem(Z5, terms)))
            assert rep.norm_en >= rep.norm_gr

    def test_commutes_with_pushforward(self):
        rng = random.Random(9)
        source, target = FinAbGroup(1, (10,)), FinAbGroup(1, (5,))
        Z = FinAbGroup(1, ())
        for _ in range(50):
            a, c, d = rng.choice([-2, -1, 1, 2, 3]), rng.randrange(5), rng.randrange(5)
            f = GroupHom(source, target, ((a, 0), (c, d)))
            on_free = GroupHom(Z, Z, ((a,),))
            terms = {
                source.element((rng.randint(-3, 3),), (rng.randrange(10),)): rng.choice([-2, -1, 1, 2])
                for _ in range(6)
            }
            x = GroupRingElem(source, terms)
            pushed = report(EnhancedChi.of(x.pushforward(f)))
            expected = report(EnhancedChi.of(x)).chi_gr.representative.pushforward(on_free)
            assert pushed.chi_gr == PmClass(expected)


class TestBoundChain:
    def test_tight(self, fixtures_dir):
        check = bound_chain(9, load_gre(fixtures_dir / "example14.gre").chi)
        assert check.ok
        assert check.tight_first
        assert not check.tight_second

    def test_first_violated(self, fixtures_dir):
        check = bound_chain(7, load_gre(fixtures_dir / "example14.gre").chi)
        assert check.failing == "first"

    def test_second_violated(self):
        assert BoundCheck(9, 3, 5).failing == "second"


class TestDifference:
    def test_trefoil_vs_unknot(self, fixtures_dir):
        gre = load_gre(fixtures_dir / "trefoil_vs_unknot.gre")
        (row,) = difference_test(gre.chi, gre.compare)
        assert row.divisible
        assert row.f == {0: 1}
        assert row.h == gre.chi.group.element((-1,))

    def test_antisymmetric(self, fixtures_dir):
        gre = load_gre(fixtures_dir / "trefoil_vs_unknot.gre")
        forward = difference_test(gre.chi, gre.compare)
        backward = difference_test(gre.compare, gre.chi)
        for a, b in zip(forward, backward):
            assert a.h == b.h
            assert {k: -v for k, v in a.f.items()} == b.f

    def test_figure8_vs_trefoil(self):
        gre = parse_gre(gre_text("-t + 3 - t^-1", compare="t - 1 + t^-1"))
        (row,) = difference_test(gre.chi, gre.compare)
        assert row.divisible
        assert row.f == {0: -2}

    def test_not_divisible(self):
        gre = parse_gre(gre_text("t - 1 + t^-1", compare="2"))
        (row,) = difference_test(gre.chi, gre.compare)
        assert not row.divisible
        assert row.f is None

    def test_lens_space_cosets(self, Z5):
        m = Z5.element((1,), (0,))
        names = ("t", "r")
        unknot = EnhancedChi(Z5, PmClass(parse_ring_element("1 + r + r^2 + r^3 + r^4", Z5)), m, names)
        other = EnhancedChi(Z5, PmClass(parse_ring_element("t - 1 + t^-1 + r + r^2 + r^3 + r^4", Z5)), m, names)
        rows = difference_test(other, unknot)
        assert len(rows) == 5
        assert all(row.divisible for row in rows)
        assert sorted(row.f.get(0, 0) for row in rows) == [0, 0, 0, 0, 1]

    def test_needs_meridian(self, Z):
        a = EnhancedChi.of(GroupRingElem.one(Z))
        with pytest.raises(MalformedInputError):
            difference_test(a, a)

    def test_group_mismatch(self, Z, Z5):
        a = EnhancedChi.of(GroupRingElem.one(Z), Z.element((1,)))
        b = EnhancedChi.of(GroupRingElem.one(Z5), Z5.element((1,), (0,)))
        with pytest.raises(GroupMismatchError):
            difference_test(a, b)


class TestGreFiles:
    def test_fixture(self, fixtures_dir):
        gre = load_gre(fixtures_dir / "example14.gre")
        assert gre.dim == 9
        assert gre.chi.display_names() == ["t", "r"]
        assert gre.compare is None

    def test_format_parses_back(self, fixtures_dir):
        gre = load_gre(fixtures_dir / "trefoil_vs_unknot.gre")
        again = parse_gre(format_gre(gre))
        assert again.chi == gre.chi
        assert again.dim == gre.dim
        assert again.compare == gre.compare

    @pytest.mark.parametrize(
        "text",
        [
            "group: Z\n",
            "group: Z\nelement: t\nelement: t\n",
            "group: Z\nnames: t r\nelement: t\n",
            "group: Z\nelement: t\nflavour: 1\n",
            "group: Z\nelement: t\nmeridian: 2*t\n",
            "group: Z\nelement: t\ndim: -1\n",
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(FileParseError):
            parse_gre(text)


class TestClassify:
    def test_trefoil(self, fixtures_dir):
        inp, next_to_top = load_detection(fixtures_dir / "trefoil.det")
        verdict = classify(inp, next_to_top)
        assert verdict.kind == GENUS_ONE_FIBRED
        assert verdict.genus == 1
        assert verdict.theory == "instanton"

    def test_unknot_in_lens_space(self, fixtures_dir):
        inp, _ = load_detection(fixtures_dir / "unknot_lens.det")
        assert inp.h1_order == 5
        assert inp.total == 5
        assert classify(inp).kind == UNKNOT

    def test_symmetry(self, fixtures_dir):
        inp, _ = load_detection(fixtures_dir / "symmetry.det")
        verdict = classify(inp)
        assert (verdict.kind, verdict.reason) == (INCONSISTENT, "symmetry")
        assert str(verdict) == "Inconsistent(symmetry)"

    def test_divisibility(self):
        inp, _ = parse_detection(det_text("1 | 3 | t^2 - 1 + t^-1"))
        verdict = classify(inp)
        assert (verdict.kind, verdict.reason) == (INCONSISTENT, "divisibility")

    def test_nonvanishing(self):
        inp, _ = parse_detection(det_text("1 | 2 | 0"))
        verdict = classify(inp)
        assert (verdict.kind, verdict.reason) == (INCONSISTENT, "nonvanishing")

    def test_higher_genus(self):
        inp, _ = parse_detection(det_text("1 | 3 | t^2 - 1 + t^-2"))
        verdict = classify(inp, next_to_top=True)
        assert (verdict.kind, verdict.reason) == (INCONSISTENT, "next-to-top")
        verdict = classify(inp, next_to_top=False)
        assert verdict.kind == FIBRED_GENUS_N
        assert str(verdict) == "FibredGenusN(2)"

    def test_next_to_top_header(self):
        text = det_text("1 | 3 | t^2 - 1 + t^-2").replace("meridian: t\n", "meridian: t\nnext-to-top: no\n")
        inp, next_to_top = parse_detection(text)
        assert next_to_top is False
        assert classify(inp, next_to_top).kind == FIBRED_GENUS_N

    def test_unknown_pattern(self):
        inp, _ = parse_detection(det_text("1 | 7 | t - 1 + t^-1"))
        assert classify(inp).kind == UNKNOWN

    def test_dimension_below_norm(self):
        inp, _ = parse_detection(det_text("1 | 1 | t - 1 + t^-1"))
        with pytest.raises(MalformedInputError):
            classify(inp)

    def test_meridian_must_split(self):
        inp, _ = parse_detection(det_text("1 | 1 | 1", meridian="t^2"))
        with pytest.raises(MalformedInputError):
            classify(inp)

    def test_term_outside_coset(self):
        text = det_text("1 | 1 | r", group="Z x Z/5", names="t r")
        inp, _ = parse_detection(text)
        with pytest.raises(MalformedInputError):
            classify(inp)

    def test_theory_is_reported(self):
        text = det_text("1 | 1 | 1").replace("meridian: t\n", "meridian: t\ntheory: heegaard\n")
        inp, _ = parse_detection(text)
        assert classify(inp).theory == "heegaard"

    def test_format_parses_back(self, fixtures_dir):
        inp, next_to_top = load_detection(fixtures_dir / "unknot_lens.det")
        again, again_flag = parse_detection(format_detection(inp, next_to_top))
        assert again_flag == next_to_top
        assert again.h1_order == inp.h1_order
        assert classify(again).kind == UNKNOT

    @pytest.mark.parametrize(
        "text",
        [
            "group: Z\n",
            "group: Z\nmeridian: 2*t\n",
            "group: Z\nmeridian: t\ncoset: 1 | 1\n",
            "group: Z\nmeridian: t\ncoset: 1 | x | 1\n",
            "group: Z\nmeridian: t\ncoset: 1 | 1 | 1\ncoset: t | 1 | 1\n",
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(FileParseError):
            parse_detection(text)
