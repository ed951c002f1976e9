# coding=utf-8
from math import gcd

import pytest

from knotradar.abelian import FinAbGroup
from knotradar.decomp import FIBRED, GENUS_ONE_FIBRED, UNKNOT, classify, detection_input
from knotradar.fox import sutured_torsion
from knotradar.heegaard import (
    differential,
    euler_char,
    find_bigons,
    format_diagram,
    is_valid,
    khi_certificate,
    knot_complement_homology,
    load_diagram,
    normalize_mark,
    parse_diagram,
    read_presentation,
    region_of,
    regions,
    relative_h1_grading,
    search_periods,
    simple_knot,
    traverse,
    validate,
    z2_grading,
)
from knotradar.ring import PmClass, parse_ring_element
from knotradar.utils.errors import DiagramError, FileParseError, InvalidParameterError, MalformedInputError


def chi_class(result, text):
    return PmClass(parse_ring_element(text, result.group))


class TestParsing:
    def test_round_trip(self, figure8):
        assert parse_diagram(format_diagram(figure8)) == figure8

    def test_missing_p(self):
        with pytest.raises(FileParseError) as exc:
            parse_diagram("arc: -0 +0 w=0\nz: gap 0 -\nw: gap 0 +\n")
        assert "missing 'p:'" in exc.value.reason

    def test_bad_line(self):
        with pytest.raises(FileParseError) as exc:
            parse_diagram("p: 1\narc: -0 0 w=0\n")
        assert exc.value.line == 2


class TestValidation:
    def test_fixtures_are_valid(self, unknot, trefoil, figure8, fixtures_dir):
        for d in (unknot, trefoil, figure8, load_diagram(fixtures_dir / "lens" / "simple_5_1_2.od")):
            validate(d)

    def test_out_of_range(self, fixtures_dir):
        with pytest.raises(DiagramError) as exc:
            validate(load_diagram(fixtures_dir / "bad" / "broken.od"))
        assert exc.value.invariant == "range"

    def test_shared_endpoint(self):
        d = parse_diagram("p: 2\narc: -0 +0 w=0\narc: -0 +1 w=0\nz: gap 0 -\nw: gap 1 -\n")
        with pytest.raises(DiagramError) as exc:
            validate(d)
        assert exc.value.invariant == "matching"

    def test_crossing_arcs(self):
        d = parse_diagram("p: 2\narc: -0 +1 w=0\narc: -1 +0 w=0\nz: gap 0 -\nw: gap 1 -\n")
        with pytest.raises(DiagramError) as exc:
            validate(d)
        assert exc.value.invariant == "embedding"

    def test_beta_must_close_once(self):
        d = parse_diagram("p: 2\narc: -0 +0 w=0\narc: -1 +1 w=0\nz: gap 0 -\nw: gap 1 -\n")
        with pytest.raises(DiagramError) as exc:
            validate(d)
        assert exc.value.invariant == "cycle"

    def test_marks_must_differ(self):
        d = parse_diagram("p: 1\narc: -0 +0 w=0\nz: gap 0 -\nw: gap 0 -\n")
        with pytest.raises(DiagramError) as exc:
            validate(d)
        assert exc.value.invariant == "marks"


class TestTraversal:
    def test_trefoil_signs(self, trefoil):
        beta = traverse(trefoil)
        assert beta.order[0] == 0
        assert sorted(beta.order) == [0, 1, 2]
        assert abs(beta.algebraic_intersection) == 1
        assert z2_grading(trefoil) == beta.signs

    def test_lens_intersection(self, fixtures_dir):
        d = load_diagram(fixtures_dir / "lens" / "simple_5_1_2.od")
        assert traverse(d).algebraic_intersection == 5

    def test_region_count(self, trefoil, figure8):
        # a genus one diagram with p points has p regions
        for d in (trefoil, figure8):
            assert len(regions(d)) == d.p

    def test_normalize_mark(self, figure8):
        for mark in (figure8.z, figure8.w):
            normal = normalize_mark(figure8, mark)
            assert region_of(figure8, normal) == region_of(figure8, mark)
            assert normalize_mark(figure8, normal) == normal

    def test_marks_in_distinct_regions(self, trefoil, figure8):
        for d in (trefoil, figure8):
            assert region_of(d, d.z) != region_of(d, d.w)


class TestHomology:
    def test_knot_complements_in_s3(self, unknot, trefoil, figure8):
        for d in (unknot, trefoil, figure8):
            H, m = knot_complement_homology(d)
            assert H == FinAbGroup(1, ())
            assert abs(m.free[0]) == 1

    def test_lens_knot_generates(self, fixtures_dir):
        H, m = knot_complement_homology(load_diagram(fixtures_dir / "lens" / "simple_5_1_2.od"))
        assert H == FinAbGroup(1, ())
        assert abs(m.free[0]) == 5

    def test_relative_grading_is_antisymmetric(self, figure8):
        g = relative_h1_grading(figure8)
        for x in range(figure8.p):
            assert g[x][x].is_identity
            for y in range(figure8.p):
                assert g[x][y] == -g[y][x]


class TestComplex:
    def test_unknot(self, unknot):
        result = euler_char(unknot)
        assert result.total == 1
        assert result.chi == chi_class(result, "1")
        assert khi_certificate(unknot, result).certified

    def test_trefoil(self, trefoil):
        cx = differential(trefoil)
        assert len(cx.generators) == 3
        assert cx.entries() == []
        result = euler_char(trefoil, cx)
        assert result.total == 3
        assert result.chi == chi_class(result, "t - 1 + t^-1")
        assert not result.canonical.is_half
        assert sorted(result.table.values()) == [1, 1, 1]
        assert result.canonical.element == parse_ring_element("t - 1 + t^-1", result.group)
        cert = khi_certificate(trefoil, result)
        assert (cert.upper, cert.lower, cert.certified) == (3, 3, True)

    def test_figure8(self, figure8):
        cx = differential(figure8)
        assert cx.squares_to_zero()
        assert cx.respects_gradings()
        result = euler_char(figure8, cx)
        assert result.total == 5
        assert result.chi == chi_class(result, "t - 3 + t^-1")
        assert sorted(result.table.values()) == [1, 1, 3]
        assert khi_certificate(figure8, result).certified

    def test_canonical_sign_flips_z2(self, figure8):
        result = euler_char(figure8)
        # the symmetric centre carries three generators of the positive sign
        assert result.canonical.element.augmentation() == 1
        assert sorted(result.z2) == [-1, -1, 1, 1, 1]

    def test_deeper_search_changes_nothing(self, trefoil, figure8):
        for d in (trefoil, figure8):
            shallow = differential(d)
            deep = differential(d, search_periods(d) + 3)
            assert deep.differential == shallow.differential
            assert len(find_bigons(d)) == len(shallow.bigons)

    @pytest.mark.parametrize("name", ["unknot", "trefoil", "figure8"])
    def test_matches_fox_calculus(self, fixtures_dir, name):
        d = load_diagram(fixtures_dir / f"{name}.od")
        assert euler_char(d).chi == sutured_torsion(read_presentation(d))

    def test_relabeling_keeps_the_knot(self, trefoil, figure8):
        for d in (trefoil, figure8):
            moved = d.relabeled(1)
            assert is_valid(moved)
            assert euler_char(moved).chi == euler_char(d).chi
            assert euler_char(moved).total == euler_char(d).total


class TestDetectionInput:
    @pytest.mark.parametrize(
        "name,kind",
        [("unknot", UNKNOT), ("trefoil", GENUS_ONE_FIBRED), ("figure8", FIBRED)],
    )
    def test_verdicts(self, fixtures_dir, name, kind):
        d = load_diagram(fixtures_dir / f"{name}.od")
        inp = detection_input(euler_char(d))
        assert inp.h1_order == 1
        assert classify(inp).kind == kind

    def test_lens_knot_is_not_null_homologous(self, fixtures_dir):
        d = load_diagram(fixtures_dir / "lens" / "simple_5_1_2.od")
        with pytest.raises(MalformedInputError):
            detection_input(euler_char(d))

    def test_theory_is_recorded(self, trefoil):
        inp = detection_input(euler_char(trefoil), theory="heegaard")
        assert inp.theory == "heegaard"
        assert classify(inp).kind == GENUS_ONE_FIBRED

    def test_heegaard_layer_does_not_depend_on_detection(self):
        import knotradar.heegaard.complex as complex_module

        assert not hasattr(complex_module, "DetectionInput")
        assert not hasattr(complex_module, "detection_input")


class TestSimpleKnots:
    def test_rejects_non_coprime(self):
        with pytest.raises(InvalidParameterError):
            simple_knot(4, 2, 1)

    def test_fixture_matches_family(self, fixtures_dir):
        d = load_diagram(fixtures_dir / "lens" / "simple_5_1_2.od")
        family = simple_knot(5, 1, 2)
        assert d.arcs == family.arcs
        assert normalize_mark(d, d.w) == normalize_mark(family, family.w)

    def test_l51_generators_in_distinct_classes(self, fixtures_dir):
        cx = differential(load_diagram(fixtures_dir / "lens" / "simple_5_1_2.od"))
        assert len({g.h1_class for g in cx.generators}) == 5

    @pytest.mark.slow
    @pytest.mark.parametrize("p", range(1, 8))
    def test_one_generator_per_class(self, p):
        for q in range(p):
            if gcd(p, q) != 1:
                continue
            for k in range(p):
                d = simple_knot(p, q, k)
                validate(d)
                cx = differential(d)
                assert cx.entries() == []
                result = euler_char(d, cx)
                assert result.total == p
                assert khi_certificate(d, result).certified
                assert len({g.h1_class for g in cx.generators}) == p


@pytest.mark.slow
class TestSmallDiagrams:
    def test_some_diagrams_found(self, small_diagrams):
        assert {d.p for d in small_diagrams} == {1, 2, 3, 4}

    def test_complex_is_sound(self, small_diagrams):
        for d in small_diagrams:
            cx = differential(d)
            assert cx.squares_to_zero(), format_diagram(d)
            assert cx.respects_gradings(), format_diagram(d)

    def test_dimension_bounds_euler_characteristic(self, small_diagrams):
        for d in small_diagrams:
            result = euler_char(d)
            norm = result.chi.norm()
            assert result.total >= norm
            assert (result.total - norm) % 2 == 0
            assert result.total <= d.p

    def test_region_count(self, small_diagrams):
        for d in small_diagrams:
            assert len(regions(d)) == d.p

    def test_matches_fox_calculus(self, small_diagrams):
        for d in small_diagrams:
            assert euler_char(d).chi == sutured_torsion(read_presentation(d)), format_diagram(d)


@pytest.mark.slow
class TestRandomDiagrams:
    def test_sample_size(self, random_diagrams):
        assert len(random_diagrams) == 200
        assert max(d.p for d in random_diagrams) > 6

    def test_complex_is_sound(self, random_diagrams):
        for d in random_diagrams:
            cx = differential(d)
            assert cx.squares_to_zero(), format_diagram(d)
            assert cx.respects_gradings(), format_diagram(d)

    def test_matches_fox_calculus(self, random_diagrams):
        for d in random_diagrams:
            assert euler_char(d).chi == sutured_torsion(read_presentation(d)), format_diagram(d)

    def test_region_count(self, random_diagrams):
        for d in random_diagrams:
            assert len(regions(d)) == d.p
