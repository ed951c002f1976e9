# coding=utf-8
import random

import pytest

from knotradar.abelian import FinAbGroup
from knotradar.fox import (
    DET_METHODS,
    FreeWord,
    GroupPresentation,
    TuraevTorsion,
    abelianize,
    alexander_matrix,
    conjugate_relator,
    determinant,
    divide_by_characters,
    format_presentation,
    fox_derivative,
    fundamental_identity_residual,
    invert_relator,
    load_presentation,
    meridian_class,
    multiply_relators,
    parse_presentation,
    presentation_from_words,
    substitute_generator,
    sutured_torsion,
    sutured_torsion_element,
    turaev_torsion,
    valid_columns,
)
from knotradar.heegaard import load_diagram, read_presentation
from knotradar.ring import GroupRingElem, PmClass, canonical_rep, divide_exact, parse_ring_element
from knotradar.utils.errors import (
    FileParseError,
    FiniteOrderElementError,
    IndeterminateError,
    InvalidParameterError,
)

ALEXANDER = {
    "unknot": "1",
    "trefoil": "t - 1 + t^-1",
    "figure8": "t - 3 + t^-1",
}


def expected(p, name):
    group, _ = meridian_class(p)
    return PmClass(parse_ring_element(ALEXANDER[name], group))


def random_word(rng, n_generators, length):
    return FreeWord(tuple((rng.randrange(n_generators), rng.choice([1, -1])) for _ in range(length)))


def random_knotlike_presentations(seed, count, attempts=5000):
    """Deficiency-one presentations on 2 to 4 generators with H = Z."""
    rng = random.Random(seed)
    out = []
    for _ in range(attempts):
        n = rng.randint(2, 4)
        relators = tuple(random_word(rng, n, rng.randint(2, 8)) for _ in range(n - 1))
        p = GroupPresentation(n, relators, FreeWord.generator(0))
        if abelianize(p)[0] == FinAbGroup(1, ()):
            out.append(p)
            if len(out) == count:
                break
    return out


def oriented_torsion(p, column):
    """turaev_torsion read in the coordinate of H = Z that makes the column generator positive."""
    tau = turaev_torsion(p, column=column)
    _, ab = abelianize(p)
    if ab[column].free[0] > 0:
        return tau
    denominator = -tau.denominator if tau.denominator is not None else None
    return TuraevTorsion(tau.group, tau.numerator.involution(), denominator, tau.column)


@pytest.fixture(scope="module")
def random_presentations():
    return random_knotlike_presentations(seed=11, count=60)


class TestWords:
    def test_free_reduction(self):
        assert FreeWord.parse("x y Y X", ["x", "y"]) == FreeWord()
        w = FreeWord.parse("x y", ["x", "y"])
        assert (w * w.inverse()).letters == ()
        assert len(w ** 3) == 6

    def test_fundamental_identity(self):
        rng = random.Random(1)
        for _ in range(1000):
            n = rng.randint(1, 4)
            w = random_word(rng, n, rng.randint(0, 12))
            assert fundamental_identity_residual(w, n) == {}

    def test_derivative_of_inverse(self):
        x = FreeWord.generator(0)
        d = fox_derivative(x.inverse(), 0)
        assert d == {x.inverse(): -1}

    def test_unknown_letter(self):
        with pytest.raises(ValueError):
            FreeWord.parse("x q", ["x", "y"])


class TestPresentations:
    def test_parse_fixture(self, fixtures_dir):
        p = load_presentation(fixtures_dir / "figure8.gp")
        assert p.names == ("a", "b")
        assert p.deficiency == 1
        assert p.meridian_generator() == 0

    def test_parse_errors(self):
        with pytest.raises(FileParseError) as exc:
            parse_presentation("gens: x y\nrel: x q\n", "bad.gp")
        assert exc.value.line == 2
        with pytest.raises(FileParseError):
            parse_presentation("rel: x\n")

    def test_abelianization(self, fixtures_dir):
        H, ab = abelianize(load_presentation(fixtures_dir / "trefoil.gp"))
        assert H == FinAbGroup(1, ())
        assert ab[0] == ab[1]
        H, _ = abelianize(presentation_from_words(["x", "y"], ["x x x x x"], "y"))
        assert H == FinAbGroup(1, (5,))

    def test_alexander_rows_satisfy_identity(self, fixtures_dir):
        for name in ("trefoil", "figure8"):
            matrix = alexander_matrix(load_presentation(fixtures_dir / f"{name}.gp"))
            assert all(r.is_zero for r in matrix.row_identity_residuals())


class TestDeterminant:
    def test_methods_agree(self, Z5):
        rng = random.Random(2)
        for n in (2, 3, 4):
            mat = [
                [
                    GroupRingElem.monomial(Z5.element((rng.randint(-2, 2),), (rng.randrange(5),)), rng.randint(-2, 2))
                    for _ in range(n)
                ]
                for _ in range(n)
            ]
            values = {method: determinant(mat, Z5, method) for method in DET_METHODS}
            assert values["bird"] == values["laplace"]

    def test_integer_matrix(self, Z):
        one = GroupRingElem.one(Z)
        mat = [[one * 2, one * 1], [one * 7, one * 4]]
        assert determinant(mat, Z) == 1

    def test_empty(self, Z):
        assert determinant([], Z) == 1

    def test_unknown_method(self, Z):
        with pytest.raises(InvalidParameterError):
            determinant([[GroupRingElem.one(Z)]], Z, "gauss")


class TestTorsion:
    @pytest.mark.parametrize("name", ["unknot", "trefoil", "figure8"])
    def test_sutured_torsion(self, fixtures_dir, name):
        p = load_presentation(fixtures_dir / f"{name}.gp")
        assert sutured_torsion(p) == expected(p, name)

    @pytest.mark.parametrize("name", ["trefoil", "figure8"])
    def test_column_independence(self, fixtures_dir, name):
        p = load_presentation(fixtures_dir / f"{name}.gp")
        columns = valid_columns(p)
        assert len(columns) == 2
        taus = [turaev_torsion(p, column=j) for j in columns]
        assert taus[0].equivalent(taus[1])

    @pytest.mark.parametrize("name", ["trefoil", "figure8"])
    def test_methods_give_the_same_torsion(self, fixtures_dir, name):
        p = load_presentation(fixtures_dir / f"{name}.gp")
        assert sutured_torsion(p, "laplace") == sutured_torsion(p, "bird")

    def test_tietze_moves(self, fixtures_dir):
        p = load_presentation(fixtures_dir / "trefoil.gp")
        target = sutured_torsion(p)
        x, y = FreeWord.generator(0), FreeWord.generator(1)
        moved = [
            conjugate_relator(p, 0, y * x),
            invert_relator(p, 0),
            substitute_generator(p, 1, x),
            substitute_generator(p, 1, x.inverse() * x.inverse()),
        ]
        for q in moved:
            assert sutured_torsion(q) == target

    def test_product_of_relators(self, fixtures_dir):
        p = read_presentation(load_diagram(fixtures_dir / "trefoil.od"))
        assert len(p.relators) == 2
        q = multiply_relators(p, 1, 0)
        assert sutured_torsion(q) == sutured_torsion(p)
        with pytest.raises(ValueError):
            multiply_relators(p, 0, 0)

    @pytest.mark.parametrize("name", ["trefoil", "figure8"])
    def test_difference_from_unknot_is_divisible(self, fixtures_dir, name):
        p = load_presentation(fixtures_dir / f"{name}.gp")
        element, m = sutured_torsion_element(p)
        rep = canonical_rep(element, m)
        divide_exact(rep - 1, m, 2)

    def test_wrong_deficiency(self):
        p = presentation_from_words(["x", "y"], [], "x")
        with pytest.raises(IndeterminateError):
            turaev_torsion(p)

    def test_torsion_group(self):
        # <x, y | x^5> has H = Z + Z/5 and is not a knot group, but its
        # torsion is still defined and integral once multiplied by (y - 1)
        p = presentation_from_words(["x", "y"], ["x x x x x"], "y")
        element, m = sutured_torsion_element(p)
        assert element.group == FinAbGroup(1, (5,))
        assert m.has_infinite_order


class TestCharacterDivision:
    def test_torsion_free(self, Z):
        t = GroupRingElem.monomial(Z.element((1,)))
        assert divide_by_characters(t * t - 1, Z.element((1,))) == t + 1

    def test_with_torsion(self, Z5):
        t = GroupRingElem.monomial(Z5.element((1,), (0,)))
        r = GroupRingElem.monomial(Z5.element((0,), (1,)))
        quotient = divide_by_characters((t - 1) * (r + 1), Z5.element((1,), (0,)))
        assert quotient == r + 1

    def test_negative_generator(self, Z5):
        h = Z5.element((-1,), (2,))
        q = GroupRingElem.monomial(Z5.element((0,), (1,))) + 3
        x = (GroupRingElem.monomial(h) - 1) * q
        assert divide_by_characters(x, h) == q

    def test_not_divisible(self, Z, Z5):
        with pytest.raises(IndeterminateError):
            divide_by_characters(GroupRingElem.monomial(Z.element((1,))) + 1, Z.element((1,)))
        with pytest.raises(IndeterminateError):
            divide_by_characters(GroupRingElem.monomial(Z5.element((0,), (1,))) + 1, Z5.element((1,), (0,)))

    def test_finite_order(self, Z5):
        r = Z5.element((0,), (1,))
        with pytest.raises(FiniteOrderElementError):
            divide_by_characters(GroupRingElem.monomial(r) - 1, r)


@pytest.mark.slow
class TestRandomPresentations:
    def test_sample(self, random_presentations):
        assert len(random_presentations) == 60
        assert {p.n_generators for p in random_presentations} == {2, 3, 4}

    def test_column_independence(self, random_presentations):
        pairs = 0
        for p in random_presentations:
            taus = [turaev_torsion(p, column=j) for j in valid_columns(p)]
            for other in taus[1:]:
                assert taus[0].equivalent(other), format_presentation(p)
                pairs += 1
        assert pairs > 0

    def test_tietze_moves(self, random_presentations):
        rng = random.Random(12)
        for p in random_presentations:
            column = valid_columns(p)[0]
            target = oriented_torsion(p, column)
            i = rng.randrange(len(p.relators))
            moved = [
                conjugate_relator(p, i, random_word(rng, p.n_generators, rng.randint(1, 4))),
                invert_relator(p, i),
            ]
            if len(p.relators) > 1:
                j = rng.choice([k for k in range(len(p.relators)) if k != i])
                moved.append(multiply_relators(p, i, j))
            for q in moved:
                assert oriented_torsion(q, column).equivalent(target), format_presentation(q)
