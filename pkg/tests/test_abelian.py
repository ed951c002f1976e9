# coding=utf-8
import itertools
import random

import pytest

from knotradar.abelian import (
    FinAbGroup,
    GroupHom,
    format_element,
    format_group,
    free_projection,
    group_from_relations,
    half_extension,
    inclusion_of_torsion,
    integer_det,
    m_coordinate,
    meridian_splitting,
    parse_element,
    parse_group,
    quotient_by_element,
    smith_normal_form,
    solve_integer_system,
    unimodular_inverse,
)
from knotradar.abelian.smith import _normalize, identity_matrix, matmul
from knotradar.utils.errors import FiniteOrderElementError, InvalidHomomorphismError


def assert_smith(mat, diag, left, right):
    d = matmul(matmul(left, mat), right)
    for i, row in enumerate(d):
        for j, v in enumerate(row):
            assert v == (diag[i] if i == j else 0), mat
    nonzero = [v for v in diag if v]
    assert diag == nonzero + [0] * (len(diag) - len(nonzero)), mat
    assert all(v > 0 for v in nonzero), mat
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:])), mat
    assert abs(integer_det(left)) == 1
    assert abs(integer_det(right)) == 1


class TestSmithNormalForm:
    @pytest.mark.parametrize(
        "mat",
        [
            [[2, 4], [6, 8]],
            [[0, 5]],
            [[3, 0, 0], [0, 6, 0]],
            [[1, 1], [1, -1], [2, 0]],
            [[4, 6, 10], [6, 9, 15]],
        ],
    )
    def test_left_mat_right_is_diagonal(self, mat):
        assert_smith(mat, *smith_normal_form(mat))

    def test_random_matrices(self):
        rng = random.Random(3)
        for _ in range(300):
            m, n = rng.randint(1, 5), rng.randint(1, 5)
            mat = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
            if rng.random() < 0.2:
                mat[rng.randrange(m)] = [0] * n
            assert_smith(mat, *smith_normal_form(mat))

    def test_empty(self):
        assert smith_normal_form([]) == ([], [], [])
        assert smith_normal_form([[], []]) == ([], [[1, 0], [0, 1]], [])

    def test_chain_is_restored(self):
        mat = [[6, 0, 0], [0, 0, 0], [0, 0, 4]]
        diag, left, right = [6, 0, 4], identity_matrix(3), identity_matrix(3)
        _normalize(diag, left, right)
        assert diag == [2, 12, 0]
        assert_smith(mat, diag, left, right)

    def test_integer_det(self):
        assert integer_det([[1, 2], [3, 4]]) == -2
        assert integer_det([[2, 0, 0], [0, 3, 0], [0, 0, 5]]) == 30

    def test_unimodular_inverse(self):
        u = [[2, 1, 0], [7, 4, 0], [1, 1, 1]]
        assert matmul(u, unimodular_inverse(u)) == identity_matrix(3)
        with pytest.raises(ValueError):
            unimodular_inverse([[2, 0], [0, 1]])

    def test_diagonal_of_two_by_two(self):
        assert smith_normal_form([[2, 4], [6, 8]])[0] == [2, 4]

    def test_solve_integer_system(self):
        assert solve_integer_system([[1, 2], [3, 4]], [5, 11]) == [1, 2]
        assert solve_integer_system([[2, 2]], [3]) is None


class TestGroups:
    def test_group_from_relations(self):
        assert group_from_relations(2, [[0, 5]])[0] == FinAbGroup(1, (5,))
        assert group_from_relations(2, [[1, 1]])[0] == FinAbGroup(1, ())
        assert group_from_relations(3, [[2, 0, 0], [0, 3, 0]])[0] == FinAbGroup(1, (6,))
        assert group_from_relations(2, [])[0] == FinAbGroup(2, ())

    def test_quotient_hom_kills_relations(self):
        group, q = group_from_relations(2, [[2, 4]])
        source = FinAbGroup(2, ())
        assert q(source.element((2, 4))).is_identity
        assert not q(source.element((1, 2))).is_identity

    def test_torsion_reduces(self, Z5):
        g = Z5.element((1,), (7,))
        assert g.torsion == (2,)
        assert (g * 5).torsion == (0,)
        assert (g - g).is_identity

    def test_broken_divisor_chain(self):
        with pytest.raises(ValueError):
            FinAbGroup(0, (3, 5))

    def test_torsion_elements(self):
        assert len(list(FinAbGroup(1, (2, 4)).torsion_elements())) == 8

    def test_hom_must_respect_relations(self, Z5):
        with pytest.raises(InvalidHomomorphismError):
            GroupHom(FinAbGroup(0, (5,)), FinAbGroup(1, ()), ((1,),))

    def test_preimage(self, Z5):
        q = free_projection(Z5)
        x = q.preimage(FinAbGroup(1, ()).element((3,)))
        assert x is not None and q(x).free == (3,)

    def test_free_part_kills_torsion(self, Z5):
        composite = free_projection(Z5).compose(inclusion_of_torsion(Z5))
        assert composite.is_zero()
        identity = GroupHom.identity(Z5)
        g = Z5.element((3,), (4,))
        assert identity.compose(identity)(g) == g

    def test_quotient_by_meridian(self, Z5):
        quotient, q = quotient_by_element(Z5, Z5.element((1,), (0,)))
        assert quotient == FinAbGroup(0, (5,))
        assert q(Z5.element((4,), (2,))) == q(Z5.element((0,), (2,)))
        assert not q(Z5.element((0,), (1,))).is_identity

    def test_meridian_splitting(self, Z5):
        _, _, splits = meridian_splitting(Z5, Z5.element((1,), (3,)))
        assert splits
        _, _, splits = meridian_splitting(FinAbGroup(1, ()), FinAbGroup(1, ()).element((5,)))
        assert not splits
        with pytest.raises(FiniteOrderElementError):
            meridian_splitting(Z5, Z5.element((0,), (1,)))

    def test_m_coordinate(self, Z5):
        m = Z5.element((-1,), (0,))
        rho = m_coordinate(Z5, m)
        assert rho(m).free == (1,)
        assert rho(Z5.element((0,), (3,))).is_identity

    def test_half_extension(self, Z):
        lat = half_extension(Z, Z.element((1,)))
        assert lat.root * 2 == lat.embed(Z.element((1,)))
        h, e = lat.split(lat.root * 3)
        assert (h.free, e) == ((1,), 1)


class TestLiterals:
    @pytest.mark.parametrize("text", ["Z", "Z^2", "Z x Z/5", "Z/2 x Z/4", "0"])
    def test_group_literal(self, text):
        assert format_group(parse_group(text)) == text

    def test_group_literal_rejects(self):
        with pytest.raises(ValueError):
            parse_group("Q")

    def test_element_literal(self, Z5):
        for free, tors in itertools.product(range(-2, 3), range(5)):
            g = Z5.element((free,), (tors,))
            assert parse_element(Z5, format_element(g)) == g
