"""Root system construction, pairings and the order formula."""

import math
from fractions import Fraction

import pytest

from alcoved import rootsys
from alcoved.errors import UserInputError
from alcoved.rootsys import build, coroot_coordinates, pairing, rho, weyl_order


def test_cartan_matrices_small_types():
    assert build("A", 2).cartan == ((2, -1), (-1, 2))
    assert build("G", 2).cartan in (((2, -1), (-3, 2)), ((2, -3), (-1, 2)))
    c2 = build("C", 2).cartan
    assert sorted(sorted(row) for row in c2) == [[-2, 2], [-1, 2]]
    d4 = build("D", 4)
    assert sum(row.count(-1) for row in d4.cartan) == 6


def test_positive_root_counts():
    expected = {
        ("A", 3): 6,
        ("B", 3): 9,
        ("C", 4): 16,
        ("D", 4): 12,
        ("G", 2): 6,
        ("F", 4): 24,
    }
    for (t, r), count in expected.items():
        rs = build(t, r)
        assert len(rs.positive_roots) == count
        for root in rs.positive_roots:
            assert all(c >= 0 for c in root)


def test_theta_has_the_marks_as_coordinates():
    for t, r in (("A", 4), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4)):
        rs = build(t, r)
        assert rs.theta == rs.marks
        assert max(rs.positive_roots, key=sum) == rs.theta
        assert rs.h_star == 1 + sum(rs.marks)


def test_weyl_order_closed_forms():
    # classical orders: (n+1)! for A_n, 2^n n! for B_n/C_n,
    # 2^(n-1) n! for D_n, 12 for G_2, 1152 for F_4
    for n in range(1, 6):
        assert weyl_order(build("A", n)) == math.factorial(n + 1)
    for n in range(2, 5):
        assert weyl_order(build("B", n)) == 2**n * math.factorial(n)
        assert weyl_order(build("C", n)) == 2**n * math.factorial(n)
    assert weyl_order(build("D", 4)) == 192
    assert weyl_order(build("G", 2)) == 12
    assert weyl_order(build("F", 4)) == 1152


def test_index_of_connection_is_cartan_determinant():
    expected = {("A", 3): 4, ("B", 3): 2, ("C", 3): 2, ("D", 4): 4, ("G", 2): 1, ("F", 4): 1}
    for (t, r), f in expected.items():
        rs = build(t, r)
        assert rs.index_of_connection == f
        # f also counts the marks equal to one, with the affine mark included
        assert f == 1 + sum(1 for a in rs.marks if a == 1)


def test_pairing_is_the_plain_dot_product():
    rs = build("C", 3)
    omega_1 = (1, 0, 0)
    assert pairing(omega_1, rs.simple_roots[0]) == 1
    assert pairing(omega_1, rs.simple_roots[1]) == 0
    assert pairing(omega_1, rs.theta) == rs.marks[0]


def test_coroot_coordinates_invert_the_cartan_matrix():
    for t, r in (("A", 3), ("B", 3), ("C", 2), ("D", 4), ("G", 2)):
        rs = build(t, r)
        for j in range(r):
            # column j of the Cartan matrix is the coweight vector of
            # the j-th simple coroot
            col = tuple(rs.cartan[i][j] for i in range(r))
            coords = coroot_coordinates(rs, col)
            assert coords == tuple(1 if i == j else 0 for i in range(r))


def test_coroot_covector_of_simple_roots():
    rs = build("B", 3)
    for j, alpha in enumerate(rs.simple_roots):
        col = tuple(rs.cartan[i][j] for i in range(rs.rank))
        assert rs.coroot_covector(alpha) == col


def test_rho_pairs_to_one_with_simple_coroots():
    for t, r in (("A", 2), ("C", 3), ("D", 4)):
        rs = build(t, r)
        assert rho(rs) == (1,) * r
        assert pairing(rho(rs), rs.theta) == rs.h_star - 1


def test_symmetrizer_makes_cartan_symmetric():
    for t, r in (("B", 3), ("C", 3), ("G", 2), ("F", 4)):
        rs = build(t, r)
        d = rs.symmetrizer
        for i in range(r):
            for j in range(r):
                assert Fraction(rs.cartan[i][j], d[j]) == Fraction(
                    rs.cartan[j][i], d[i]
                )


def test_invalid_input_raises():
    with pytest.raises(UserInputError):
        build("H", 3)
    with pytest.raises(UserInputError):
        build("G", 3)
    with pytest.raises(UserInputError):
        build("D", 3)
    rs = build("A", 2)
    with pytest.raises(UserInputError):
        rs.root_index((5, 5))


def test_info_dict_shape():
    info = rootsys.info_dict(build("A", 2))
    assert info["type"] == "A"
    assert info["rank"] == 2
    assert info["weyl_order"] == 6
    assert info["f"] == 3
    assert len(info["positive_roots"]) == 3
