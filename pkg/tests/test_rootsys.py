from fractions import Fraction

import pytest

from weylfan import linalg as la
from weylfan.rootsys import (
    UnsupportedRootSystemError,
    build_root_system,
    fundamental_chamber,
    fundamental_weights,
    hermitian_simple_roots,
)
from weylfan.weyl import reflection, act

from oracles import c_roots_by_definition, simplicial_rays

ALL_SYSTEMS = [(f, n) for f in "ABC" for n in range(1, 5)] + [("D", n) for n in range(2, 5)]


def v(*xs):
    return la.vector(xs)


def test_c2_roots_and_simple_roots():
    rs = build_root_system("C", 2)
    assert len(rs.roots) == 8
    assert rs.simple_roots == (v(1, -1), v(0, 2))
    assert rs.highest_root == v(2, 0)


def test_c1_degenerate():
    rs = build_root_system("C", 1)
    assert set(rs.roots) == {v(2), v(-2)}
    assert rs.simple_roots == (v(2),)


@pytest.mark.parametrize("n", range(1, 7))
def test_c_roots_match_defining_set(n):
    rs = build_root_system("C", n)
    expected = c_roots_by_definition(n)
    assert len(expected) == 2 * n * n
    assert set(rs.roots) == expected
    assert len(rs.roots) == len(set(rs.roots))


@pytest.mark.parametrize("n", range(1, 6))
def test_c_simple_root_conventions(n):
    rs = build_root_system("C", n)
    for j in range(n - 1):
        assert rs.simple_roots[j] == la.sub(la.unit(n, j), la.unit(n, j + 1))
    assert rs.simple_roots[-1] == la.scale(2, la.unit(n, n - 1))
    assert rs.highest_root == la.scale(2, la.unit(n, 0))


@pytest.mark.parametrize("family,rank", [("E", 8), ("F", 4), ("G", 2), ("C", 0), ("D", 1), ("A", -1)])
def test_unsupported(family, rank):
    with pytest.raises(UnsupportedRootSystemError):
        build_root_system(family, rank)


@pytest.mark.parametrize("family,rank", ALL_SYSTEMS)
def test_root_system_invariants(family, rank):
    rs = build_root_system(family, rank)
    pos = set(rs.positive_roots)
    neg = {la.neg(a) for a in pos}
    assert not pos & neg
    assert set(rs.roots) == pos | neg
    assert len(pos) == len(rs.roots) // 2
    for a in rs.positive_roots:
        c = rs.simple_coefficients(a)
        assert all(x >= 0 and x.denominator == 1 for x in c)
    if rs.is_irreducible:
        top = rs.simple_coefficients(rs.highest_root)
        assert all(c >= 1 for c in top)
        # the highest root dominates every positive root coefficientwise
        for a in rs.positive_roots:
            assert all(x <= y for x, y in zip(rs.simple_coefficients(a), top))


@pytest.mark.parametrize("family,rank", [s for s in ALL_SYSTEMS if s[1] <= 4])
def test_closed_under_reflections(family, rank):
    rs = build_root_system(family, rank)
    roots = set(rs.roots)
    for a in rs.roots:
        s = reflection(rs, a)
        for b in rs.roots:
            assert act(s, b) in roots


def test_c2_fundamental_weights():
    rs = build_root_system("C", 2)
    assert fundamental_weights(rs) == [v(1, 0), v(1, 1)]


@pytest.mark.parametrize("n", range(1, 6))
def test_c_last_weight_is_all_ones(n):
    rs = build_root_system("C", n)
    omega = fundamental_weights(rs)[-1]
    assert omega == v(*[1] * n)
    for j, a in enumerate(rs.simple_roots):
        assert rs.coroot_pairing(omega, a) == (1 if j == n - 1 else 0)


@pytest.mark.parametrize("family,rank", ALL_SYSTEMS)
def test_weight_pairing_is_identity(family, rank):
    rs = build_root_system(family, rank)
    weights = fundamental_weights(rs)
    table = [[rs.coroot_pairing(w, a) for a in rs.simple_roots] for w in weights]
    assert table == [[1 if i == j else 0 for j in range(rank)] for i in range(rank)]


def test_a_weights_live_in_root_hyperplane():
    rs = build_root_system("A", 3)
    for w in fundamental_weights(rs):
        assert sum(w) == 0
    assert fundamental_weights(rs)[0] == v(Fraction(3, 4), Fraction(-1, 4), Fraction(-1, 4), Fraction(-1, 4))


def test_c2_chamber():
    c = fundamental_chamber(build_root_system("C", 2))
    assert c.facets == ((0, 1), (1, -1))
    assert c.rays == ((1, 0), (1, 1))
    assert list(c.rays) == simplicial_rays([(1, -1), (0, 2)])


def test_c1_chamber():
    c = fundamental_chamber(build_root_system("C", 1))
    assert c.rays == ((1,),)


def test_c3_chamber():
    rs = build_root_system("C", 3)
    c = fundamental_chamber(rs)
    expected = simplicial_rays(rs.simple_roots)
    assert expected == [(1, 0, 0), (1, 1, 0), (1, 1, 1)]
    assert list(c.rays) == expected


@pytest.mark.parametrize("family,rank", ALL_SYSTEMS)
def test_chamber_rays_pair_nonnegatively(family, rank):
    rs = build_root_system(family, rank)
    c = fundamental_chamber(rs)
    assert c.dim == rank
    for r in c.rays:
        for a in rs.positive_roots:
            assert la.dot(r, a) >= 0


def test_hermitian_c():
    for n in range(1, 6):
        rs = build_root_system("C", n)
        coeffs = rs.simple_coefficients(rs.highest_root)
        assert list(coeffs) == [2] * (n - 1) + [1]
        assert hermitian_simple_roots(rs) == (n,)


def test_hermitian_a_all():
    for n in range(1, 5):
        rs = build_root_system("A", n)
        assert list(rs.simple_coefficients(rs.highest_root)) == [1] * n
        assert hermitian_simple_roots(rs) == tuple(range(1, n + 1))


def test_hermitian_b2():
    rs = build_root_system("B", 2)
    assert list(rs.simple_coefficients(rs.highest_root)) == [1, 2]
    assert hermitian_simple_roots(rs) == (1,)


def test_hermitian_d4():
    rs = build_root_system("D", 4)
    assert hermitian_simple_roots(rs) == (1, 3, 4)
