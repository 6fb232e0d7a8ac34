from math import factorial

import pytest

from weylfan import linalg as la
from weylfan.rootsys import build_root_system
from weylfan.weyl import (
    ElementCapExceededError,
    act,
    generate_weyl_group,
    inversion_count,
    parabolic,
    reflection,
)

SMALL = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 1), ("C", 2), ("C", 3), ("D", 2), ("D", 3)]


def det(m):
    m = [[la.to_fraction(x) for x in r] for r in m]
    n = len(m)
    sign, out = 1, 1
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        out *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return sign * out


def test_reflection_in_long_root():
    rs = build_root_system("C", 3)
    s = reflection(rs, (0, 0, 2))
    assert act(s, (1, 0, 0)) == (1, 0, 0)
    assert act(s, (0, 1, 0)) == (0, 1, 0)
    assert act(s, (0, 0, 1)) == (0, 0, -1)
    assert act(s, (4, 5, 6)) == (4, 5, -6)


def test_reflection_swaps_coordinates():
    rs = build_root_system("C", 3)
    s = reflection(rs, (1, -1, 0))
    assert act(s, (7, 3, 2)) == (3, 7, 2)


def test_reflection_rejects_non_root():
    rs = build_root_system("C", 2)
    with pytest.raises(ValueError):
        reflection(rs, (1, 0))


@pytest.mark.parametrize("family,rank", SMALL + [("C", 4), ("B", 4), ("D", 4), ("A", 4)])
def test_reflection_properties(family, rank):
    rs = build_root_system(family, rank)
    ident = la.identity(rs.ambient_dim)
    roots = set(rs.roots)
    for a in rs.roots:
        s = reflection(rs, a)
        assert act(s, a) == la.neg(a)
        assert la.matmul(s.matrix, s.matrix) == ident
        assert det(s.matrix) == -1
        assert {act(s, b) for b in rs.roots} == roots
        # fixes the hyperplane orthogonal to a
        for b in rs.roots:
            if la.dot(a, b) == 0:
                assert act(s, b) == b


@pytest.mark.parametrize("n,order", [(2, 8), (3, 48)])
def test_c_group_orders(n, order):
    W = generate_weyl_group(build_root_system("C", n))
    assert len(W) == order == 2**n * factorial(n)


def test_identity_first():
    W = generate_weyl_group(build_root_system("C", 2))
    assert W.identity.matrix == la.identity(2)
    assert W.identity.length == 0 and W.identity.word == ()
    assert W.identity in W


@pytest.mark.parametrize(
    "family,rank,order",
    [("A", 1, 2), ("A", 2, 6), ("A", 3, 24), ("B", 2, 8), ("B", 3, 48), ("D", 3, 24), ("D", 4, 192), ("C", 4, 384)],
)
def test_other_orders(family, rank, order):
    assert len(generate_weyl_group(build_root_system(family, rank))) == order


def test_cap():
    rs = build_root_system("C", 3)
    with pytest.raises(ElementCapExceededError):
        generate_weyl_group(rs, cap=47)
    assert len(generate_weyl_group(rs, cap=48)) == 48


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("WEYLFAN_ELEMENT_CAP", "5")
    with pytest.raises(ElementCapExceededError):
        generate_weyl_group(build_root_system("C", 2))


@pytest.mark.parametrize("family,rank", SMALL)
def test_elements_are_orthogonal_and_permute_roots(family, rank):
    rs = build_root_system(family, rank)
    W = generate_weyl_group(rs)
    ident = la.identity(rs.ambient_dim)
    roots = set(rs.roots)
    for w in W:
        assert la.matmul(la.transpose(w.matrix), w.matrix) == ident
        assert {act(w, b) for b in rs.roots} == roots


@pytest.mark.parametrize("family,rank", SMALL + [("C", 4)])
def test_word_length_equals_inversions(family, rank):
    rs = build_root_system(family, rank)
    W = generate_weyl_group(rs)
    for w in W:
        assert len(w.word) == w.length == inversion_count(rs, w)
        # the word multiplies out to the matrix
        m = la.identity(rs.ambient_dim)
        for i in w.word:
            m = la.matmul(m, W.generators[i - 1].matrix)
        assert m == w.matrix


def test_group_closed_under_product_and_inverse():
    W = generate_weyl_group(build_root_system("B", 3))
    for a in W.elements[::5]:
        assert a.inverse in W
        for b in W.elements[::7]:
            assert a * b in W


def test_act_identity_and_dimension():
    W = generate_weyl_group(build_root_system("C", 2))
    assert act(W.identity, (3, -5)) == (3, -5)
    with pytest.raises(ValueError):
        act(W.identity, (1, 2, 3))


def test_act_preserves_inner_product():
    W = generate_weyl_group(build_root_system("B", 3))
    u, w = la.vector((1, 2, -3)), la.vector((0, 5, 7))
    for g in W:
        assert la.dot(act(g, u), act(g, w)) == la.dot(u, w)


def test_c2_orbit_of_e1():
    W = generate_weyl_group(build_root_system("C", 2))
    assert {act(w, (1, 0)) for w in W} == {(1, 0), (-1, 0), (0, 1), (0, -1)}


def test_simple_last_reflection_negates_last_coordinate():
    rs = build_root_system("C", 4)
    W = generate_weyl_group(rs)
    assert act(W.generators[-1], (1, 2, 3, 4)) == (1, 2, 3, -4)


@pytest.mark.parametrize("n", range(1, 6))
def test_c_maximal_parabolic(n):
    W = generate_weyl_group(build_root_system("C", n))
    P = parabolic(W, range(1, n))
    assert len(P.elements) == factorial(n)
    assert len(P.coset_reps) == 2**n


def test_empty_and_full_parabolic():
    W = generate_weyl_group(build_root_system("C", 3))
    P = parabolic(W, [])
    assert [w.matrix for w in P.elements] == [W.identity.matrix]
    assert set(P.coset_reps) == set(W.elements)
    P = parabolic(W, [1, 2, 3])
    assert set(P.elements) == set(W.elements)
    assert P.coset_reps == (W.identity,)


def test_parabolic_index_range():
    W = generate_weyl_group(build_root_system("C", 2))
    with pytest.raises(ValueError):
        parabolic(W, [3])


def _subsets(k):
    for mask in range(2**k):
        yield [i + 1 for i in range(k) if mask >> i & 1]


@pytest.mark.parametrize("family,rank", SMALL)
def test_cosets_partition_group(family, rank):
    rs = build_root_system(family, rank)
    W = generate_weyl_group(rs)
    for pi_p in _subsets(rank):
        P = parabolic(W, pi_p)
        sub = set(P.elements)
        assert len(P.coset_reps) * len(sub) == len(W)
        covered = []
        for r in P.coset_reps:
            coset = {r * u for u in sub}
            # brute force: representative is of minimal length in its coset
            assert r.length == min(W.lookup(x.matrix).length for x in coset)
            covered.extend(coset)
        assert len(covered) == len(W) and set(covered) == set(W.elements)
