"""Classical root systems in their standard Euclidean realizations.

* ``A_n`` lives in the hyperplane ``x_1 + ... + x_{n+1} = 0`` of Q^{n+1}.
* ``B_n``, ``C_n`` and ``D_n`` live in Q^n.

Simple roots follow Bourbaki order; for ``C_n`` that gives
``alpha_j = e_j - e_{j+1}`` (j < n) and ``alpha_n = 2 e_n``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg as la
from .linalg import Vector

FAMILIES = ("A", "B", "C", "D")


class UnsupportedRootSystemError(ValueError):
    pass


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    ambient_dim: int
    positive_roots: tuple[Vector, ...]
    simple_roots: tuple[Vector, ...]
    highest_root: Vector
    fundamental_weights: tuple[Vector, ...] = field(default=(), compare=False)

    @property
    def roots(self) -> tuple[Vector, ...]:
        return self.positive_roots + tuple(la.neg(a) for a in self.positive_roots)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def is_irreducible(self) -> bool:
        return not (self.family == "D" and self.rank == 2)

    def is_root(self, v) -> bool:
        v = la.vector(v)
        return v in set(self.roots)

    def simple_coefficients(self, v) -> tuple[Fraction, ...]:
        """Coordinates of ``v`` in the basis of simple roots."""
        cols = la.transpose(self.simple_roots)
        x = la.solve(cols, la.vector(v))
        if x is None:
            raise ValueError(f"{v} is not in the span of the simple roots")
        return x

    def coroot_pairing(self, v, alpha) -> Fraction:
        """``2 (v, alpha) / (alpha, alpha)``."""
        return 2 * la.dot(v, alpha) / la.dot(alpha, alpha)


def _e(n: int, i: int, c=1) -> Vector:
    return tuple(Fraction(c if j == i else 0) for j in range(n))


def _positive_roots(family: str, n: int) -> tuple[int, list[Vector], list[Vector], Vector]:
    if family == "A":
        dim = n + 1
        pos = [la.sub(_e(dim, i), _e(dim, j)) for i in range(dim) for j in range(i + 1, dim)]
        simple = [la.sub(_e(dim, i), _e(dim, i + 1)) for i in range(n)]
        return dim, pos, simple, la.sub(_e(dim, 0), _e(dim, n))
    dim = n
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    minus = [la.sub(_e(n, i), _e(n, j)) for i, j in pairs]
    plus = [la.add(_e(n, i), _e(n, j)) for i, j in pairs]
    chain = [la.sub(_e(n, i), _e(n, i + 1)) for i in range(n - 1)]
    if family == "B":
        pos = minus + plus + [_e(n, i) for i in range(n)]
        highest = la.add(_e(n, 0), _e(n, 1)) if n >= 2 else _e(n, 0)
        return dim, pos, chain + [_e(n, n - 1)], highest
    if family == "C":
        pos = minus + plus + [_e(n, i, 2) for i in range(n)]
        return dim, pos, chain + [_e(n, n - 1, 2)], _e(n, 0, 2)
    pos = minus + plus
    return dim, pos, chain + [la.add(_e(n, n - 2), _e(n, n - 1))], la.add(_e(n, 0), _e(n, 1))


def _solve_weights(simple: list[Vector], dim: int) -> tuple[Vector, ...]:
    # omega_i = sum_k c_ik alpha_k with 2 (omega_i, alpha_j) / (alpha_j, alpha_j) = delta_ij
    r = len(simple)
    pairing = [[2 * la.dot(ak, aj) / la.dot(aj, aj) for ak in simple] for aj in simple]
    if la.rank(pairing) < r:
        raise ArithmeticError("singular Cartan pairing")
    weights = []
    for i in range(r):
        rhs = [Fraction(1 if j == i else 0) for j in range(r)]
        c = la.solve(pairing, rhs)
        w = la.zero(dim)
        for ck, ak in zip(c, simple):
            w = la.add(w, la.scale(ck, ak))
        weights.append(w)
    return tuple(weights)


def build_root_system(family: str, rank: int) -> RootSystem:
    """Standard realization of the classical root system ``family_rank``.

    >>> rs = build_root_system("C", 2)
    >>> len(rs.roots), rs.simple_roots[1]
    (8, (Fraction(0, 1), Fraction(2, 1)))
    """
    family = str(family).upper()
    if family not in FAMILIES:
        raise UnsupportedRootSystemError(f"unsupported family {family!r} (classical A, B, C, D only)")
    if not isinstance(rank, int) or rank < 1:
        raise UnsupportedRootSystemError(f"rank must be a positive integer, got {rank!r}")
    if family == "D" and rank < 2:
        raise UnsupportedRootSystemError("family D needs rank >= 2")
    dim, pos, simple, highest = _positive_roots(family, rank)
    pos = sorted(pos, key=lambda v: tuple(-x for x in v))
    return RootSystem(
        family=family,
        rank=rank,
        ambient_dim=dim,
        positive_roots=tuple(pos),
        simple_roots=tuple(simple),
        highest_root=highest,
        fundamental_weights=_solve_weights(simple, dim),
    )


def fundamental_weights(rs: RootSystem) -> list[Vector]:
    """Fundamental weights, dual to the simple coroots.

    For ``A_n`` the representative in the root hyperplane is returned, i.e.
    weights are taken modulo the diagonal line.
    """
    return list(rs.fundamental_weights)


def fundamental_chamber(rs: RootSystem):
    """Closed fundamental chamber ``{v in E : (v, alpha) >= 0, alpha simple}``.

    The chamber lives in the span ``E`` of the roots, so for ``A_n`` it is
    cut down to the hyperplane ``sum x_i = 0`` and is strongly convex.
    """
    from .cones import cone_from_inequalities

    normals = list(rs.simple_roots)
    for e in la.nullspace(rs.simple_roots, rs.ambient_dim):
        normals += [e, la.neg(e)]
    return cone_from_inequalities(normals, rs.ambient_dim)


def hermitian_simple_roots(rs: RootSystem) -> tuple[int, ...]:
    """1-based indices of simple roots with coefficient 1 in the highest root.

    Deleting one of these from the simple roots gives a parabolic subset
    whose flag manifold is Hermitian symmetric.
    """
    coeffs = rs.simple_coefficients(rs.highest_root)
    return tuple(i + 1 for i, c in enumerate(coeffs) if c == 1)


def dominant_weight_for(rs: RootSystem, pi_p) -> Vector:
    """``sum of omega_i`` over simple indices *not* in ``pi_p``.

    Its stabilizer in the Weyl group is exactly the parabolic subgroup
    generated by ``pi_p``, which makes it a convenient coset label.
    """
    pi_p = set(pi_p)
    w = la.zero(rs.ambient_dim)
    for i, om in enumerate(rs.fundamental_weights, start=1):
        if i not in pi_p:
            w = la.add(w, om)
    return w
