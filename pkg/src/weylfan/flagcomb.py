"""Weyl-combinatorial shadow of a flag manifold ``G/P``.

Torus-fixed points of ``G/P`` are the cosets ``W/W_P``, each represented by
its minimal-length element.  Momentum images are convex hulls of the
images of a caller-supplied weight under those representatives.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import linalg as la
from .linalg import Vector
from .polytope import Polytope, convex_hull, polytopes_equal
from .rootsys import RootSystem, dominant_weight_for
from .weyl import ParabolicSubgroup, WeylElement, act, generate_weyl_group, orbit, parabolic


@dataclass(frozen=True)
class FlagDatum:
    rs: RootSystem
    pi_p: frozenset[int]
    parabolic: ParabolicSubgroup
    delta: Vector

    @property
    def fixed_points(self) -> tuple[WeylElement, ...]:
        return self.parabolic.coset_reps

    def __len__(self) -> int:
        return len(self.fixed_points)


def flag_datum(rs: RootSystem, pi_p: Iterable[int], W=None) -> FlagDatum:
    if W is None:
        W = generate_weyl_group(rs)
    P = parabolic(W, pi_p)
    delta = la.zero(rs.ambient_dim)
    for i in sorted(P.pi_p):
        delta = la.add(delta, rs.fundamental_weights[i - 1])
    return FlagDatum(rs, P.pi_p, P, delta)


def euler_characteristic(rs: RootSystem, pi_p: Iterable[int]) -> int:
    """``|W / W_P|``, the number of torus-fixed points.

    Counted as the Weyl orbit of a dominant weight whose stabilizer is
    ``W_P``, so the whole group is never enumerated.
    """
    pi_p = set(pi_p)
    if not all(1 <= i <= rs.rank for i in pi_p):
        raise ValueError("simple root index out of range")
    return len(orbit(rs, dominant_weight_for(rs, pi_p)))


def plucker_weight(fd: FlagDatum) -> Vector:
    """``delta = sum of omega_i over pi_P``, taken literally."""
    return fd.delta


def nondegenerate_stratum_cells(fd: FlagDatum) -> list[WeylElement]:
    """Representatives ``w`` of ``W/W_P`` indexing the translated big cells ``w B^- P``."""
    return list(fd.fixed_points)


def _subset(fd: FlagDatum, subset: Iterable[int]) -> list[int]:
    idx = sorted(set(int(i) for i in subset))
    if not idx:
        raise ValueError("fixed-point subset must be non-empty")
    if idx[0] < 0 or idx[-1] >= len(fd.fixed_points):
        raise IndexError(f"fixed-point indices must lie in 0..{len(fd.fixed_points) - 1}")
    return idx


def momentum_points(fd: FlagDatum, subset: Iterable[int], weight: Sequence) -> list[Vector]:
    weight = la.vector(weight)
    return [act(fd.fixed_points[i], weight) for i in _subset(fd, subset)]


def momentum_image(fd: FlagDatum, subset: Iterable[int], weight: Sequence) -> Polytope:
    """``conv{w_r . weight : r in subset}`` over coset representatives ``w_r``."""
    return convex_hull(momentum_points(fd, subset, weight))


def gelfand_serganova_equal(fd: FlagDatum, s1: Iterable[int], s2: Iterable[int], weight: Sequence) -> bool:
    """Whether two fixed-point subsets have the same momentum polytope."""
    return polytopes_equal(momentum_image(fd, s1, weight), momentum_image(fd, s2, weight))
