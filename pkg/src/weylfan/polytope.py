"""Exact convex hulls of finite rational point sets.

The hull of ``P`` is read off the cone over ``{(1, p) : p in P}``: its
extreme rays are the vertices and its facet normals ``(c, a)`` give the
inequalities ``a.x + c >= 0``.  Lower-dimensional hulls need no special
case because the cone machinery carries the affine equations along.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg as la
from .cones import cone_from_generators
from .linalg import Vector


@dataclass(frozen=True)
class Polytope:
    """Vertices plus facet inequalities ``normal . x <= offset``.

    ``equations`` holds ``normal . x == offset`` for the affine hull when
    the polytope is not full-dimensional.
    """

    ambient_dim: int
    vertices: tuple[Vector, ...]
    facets: tuple[tuple[tuple[int, ...], Fraction], ...]
    equations: tuple[tuple[tuple[int, ...], Fraction], ...] = ()

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.equations)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polytope):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.vertices))

    def to_json(self) -> dict:
        return {"vertices": [[la.fraction_str(x) for x in v] for v in self.vertices]}


def _inequality(normal: Sequence[int]) -> tuple[tuple[int, ...], Fraction]:
    # cone normal (c, a) means a.x + c >= 0, i.e. (-a).x <= c
    c, a = normal[0], [-x for x in normal[1:]]
    g = la.primitive(a)
    if all(x == 0 for x in a):
        return tuple(g), Fraction(c)
    k = next(Fraction(x) / y for x, y in zip(a, g) if y)
    return tuple(g), Fraction(c) / k


def convex_hull(points: Iterable[Sequence]) -> Polytope:
    """Canonical hull polytope; interior and repeated points are dropped."""
    pts = [la.vector(p) for p in points]
    if not pts:
        raise ValueError("convex hull of an empty point set")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise ValueError("points of mixed dimension")
    cone = cone_from_generators([(Fraction(1),) + p for p in pts], n + 1)
    if cone.lineality:
        raise AssertionError("homogenized point cone has lineality")
    verts = sorted(tuple(Fraction(x) / r[0] for x in r[1:]) for r in cone.pointed_rays)
    # a single vertex has no facets; the cone over it still has one
    facets = sorted({_inequality(f) for f in cone.pointed_facets}) if len(verts) > 1 else []
    eqs = []
    for e in cone.equations:
        normal, off = _inequality(e)
        eqs.append((normal, off))
    return Polytope(n, tuple(verts), tuple(facets), tuple(sorted(eqs)))


def polytopes_equal(p: Polytope, q: Polytope) -> bool:
    if p.ambient_dim != q.ambient_dim:
        raise ValueError("polytopes in different dimensions")
    return p.vertices == q.vertices


def contains(p: Polytope, x: Sequence) -> bool:
    """Exact membership test against facets and the affine hull."""
    x = la.vector(x)
    if len(x) != p.ambient_dim:
        raise ValueError("dimension mismatch")
    return all(la.dot(a, x) <= b for a, b in p.facets) and all(
        la.dot(a, x) == b for a, b in p.equations
    )


def polytope_from_json(data: dict | str) -> Polytope:
    if isinstance(data, str):
        data = json.loads(data)
    if set(data) != {"vertices"}:
        raise ValueError("polytope JSON must have exactly the field 'vertices'")
    return convex_hull([[la.to_fraction(x) for x in v] for v in data["vertices"]])
