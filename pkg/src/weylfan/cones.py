"""Rational polyhedral cones in exact arithmetic.

A :class:`Cone` always carries both descriptions in canonical form:

* ``rays``: primitive integer generators.  The pointed part is given by its
  extreme rays projected onto the orthogonal complement of the lineality
  space; the lineality space contributes ``+b`` and ``-b`` for each vector
  ``b`` of its reduced-echelon basis.
* ``facets``: primitive integer normals ``m`` with ``<m, x> >= 0`` on the
  cone, built the same way from the dual side.

With this convention the dual cone simply swaps the two lists, and cone
equality is plain tuple equality.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from functools import reduce
from typing import Iterable, Sequence

from . import linalg as la


class ConeError(ValueError):
    pass


class NotStronglyConvexError(ConeError):
    """Raised by operations that need a pointed cone."""


class NonConvexUnionError(ConeError):
    """The chamber translates do not tile a convex cone."""


@dataclass(frozen=True)
class Cone:
    ambient_dim: int
    rays: tuple[tuple[int, ...], ...]
    facets: tuple[tuple[int, ...], ...]

    @property
    def lineality(self) -> tuple[tuple[int, ...], ...]:
        """Canonical basis of the lineality space (the ``+b`` halves)."""
        rs = set(self.rays)
        return tuple(r for r in self.rays if tuple(-a for a in r) in rs and r > tuple(-a for a in r))

    @property
    def pointed_rays(self) -> tuple[tuple[int, ...], ...]:
        rs = set(self.rays)
        return tuple(r for r in self.rays if tuple(-a for a in r) not in rs)

    @property
    def pointed_facets(self) -> tuple[tuple[int, ...], ...]:
        fs = set(self.facets)
        return tuple(f for f in self.facets if tuple(-a for a in f) not in fs)

    @property
    def equations(self) -> tuple[tuple[int, ...], ...]:
        """Canonical basis of the orthogonal complement of the linear span."""
        fs = set(self.facets)
        return tuple(f for f in self.facets if tuple(-a for a in f) in fs and f > tuple(-a for a in f))

    @property
    def dim(self) -> int:
        return la.rank(self.rays) if self.rays else 0

    def __contains__(self, x) -> bool:
        return all(la.dot(f, x) >= 0 for f in self.facets)

    def contains_cone(self, other: "Cone") -> bool:
        return all(r in self for r in other.rays)

    def to_json(self) -> dict:
        return {"rays": [list(r) for r in self.rays], "facets": [list(f) for f in self.facets]}

    def __repr__(self) -> str:
        return f"Cone(rays={[list(r) for r in self.rays]})"


# -- double description core -------------------------------------------------

def _int_rows(vectors: Iterable[Sequence]) -> list[tuple[int, ...]]:
    return [la.primitive(v) for v in vectors if not la.is_zero(v)]


def _idot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def _iprim(v: list[int]) -> tuple[int, ...]:
    g = reduce(gcd, (abs(a) for a in v), 0)
    return tuple(a // g for a in v) if g > 1 else tuple(v)


def _double_description(ineqs: Sequence[tuple[int, ...]], n: int):
    """Generators of ``{y in Q^n : a.y >= 0 for a in ineqs}``.

    Returns ``(lineality_basis, extreme_rays)``, both integer vectors; the
    rays are extreme modulo the lineality space.  Incremental Motzkin
    double description with the combinatorial adjacency test.
    """
    lin = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    rays: list[tuple[int, ...]] = []
    tight: list[int] = []  # bitmask of processed inequalities tight at each ray
    done = 0
    for k, a in enumerate(ineqs):
        bit = 1 << k
        vals = [_idot(a, l) for l in lin]
        piv = next((i for i, v in enumerate(vals) if v != 0), None)
        if piv is not None:
            l0 = lin[piv]
            c0 = vals[piv]
            if c0 < 0:
                l0 = tuple(-x for x in l0)
                c0 = -c0
            new_lin = []
            for i, l in enumerate(lin):
                if i == piv:
                    continue
                v = vals[i]
                new_lin.append(_iprim([c0 * x - v * y for x, y in zip(l, l0)]) if v else l)
            new_rays = []
            for r in rays:
                v = _idot(a, r)
                new_rays.append(_iprim([c0 * x - v * y for x, y in zip(r, l0)]) if v else r)
            lin = new_lin
            rays = new_rays + [l0]
            tight = [t | bit for t in tight] + [done]
        else:
            vals = [_idot(a, r) for r in rays]
            pos = [i for i, v in enumerate(vals) if v > 0]
            neg = [i for i, v in enumerate(vals) if v < 0]
            zer = [i for i, v in enumerate(vals) if v == 0]
            need = n - len(lin) - 2
            new_rays = [rays[i] for i in pos] + [rays[i] for i in zer]
            new_tight = [tight[i] for i in pos] + [tight[i] | bit for i in zer]
            for p in pos:
                for q in neg:
                    common = tight[p] & tight[q]
                    if bin(common).count("1") < need:
                        continue
                    if any(
                        i != p and i != q and (tight[i] & common) == common
                        for i in range(len(rays))
                    ):
                        continue
                    vp, vq = vals[p], -vals[q]
                    new_rays.append(_iprim([vp * y + vq * x for x, y in zip(rays[p], rays[q])]))
                    new_tight.append(common | bit)
            rays, tight = new_rays, new_tight
        done |= bit
    return lin, rays


def _assemble(n, rays, lin, frays, eqs) -> Cone:
    lin_basis = la.canonical_basis(lin, n)
    lin_ortho = la.orthogonal_basis(lin_basis)
    eq_basis = la.canonical_basis(eqs, n)
    eq_ortho = la.orthogonal_basis(eq_basis)
    out_rays = {la.primitive(la.project_out(r, lin_ortho)) for r in rays}
    out_facets = {la.primitive(la.project_out(f, eq_ortho)) for f in frays}
    for b in lin_basis:
        out_rays.update((b, tuple(-x for x in b)))
    for b in eq_basis:
        out_facets.update((b, tuple(-x for x in b)))
    out_rays.discard((0,) * n)
    out_facets.discard((0,) * n)
    return Cone(n, tuple(sorted(out_rays)), tuple(sorted(out_facets)))


def _infer_dim(vectors, dim):
    vectors = list(vectors)
    if dim is None:
        if not vectors:
            raise ConeError("ambient dimension needed for an empty generator list")
        dim = len(vectors[0])
    if any(len(v) != dim for v in vectors):
        raise ConeError("vectors of mixed dimension")
    return vectors, dim


def cone_from_generators(vectors: Iterable[Sequence], dim: int | None = None) -> Cone:
    """Canonical cone ``R>=0 v_1 + ... + R>=0 v_s``; empty input gives ``{0}``."""
    vectors, n = _infer_dim(vectors, dim)
    gens = _int_rows(vectors)
    eqs, frays = _double_description(gens, n)
    ineqs = list(frays) + list(eqs) + [tuple(-x for x in e) for e in eqs]
    lin, rays = _double_description(ineqs, n)
    return _assemble(n, rays, lin, frays, eqs)


def cone_from_inequalities(normals: Iterable[Sequence], dim: int | None = None) -> Cone:
    """Canonical cone ``{x : <m, x> >= 0 for every m in normals}``."""
    normals, n = _infer_dim(normals, dim)
    ineqs = _int_rows(normals)
    lin, rays = _double_description(ineqs, n)
    gens = list(rays) + list(lin) + [tuple(-x for x in l) for l in lin]
    eqs, frays = _double_description(gens, n)
    return _assemble(n, rays, lin, frays, eqs)


def zero_cone(n: int) -> Cone:
    return cone_from_generators([], n)


def dual_cone(sigma: Cone) -> Cone:
    """``{m : <m, n> >= 0 for all n in sigma}``, recomputed from the facet normals."""
    return cone_from_generators(sigma.facets, sigma.ambient_dim)


def is_strongly_convex(sigma: Cone) -> bool:
    if not sigma.facets:
        return sigma.ambient_dim == 0
    return la.rank(sigma.facets) == sigma.ambient_dim


def intersect(sigma: Cone, other: Cone) -> Cone:
    if sigma.ambient_dim != other.ambient_dim:
        raise ConeError("cones live in different dimensions")
    return cone_from_inequalities(sigma.facets + other.facets, sigma.ambient_dim)


def _face_rays(sigma: Cone, m) -> list[tuple[int, ...]]:
    return [r for r in sigma.rays if la.dot(m, r) == 0]


def face_by_normal(sigma: Cone, m: Sequence) -> Cone:
    """``sigma ∩ m^⊥`` for ``m`` in the dual cone."""
    if any(la.dot(m, r) < 0 for r in sigma.rays):
        raise ConeError("normal is not in the dual cone")
    return cone_from_generators(_face_rays(sigma, m), sigma.ambient_dim)


def faces(sigma: Cone) -> set[Cone]:
    """All faces of a strongly convex cone, including ``{0}`` and ``sigma``.

    Each face is ``sigma ∩ m^⊥`` where ``m`` is a sum of facet normals.
    """
    if not is_strongly_convex(sigma):
        raise NotStronglyConvexError("face lattice of a cone with lineality is not supported")
    rays = sigma.rays
    full = frozenset(range(len(rays)))
    tight = [frozenset(i for i, r in enumerate(rays) if la.dot(f, r) == 0) for f in sigma.facets]
    seen = {full}
    stack = [full]
    while stack:
        cur = stack.pop()
        for t in tight:
            nxt = cur & t
            if nxt != cur and nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return {cone_from_generators([rays[i] for i in s], sigma.ambient_dim) for s in seen}


def facets_of(sigma: Cone) -> list[Cone]:
    """Codimension-one faces, one per pointed facet normal."""
    return [
        cone_from_generators(_face_rays(sigma, f), sigma.ambient_dim)
        for f in sigma.pointed_facets
    ]


def is_face_of(tau: Cone, sigma: Cone) -> bool:
    """True iff ``tau = sigma ∩ m^⊥`` for some ``m`` in the dual of ``sigma``."""
    if tau.ambient_dim != sigma.ambient_dim or not sigma.contains_cone(tau):
        return False
    supporting = [f for f in sigma.facets if all(la.dot(f, r) == 0 for r in tau.rays)]
    m = [sum(col) for col in zip(*supporting)] if supporting else [0] * sigma.ambient_dim
    return face_by_normal(sigma, m) == tau


def _is_orthogonal_int(g) -> bool:
    n = len(g)
    return all(isinstance(a, int) for row in g for a in row) and la.matmul(la.transpose(g), g) == la.identity(n)


def apply_transform(g: Sequence[Sequence], sigma: Cone) -> Cone:
    """Image ``g . sigma`` for an invertible rational matrix ``g``."""
    n = sigma.ambient_dim
    if len(g) != n or any(len(row) != n for row in g):
        raise ConeError("matrix shape does not match the cone")
    if la.rank(g) < n:
        raise ConeError("singular matrix")
    if _is_orthogonal_int(g):
        # orthogonal integer maps preserve primitivity and commute with the projections
        rays = [la.matvec(g, r) for r in sigma.pointed_rays]
        lin = [la.matvec(g, r) for r in sigma.lineality]
        frays = [la.matvec(g, f) for f in sigma.pointed_facets]
        eqs = [la.matvec(g, f) for f in sigma.equations]
        return _assemble(n, rays, lin, frays, eqs)
    return cone_from_generators([la.matvec(g, r) for r in sigma.rays], n)


# -- union of chamber translates ----------------------------------------------

def _separated(a: Cone, b: Cone) -> bool:
    # some facet hyperplane of a has b entirely on its closed negative side
    return any(all(la.dot(f, r) <= 0 for r in b.rays) for f in a.pointed_facets)


def union_of_chamber_translates(parabolic_subgroup, chamber: Cone) -> Cone:
    """The cone ``U = ⋃_{z in W_P} z.D``, with a tiling certificate.

    ``parabolic_subgroup`` is anything with an ``elements`` attribute whose
    members carry an integer ``matrix``.  The candidate is the cone spanned
    by all translates; it is accepted only when the translates have
    pairwise disjoint relative interiors and every codimension-one face of
    a translate is either shared with exactly one other translate or lies
    in the boundary of the candidate.  Otherwise the union is not convex
    and :class:`NonConvexUnionError` is raised.
    """
    elements = list(parabolic_subgroup.elements)
    translates = list({apply_transform(z.matrix, chamber) for z in elements})
    d = chamber.dim
    if len(translates) != len(elements):
        raise NonConvexUnionError("distinct group elements give the same translate")
    if any(t.dim != d for t in translates):
        raise NonConvexUnionError("translate of different dimension")
    candidate = cone_from_generators([r for t in translates for r in t.rays], chamber.ambient_dim)
    if candidate.dim != d:
        raise NonConvexUnionError("translates do not span a common subspace")

    for a, b in itertools.combinations(translates, 2):
        if _separated(a, b) or _separated(b, a):
            continue
        if intersect(a, b).dim >= d:
            raise NonConvexUnionError(f"translates {a} and {b} overlap")

    shared: dict[frozenset, int] = {}
    for t in translates:
        for f in t.pointed_facets:
            key = frozenset(r for r in t.rays if la.dot(f, r) == 0)
            shared[key] = shared.get(key, 0) + 1
    for key, count in shared.items():
        if count > 2:
            raise NonConvexUnionError(f"face {sorted(key)} shared by {count} translates")
        if count == 1:
            on_boundary = any(
                all(la.dot(f, r) == 0 for r in key) for f in candidate.pointed_facets
            )
            if not on_boundary:
                raise NonConvexUnionError(
                    f"unpaired face {sorted(key)} lies inside the spanned cone"
                )
    return candidate


# -- JSON ---------------------------------------------------------------------

def cone_from_json(data: dict | str, dim: int | None = None) -> Cone:
    """Read ``{"rays": [...], "facets": [...]}``; the facets must agree with the rays."""
    if isinstance(data, str):
        data = json.loads(data)
    if set(data) - {"rays", "facets"}:
        raise ConeError(f"unknown fields {sorted(set(data) - {'rays', 'facets'})}")
    rays = [tuple(int(a) for a in r) for r in data.get("rays", [])]
    cone = cone_from_generators(rays, dim)
    if "facets" in data:
        facets = tuple(sorted(tuple(int(a) for a in f) for f in data["facets"]))
        if facets != cone.facets:
            raise ConeError("facets do not match the rays")
    return cone
