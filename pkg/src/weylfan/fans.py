"""Fans: face-closed families of strongly convex rational cones."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import linalg as la
from .cones import (
    Cone,
    NotStronglyConvexError,
    apply_transform,
    cone_from_generators,
    faces,
    intersect,
    is_face_of,
    is_strongly_convex,
    union_of_chamber_translates,
    zero_cone,
)
from .rootsys import RootSystem, fundamental_chamber
from .weyl import generate_weyl_group, parabolic

AXIOMS = ("rational", "strongly_convex", "face_closed", "intersections")
MAX_SIGNED_PERM_DIM = 6


class FanError(ValueError):
    pass


class FanAxiomError(FanError):
    """Two cones overlap without meeting in a common face."""

    def __init__(self, message: str, pair: tuple[Cone, Cone]):
        super().__init__(message)
        self.pair = pair


@dataclass(frozen=True)
class Fan:
    ambient_dim: int
    cones: frozenset[Cone]
    maximal_cones: tuple[Cone, ...] = field(compare=False)

    @property
    def rays(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(c.rays[0] for c in self.cones if c.dim == 1 and len(c.rays) == 1))

    def cones_of_dim(self, d: int) -> list[Cone]:
        return sorted((c for c in self.cones if c.dim == d), key=lambda c: c.rays)

    def __len__(self) -> int:
        return len(self.cones)


def _maximal(cones: Iterable[Cone]) -> tuple[Cone, ...]:
    # maximal means "not a face of another member"; a cone sitting inside
    # another without being a face of it stays, so the overlap is checked
    cones = list(cones)

    def covered(c: Cone) -> bool:
        return any(d.dim > c.dim and d.contains_cone(c) and is_face_of(c, d) for d in cones)

    out = [c for c in cones if not covered(c)]
    return tuple(sorted(out, key=lambda c: (c.rays, c.facets)))


def make_fan(cones: Iterable[Cone], ambient_dim: int) -> Fan:
    """Wrap a cone family as given, without closing or checking it."""
    cones = frozenset(cones)
    if any(c.ambient_dim != ambient_dim for c in cones):
        raise FanError("cones of mixed ambient dimension")
    return Fan(ambient_dim, cones, _maximal(cones))


@dataclass
class AxiomResult:
    passed: bool = True
    witnesses: list[str] = field(default_factory=list)

    def fail(self, witness: str) -> None:
        self.passed = False
        self.witnesses.append(witness)


@dataclass
class FanReport:
    axioms: dict[str, AxiomResult]
    diagnostics: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(a.passed for a in self.axioms.values())

    def to_json(self) -> dict:
        return {
            "valid": self.ok,
            "axioms": {k: {"passed": v.passed, "witnesses": v.witnesses} for k, v in self.axioms.items()},
            "diagnostics": list(self.diagnostics),
        }


def _fmt(c: Cone) -> str:
    return json.dumps([list(r) for r in c.rays])


def _pair_verdict(a: Cone, b: Cone) -> str | None:
    meet = intersect(a, b)
    if is_face_of(meet, a) and is_face_of(meet, b):
        return None
    return f"{_fmt(a)} ∩ {_fmt(b)} = {_fmt(meet)} is not a face of both"


def validate(fan: Fan, exhaustive: bool = False) -> FanReport:
    """Check the four fan axioms; failures are reported, never raised.

    Intersections are checked on pairs of maximal cones, which suffices
    once the family is face closed; ``exhaustive=True`` checks every pair.
    """
    report = FanReport({name: AxiomResult() for name in AXIOMS})
    rational, convex, closed, meets = (report.axioms[k] for k in AXIOMS)
    ordered = sorted(fan.cones, key=lambda c: (c.dim, c.rays))
    for c in ordered:
        if not all(isinstance(x, int) for r in c.rays + c.facets for x in r):
            rational.fail(_fmt(c))
        if not is_strongly_convex(c):
            convex.fail(f"{_fmt(c)} contains the line through {list(c.lineality[0])}")
            continue
        for f in sorted(faces(c), key=lambda c: (c.dim, c.rays)):
            if f not in fan.cones:
                closed.fail(f"face {_fmt(f)} of {_fmt(c)} is missing")
    pool = ordered if exhaustive else list(fan.maximal_cones)
    for a, b in itertools.combinations(pool, 2):
        verdict = _pair_verdict(a, b)
        if verdict:
            meets.fail(verdict)
    unpaired = coverage_gaps(fan)
    if unpaired:
        report.diagnostics.append(
            f"fan is not complete: {len(unpaired)} codimension-one faces bound only one maximal cone"
        )
        report.diagnostics.extend(f"unpaired face {_fmt(f)}" for f in unpaired)
    return report


def coverage_gaps(fan: Fan) -> list[Cone]:
    """Codimension-one faces of maximal cones that are not shared by two of them.

    Empty exactly when the fan's support is the whole space (given that
    every maximal cone is full-dimensional).
    """
    n = fan.ambient_dim
    if any(c.dim != n for c in fan.maximal_cones):
        return [c for c in fan.maximal_cones if c.dim != n]
    count: dict[Cone, int] = {}
    for c in fan.maximal_cones:
        for f in c.pointed_facets:
            face = cone_from_generators([r for r in c.rays if la.dot(f, r) == 0], n)
            count[face] = count.get(face, 0) + 1
    return sorted((f for f, k in count.items() if k == 1), key=lambda c: c.rays)


def fan_from_maximal_cones(cones: Iterable[Cone], ambient_dim: int | None = None) -> Fan:
    """Close a cone family under faces and check pairwise intersections.

    Raises :class:`FanAxiomError` naming the first offending pair.
    """
    cones = list(cones)
    if ambient_dim is None:
        if not cones:
            raise FanError("ambient dimension needed for an empty fan")
        ambient_dim = cones[0].ambient_dim
    closure: set[Cone] = {zero_cone(ambient_dim)}
    for c in cones:
        if c.ambient_dim != ambient_dim:
            raise FanError("cones of mixed ambient dimension")
        if not is_strongly_convex(c):
            raise NotStronglyConvexError(f"{_fmt(c)} is not strongly convex")
        closure |= faces(c)
    fan = make_fan(closure, ambient_dim)
    for a, b in itertools.combinations(fan.maximal_cones, 2):
        verdict = _pair_verdict(a, b)
        if verdict:
            raise FanAxiomError(verdict, (a, b))
    return fan


def orthant(signs: Sequence[int]) -> Cone:
    n = len(signs)
    return cone_from_generators(
        [tuple(s if j == i else 0 for j in range(n)) for i, s in enumerate(signs)], n
    )


def product_p1_fan(n: int) -> Fan:
    """Fan of ``(P^1)^n``: the ``2^n`` closed orthants and their faces."""
    if n < 1:
        raise FanError("n must be at least 1")
    return fan_from_maximal_cones(
        [orthant(eps) for eps in itertools.product((1, -1), repeat=n)], n
    )


def dabrowski_fan(rs: RootSystem, pi_p: Iterable[int], W=None) -> Fan:
    """Fan with maximal cones ``-w . U`` for ``w`` in ``W^P``.

    ``U`` is the union of the chamber translates under ``W_P``.  The
    result is face-closed and validated.
    """
    if W is None:
        W = generate_weyl_group(rs)
    P = parabolic(W, pi_p)
    union = union_of_chamber_translates(P, fundamental_chamber(rs))
    minus = lambda m: tuple(tuple(-x for x in row) for row in m)
    maximal = [apply_transform(minus(w.matrix), union) for w in P.coset_reps]
    if len(set(maximal)) != len(maximal):
        raise FanError("cones -w.U are not pairwise distinct")
    fan = fan_from_maximal_cones(maximal, rs.ambient_dim)
    report = validate(fan)
    if not report.ok:
        raise FanError(f"constructed fan fails validation: {report.to_json()['axioms']}")
    return fan


def fans_equal(a: Fan, b: Fan) -> bool:
    if a.ambient_dim != b.ambient_dim:
        raise FanError("fans in different dimensions")
    return a.cones == b.cones


def transform_fan(g, fan: Fan) -> Fan:
    return make_fan((apply_transform(g, c) for c in fan.cones), fan.ambient_dim)


def signed_permutations(n: int):
    """All ``2^n n!`` signed permutation matrices, identity first."""
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            yield tuple(
                tuple(signs[i] if j == perm[i] else 0 for j in range(n)) for i in range(n)
            )


def fan_isomorphic_signed_perm(a: Fan, b: Fan):
    """A signed permutation ``g`` with ``g . a == b``, or None."""
    n = a.ambient_dim
    if b.ambient_dim != n:
        raise FanError("fans in different dimensions")
    if n > MAX_SIGNED_PERM_DIM:
        raise FanError(f"signed permutation search limited to dimension {MAX_SIGNED_PERM_DIM}")
    if len(a.cones) != len(b.cones) or len(a.maximal_cones) != len(b.maximal_cones):
        return None
    target = set(b.maximal_cones)
    for g in signed_permutations(n):
        if all(apply_transform(g, c) in target for c in a.maximal_cones):
            return g
    return None


# -- file format ----------------------------------------------------------------

FAN_FIELDS = {"dim", "rays", "maximal_cones"}


def fan_to_json(fan: Fan) -> dict:
    rays = sorted({r for c in fan.maximal_cones for r in c.rays})
    index = {r: i for i, r in enumerate(rays)}
    maximal = sorted(sorted(index[r] for r in c.rays) for c in fan.maximal_cones)
    return {"dim": fan.ambient_dim, "rays": [list(r) for r in rays], "maximal_cones": maximal}


def dumps_fan(fan: Fan) -> str:
    return json.dumps(fan_to_json(fan), sort_keys=True)


def fan_from_json(data: dict | str, check: bool = True) -> Fan:
    """Read the fan file format; unknown fields and malformed data are rejected.

    With ``check=False`` the face closure is built but overlapping cones do
    not raise, so :func:`validate` can report them.
    """
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise FanError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FanError("fan file must be a JSON object")
    unknown = set(data) - FAN_FIELDS
    if unknown:
        raise FanError(f"unknown fields {sorted(unknown)}")
    missing = FAN_FIELDS - set(data)
    if missing:
        raise FanError(f"missing fields {sorted(missing)}")
    n = data["dim"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FanError("'dim' must be a positive integer")
    rays = []
    for r in data["rays"]:
        if not isinstance(r, list) or len(r) != n or not all(isinstance(x, int) and not isinstance(x, bool) for x in r):
            raise FanError(f"ray {r!r} is not a length-{n} integer list")
        t = tuple(r)
        if la.primitive(t) != t or la.is_zero(t):
            raise FanError(f"ray {r!r} is not primitive")
        rays.append(t)
    if rays != sorted(rays) or len(set(rays)) != len(rays):
        raise FanError("rays must be distinct and lexicographically sorted")
    cones = []
    for idx in data["maximal_cones"]:
        if not isinstance(idx, list) or not all(isinstance(i, int) and 0 <= i < len(rays) for i in idx):
            raise FanError(f"cone {idx!r} has invalid ray indices")
        cones.append(cone_from_generators([rays[i] for i in idx], n))
    if check:
        return fan_from_maximal_cones(cones, n)
    closure: set[Cone] = {zero_cone(n)}
    for c in cones:
        closure |= faces(c) if is_strongly_convex(c) else {c}
    return make_fan(closure, n)


def load_fan(path, check: bool = True) -> Fan:
    with open(path) as fh:
        return fan_from_json(fh.read(), check=check)
