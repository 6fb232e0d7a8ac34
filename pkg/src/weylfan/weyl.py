"""Weyl groups of classical root systems as integer matrix groups."""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import linalg as la
from .linalg import Matrix, Vector
from .rootsys import RootSystem, dominant_weight_for

DEFAULT_ELEMENT_CAP = 10**6
CAP_ENV = "WEYLFAN_ELEMENT_CAP"


class ElementCapExceededError(RuntimeError):
    pass


@dataclass(frozen=True)
class WeylElement:
    """An element acting on the ambient space by its integer matrix.

    Equality and hashing use the matrix only; ``word`` (1-based simple
    reflection indices, applied right to left) and ``length`` are
    bookkeeping.
    """

    matrix: Matrix
    word: tuple[int, ...] = field(default=(), compare=False)
    length: int = field(default=0, compare=False)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(la.matmul(self.matrix, other.matrix), self.word + other.word)

    def __call__(self, v) -> Vector:
        return act(self, v)

    @property
    def inverse(self) -> "WeylElement":
        return WeylElement(la.transpose(self.matrix), self.word[::-1], self.length)


@dataclass(frozen=True)
class WeylGroup:
    root_system: RootSystem
    generators: tuple[WeylElement, ...]
    elements: tuple[WeylElement, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self.elements)

    def __contains__(self, w) -> bool:
        return w in self._index

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {w: w for w in self.elements}
            object.__setattr__(self, "_idx", idx)
        return idx

    def lookup(self, matrix) -> WeylElement:
        """The stored element (with its reduced word) for a matrix."""
        return self._index[WeylElement(tuple(tuple(r) for r in matrix))]

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]


@dataclass(frozen=True)
class ParabolicSubgroup:
    pi_p: frozenset[int]
    elements: tuple[WeylElement, ...]
    coset_reps: tuple[WeylElement, ...]
    cosets: tuple[tuple[WeylElement, ...], ...] = field(compare=False, repr=False, default=())


def reflection(rs: RootSystem, alpha) -> WeylElement:
    """``s_alpha(v) = v - 2 (v, alpha) / (alpha, alpha) alpha`` as a matrix."""
    alpha = la.vector(alpha)
    if alpha not in set(rs.roots):
        raise ValueError(f"{alpha} is not a root of {rs.name}")
    n = rs.ambient_dim
    aa = la.dot(alpha, alpha)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            x = (1 if i == j else 0) - 2 * alpha[i] * alpha[j] / aa
            if x.denominator != 1:
                raise ArithmeticError("reflection matrix is not integral")
            row.append(int(x))
        rows.append(tuple(row))
    return WeylElement(tuple(rows))


def simple_reflections(rs: RootSystem) -> tuple[WeylElement, ...]:
    return tuple(
        WeylElement(reflection(rs, a).matrix, (i,), 1)
        for i, a in enumerate(rs.simple_roots, start=1)
    )


def act(w: WeylElement, v) -> Vector:
    """Exact image ``w . v``."""
    if len(v) != len(w.matrix):
        raise ValueError(f"dimension mismatch: element acts on Q^{len(w.matrix)}, got {len(v)}")
    return la.matvec(w.matrix, la.vector(v))


def element_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    return int(os.environ.get(CAP_ENV, DEFAULT_ELEMENT_CAP))


def _closure(identity_matrix, gens: list[WeylElement], cap: int) -> list[WeylElement]:
    # breadth-first over right multiplication: first word found is reduced
    start = WeylElement(identity_matrix, (), 0)
    seen = {start.matrix}
    order = [start]
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in gens:
            m = la.matmul(w.matrix, s.matrix)
            if m in seen:
                continue
            if len(seen) >= cap:
                raise ElementCapExceededError(f"group has more than {cap} elements")
            seen.add(m)
            x = WeylElement(m, w.word + s.word, w.length + 1)
            order.append(x)
            queue.append(x)
    return order


def generate_weyl_group(rs: RootSystem, cap: int | None = None) -> WeylGroup:
    """Enumerate ``W`` by closing the simple reflections.

    ``cap`` defaults to ``$WEYLFAN_ELEMENT_CAP`` or 10**6.
    """
    cap = element_cap(cap)
    gens = simple_reflections(rs)
    elements = _closure(la.identity(rs.ambient_dim), list(gens), cap)
    return WeylGroup(rs, gens, tuple(elements))


def inversion_count(rs: RootSystem, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    pos = set(rs.positive_roots)
    return sum(1 for b in rs.positive_roots if act(w, b) not in pos)


def _check_indices(rs: RootSystem, pi_p: Iterable[int]) -> frozenset[int]:
    pi_p = frozenset(int(i) for i in pi_p)
    bad = [i for i in pi_p if not 1 <= i <= rs.rank]
    if bad:
        raise ValueError(f"simple root indices {sorted(bad)} out of range 1..{rs.rank}")
    return pi_p


def parabolic_elements(rs: RootSystem, pi_p: Iterable[int], cap: int | None = None) -> tuple[WeylElement, ...]:
    """``W_P``: the subgroup generated by ``s_alpha`` for ``alpha`` in ``pi_p``."""
    pi_p = _check_indices(rs, pi_p)
    gens = [s for s in simple_reflections(rs) if s.word[0] in pi_p]
    return tuple(_closure(la.identity(rs.ambient_dim), gens, element_cap(cap)))


def parabolic(W: WeylGroup, pi_p: Iterable[int]) -> ParabolicSubgroup:
    """Parabolic subgroup ``W_P`` and minimal-length coset representatives.

    Cosets ``w W_P`` are labelled by ``w . lam`` where ``lam`` is a dominant
    weight with stabilizer exactly ``W_P``.  Representatives are ordered by
    length, then by reduced word.
    """
    rs = W.root_system
    pi_p = _check_indices(rs, pi_p)
    sub = tuple(W.lookup(u.matrix) for u in parabolic_elements(rs, pi_p))
    lam = dominant_weight_for(rs, pi_p)
    groups: dict[Vector, list[WeylElement]] = {}
    for w in W:
        groups.setdefault(act(w, lam), []).append(w)
    key = lambda w: (w.length, w.word)
    cosets = sorted((tuple(sorted(g, key=key)) for g in groups.values()), key=lambda c: key(c[0]))
    reps = tuple(c[0] for c in cosets)
    return ParabolicSubgroup(pi_p, sub, reps, tuple(cosets))


def orbit(rs: RootSystem, v) -> list[Vector]:
    """Weyl orbit of ``v`` by breadth-first search on vectors."""
    gens = simple_reflections(rs)
    v = la.vector(v)
    seen = {v}
    out = [v]
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = act(s, x)
            if y not in seen:
                seen.add(y)
                out.append(y)
                queue.append(y)
    return out
