"""Exact rational vector and matrix helpers.

Vectors are plain tuples of :class:`fractions.Fraction` (or ``int``, which
compares and hashes identically).  Nothing in this module touches floats.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

Vector = tuple  # tuple of Fraction / int
Matrix = tuple  # tuple of row tuples


def to_fraction(x) -> Fraction:
    """Parse an int, Fraction or a ``"p/q"`` string into a Fraction."""
    if isinstance(x, float):
        raise TypeError("floating point input is not accepted; pass a Fraction or 'p/q'")
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def vector(coords: Iterable) -> Vector:
    return tuple(to_fraction(c) for c in coords)


def zero(n: int) -> Vector:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), 0)


def add(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def neg(v: Sequence) -> Vector:
    return tuple(-a for a in v)


def is_zero(v: Sequence) -> bool:
    return all(a == 0 for a in v)


def primitive(v: Sequence) -> tuple[int, ...]:
    """Smallest integer vector on the ray through ``v`` (same direction).

    The zero vector maps to the zero integer vector.
    """
    fr = [Fraction(a) for a in v]
    den = reduce(lambda a, b: a * b // gcd(a, b), (f.denominator for f in fr), 1)
    ints = [int(f * den) for f in fr]
    g = reduce(gcd, (abs(a) for a in ints), 0)
    if g == 0:
        return tuple(ints)
    return tuple(a // g for a in ints)


def matvec(m: Sequence[Sequence], v: Sequence) -> Vector:
    return tuple(dot(row, v) for row in m)


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in cols) for row in a)


def transpose(m: Sequence[Sequence]) -> Matrix:
    return tuple(zip(*m))


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def rref(rows: Iterable[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns ``(nonzero rows, pivot columns)``."""
    m = [[Fraction(a) for a in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [a * inv for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Iterable[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], n: int) -> list[Vector]:
    """Basis of ``{x : row . x = 0 for every row}`` in Q^n."""
    red, pivots = rref(rows)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> Vector | None:
    """Unique solution of ``a x = b`` or None if inconsistent.

    Raises ``ValueError`` when the system is consistent but underdetermined.
    """
    n = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    if len(pivots) < n:
        raise ValueError("singular system")
    x = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return tuple(x)


def canonical_basis(vectors: Iterable[Sequence], n: int) -> list[tuple[int, ...]]:
    """Canonical primitive integer basis of ``span(vectors)``.

    Rows of the reduced echelon form, each scaled to a primitive integer
    vector with positive pivot; equal subspaces give equal bases.
    """
    red, _ = rref(vectors)
    return [primitive(r) for r in red]


def orthogonal_basis(vectors: Iterable[Sequence]) -> list[Vector]:
    """Gram-Schmidt without normalisation (stays rational)."""
    out: list[Vector] = []
    for v in vectors:
        w = tuple(Fraction(a) for a in v)
        for u in out:
            w = sub(w, scale(dot(w, u) / dot(u, u), u))
        if not is_zero(w):
            out.append(w)
    return out


def project_out(v: Sequence, ortho: Sequence[Sequence]) -> Vector:
    """Orthogonal projection of ``v`` onto the complement of ``span(ortho)``.

    ``ortho`` must already be pairwise orthogonal.
    """
    w = tuple(Fraction(a) for a in v)
    for u in ortho:
        w = sub(w, scale(dot(w, u) / dot(u, u), u))
    return w


def fraction_str(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"
