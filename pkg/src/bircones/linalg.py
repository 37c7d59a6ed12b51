"""Exact rational vectors and matrices.

Vectors are plain tuples of :class:`fractions.Fraction`; matrices are tuples of
such rows.  Everything here is exact: no floating point ever enters.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence, Tuple, Union

Number = Union[int, Fraction]
RationalVector = Tuple[Fraction, ...]
RationalMatrix = Tuple[RationalVector, ...]
IntVector = Tuple[int, ...]


class DimensionError(ValueError):
    """Raised when operands have incompatible shapes."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {x!r} to an exact rational (floats are rejected)")


def vector(entries: Iterable) -> RationalVector:
    """Build a rational vector from ints, Fractions or ``"p/q"`` strings."""
    return tuple(_as_fraction(x) for x in entries)


def matrix(rows: Iterable[Iterable]) -> RationalMatrix:
    m = tuple(vector(r) for r in rows)
    if m and len({len(r) for r in m}) != 1:
        raise DimensionError("matrix rows have different lengths")
    return m


def dot(u: Sequence[Number], v: Sequence[Number]):
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), 0)


def add(u: Sequence[Number], v: Sequence[Number]) -> tuple:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Number], v: Sequence[Number]) -> tuple:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def scale(c: Number, v: Sequence[Number]) -> tuple:
    return tuple(c * a for a in v)


def is_zero(v: Sequence[Number]) -> bool:
    return all(a == 0 for a in v)


def primitive(v: Sequence[Number]) -> IntVector:
    """Return the primitive integer vector on the ray spanned by ``v``.

    The result has coprime integer entries and its first nonzero entry is
    positive, so two vectors spanning the same *line* map to the same output.
    Use :func:`primitive_ray` when the direction of the ray matters.

    >>> primitive((2, -4, 6))
    (1, -2, 3)
    >>> primitive((Fraction(-1, 2), Fraction(1, 2)))
    (1, -1)
    """
    ray = primitive_ray(v)
    first = next(a for a in ray if a != 0)
    return ray if first > 0 else tuple(-a for a in ray)


def primitive_ray(v: Sequence[Number]) -> IntVector:
    """Smallest integer vector that is a *positive* multiple of ``v``."""
    fr = [_as_fraction(a) for a in v]
    if all(a == 0 for a in fr):
        raise ValueError("zero vector has no primitive representative")
    den = lcm(*(a.denominator for a in fr))
    ints = [int(a * den) for a in fr]
    g = 0
    for a in ints:
        g = gcd(g, a)
    return tuple(a // g for a in ints)


def _check_rect(A: Sequence[Sequence[Number]]) -> int:
    if not A:
        return 0
    width = len(A[0])
    if any(len(r) != width for r in A):
        raise DimensionError("matrix rows have different lengths")
    return width


def row_reduce(A: Sequence[Sequence[Number]]) -> Tuple[list, list]:
    """Reduced row echelon form over Q.

    Returns ``(rows, pivots)`` where ``rows`` are the nonzero rows of the RREF
    and ``pivots`` their pivot columns.  Pivots are chosen left to right, top to
    bottom, so the result is deterministic.
    """
    width = _check_rect(A)
    M = [[_as_fraction(x) for x in row] for row in A]
    pivots = []
    r = 0
    for c in range(width):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(A: Sequence[Sequence[Number]]) -> int:
    """Exact rank of ``A`` over the rationals.

    Uses fraction-free (Bareiss) elimination on the integer-scaled matrix, which
    is markedly faster than Fraction arithmetic for the small dense matrices
    arising in cone computations.
    """
    _check_rect(A)
    rows = [list(primitive_ray(r)) for r in A if not is_zero(r)]
    if not rows:
        return 0
    width = len(rows[0])
    rk = 0
    prev = 1
    for c in range(width):
        p = next((i for i in range(rk, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[rk], rows[p] = rows[p], rows[rk]
        piv = rows[rk][c]
        for i in range(rk + 1, len(rows)):
            a = rows[i][c]
            rows[i] = [(piv * x - a * y) // prev for x, y in zip(rows[i], rows[rk])]
        prev = piv
        rk += 1
        if rk == len(rows):
            break
    return rk


def solve(A: Sequence[Sequence[Number]], b: Sequence[Number]) -> Optional[RationalVector]:
    """One exact solution of ``A x = b`` or ``None`` if the system is inconsistent.

    Free variables are set to zero.
    """
    width = _check_rect(A)
    if len(b) != len(A):
        raise DimensionError(f"right-hand side has length {len(b)}, expected {len(A)}")
    if not A:
        return ()
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = row_reduce(aug)
    if pivots and pivots[-1] == width:
        return None
    x = [Fraction(0)] * width
    for row, c in zip(R, pivots):
        x[c] = row[width]
    return tuple(x)


def nullspace(A: Sequence[Sequence[Number]], width: Optional[int] = None) -> list:
    """Basis of the right kernel of ``A`` as primitive integer vectors."""
    if width is None:
        width = _check_rect(A)
    if not A:
        return [tuple(int(i == j) for j in range(width)) for i in range(width)]
    R, pivots = row_reduce(A)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * width
        x[f] = Fraction(1)
        for row, c in zip(R, pivots):
            x[c] = -row[f]
        basis.append(primitive_ray(x))
    return basis


def format_rational(x: Number) -> str:
    """``"p/q"``, or ``"p"`` for integers."""
    x = _as_fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
