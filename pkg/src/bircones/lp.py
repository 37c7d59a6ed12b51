"""Exact two-phase simplex over the rationals with Bland's anti-cycling rule.

Only what the cone and chamber code needs is exposed: feasibility of a system
of linear inequalities/equations in free variables, returning a witness, plus a
few homogeneous conveniences built on top of it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .linalg import Number, RationalVector, primitive_ray


class LPError(RuntimeError):
    pass


def _phase_one(rows: list, rhs: list, nvars: int) -> Optional[list]:
    """Find x >= 0 with rows @ x == rhs, or None.

    ``rhs`` must be nonnegative.  One artificial variable per row; Bland's rule
    (smallest eligible index for both entering and leaving variables) guarantees
    termination.
    """
    m = len(rows)
    ncols = nvars + m
    T = [list(r) + [Fraction(int(i == j)) for j in range(m)] + [b] for i, (r, b) in enumerate(zip(rows, rhs))]
    basis = [nvars + i for i in range(m)]
    # reduced costs of the phase-one objective (sum of artificials), as a row
    cost = [Fraction(0)] * (ncols + 1)
    for row in T:
        for j in range(nvars):
            cost[j] -= row[j]
        cost[ncols] -= row[ncols]

    while True:
        enter = next((j for j in range(ncols) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        leave = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][ncols] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # pragma: no cover - phase one objective is bounded below
            raise LPError("unbounded phase-one problem")
        prow = T[leave]
        inv = 1 / prow[enter]
        if inv != 1:
            prow = [x * inv for x in prow]
            T[leave] = prow
        nz = [j for j, x in enumerate(prow) if x != 0]
        for i in range(m):
            if i != leave:
                f = T[i][enter]
                if f != 0:
                    row = T[i]
                    for j in nz:
                        row[j] -= f * prow[j]
        f = cost[enter]
        for j in nz:
            cost[j] -= f * prow[j]
        basis[leave] = enter

    if cost[ncols] != 0:
        return None
    x = [Fraction(0)] * nvars
    for i, bv in enumerate(basis):
        if bv < nvars:
            x[bv] = T[i][ncols]
    return x


def find_point(
    ge: Sequence[Sequence[Number]] = (),
    ge_rhs: Optional[Sequence[Number]] = None,
    eq: Sequence[Sequence[Number]] = (),
    eq_rhs: Optional[Sequence[Number]] = None,
    dim: Optional[int] = None,
) -> Optional[RationalVector]:
    """Return some y with ``ge @ y >= ge_rhs`` and ``eq @ y == eq_rhs``, else None.

    Variables are free (split internally as ``y = u - v``).
    """
    if dim is None:
        if ge:
            dim = len(ge[0])
        elif eq:
            dim = len(eq[0])
        else:
            raise ValueError("dimension required for an empty system")
    ge_rhs = [0] * len(ge) if ge_rhs is None else ge_rhs
    eq_rhs = [0] * len(eq) if eq_rhs is None else eq_rhs
    nslack = len(ge)
    nvars = 2 * dim + nslack
    rows, rhs = [], []
    for k, (a, b) in enumerate(zip(ge, ge_rhs)):
        row = [Fraction(x) for x in a] + [Fraction(-x) for x in a] + [Fraction(0)] * nslack
        row[2 * dim + k] = Fraction(-1)
        rows.append(row)
        rhs.append(Fraction(b))
    for a, b in zip(eq, eq_rhs):
        rows.append([Fraction(x) for x in a] + [Fraction(-x) for x in a] + [Fraction(0)] * nslack)
        rhs.append(Fraction(b))
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
    if not rows:
        return tuple(Fraction(0) for _ in range(dim))
    x = _phase_one(rows, rhs, nvars)
    if x is None:
        return None
    return tuple(x[j] - x[dim + j] for j in range(dim))


def strict_point(normals: Sequence[Sequence[Number]], eq: Sequence[Sequence[Number]] = (), dim: Optional[int] = None):
    """Primitive integer y with ``<a, y> > 0`` for every normal ``a`` (and ``eq @ y == 0``).

    The open cone is homogeneous, so strictness is the same as ``<a, y> >= 1``.
    Returns None when the open cone is empty.
    """
    y = find_point(normals, [1] * len(normals), eq, None, dim=dim)
    if y is None:
        return None
    if all(v == 0 for v in y):
        return tuple(0 for _ in y)
    return primitive_ray(y)


def is_redundant(h: Sequence[Number], others: Sequence[Sequence[Number]], eq: Sequence[Sequence[Number]] = ()) -> bool:
    """True iff ``<h, y> >= 0`` is implied by ``<a, y> >= 0`` for all ``a`` in ``others``."""
    rows = list(others) + [tuple(-x for x in h)]
    rhs = [0] * len(others) + [1]
    return find_point(rows, rhs, eq, None, dim=len(h)) is None
