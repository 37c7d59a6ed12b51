"""Divisor and curve classes on the compactification TL_n.

Divisors live in the ordered basis ``(H; D_0^+, ..., D_{n-2}^+; D_0^-, ..., D_{n-2}^-)``
of Pic, so a :class:`DivisorClass` has ``2n - 1`` coordinates.  A curve class is
stored by its intersection numbers against that same basis (see
:class:`CurveClass`); the pairing of a divisor with a curve is then an ordinary
dot product.

The last boundary divisors ``D_{n-1}^+`` and ``D_{n-1}^-`` are not basis
elements; they are expanded through the linear equivalences
``D_{n-1}^{+/-} = H - sum_{j<=n-2} (n-j) D_j^{+/-}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Tuple

from ..linalg import RationalVector, dot, vector

PLUS = "+"
MINUS = "-"
SIDES = (PLUS, MINUS)


def _side(side: str) -> str:
    if side in ("+", "plus", "p"):
        return PLUS
    if side in ("-", "minus", "m", "−"):
        return MINUS
    raise ValueError(f"side must be '+' or '-', got {side!r}")


def _check_n(n: int):
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"rank parameter n must be an integer >= 2, got {n!r}")


def picard_rank(n: int) -> int:
    return 2 * n - 1


def basis_index(n: int, side: str, i: int) -> int:
    """Coordinate slot of ``D_i^side`` for ``0 <= i <= n-2``."""
    if not 0 <= i <= n - 2:
        raise ValueError(f"D_{i} is not a basis element for n={n}")
    return 1 + i if _side(side) == PLUS else n + i


def basis_labels(n: int) -> List[str]:
    return ["H"] + [f"D{i}+" for i in range(n - 1)] + [f"D{i}-" for i in range(n - 1)]


def curve_basis_labels(n: int) -> List[str]:
    """Labels of the reporting basis ``(l; e_0^+, ...; e_0^-, ...)`` of N_1."""
    return ["l"] + [f"e{i}+" for i in range(n - 1)] + [f"e{i}-" for i in range(n - 1)]


def _zero(n: int) -> List[Fraction]:
    return [Fraction(0)] * picard_rank(n)


@dataclass(frozen=True)
class DivisorClass:
    n: int
    coords: RationalVector

    def __post_init__(self):
        object.__setattr__(self, "coords", vector(self.coords))
        if len(self.coords) != picard_rank(self.n):
            raise ValueError(f"divisor on TL_{self.n} needs {picard_rank(self.n)} coordinates")

    def _same(self, other):
        if not isinstance(other, DivisorClass) or other.n != self.n:
            raise ValueError("divisor classes on different TL_n")

    def __add__(self, other):
        self._same(other)
        return DivisorClass(self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._same(other)
        return DivisorClass(self.n, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return DivisorClass(self.n, tuple(-a for a in self.coords))

    def __rmul__(self, c):
        return DivisorClass(self.n, tuple(c * a for a in self.coords))


@dataclass(frozen=True)
class CurveClass:
    """A class in N_1(TL_n), stored as its pairings with ``(H; D_i^+; D_i^-)``, i <= n-2.

    Since the basis divisors span N^1, this pairing vector determines the class.
    """

    n: int
    pairings: RationalVector

    def __post_init__(self):
        object.__setattr__(self, "pairings", vector(self.pairings))
        if len(self.pairings) != picard_rank(self.n):
            raise ValueError(f"curve on TL_{self.n} needs {picard_rank(self.n)} pairings")

    def __add__(self, other):
        if not isinstance(other, CurveClass) or other.n != self.n:
            raise ValueError("curve classes on different TL_n")
        return CurveClass(self.n, tuple(a + b for a, b in zip(self.pairings, other.pairings)))

    def __rmul__(self, c):
        return CurveClass(self.n, tuple(c * a for a in self.pairings))

    def dot_boundary(self, side: str, i: int) -> Fraction:
        """Intersection with ``D_i^side`` for any ``0 <= i <= n-1``."""
        return pair(boundary_divisor(self.n, side, i), self)


def pair(D: DivisorClass, C: CurveClass) -> Fraction:
    if D.n != C.n:
        raise ValueError(f"cannot pair a divisor on TL_{D.n} with a curve on TL_{C.n}")
    return dot(D.coords, C.pairings)


# -- divisors ------------------------------------------------------------------

def hyperplane(n: int) -> DivisorClass:
    _check_n(n)
    c = _zero(n)
    c[0] = Fraction(1)
    return DivisorClass(n, c)


def _tower(n: int, side: str, depth: int) -> List[Fraction]:
    """Coefficients of ``-sum_{i<depth} (depth - i) D_i^side`` (the Delta helper)."""
    c = _zero(n)
    for i in range(depth):
        c[basis_index(n, side, i)] -= depth - i
    return c


def boundary_divisor(n: int, side: str, i: int) -> DivisorClass:
    _check_n(n)
    side = _side(side)
    if not 0 <= i <= n - 1:
        raise ValueError(f"boundary index {i} out of range 0..{n - 1}")
    if i <= n - 2:
        c = _zero(n)
        c[basis_index(n, side, i)] = Fraction(1)
        return DivisorClass(n, c)
    c = _zero(n)
    c[0] = Fraction(1)
    for j in range(n - 1):
        c[basis_index(n, side, j)] = Fraction(-(n - j))
    return DivisorClass(n, c)


def boundary_divisors(n: int) -> List[DivisorClass]:
    """``D_0^+, ..., D_{n-1}^+, D_0^-, ..., D_{n-1}^-``."""
    return [boundary_divisor(n, s, i) for s in SIDES for i in range(n)]


def color_class(n: int, k: int) -> DivisorClass:
    """The color ``B_k``; ``B_0 = D_{n-1}^+`` and ``B_n = D_{n-1}^-``."""
    _check_n(n)
    if not 0 <= k <= n:
        raise ValueError(f"color index {k} out of range 0..{n}")
    if k == 0:
        return boundary_divisor(n, PLUS, n - 1)
    if k == n:
        return boundary_divisor(n, MINUS, n - 1)
    return _h_minus_towers(n, n - k, k)


def _h_minus_towers(n: int, p: int, q: int) -> DivisorClass:
    plus, minus = _tower(n, PLUS, p), _tower(n, MINUS, q)
    c = [a + b for a, b in zip(plus, minus)]
    c[0] = Fraction(1)
    return DivisorClass(n, c)


def is_nef_index(n: int, p: int, q: int) -> bool:
    return 0 <= p <= n - 1 and 0 <= q <= n - 1 and p + q <= n


def nef_generator(n: int, p: int, q: int) -> DivisorClass:
    """``N_{p,q} = H - sum_{i<p} (p-i) D_i^+ - sum_{i<q} (q-i) D_i^-``."""
    _check_n(n)
    if not is_nef_index(n, p, q):
        raise ValueError(f"({p}, {q}) is not an N_{{p,q}} index for n={n}")
    return _h_minus_towers(n, p, q)


def nef_indices(n: int) -> List[Tuple[int, int]]:
    return [(p, q) for p in range(n) for q in range(n) if p + q <= n]


def canonical_class(n: int) -> DivisorClass:
    """K = -(n+1) H + sum_{i<=n-2} ((n+1-i)(n-i)/2 - 1) (D_i^+ + D_i^-)."""
    _check_n(n)
    c = _zero(n)
    c[0] = Fraction(-(n + 1))
    for i in range(n - 1):
        coeff = Fraction((n + 1 - i) * (n - i), 2) - 1
        c[basis_index(n, PLUS, i)] = coeff
        c[basis_index(n, MINUS, i)] = coeff
    return DivisorClass(n, c)


def canonical_class_from_boundary(n: int) -> DivisorClass:
    """K = -sum_{m=1}^{n-1} B_m - sum_{i=0}^{n-1} (D_i^+ + D_i^-)."""
    _check_n(n)
    total = DivisorClass(n, _zero(n))
    for m in range(1, n):
        total = total + color_class(n, m)
    for D in boundary_divisors(n):
        total = total + D
    return -total


def alt_canonical_check(n: int) -> bool:
    return canonical_class(n) == canonical_class_from_boundary(n)


def effective_alpha(n: int, k: int) -> Tuple[List[Fraction], List[Fraction]]:
    """Coefficients expressing ``B_k`` (1 <= k <= n-1) in the boundary divisors.

    Returns ``(alpha_plus, alpha_minus)`` indexed by ``i = 0..n-1`` with
    ``B_k = sum alpha_plus[i] D_i^+ + sum alpha_minus[i] D_i^-``.
    """
    _check_n(n)
    if not 1 <= k <= n - 1:
        raise ValueError(f"color index {k} out of range 1..{n - 1}")
    ap = [Fraction(i * k, n) if i <= n - k - 1 else Fraction((n - k) * (n - i), n) for i in range(n)]
    am = [Fraction(i * (n - k), n) if i <= k - 1 else Fraction(k * (n - i), n) for i in range(n)]
    return ap, am


# -- curves --------------------------------------------------------------------

GAMMA = "gamma"
ZETA_PLUS = "zeta+"
ZETA_MINUS = "zeta-"


def _d(a: int, b: int) -> int:
    return int(a == b)


def table_entry(n: int, kind: str, index: int, divisor: str, i: int = 0) -> int:
    """Raw intersection table of H, D_i^+ and D_i^- (0 <= i <= n-1) with the T-curves.

    ``divisor`` is ``"H"``, ``"+"`` or ``"-"``.  This is the reference table;
    :func:`mori_generator` only reads the ``i <= n-2`` part of it.
    """
    _check_n(n)
    _check_curve_index(n, kind, index)
    if divisor != "H" and not 0 <= i <= n - 1:
        raise ValueError(f"boundary index {i} out of range")
    if kind == GAMMA:
        l = index
        if divisor == "H":
            return 1
        if _side(divisor) == MINUS:
            return _d(i, l) - _d(i, l + 1)
        return _d(i, n - l - 1) - _d(i, n - l)
    j = index
    own = PLUS if kind == ZETA_PLUS else MINUS
    if divisor == "H" or _side(divisor) != own:
        return 0
    return -_d(i, j - 1) + 2 * _d(i, j) - _d(i, j + 1)


def _check_curve_index(n: int, kind: str, index: int):
    if kind == GAMMA:
        if not 0 <= index <= n - 1:
            raise ValueError(f"gamma index {index} out of range 0..{n - 1}")
    elif kind in (ZETA_PLUS, ZETA_MINUS):
        if not 1 <= index <= n - 1:
            raise ValueError(f"zeta index {index} out of range 1..{n - 1}")
    else:
        raise ValueError(f"unknown curve kind {kind!r}")


def mori_generator(n: int, kind: str, index: int) -> CurveClass:
    """C_l (kind ``gamma``), C_j^+ (``zeta+``) or C_j^- (``zeta-``)."""
    _check_n(n)
    _check_curve_index(n, kind, index)
    vals = [table_entry(n, kind, index, "H")]
    vals += [table_entry(n, kind, index, PLUS, i) for i in range(n - 1)]
    vals += [table_entry(n, kind, index, MINUS, i) for i in range(n - 1)]
    return CurveClass(n, vals)


def mori_generators(n: int) -> List[Tuple[Tuple[str, int], CurveClass]]:
    """All 3n-2 labelled generators of the Mori cone."""
    out = [((GAMMA, l), mori_generator(n, GAMMA, l)) for l in range(n)]
    out += [((ZETA_PLUS, j), mori_generator(n, ZETA_PLUS, j)) for j in range(1, n)]
    out += [((ZETA_MINUS, j), mori_generator(n, ZETA_MINUS, j)) for j in range(1, n)]
    return out


def moving_curve_ray(n: int, p: int, q: int) -> CurveClass:
    """The integral class W_{p,q} spanning an extremal ray of the moving cone of curves.

    H.W = lcm(n-p, n-q), D_p^+.W = lcm/(n-p), D_q^-.W = lcm/(n-q), all other
    boundary pairings zero.  Pairings with D_{n-1}^{+/-} are implied by the
    boundary relations and checked before returning.
    """
    _check_n(n)
    if not (0 <= p <= n - 1 and 0 <= q <= n - 1):
        raise ValueError(f"({p}, {q}) out of range for n={n}")
    l = lcm(n - p, n - q)
    a, b = l // (n - p), l // (n - q)
    vals = _zero(n)
    vals[0] = Fraction(l)
    if p <= n - 2:
        vals[basis_index(n, PLUS, p)] = Fraction(a)
    if q <= n - 2:
        vals[basis_index(n, MINUS, q)] = Fraction(b)
    W = CurveClass(n, vals)
    for side, idx, want in ((PLUS, p, a), (MINUS, q, b)):
        got = W.dot_boundary(side, n - 1)
        expected = want if idx == n - 1 else 0
        if got != expected:  # pragma: no cover - guarded by the relations themselves
            raise ArithmeticError(f"W_{p},{q}: D_{n - 1}^{side} pairing {got} != {expected}")
    return W


def _lambda_recursion(n: int, a: int, b: int, p: int, q: int) -> List[int]:
    lam = {-1: 0, 0: a - b * _d(q, 0)}
    for r in range(1, n - 1):
        lam[r] = 2 * lam[r - 1] - lam[r - 2] - a * _d(r, n - p) - b * _d(r, q)
    return [lam[r] for r in range(n - 1)]


def moving_curve_expansion(n: int, p: int, q: int, side: str = MINUS) -> Tuple[int, int, List[int]]:
    """Coefficients of W_{p,q} as a combination of Mori generators.

    For ``side="-"`` returns ``(a, b, lam)`` with
    ``W = a * sum_{l=0}^{n-1-p} C_l + sum_{j=1}^{n-1} lam[j-1] C_j^-``.
    ``side="+"`` gives the mirror expansion
    ``W = b * sum_{l=q}^{n-1} C_l + sum_{j} lam[j-1] C_j^+``.
    """
    _check_n(n)
    if not (0 <= p <= n - 1 and 0 <= q <= n - 1):
        raise ValueError(f"({p}, {q}) out of range for n={n}")
    l = lcm(n - p, n - q)
    a, b = l // (n - p), l // (n - q)
    if _side(side) == MINUS:
        return a, b, _lambda_recursion(n, a, b, p, q)
    return a, b, _lambda_recursion(n, b, a, q, p)


def expansion_class(n: int, p: int, q: int, side: str = MINUS) -> CurveClass:
    """Evaluate :func:`moving_curve_expansion` as a curve class."""
    a, b, lam = moving_curve_expansion(n, p, q, side)
    total = CurveClass(n, _zero(n))
    if _side(side) == MINUS:
        for l in range(n - p):
            total = total + a * mori_generator(n, GAMMA, l)
        kind = ZETA_MINUS
    else:
        for l in range(q, n):
            total = total + b * mori_generator(n, GAMMA, l)
        kind = ZETA_PLUS
    for j in range(1, n):
        total = total + lam[j - 1] * mori_generator(n, kind, j)
    return total


# -- reporting bases for N_1 ---------------------------------------------------

EPSILON = "epsilon"
LITERAL = "literal"


def to_curve_basis(C: CurveClass, convention: str = EPSILON) -> RationalVector:
    """Coordinates of ``C`` in the basis ``(l; e_0^+, ...; e_0^-, ...)``.

    ``epsilon``: ``l`` pairs to 1 with H and 0 with every D_i, and ``e_j``
    pairs to ``-delta_ij`` with ``D_i`` of its own side.  ``literal``: ``e_j``
    is the T-curve class ``C_{j+1}`` of the corresponding side.
    """
    M = _curve_basis_matrix(C.n, convention)
    from ..linalg import solve

    x = solve([list(r) for r in zip(*M)], C.pairings)
    if x is None:  # pragma: no cover - both bases are bases
        raise ArithmeticError("curve basis is degenerate")
    return x


def from_curve_basis(n: int, coords, convention: str = EPSILON) -> CurveClass:
    coords = vector(coords)
    M = _curve_basis_matrix(n, convention)
    vals = [sum((c * col[k] for c, col in zip(coords, M)), Fraction(0)) for k in range(picard_rank(n))]
    return CurveClass(n, vals)


def _curve_basis_matrix(n: int, convention: str) -> List[Tuple[Fraction, ...]]:
    """Pairing vectors of the reporting basis elements (one per element)."""
    _check_n(n)
    r = picard_rank(n)
    ell = tuple(Fraction(int(k == 0)) for k in range(r))
    cols = [ell]
    for side, kind in ((PLUS, ZETA_PLUS), (MINUS, ZETA_MINUS)):
        for j in range(n - 1):
            if convention == EPSILON:
                cols.append(tuple(Fraction(-int(k == basis_index(n, side, j))) for k in range(r)))
            elif convention == LITERAL:
                cols.append(mori_generator(n, kind, j + 1).pairings)
            else:
                raise ValueError(f"unknown curve convention {convention!r}")
    return cols
