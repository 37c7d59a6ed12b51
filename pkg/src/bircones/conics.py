"""Divisor classes on the pointed conic spaces of LG(n, 2n).

Classes are rational 3-vectors in the basis (H1, Hsigma2, Delta), where Delta
is the boundary divisor of reducible conics with the marked point on one
component.  The two other classes that matter are

    T     = Hsigma2 + Delta/2      (conics tangent to the hyperplane)
    D_unb = Hsigma2 - Delta/2      (unbalanced conics)

and the same coordinates serve every n >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Tuple

from .cone import Cone, intersect
from .linalg import DimensionError, RationalVector, add, primitive_ray, scale, vector
from .report import ClassificationReport

BASIS = ("H1", "Hsigma2", "Delta")
BLOWUP_BASIS = ("H", "E_p", "E_q")

_HALF = Fraction(1, 2)


def _check_n(n: int):
    if n < 2:
        raise ValueError(f"pointed conic spaces need n >= 2 (got n={n})")


@dataclass(frozen=True)
class ConicDivClass:
    n: int
    coords: RationalVector

    def __post_init__(self):
        object.__setattr__(self, "coords", vector(self.coords))
        if len(self.coords) != 3:
            raise DimensionError(f"conic divisor classes have 3 coordinates, got {len(self.coords)}")

    def __add__(self, other: "ConicDivClass") -> "ConicDivClass":
        return ConicDivClass(self.n, add(self.coords, other.coords))

    def __sub__(self, other: "ConicDivClass") -> "ConicDivClass":
        return ConicDivClass(self.n, add(self.coords, scale(-1, other.coords)))

    def __neg__(self) -> "ConicDivClass":
        return ConicDivClass(self.n, scale(-1, self.coords))

    def __rmul__(self, c) -> "ConicDivClass":
        return ConicDivClass(self.n, scale(c, self.coords))


@dataclass(frozen=True)
class BlowupClass:
    """A class on the blow-up of the quadric threefold at two points, basis (H, E_p, E_q)."""

    coords: RationalVector

    def __post_init__(self):
        object.__setattr__(self, "coords", vector(self.coords))
        if len(self.coords) != 3:
            raise DimensionError(f"blow-up classes have 3 coordinates, got {len(self.coords)}")

    @property
    def content(self) -> int:
        """gcd of the coordinates of an integral class (the divisibility of the class)."""
        if any(c.denominator != 1 for c in self.coords):
            raise ValueError("class is not integral")
        return gcd(*(int(c) for c in self.coords))


def h1(n: int = 2) -> ConicDivClass:
    return ConicDivClass(n, (1, 0, 0))


def h_sigma2(n: int = 2) -> ConicDivClass:
    return ConicDivClass(n, (0, 1, 0))


def delta(n: int = 2) -> ConicDivClass:
    return ConicDivClass(n, (0, 0, 1))


def tangency_class(n: int = 2) -> ConicDivClass:
    return ConicDivClass(n, (0, 1, _HALF))


def unbalanced_class(n: int = 2) -> ConicDivClass:
    return ConicDivClass(n, (0, 1, -_HALF))


def psi_class(n: int = 2) -> ConicDivClass:
    """psi_1 = -H1 + T/2."""
    return -h1(n) + _HALF * tangency_class(n)


def eff_cone_conics(n: int) -> Cone:
    _check_n(n)
    return Cone([h1(n).coords, delta(n).coords, unbalanced_class(n).coords], 3)


def nef_cone_conics(n: int) -> Cone:
    _check_n(n)
    return Cone([h1(n).coords, h_sigma2(n).coords, tangency_class(n).coords], 3)


def movable_cone_conics(n: int) -> Cone:
    """Mov equals Nef here; this is a definition, not a computation."""
    return nef_cone_conics(n)


def mori_chambers_conics(n: int) -> Tuple[Cone, Cone, Cone]:
    """Nef followed by the two chambers on either side of it."""
    _check_n(n)
    return (
        nef_cone_conics(n),
        Cone([h1(n).coords, tangency_class(n).coords, delta(n).coords], 3),
        Cone([h1(n).coords, h_sigma2(n).coords, unbalanced_class(n).coords], 3),
    )


def chambers_cover_eff(n: int) -> bool:
    return is_chamber_cover(eff_cone_conics(n), mori_chambers_conics(n))


def is_chamber_cover(eff: Cone, chambers) -> bool:
    """Full-dimensional chambers inside ``eff``, meeting only along faces and filling it."""
    if not all(c.is_full_dimensional for c in chambers):
        return False
    for i in range(len(chambers)):
        for j in range(i + 1, len(chambers)):
            if intersect(chambers[i], chambers[j]).is_full_dimensional:
                return False
    if not all(eff.contains(r) for c in chambers for r in c.rays):
        return False
    # a facet not on the boundary of eff must be matched by a neighbour on the other side
    inner = {}
    for c in chambers:
        for f in c.facets:
            if f in eff.facets:
                continue
            inner[f] = inner.get(f, 0) + 1
    return all(inner.get(tuple(-x for x in f), 0) == k for f, k in inner.items())


def anticanonical_conics(n: int) -> ConicDivClass:
    """-K in the (H1, Hsigma2, Delta) basis, checked against its T-basis form."""
    _check_n(n)
    if n == 2:
        k = ConicDivClass(n, (1, Fraction(5, 2), Fraction(3, 4)))
        t_form = h1(n) + h_sigma2(n) + Fraction(3, 2) * tangency_class(n)
    else:
        k = ConicDivClass(n, (1, Fraction(n + 2, 2), Fraction(6 - n, 4)))
        t_form = h1(n) + (n - 2) * h_sigma2(n) + Fraction(6 - n, 2) * tangency_class(n)
    if k != t_form:
        raise AssertionError(f"the two forms of -K disagree for n={n}")
    return k


def canonical_conics(n: int) -> ConicDivClass:
    return -anticanonical_conics(n)


_RESTRICTION = ((1, 0, 0), (1, -1, -1), (2, -2, -2))


def restrict_to_blowup(c: ConicDivClass) -> BlowupClass:
    """Pull back along the embedding of Bl_{p,q} Q^3 as the conics through two points."""
    out = [Fraction(0)] * 3
    for coeff, image in zip(c.coords, _RESTRICTION):
        out = [o + coeff * x for o, x in zip(out, image)]
    return BlowupClass(tuple(out))


def classify_conics(n: int) -> ClassificationReport:
    minus_k = anticanonical_conics(n)
    nef = nef_cone_conics(n)
    is_fano = nef.interior_contains(primitive_ray(minus_k.coords))
    restricted = restrict_to_blowup(minus_k)
    extra = {"aut": "PSp(2n)", "restricted_anticanonical": restricted.coords}
    if is_fano:
        extra["fano_index"] = restricted.content
    return ClassificationReport(
        subject="conics",
        n=n,
        is_fano=is_fano,
        is_weak_fano=nef.contains(primitive_ray(minus_k.coords)),
        provenance="computed",
        extra=extra,
    )
