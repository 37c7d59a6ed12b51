"""The cone catalog of TL_n: Eff, Nef, NE, Mov_1, Mov, Cox degrees, classification.

Divisor cones live in Pic coordinates, curve cones in pairing coordinates, so
``dual`` of a divisor cone is directly a curve cone and vice versa.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, List, Tuple

from ..cone import Cone, intersect
from ..linalg import IntVector, primitive_ray
from ..report import ClassificationReport
from .picard import (
    MINUS, PLUS, boundary_divisor, canonical_class, color_class, mori_generators, moving_curve_ray,
    nef_generator, nef_indices, pair, picard_rank,
)


class ConeMismatch(AssertionError):
    """Two independently computed descriptions of the same cone disagree."""


def _ints(D) -> IntVector:
    return tuple(int(x) for x in D.coords)


@lru_cache(maxsize=None)
def effective_cone(n: int) -> Cone:
    return Cone([boundary_divisor(n, s, i).coords for s in (PLUS, MINUS) for i in range(n)], picard_rank(n))


@lru_cache(maxsize=None)
def mori_cone(n: int) -> Cone:
    """NE(TL_n) in pairing coordinates, generated by the 3n-2 T-invariant curves."""
    return Cone([C.pairings for _, C in mori_generators(n)], picard_rank(n))


@lru_cache(maxsize=None)
def nef_cone(n: int, check: bool = True) -> Cone:
    """Cone over all N_{p,q}.  With ``check`` it must coincide with the dual of NE."""
    c = Cone([nef_generator(n, p, q).coords for p, q in nef_indices(n)], picard_rank(n))
    if check and c != mori_cone(n).dual():
        raise ConeMismatch(f"Nef(TL_{n}) from N_pq differs from dual(NE)")
    return c


@lru_cache(maxsize=None)
def moving_curve_cone(n: int, check: bool = True) -> Cone:
    """Mov_1(TL_n) as the dual of Eff, cross-checked against the classes W_{p,q}."""
    c = effective_cone(n).dual()
    if check:
        expected = {primitive_ray(moving_curve_ray(n, p, q).pairings) for p in range(n) for q in range(n)}
        if set(c.rays) != expected:
            raise ConeMismatch(f"Mov_1(TL_{n}) rays differ from the W_pq classes")
    return c


def degree_list(n: int) -> List[Tuple[str, IntVector]]:
    """Labelled Cox degrees: each color twice, then D_{n-1}^{+/-}, then D_j^{+/-}, j <= n-2."""
    out = []
    for k in range(1, n):
        B = _ints(color_class(n, k))
        out += [(f"B{k}", B), (f"B{k}", B)]
    out += [(f"D{n - 1}+", _ints(boundary_divisor(n, PLUS, n - 1))),
            (f"D{n - 1}-", _ints(boundary_divisor(n, MINUS, n - 1)))]
    out += [(f"D{j}+", _ints(boundary_divisor(n, PLUS, j))) for j in range(n - 1)]
    out += [(f"D{j}-", _ints(boundary_divisor(n, MINUS, j))) for j in range(n - 1)]
    return out


@lru_cache(maxsize=None)
def movable_cone(n: int) -> Cone:
    """Intersection over i of the cones spanned by all degrees except the i-th."""
    degs = [v for _, v in degree_list(n)]
    # repeated degrees keep the list faithful to the Cox generators; the set of
    # distinct drop-one cones is what actually gets intersected
    drop_one = sorted({tuple(sorted(set(degs[:i] + degs[i + 1:]))) for i in range(len(degs))})
    return intersect(*(Cone(g, picard_rank(n)) for g in drop_one))


def section_dimension(n: int, k: int) -> int:
    """r_k = C(n,k)^2 - C(n,k-1) C(n,k+1), the dimension of H^0(O(B_k))."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"color index {k} out of range 1..{n - 1}")
    return comb(n, k) ** 2 - comb(n, k - 1) * comb(n, k + 1)


@dataclass(frozen=True)
class CoxData:
    n: int
    columns: Tuple[IntVector, ...]
    labels: Tuple[str, ...]

    @property
    def generator_count(self) -> int:
        return len(self.columns)

    @property
    def matrix(self) -> Tuple[IntVector, ...]:
        """Grading matrix, (2n-1) rows, one column per Cox generator."""
        return tuple(zip(*self.columns))

    @property
    def shape(self) -> Tuple[int, int]:
        return picard_rank(self.n), len(self.columns)


def cox_data(n: int) -> CoxData:
    cols, labels = [], []
    for s in (PLUS, MINUS):
        for i in range(n):
            cols.append(_ints(boundary_divisor(n, s, i)))
            labels.append(f"D{i}{s}")
    for k in range(1, n):
        B = _ints(color_class(n, k))
        for m in range(section_dimension(n, k)):
            cols.append(B)
            labels.append(f"B{k}.{m + 1}")
    return CoxData(n, tuple(cols), tuple(labels))


def classify_tl(n: int) -> ClassificationReport:
    nef = nef_cone(n)
    minus_k = tuple(-x for x in canonical_class(n).coords)
    nef_on_mori = all(pair(-canonical_class(n), C) >= 0 for _, C in mori_generators(n))
    weak = nef.contains(minus_k)
    if weak != nef_on_mori:
        raise ConeMismatch("-K nefness disagrees between Nef cone and Mori generators")
    return ClassificationReport(
        subject="tl",
        n=n,
        is_fano=nef.interior_contains(minus_k),
        is_weak_fano=weak,
        provenance="computed",
        extra={
            "aut_dimension": n * n,
            "nef_ray_count": len(nef.rays),
            "eff_ray_count": len(effective_cone(n).rays),
            "cox_generator_count": cox_data(n).generator_count,
        },
    )


def ray_counts(n: int) -> Dict[str, int]:
    return {
        "eff": len(effective_cone(n).rays),
        "nef": len(nef_cone(n).rays),
        "ne": len(mori_cone(n).rays),
        "mov1": len(moving_curve_cone(n).rays),
    }


def expected_ray_counts(n: int) -> Dict[str, int]:
    return {"eff": 2 * n, "nef": (n * n + 3 * n - 2) // 2, "ne": 3 * n - 2, "mov1": n * n}
