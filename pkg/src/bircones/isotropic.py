"""Closed-form invariants of Lagrangian and orthogonal Grassmannians and their compactifications."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .report import ClassificationReport


def _binom(n: int, k: int) -> int:
    # math.comb rejects negative k; out-of-range entries are zero
    return comb(n, k) if 0 <= k <= n else 0


def dim_lg(n: int) -> int:
    return n * (n + 1) // 2


@dataclass(frozen=True)
class GeometryFacts:
    n: int

    @property
    def dim_lg(self) -> int:
        return dim_lg(self.n)

    @property
    def fano_index_lg(self) -> int:
        return self.n + 1

    @property
    def dim_og_plus(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def to_boundary_count(self) -> int:
        return 2 * (self.n // 2)


def dim_osculating_locus(n: int, d: int) -> int:
    """Dimension of the locus swept by osculating curves of order d through a point.

    For d >= n the locus is all of LG(n, 2n).
    """
    if d < 1:
        raise ValueError(f"osculating order must be >= 1 (got d={d})")
    if d >= n:
        return dim_lg(n)
    return d * (2 * n - d + 1) // 2


def osculating_multiplicity(k: int, i: int) -> int:
    if not 0 <= i < k:
        raise ValueError(f"need 0 <= i < k (got k={k}, i={i})")
    return k - i + 1


def dim_kontsevich(n: int, d: int, k: int) -> int:
    """Expected dimension of the space of k-pointed genus 0 degree d stable maps to LG(n, 2n)."""
    if n < 2 or d < 1 or k < 0:
        raise ValueError(f"need n >= 2, d >= 1, k >= 0 (got n={n}, d={d}, k={k})")
    return dim_lg(n) + (n + 1) * d + k - 3


def dim_hilbert_twisted_cubics(n: int) -> int:
    """Dimension of the Hilbert scheme component compared with the degree n, 2-pointed space."""
    return 3 * n * (n + 1) // 2 - 3


def section_dimension_rk(n: int, k: int) -> int:
    """r_k = C(n,k)^2 - C(n,k-1) C(n,k+1)."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must lie in 1..{n - 1} (got k={k})")
    return _binom(n, k) ** 2 - _binom(n, k - 1) * _binom(n, k + 1)


def cox_generator_count(n: int) -> int:
    """Boundary divisors plus a basis of sections for every color."""
    return 2 * n + sum(section_dimension_rk(n, k) for k in range(1, n))


def classify_to(n: int) -> ClassificationReport:
    """Fano data for the orthogonal analogue TO_n.  Looked up, not computed."""
    if n < 2:
        raise ValueError(f"need n >= 2 (got n={n})")
    facts = GeometryFacts(n)
    return ClassificationReport(
        subject="to",
        n=n,
        is_fano=2 <= n <= 5,
        is_weak_fano=True,
        provenance="asserted-by-theorem",
        extra={"eff_ray_count": facts.to_boundary_count, "dim_og_plus": facts.dim_og_plus},
    )
