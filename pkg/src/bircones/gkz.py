"""Chamber counting for vector configurations.

Two decompositions of ``cone(v_1, ..., v_m)`` in ``Q^d`` are available.

* :func:`chambers` cuts the cone by *every* hyperplane spanned by ``d - 1``
  independent vectors of the configuration and returns the full-dimensional
  cells.  Hyperplanes are inserted one at a time; a cell is split exactly when
  it has extremal rays strictly on both sides of the new hyperplane, so no
  linear programming is needed.  Each surviving cell carries an integer
  witness strictly inside it, which is checked against every wall at the end.

* :func:`chamber_complex` returns the maximal cones of the chamber complex
  (GKZ decomposition): two generic points lie in the same chamber exactly when
  they lie in the interiors of the same simplicial cones ``cone(B)``, ``B`` a
  basis drawn from the configuration.  Its walls are only the pieces of those
  hyperplanes that actually bound some ``cone(B)``, so it is coarser.  It is
  found by walking across chamber facets from a generic starting point.

:func:`chamber_count_bruteforce` (an exact LP per sign vector) and
:func:`arrangement_region_count` (Zaslavsky's flat sum) are independent
oracles for the first count.
"""

from __future__ import annotations

import itertools
import logging
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from . import lp
from .cone import Cone, double_description
from .linalg import IntVector, dot, nullspace, primitive, primitive_ray, rank, solve

log = logging.getLogger(__name__)

# practical bounds for the TL configurations, per method
MAX_TL_N = {"arrangement": 3, "complex": 4}


class ResourceBoundError(RuntimeError):
    """The requested computation exceeds the documented practical bound."""


class DegenerateConfiguration(ValueError):
    def __init__(self, span_dim: int, ambient_dim: int):
        super().__init__(f"configuration spans a {span_dim}-dimensional subspace of Q^{ambient_dim}")
        self.span_dim = span_dim
        self.ambient_dim = ambient_dim


@dataclass(frozen=True)
class VectorConfiguration:
    ambient_dim: int
    vectors: Tuple[IntVector, ...]

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence], ambient_dim: Optional[int] = None) -> "VectorConfiguration":
        vs = [tuple(v) for v in vectors]
        if ambient_dim is None:
            if not vs:
                raise ValueError("empty configuration needs an explicit ambient_dim")
            ambient_dim = len(vs[0])
        if any(len(v) != ambient_dim for v in vs):
            raise ValueError("vectors of mixed length")
        # duplicates (and positive multiples) collapse to one ray
        uniq = sorted({primitive_ray(v) for v in vs if any(v)})
        return cls(ambient_dim, tuple(uniq))

    @property
    def span_dim(self) -> int:
        return rank(self.vectors) if self.vectors else 0

    @property
    def spans(self) -> bool:
        return self.span_dim == self.ambient_dim


@dataclass(frozen=True)
class Chamber:
    signs: Tuple[int, ...]
    witness: IntVector


def wall_hyperplanes(cfg: VectorConfiguration) -> List[IntVector]:
    """Primitive normals of all hyperplanes spanned by d-1 independent vectors."""
    d = cfg.ambient_dim
    if len(cfg.vectors) < d - 1:
        raise ValueError(f"need at least {d - 1} vectors to span a hyperplane in Q^{d}")
    if d == 1:
        return []
    walls = set()
    for sub in itertools.combinations(cfg.vectors, d - 1):
        if rank(sub) == d - 1:
            (normal,) = nullspace(sub, d)
            walls.add(primitive(normal))
    return sorted(walls)


def _require_spanning(cfg: VectorConfiguration):
    if not cfg.spans:
        raise DegenerateConfiguration(cfg.span_dim, cfg.ambient_dim)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("BIRCONES_THREADS", "1")))
    except ValueError:
        return 1


# a cell is (constraints, rays, lineality); constraints read <a, y> >= 0
_Cell = Tuple[Tuple[IntVector, ...], Tuple[IntVector, ...], Tuple[IntVector, ...]]


def _make_cell(cons: Tuple[IntVector, ...], dim: int) -> _Cell:
    lin, rays = double_description(cons, dim)
    return cons, tuple(rays), tuple(lin)


def _split(cell: _Cell, h: IntVector, dim: int) -> List[_Cell]:
    cons, rays, lin = cell
    if any(dot(h, l) for l in lin):
        cut = True
    else:
        vals = [dot(h, r) for r in rays]
        cut = any(v > 0 for v in vals) and any(v < 0 for v in vals)
    if not cut:
        return [cell]
    neg = tuple(-x for x in h)
    return [_make_cell(cons + (h,), dim), _make_cell(cons + (neg,), dim)]


def _split_batch(args) -> List[_Cell]:
    cells, h, dim = args
    return [c for cell in cells for c in _split(cell, h, dim)]


def _witness(cell: _Cell, dim: int) -> IntVector:
    _, rays, lin = cell
    if rays:
        return tuple(sum(r[i] for r in rays) for i in range(dim))
    return lin[0]


def chambers(cfg: VectorConfiguration, order: Optional[Sequence[int]] = None) -> List[Chamber]:
    """Full-dimensional cells of the wall arrangement inside cone(cfg).

    ``order`` permutes the insertion order of the walls (indices into
    :func:`wall_hyperplanes`); the result does not depend on it.  Results are
    sorted by sign vector.
    """
    _require_spanning(cfg)
    d = cfg.ambient_dim
    walls = wall_hyperplanes(cfg)
    if order is None:
        order = range(len(walls))
    elif sorted(order) != list(range(len(walls))):
        raise ValueError("order must be a permutation of the wall indices")
    support = Cone(cfg.vectors, d)
    cells = [_make_cell(tuple(support.facets), d)]
    workers = _threads()
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for step, w in enumerate(order):
            h = walls[w]
            if pool is not None and len(cells) > 64:
                size = -(-len(cells) // workers)
                chunks = [(cells[i:i + size], h, d) for i in range(0, len(cells), size)]
                cells = [c for part in pool.map(_split_batch, chunks) for c in part]
            else:
                cells = _split_batch((cells, h, d))
            log.debug("wall %d/%d: %d cells", step + 1, len(walls), len(cells))
    finally:
        if pool is not None:
            pool.shutdown()
    out = []
    for cell in cells:
        wit = _witness(cell, d)
        signs = tuple((dot(h, wit) > 0) - (dot(h, wit) < 0) for h in walls)
        if 0 in signs or not support.interior_contains(wit):
            raise AssertionError(f"witness {wit} is not strictly inside its cell")
        out.append(Chamber(signs, wit))
    out.sort(key=lambda c: c.signs)
    if len({c.signs for c in out}) != len(out):
        raise AssertionError("two cells share a sign vector")
    return out


def chamber_count(cfg: VectorConfiguration, order: Optional[Sequence[int]] = None) -> int:
    return len(chambers(cfg, order))


def chamber_count_bruteforce(cfg: VectorConfiguration) -> int:
    """Count by testing every sign vector over the walls with an exact LP.

    Exponential in the number of walls; meant as an oracle for tiny inputs.
    """
    _require_spanning(cfg)
    walls = wall_hyperplanes(cfg)
    support = list(Cone(cfg.vectors, cfg.ambient_dim).facets)
    count = 0
    for signs in itertools.product((1, -1), repeat=len(walls)):
        cons = support + [tuple(s * x for x in h) for s, h in zip(signs, walls)]
        if lp.strict_point(cons, dim=cfg.ambient_dim) is not None:
            count += 1
    return count


def random_order(cfg: VectorConfiguration, seed: int = 0) -> List[int]:
    idx = list(range(len(wall_hyperplanes(cfg))))
    random.Random(seed).shuffle(idx)
    return idx


def arrangement_region_count(cfg: VectorConfiguration, support: Optional[Cone] = None) -> int:
    """Number of cells of the wall arrangement inside an open cone, without building them.

    Zaslavsky: the regions of a central arrangement inside an open convex set
    ``K`` number ``sum |mu(V, X)|`` over the flats ``X`` meeting ``K``.  Flats
    missing int(K) are pruned together with everything below them.
    """
    _require_spanning(cfg)
    d = cfg.ambient_dim
    walls = wall_hyperplanes(cfg)
    K = support if support is not None else Cone(cfg.vectors, d)
    facets = list(K.facets)

    def meets(basis: List[IntVector]) -> bool:
        if not basis:
            return not facets and not K.equations
        # facets of K pulled back to coordinates on the flat
        local = [tuple(dot(f, b) for b in basis) for f in facets]
        if any(not any(v) for v in local):
            return False
        if not local:
            return True
        lin, rays = double_description(local, len(basis))
        if lin:
            return True
        p = [sum(r[i] for r in rays) for i in range(len(basis))]
        return all(dot(f, p) > 0 for f in local)

    def cut(basis: List[IntVector], h: IntVector) -> List[IntVector]:
        vals = [dot(h, b) for b in basis]
        j = next(i for i, v in enumerate(vals) if v)
        return [primitive_ray([vals[j] * x - vals[i] * y for x, y in zip(b, basis[j])])
                for i, b in enumerate(basis) if i != j]

    def closure(basis: List[IntVector]) -> FrozenSet[int]:
        if not basis:
            return frozenset(range(len(walls)))
        return frozenset(i for i, w in enumerate(walls) if not any(dot(w, b) for b in basis))

    top = frozenset()
    level = {top: [tuple(int(i == j) for j in range(d)) for i in range(d)]}
    mu = {top: 1}
    parents: Dict[FrozenSet[int], Tuple] = {top: ()}
    total = 1
    for r in range(1, d + 1):
        children: Dict[FrozenSet[int], List[IntVector]] = {}
        found_from: Dict[FrozenSet[int], list] = {}
        for S, basis in level.items():
            done = set(S)
            for h in range(len(walls)):
                if h in done:
                    continue
                child = cut(basis, walls[h])
                T = closure(child)
                done |= T
                if T in children:
                    found_from[T].append(S)
                else:
                    children[T] = child
                    found_from[T] = [S]
        level = {}
        for T, basis in children.items():
            if not meets(basis):
                continue
            level[T] = basis
            if len(T) == r:
                m = (-1) ** r  # boolean interval
            else:
                above, stack = set(), list(found_from[T])
                while stack:
                    Y = stack.pop()
                    if Y not in above:
                        above.add(Y)
                        stack.extend(parents[Y])
                m = -sum(mu[Y] for Y in above)
            mu[T] = m
            parents[T] = tuple(found_from[T])
            total += abs(m)
        log.debug("rank %d: %d flats meet the support, running total %d", r, len(level), total)
        if not level:
            break
    return total


# -- chamber complex -----------------------------------------------------------


class _BasisCones:
    """Inward facet normals of every simplicial cone spanned by a basis of the configuration."""

    def __init__(self, cfg: VectorConfiguration):
        d = cfg.ambient_dim
        self.normals: List[Tuple[IntVector, ...]] = []
        for B in itertools.combinations(cfg.vectors, d):
            if rank(B) < d:
                continue
            rows = [list(b) for b in B]
            # the dual basis: <b_j, x_i> = delta_ij
            self.normals.append(tuple(
                primitive_ray(solve(rows, [int(i == j) for j in range(d)])) for i in range(d)))

    def signature(self, w: Sequence[int]) -> FrozenSet[int]:
        return frozenset(k for k, N in enumerate(self.normals) if all(dot(f, w) > 0 for f in N))


def _generic(w: Sequence[int], walls: Sequence[IntVector], skip: Sequence[IntVector] = ()) -> bool:
    return all(dot(h, w) != 0 for h in walls if h not in skip)


def chamber_complex(cfg: VectorConfiguration, support: Optional[Cone] = None, seed: int = 0) -> List[Cone]:
    """Maximal cones of the chamber complex, sorted by their ray lists.

    ``support`` restricts the walk to a full-dimensional subcone that is a
    union of chambers (for instance a movable cone); it defaults to cone(cfg).
    """
    _require_spanning(cfg)
    d = cfg.ambient_dim
    if support is None:
        support = Cone(cfg.vectors, d)
    if not support.is_full_dimensional:
        raise ValueError("support must be full-dimensional")
    walls = wall_hyperplanes(cfg)
    bases = _BasisCones(cfg)
    rng = random.Random(seed)
    boundary = set(support.facets)

    def chamber_of(S: FrozenSet[int]) -> Cone:
        cons = [f for k in sorted(S) for f in bases.normals[k]] + list(support.facets)
        return Cone.from_inequalities(cons, ambient_dim=d)

    def generic_point(gens: Sequence[IntVector], skip=()) -> IntVector:
        weights = [1] * len(gens)
        while True:
            p = tuple(sum(c * g[i] for c, g in zip(weights, gens)) for i in range(d))
            if _generic(p, walls, skip):
                return p
            weights = [rng.randint(1, 8 * len(gens) + 64) for _ in gens]

    start = generic_point(list(support.rays) + list(support.lineality) + [tuple(-x for x in l) for l in support.lineality])
    found: Dict[FrozenSet[int], Cone] = {}
    S0 = bases.signature(start)
    found[S0] = chamber_of(S0)
    queue = [S0]
    while queue:
        S = queue.pop()
        C = found[S]
        for f in C.facets:
            if f in boundary:
                continue
            neg = tuple(-x for x in f)
            on_facet = [r for r in C.rays if dot(f, r) == 0]
            on_facet += list(C.lineality) + [tuple(-x for x in l) for l in C.lineality]
            p = generic_point(on_facet, skip=(f, neg))
            # step off the facet until the point lands in the chamber across it
            K = 1
            while True:
                q = tuple(K * pi - fi for pi, fi in zip(p, f))
                if _generic(q, walls) and support.interior_contains(q):
                    S2 = bases.signature(q)
                    C2 = found.get(S2) or chamber_of(S2)
                    if neg in C2.facets and C2.contains(p):
                        break
                K *= 2
                if K > 1 << 64:
                    raise AssertionError("could not cross a chamber facet")
            if S2 not in found:
                found[S2] = C2
                queue.append(S2)
    return sorted(found.values(), key=lambda c: c.rays)


def chamber_complex_count(cfg: VectorConfiguration, support: Optional[Cone] = None) -> int:
    return len(chamber_complex(cfg, support))


# -- TL configurations -----------------------------------------------------------


def tl_configuration(n: int) -> VectorConfiguration:
    """Distinct B-stable prime divisor classes of TL_n: all D_i^{+/-} and colors B_1..B_{n-1}."""
    from .tl.cones import degree_list
    from .tl.picard import picard_rank

    return VectorConfiguration.from_vectors([v for _, v in degree_list(n)], picard_rank(n))


def _check_tl_n(n: int, method: str):
    if n < 2:
        raise ValueError("n must be >= 2")
    if n > MAX_TL_N[method]:
        raise ResourceBoundError(
            f"{method} chamber counting for TL_n is bounded to n <= {MAX_TL_N[method]} (got n={n})")


def chamber_count_tl(n: int, order: Optional[Sequence[int]] = None) -> int:
    _check_tl_n(n, "arrangement")
    return chamber_count(tl_configuration(n), order)


def chamber_complex_count_tl(n: int, movable_only: bool = False) -> int:
    """Chamber complex count on Eff, or only inside Mov with ``movable_only``."""
    _check_tl_n(n, "complex")
    support = None
    if movable_only:
        from .tl.cones import movable_cone

        support = movable_cone(n)
    return chamber_complex_count(tl_configuration(n), support)
