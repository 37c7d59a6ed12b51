"""Rational polyhedral cones.

A :class:`Cone` is stored by generators (its V-representation).  The facet
description is obtained by the double description method and cached; every
other query (dual, extremal rays, membership, intersection) is routed through
that one routine, :func:`double_description`.

All arithmetic is over Python integers: vectors are scaled to primitive integer
form after every combination, so nothing grows beyond what the geometry needs.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

from . import lp
from .linalg import DimensionError, IntVector, dot, primitive_ray, rank

__all__ = ["Cone", "double_description", "dual", "extremal_rays", "contains",
           "interior_contains", "intersect", "equal"]


def _combine(c1: int, u: Sequence[int], c2: int, v: Sequence[int]) -> IntVector:
    return primitive_ray([c1 * a - c2 * b for a, b in zip(u, v)])


def double_description(constraints: Iterable[Sequence[int]], dim: int) -> Tuple[List[IntVector], List[IntVector]]:
    """V-representation of ``{y : <a, y> >= 0 for all a in constraints}``.

    Returns ``(lineality, rays)``: a basis of the lineality space and the
    extremal rays of the cone modulo lineality, all as primitive integer
    vectors.  Constraints are inserted in lexicographic order so that the
    output does not depend on how the caller listed them.

    Adjacency of rays is decided combinatorially (no third ray is tight on all
    constraints tight at both), which is exact because the working ray set is
    kept minimal throughout.
    """
    if dim <= 0:
        raise ValueError("ambient dimension must be positive")
    cons = sorted({primitive_ray(a) for a in constraints if any(a)})
    for a in cons:
        if len(a) != dim:
            raise DimensionError(f"constraint of length {len(a)} in dimension {dim}")
    lin: List[IntVector] = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    rays: List[IntVector] = []
    masks: List[int] = []
    for k, a in enumerate(cons):
        bit = 1 << k
        pivot = next((i for i, l in enumerate(lin) if dot(a, l) != 0), None)
        if pivot is not None:
            l = lin.pop(pivot)
            al = dot(a, l)
            if al < 0:
                l = tuple(-x for x in l)
                al = -al
            lin = [_combine(al, m, dot(a, m), l) if dot(a, m) else m for m in lin]
            new_rays = []
            for r in rays:
                ar = dot(a, r)
                new_rays.append(_combine(al, r, ar, l) if ar else r)
            rays = new_rays + [l]
            # l was in the old lineality space: tight on every earlier constraint
            masks = [m | bit for m in masks] + [bit - 1]
            continue

        vals = [dot(a, r) for r in rays]
        pos = [i for i, s in enumerate(vals) if s > 0]
        neg = [i for i, s in enumerate(vals) if s < 0]
        zero = [i for i, s in enumerate(vals) if s == 0]
        if not neg:
            masks = [m | bit if vals[i] == 0 else m for i, m in enumerate(masks)]
            continue
        need = dim - len(lin) - 2
        new_rays = [rays[i] for i in pos] + [rays[i] for i in zero]
        new_masks = [masks[i] for i in pos] + [masks[i] | bit for i in zero]
        for i in pos:
            for j in neg:
                common = masks[i] & masks[j]
                if bin(common).count("1") < need:
                    continue
                if any(t != i and t != j and masks[t] & common == common for t in range(len(rays))):
                    continue
                new_rays.append(_combine(vals[i], rays[j], vals[j], rays[i]))
                new_masks.append(common | bit)
        rays, masks = new_rays, new_masks
    return lin, rays


class Cone:
    """Closed convex cone generated by finitely many rational vectors.

    >>> c = Cone([(1, 0), (1, 1)])
    >>> sorted(c.dual().rays)
    [(0, 1), (1, -1)]
    """

    def __init__(self, generators: Iterable[Sequence], ambient_dim: Optional[int] = None):
        gens = [tuple(g) for g in generators]
        if ambient_dim is None:
            if not gens:
                raise ValueError("ambient_dim is required for a cone without generators")
            ambient_dim = len(gens[0])
        if ambient_dim <= 0:
            raise ValueError("ambient dimension must be positive")
        for g in gens:
            if len(g) != ambient_dim:
                raise DimensionError(f"generator {g} does not have length {ambient_dim}")
        self.ambient_dim = ambient_dim
        self.generators: Tuple[IntVector, ...] = tuple(sorted({primitive_ray(g) for g in gens if any(g)}))

    @classmethod
    def from_inequalities(cls, normals: Iterable[Sequence], equations: Iterable[Sequence] = (),
                          ambient_dim: Optional[int] = None) -> "Cone":
        """The cone ``{y : <f, y> >= 0, <e, y> = 0}``."""
        normals = [primitive_ray(f) for f in normals if any(f)]
        equations = [primitive_ray(e) for e in equations if any(e)]
        if ambient_dim is None:
            ambient_dim = len((normals + equations)[0])
        cons = normals + equations + [tuple(-x for x in e) for e in equations]
        lin, rays = double_description(cons, ambient_dim)
        return cls(rays + lin + [tuple(-x for x in l) for l in lin], ambient_dim)

    def __repr__(self):
        return f"Cone(ambient_dim={self.ambient_dim}, generators={len(self.generators)})"

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return equal(self, other)

    __hash__ = None

    # -- H-representation -------------------------------------------------

    @cached_property
    def _hrep(self) -> Tuple[Tuple[IntVector, ...], Tuple[IntVector, ...]]:
        lin, rays = double_description(self.generators, self.ambient_dim)
        return tuple(sorted(rays)), tuple(lin)

    @property
    def facets(self) -> Tuple[IntVector, ...]:
        """Inward facet normals (modulo :attr:`equations`)."""
        return self._hrep[0]

    @property
    def equations(self) -> Tuple[IntVector, ...]:
        """Basis of the orthogonal complement of the linear span."""
        return self._hrep[1]

    @property
    def dim(self) -> int:
        return rank(self.generators) if self.generators else 0

    @property
    def is_full_dimensional(self) -> bool:
        return not self.equations

    # -- V-representation -------------------------------------------------

    @cached_property
    def _vrep(self) -> Tuple[Tuple[IntVector, ...], Tuple[IntVector, ...]]:
        cons = list(self.facets) + list(self.equations) + [tuple(-x for x in e) for e in self.equations]
        lin, rays = double_description(cons, self.ambient_dim)
        return tuple(sorted(rays)), tuple(lin)

    @property
    def rays(self) -> Tuple[IntVector, ...]:
        """Extremal rays, sorted; modulo :attr:`lineality` when the cone is not pointed."""
        return self._vrep[0]

    @property
    def lineality(self) -> Tuple[IntVector, ...]:
        return self._vrep[1]

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    # -- queries ------------------------------------------------------------

    def _check(self, v):
        if len(v) != self.ambient_dim:
            raise DimensionError(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")

    def contains(self, v: Sequence) -> bool:
        self._check(v)
        return all(dot(e, v) == 0 for e in self.equations) and all(dot(f, v) >= 0 for f in self.facets)

    def interior_contains(self, v: Sequence, relative: bool = False) -> bool:
        """Strict membership.

        With ``relative=False`` this is the topological interior in the ambient
        space, empty unless the cone is full-dimensional.  ``relative=True``
        tests the relative interior inside the linear span.
        """
        self._check(v)
        if self.equations and not relative:
            return False
        if any(dot(e, v) != 0 for e in self.equations):
            return False
        if not self.facets:
            # a linear subspace is its own relative interior
            return True
        return all(dot(f, v) > 0 for f in self.facets)

    def dual(self) -> "Cone":
        eqs = self.equations
        return Cone(list(self.facets) + list(eqs) + [tuple(-x for x in e) for e in eqs], self.ambient_dim)

    def intersect(self, other: "Cone", prune: bool = False) -> "Cone":
        return intersect(self, other, prune=prune)


def _h_constraints(c: Cone) -> List[IntVector]:
    return list(c.facets) + list(c.equations) + [tuple(-x for x in e) for e in c.equations]


def prune_redundant(constraints: Sequence[Sequence[int]]) -> List[IntVector]:
    """Drop constraints implied by the others, deciding each with an exact LP."""
    kept = sorted({primitive_ray(a) for a in constraints if any(a)})
    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1:]
        # keep both halves of an equation pair; the LP handles the rest
        if others and lp.is_redundant(kept[i], others):
            kept = others
        else:
            i += 1
    return kept


def dual(c: Cone) -> Cone:
    return c.dual()


def extremal_rays(c: Cone) -> Tuple[IntVector, ...]:
    return c.rays


def contains(c: Cone, v: Sequence) -> bool:
    return c.contains(v)


def interior_contains(c: Cone, v: Sequence, relative: bool = False) -> bool:
    return c.interior_contains(v, relative=relative)


def intersect(*cones: Cone, prune: bool = False) -> Cone:
    """Intersection of one or more cones in a common ambient space.

    With ``prune=True`` the concatenated H-representation is first reduced by
    exact-LP redundancy elimination, which pays off when many cones share most
    of their facets.
    """
    if not cones:
        raise ValueError("nothing to intersect")
    d = cones[0].ambient_dim
    for c in cones:
        if c.ambient_dim != d:
            raise DimensionError("cones live in different ambient spaces")
    cons = sorted({a for c in cones for a in _h_constraints(c)})
    if prune:
        cons = prune_redundant(cons)
    lin, rays = double_description(cons, d)
    return Cone(rays + lin + [tuple(-x for x in l) for l in lin], d)


def equal(a: Cone, b: Cone) -> bool:
    """Same closed cone.  For pointed cones this is equality of primitive extremal ray sets."""
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError("cones live in different ambient spaces")
    if a.is_pointed and b.is_pointed:
        return a.rays == b.rays
    return all(b.contains(g) for g in a.generators) and all(a.contains(g) for g in b.generators)
