"""Built-in consistency checks, run by ``bircones selftest``.

Everything is recomputed from the intersection table and the class formulas,
bypassing the caches of :mod:`bircones.tl.cones`, so a corrupted constant
shows up as a failed check.
"""

from __future__ import annotations

import sys
import time
from typing import Callable, List, Tuple

from . import conics, gkz, reference
from .cone import Cone
from .linalg import primitive_ray
from .tl import picard as P
from .tl.cones import expected_ray_counts, movable_cone


def _fresh_cones(n: int):
    r = P.picard_rank(n)
    eff = Cone([P.boundary_divisor(n, s, i).coords for s in P.SIDES for i in range(n)], r)
    ne = Cone([C.pairings for _, C in P.mori_generators(n)], r)
    nef = Cone([P.nef_generator(n, p, q).coords for p, q in P.nef_indices(n)], r)
    mov1 = Cone([P.moving_curve_ray(n, p, q).pairings for p in range(n) for q in range(n)], r)
    return eff, ne, nef, mov1


def _curve_rays(n: int, cone: Cone):
    return sorted(primitive_ray(P.to_curve_basis(P.CurveClass(n, r))) for r in cone.rays)


def check_duality(max_n: int) -> Tuple[bool, str]:
    for n in range(2, max_n + 1):
        eff, ne, nef, mov1 = _fresh_cones(n)
        if nef != ne.dual():
            return False, f"Nef != dual(NE) for n={n}"
        if mov1 != eff.dual():
            return False, f"Mov1 != dual(Eff) for n={n}"
        counts = {"eff": len(eff.rays), "nef": len(nef.rays), "ne": len(ne.rays), "mov1": len(mov1.rays)}
        if counts != expected_ray_counts(n):
            return False, f"ray counts {counts} for n={n}"
    return True, f"2 <= n <= {max_n}"


def check_tl2() -> Tuple[bool, str]:
    eff, ne, nef, mov1 = _fresh_cones(2)
    got = (sorted(eff.rays), sorted(nef.rays), _curve_rays(2, ne), _curve_rays(2, mov1))
    want = tuple(sorted(x) for x in (reference.TL2_EFF, reference.TL2_NEF, reference.TL2_NE, reference.TL2_MOV1))
    if got != want:
        return False, "ray lists differ"
    return True, "Eff, Nef, NE, Mov1"


def check_tl3() -> Tuple[bool, str]:
    _, _, nef, mov1 = _fresh_cones(3)
    movable_cone.cache_clear()
    if sorted(movable_cone(3).rays) != sorted(reference.TL3_MOV):
        return False, "Mov differs"
    if sorted(nef.rays) != sorted(reference.TL3_NEF_NPQ):
        return False, "Nef differs from the N_pq rays"
    if _curve_rays(3, mov1) != sorted(reference.TL3_MOV1):
        return False, "Mov1 differs"
    return True, "Mov, Nef, Mov1"


def check_canonical(max_n: int = 8) -> Tuple[bool, str]:
    for n in range(2, max_n + 1):
        K = P.canonical_class(n)
        if K != P.canonical_class_from_boundary(n):
            return False, f"two forms of K differ for n={n}"
        if any(P.pair(-K, C) < 0 for _, C in P.mori_generators(n)):
            return False, f"-K negative on a Mori generator for n={n}"
        nef = Cone([P.nef_generator(n, p, q).coords for p, q in P.nef_indices(n)], P.picard_rank(n))
        if nef.interior_contains(primitive_ray((-K).coords)) != (n == 2):
            return False, f"-K ampleness wrong for n={n}"
    return True, f"2 <= n <= {max_n}"


def check_lambda(max_n: int = 6) -> Tuple[bool, str]:
    for n in range(2, max_n + 1):
        for p in range(n):
            for q in range(n):
                for side in P.SIDES:
                    a, b, lam = P.moving_curve_expansion(n, p, q, side)
                    if min(lam, default=0) < 0:
                        return False, f"negative lambda at n={n}, ({p},{q})"
                    if P.expansion_class(n, p, q, side) != P.moving_curve_ray(n, p, q):
                        return False, f"expansion misses W_{p},{q} at n={n}"
    return True, f"2 <= n <= {max_n}"


def check_conics(max_n: int = 8) -> Tuple[bool, str]:
    for n in range(2, max_n + 1):
        r = conics.classify_conics(n)
        if (r.is_fano, r.is_weak_fano) != (2 <= n <= 5, n <= 6):
            return False, f"classification wrong for n={n}"
        if conics.restrict_to_blowup(conics.anticanonical_conics(n)).coords != (5, -4, -4):
            return False, f"restriction of -K wrong for n={n}"
        if not conics.chambers_cover_eff(n):
            return False, f"chambers do not tile Eff for n={n}"
    return True, f"2 <= n <= {max_n}"


def check_gkz_small() -> Tuple[bool, str]:
    cfg = gkz.tl_configuration(2)
    a, b = gkz.chamber_count(cfg), gkz.chamber_count_bruteforce(cfg)
    return a == b, f"n=2: insertion {a}, brute force {b}"


def check_gkz_tl3() -> Tuple[bool, str]:
    cfg = gkz.tl_configuration(3)
    a = gkz.chamber_count(cfg)
    b = gkz.chamber_count(cfg, gkz.random_order(cfg, seed=1))
    c = gkz.arrangement_region_count(cfg)
    return a == b == c, f"n=3: insertion {a}, shuffled {b}, flat sum {c}"


def checks(quick: bool = False) -> List[Tuple[str, Callable[[], Tuple[bool, str]]]]:
    out = [
        ("duality", lambda: check_duality(4 if quick else 6)),
        ("golden-tl2", check_tl2),
        ("golden-tl3", check_tl3),
        ("canonical", check_canonical),
        ("lambda-recursion", lambda: check_lambda(4 if quick else 6)),
        ("conics", check_conics),
        ("gkz-n2", check_gkz_small),
    ]
    if not quick:
        out.append(("gkz-n3", check_gkz_tl3))
    return out


def run_selftest(quick: bool = False, out=None) -> int:
    out = out or sys.stdout
    failed = 0
    for name, fn in checks(quick):
        t = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as e:  # a crash is a failure, reported like one
            ok, detail = False, f"{type(e).__name__}: {e}"
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name} ({time.perf_counter() - t:.2f}s): {detail}", file=out)
    print(f"{'ok' if not failed else f'{failed} failed'}", file=out)
    return 1 if failed else 0
