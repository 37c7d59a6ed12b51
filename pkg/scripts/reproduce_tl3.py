"""Print the cones of TL_3 next to the reference lists and report agreement."""

from bircones import reference
from bircones.linalg import primitive_ray
from bircones.tl import cones
from bircones.tl.picard import CurveClass, basis_labels, curve_basis_labels, to_curve_basis


def show(name, labels, rays, want):
    print(f"{name} ({len(rays)} rays)  basis {' '.join(labels)}")
    for r in sorted(rays):
        print("   ", r, *([] if r in want else ["  <- not in the reference list"]))
    missing = sorted(set(want) - set(rays))
    for r in missing:
        print("    missing:", r)
    print("    agrees" if not missing and set(rays) <= set(want) else "    DIFFERS")


def main():
    n = 3
    show("Eff", basis_labels(n), list(cones.effective_cone(n).rays), cones.effective_cone(n).rays)
    show("Mov", basis_labels(n), list(cones.movable_cone(n).rays), reference.TL3_MOV)
    show("Nef vs the first eight listed", basis_labels(n), list(cones.nef_cone(n).rays), reference.TL3_NEF_FIRST8)
    show("Nef vs the N_pq rays", basis_labels(n), list(cones.nef_cone(n).rays), reference.TL3_NEF_NPQ)
    mov1 = [primitive_ray(to_curve_basis(CurveClass(n, r))) for r in cones.moving_curve_cone(n).rays]
    show("Mov1", curve_basis_labels(n), mov1, reference.TL3_MOV1)


if __name__ == "__main__":
    main()
