"""Reference ray lists for TL_2 and TL_3.

Divisors are in the basis (H; D_i^+; D_i^-), curves in the reporting basis
(l; e_i^+; e_i^-) of :func:`bircones.tl.picard.to_curve_basis`.
"""

TL2_EFF = [(0, 1, 0), (0, 0, 1), (1, -2, 0), (1, 0, -2)]
TL2_NEF = [(1, 0, 0), (1, -1, 0), (1, 0, -1), (1, -1, -1)]
TL2_MOV = TL2_NEF
# e+, e-, l - e+, l - e-
TL2_NE = [(0, 1, 0), (0, 0, 1), (1, -1, 0), (1, 0, -1)]
# l, 2l - e+, 2l - e-, 2l - e+ - e-
TL2_MOV1 = [(1, 0, 0), (2, -1, 0), (2, 0, -1), (2, -1, -1)]

TL3_MOV = [
    (1, -1, 0, -2, -1), (1, -2, -1, -1, 0), (1, 0, 0, -2, -1), (2, -2, 0, -3, -2),
    (2, 0, 0, -3, -2), (2, -3, -2, -2, 0), (1, -2, -1, 0, 0), (2, -3, -2, 0, 0),
    (1, 0, 0, 0, 0), (1, -1, 0, 0, 0), (1, 0, 0, -1, 0), (1, -1, 0, -1, 0),
    (3, -4, -2, -4, -2), (3, -4, -2, -3, -2), (3, -3, -2, -4, -2), (3, -3, -2, -3, -2),
]
# listed as the generators of Nef(TL_3); only items 1, 2, 3, 7, 9, 10, 11, 12 are nef
TL3_NEF_FIRST8 = TL3_MOV[:8]
TL3_NEF_NPQ = [TL3_MOV[i - 1] for i in (1, 2, 3, 7, 9, 10, 11, 12)]
TL3_MOV1 = [
    (1, 0, 0, 0, 0), (2, 0, -1, 0, 0), (2, 0, 0, 0, -1), (2, 0, -1, 0, -1), (3, -1, 0, 0, 0),
    (3, 0, 0, -1, 0), (3, -1, 0, -1, 0), (6, 0, -3, -2, 0), (6, -2, 0, 0, -3),
]

TL3_GKZ_CHAMBERS = 88
