from fractions import Fraction
from math import lcm

import pytest

from bircones.tl import picard as P
from bircones.tl.picard import (
    CurveClass, DivisorClass, GAMMA, MINUS, PLUS, ZETA_MINUS, ZETA_PLUS, alt_canonical_check, boundary_divisor,
    canonical_class, canonical_class_from_boundary, color_class, expansion_class, from_curve_basis, hyperplane,
    mori_generator, mori_generators, moving_curve_expansion, moving_curve_ray, nef_generator, pair, table_entry,
    to_curve_basis,
)

NS = range(2, 9)


def test_boundary_divisors():
    assert boundary_divisor(2, PLUS, 1).coords == (1, -2, 0)
    assert boundary_divisor(3, MINUS, 2).coords == (1, 0, 0, -3, -2)
    assert boundary_divisor(3, PLUS, 0).coords == (0, 1, 0, 0, 0)


def test_boundary_index_out_of_range():
    with pytest.raises(ValueError):
        boundary_divisor(3, PLUS, 3)


def test_colors():
    assert color_class(2, 1).coords == (1, -1, -1)
    assert color_class(3, 1).coords == (1, -2, -1, -1, 0)
    assert color_class(3, 2).coords == (1, -1, 0, -2, -1)
    assert color_class(3, 3) == boundary_divisor(3, MINUS, 2)
    assert color_class(3, 0) == boundary_divisor(3, PLUS, 2)
    with pytest.raises(ValueError):
        color_class(3, 4)


def test_nef_generators():
    assert nef_generator(2, 1, 1) == color_class(2, 1)
    assert nef_generator(3, 1, 2).coords == (1, -1, 0, -2, -1)
    assert nef_generator(3, 0, 0) == hyperplane(3)
    with pytest.raises(ValueError, match="not an N_"):
        nef_generator(3, 2, 2)


def test_canonical_tl2():
    assert canonical_class(2).coords == (-3, 2, 2)
    assert alt_canonical_check(2)


@pytest.mark.parametrize("n", NS)
def test_canonical_forms_agree(n):
    assert alt_canonical_check(n)
    assert canonical_class(n) == canonical_class_from_boundary(n)


@pytest.mark.parametrize("n", NS)
def test_canonical_closed_form(n):
    # -(n+1)H + sum_i ((n+1-i)(n-i)/2 - 1)(D_i^+ + D_i^-)
    want = [-(n + 1)] + [Fraction((n + 1 - i) * (n - i), 2) - 1 for i in range(n - 1)] * 2
    assert list(canonical_class(n).coords) == want


def test_pairing_examples():
    assert pair(hyperplane(3), mori_generator(3, GAMMA, 0)) == 1
    assert pair(boundary_divisor(2, PLUS, 0), mori_generator(2, ZETA_PLUS, 1)) == -1


@pytest.mark.parametrize("n", NS)
def test_last_boundary_against_gamma_one(n):
    assert pair(boundary_divisor(n, PLUS, n - 1), mori_generator(n, GAMMA, 1)) == -1 or n == 2


def test_pairing_n_mismatch():
    with pytest.raises(ValueError):
        pair(hyperplane(2), mori_generator(3, GAMMA, 0))


def test_mori_generator_examples():
    assert mori_generator(2, GAMMA, 0).pairings == (1, 0, 1)
    assert mori_generator(2, ZETA_PLUS, 1).pairings == (0, -1, 0)
    assert mori_generator(3, ZETA_MINUS, 2).pairings == (0, 0, 0, 0, -1)
    with pytest.raises(ValueError):
        mori_generator(3, ZETA_PLUS, 0)
    with pytest.raises(ValueError):
        mori_generator(3, "delta", 1)


@pytest.mark.parametrize("n", NS)
def test_boundary_relations_match_table(n):
    # the i = n-1 column of the table must agree with the expansion of D_{n-1}
    for (kind, idx), C in mori_generators(n):
        for side in (PLUS, MINUS):
            assert pair(boundary_divisor(n, side, n - 1), C) == table_entry(n, kind, idx, side, n - 1)


@pytest.mark.parametrize("n", NS)
def test_moving_curves_pair_nonnegatively_with_boundary(n):
    for p in range(n):
        for q in range(n):
            W = moving_curve_ray(n, p, q)
            l = lcm(n - p, n - q)
            assert pair(hyperplane(n), W) == l
            for side, idx, val in ((PLUS, p, l // (n - p)), (MINUS, q, l // (n - q))):
                for i in range(n):
                    assert W.dot_boundary(side, i) == (val if i == idx else 0)


def test_moving_curve_examples():
    W = moving_curve_ray(2, 0, 0)
    assert W.pairings == (2, 1, 1)
    a, b, lam = moving_curve_expansion(2, 0, 0)
    assert (a, lam) == (1, [0])
    assert W == mori_generator(2, GAMMA, 0) + mori_generator(2, GAMMA, 1)
    ell = moving_curve_ray(2, 1, 1)
    assert ell.pairings == (1, 0, 0)
    assert ell.dot_boundary(PLUS, 1) == 1 and ell.dot_boundary(MINUS, 1) == 1
    W = moving_curve_ray(3, 1, 2)
    assert W.pairings == (2, 0, 1, 0, 0)
    assert W.dot_boundary(MINUS, 2) == 2
    assert to_curve_basis(W) == (2, 0, -1, 0, 0)


@pytest.mark.parametrize("n", NS)
def test_expansion_coefficients_nonnegative_and_exact(n):
    for p in range(n):
        for q in range(n):
            for side in (MINUS, PLUS):
                a, b, lam = moving_curve_expansion(n, p, q, side)
                assert all(isinstance(x, int) and x >= 0 for x in lam)
                assert expansion_class(n, p, q, side) == moving_curve_ray(n, p, q)


@pytest.mark.parametrize("n", NS)
def test_nef_generators_are_nef(n):
    gens = [C for _, C in mori_generators(n)]
    for p, q in P.nef_indices(n):
        assert all(pair(nef_generator(n, p, q), C) >= 0 for C in gens)


@pytest.mark.parametrize("n", NS)
def test_colors_are_effective_via_alpha(n):
    for k in range(1, n):
        plus, minus = P.effective_alpha(n, k)
        assert all(x >= 0 for x in plus + minus)
        total = DivisorClass(n, [0] * P.picard_rank(n))
        for i, c in enumerate(plus):
            total = total + c * boundary_divisor(n, PLUS, i)
        for i, c in enumerate(minus):
            total = total + c * boundary_divisor(n, MINUS, i)
        assert total == color_class(n, k)


@pytest.mark.parametrize("n", range(2, 6))
@pytest.mark.parametrize("convention", ["epsilon", "literal"])
def test_curve_basis_round_trip(n, convention):
    for _, C in mori_generators(n):
        assert from_curve_basis(n, to_curve_basis(C, convention), convention) == C


def test_literal_convention_breaks_reference_mov1():
    # under e_j = C_{j+1} the reference ray (3,-1,0,0,0) pairs negatively with D_1^+
    C = from_curve_basis(3, (3, -1, 0, 0, 0), "literal")
    assert C.dot_boundary(PLUS, 1) == -2
    C = from_curve_basis(3, (3, -1, 0, 0, 0), "epsilon")
    assert all(C.dot_boundary(s, i) >= 0 for s in (PLUS, MINUS) for i in range(3))


def test_class_length_checked():
    with pytest.raises(ValueError):
        DivisorClass(3, (1, 0, 0))
    with pytest.raises(ValueError):
        CurveClass(2, (1, 0, 0, 0))
