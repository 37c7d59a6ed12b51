from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bircones import conics as K
from bircones.cone import Cone
from bircones.linalg import solve

NS = range(2, 13)


def test_relations():
    T, D = K.tangency_class(), K.unbalanced_class()
    assert T.coords == (0, 1, Fraction(1, 2))
    assert D.coords == (0, 1, Fraction(-1, 2))
    assert (T - D).coords == K.delta().coords
    assert (T + D).coords == (2 * K.h_sigma2()).coords
    assert (K.h_sigma2() - Fraction(1, 2) * K.delta()).coords == D.coords
    assert K.psi_class().coords == (-1, Fraction(1, 2), Fraction(1, 4))


def test_class_length():
    with pytest.raises(ValueError):
        K.ConicDivClass(2, (1, 0))
    with pytest.raises(ValueError):
        K.BlowupClass((1, 0, 0, 0))


@pytest.mark.parametrize("n", [2, 3, 7])
def test_cones(n):
    eff, nef = K.eff_cone_conics(n), K.nef_cone_conics(n)
    assert len(eff.rays) == len(nef.rays) == 3
    assert all(eff.contains(r) for r in nef.rays)
    assert (1, 0, 0) in eff.rays and (1, 0, 0) in nef.rays
    d = K.delta(n).coords
    assert eff.contains(d)
    assert not nef.contains(d) and not nef.interior_contains(d)
    assert K.movable_cone_conics(n) == nef


def nef_coefficients(c):
    # coordinates in the basis of Nef rays (H1, Hsigma2, T)
    basis = [K.h1().coords, K.h_sigma2().coords, K.tangency_class().coords]
    cols = [[basis[j][i] for j in range(3)] for i in range(3)]
    return solve(cols, list(c.coords))


def test_anticanonical_examples():
    assert K.anticanonical_conics(2).coords == (1, Fraction(5, 2), Fraction(3, 4))
    assert K.anticanonical_conics(6).coords == (1, 4, 0)
    assert K.canonical_conics(2).coords == (-1, Fraction(-5, 2), Fraction(-3, 4))
    with pytest.raises(ValueError):
        K.anticanonical_conics(1)


@pytest.mark.parametrize("n", range(3, 13))
def test_anticanonical_t_form(n):
    assert nef_coefficients(K.anticanonical_conics(n)) == (1, n - 2, Fraction(6 - n, 2))


def test_restriction():
    assert K.restrict_to_blowup(K.delta()).coords == (2, -2, -2)
    assert K.restrict_to_blowup(K.unbalanced_class()).coords == (0, 0, 0)
    assert K.restrict_to_blowup(K.h1()).coords == (1, 0, 0)


@pytest.mark.parametrize("n", NS)
def test_restricted_anticanonical(n):
    r = K.restrict_to_blowup(K.anticanonical_conics(n))
    assert r.coords == (5, -4, -4)
    assert r.content == 1


@given(st.lists(st.fractions(max_denominator=6), min_size=3, max_size=3),
       st.lists(st.fractions(max_denominator=6), min_size=3, max_size=3))
def test_restriction_is_linear(a, b):
    A, B = K.ConicDivClass(2, a), K.ConicDivClass(2, b)
    lhs = K.restrict_to_blowup(A + B).coords
    rhs = tuple(x + y for x, y in zip(K.restrict_to_blowup(A).coords, K.restrict_to_blowup(B).coords))
    assert lhs == rhs


@pytest.mark.parametrize("n", NS)
def test_classification_against_coefficient_signs(n):
    coeffs = nef_coefficients(K.anticanonical_conics(n))
    r = K.classify_conics(n)
    assert r.is_fano == all(c > 0 for c in coeffs) == (n <= 5)
    assert r.is_weak_fano == all(c >= 0 for c in coeffs) == (n <= 6)
    assert r.extra["aut"] == "PSp(2n)"
    if r.is_fano:
        assert r.extra["fano_index"] == 1


def test_classification_examples():
    assert K.classify_conics(5).is_fano
    six = K.classify_conics(6)
    assert six.is_weak_fano and not six.is_fano
    assert not K.classify_conics(7).is_weak_fano


@pytest.mark.parametrize("n", [2, 4, 9])
def test_three_chambers_cover_eff(n):
    assert K.chambers_cover_eff(n)
    nef, c1, c2 = K.mori_chambers_conics(n)
    assert nef == K.nef_cone_conics(n)
    assert c1 == Cone([K.h1().coords, K.tangency_class().coords, K.delta().coords], 3)
    assert c2 == Cone([K.h1().coords, K.h_sigma2().coords, K.unbalanced_class().coords], 3)


def test_cover_check_rejects_bad_covers():
    eff = K.eff_cone_conics(2)
    nef, c1, c2 = K.mori_chambers_conics(2)
    assert not K.is_chamber_cover(eff, [nef, c1])
    assert not K.is_chamber_cover(eff, [nef, c1, c2, c2])
    assert not K.is_chamber_cover(eff, [nef, c1, eff])
