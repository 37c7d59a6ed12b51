import pytest

from bircones import isotropic as I

NS = range(2, 11)


def test_geometry_facts():
    f = I.GeometryFacts(4)
    assert (f.dim_lg, f.fano_index_lg, f.dim_og_plus, f.to_boundary_count) == (10, 5, 6, 4)
    assert I.GeometryFacts(5).to_boundary_count == 4


def test_osculating_locus():
    assert I.dim_osculating_locus(3, 1) == 3
    assert I.dim_osculating_locus(3, 3) == 6 == I.dim_lg(3)
    assert I.dim_osculating_locus(5, 2) == 9
    with pytest.raises(ValueError):
        I.dim_osculating_locus(3, 0)


@pytest.mark.parametrize("n", NS)
def test_osculating_loci(n):
    assert I.dim_osculating_locus(n, n - 1) == I.dim_lg(n) - 1
    dims = [I.dim_osculating_locus(n, d) for d in range(1, n + 1)]
    assert all(a < b for a, b in zip(dims, dims[1:]))
    assert I.dim_osculating_locus(n, n + 3) == I.dim_lg(n)


def test_multiplicity():
    assert I.osculating_multiplicity(1, 0) == 2
    assert I.osculating_multiplicity(3, 1) == 3
    assert I.osculating_multiplicity(4, 0) == 5
    with pytest.raises(ValueError):
        I.osculating_multiplicity(2, 2)
    with pytest.raises(ValueError):
        I.osculating_multiplicity(2, -1)


def test_kontsevich():
    assert I.dim_kontsevich(2, 2, 0) == 6
    assert I.dim_kontsevich(2, 2, 1) == 7
    for n in NS:
        assert I.dim_kontsevich(n, n, 2) == 3 * n * (n + 1) // 2 - 1
        assert I.dim_hilbert_twisted_cubics(n) == I.dim_kontsevich(n, n, 2) - 2
    with pytest.raises(ValueError):
        I.dim_kontsevich(2, 0, 0)


def test_section_dimension():
    assert I.section_dimension_rk(2, 1) == 3
    assert I.section_dimension_rk(3, 1) == 6
    assert I.section_dimension_rk(4, 2) == 20
    with pytest.raises(ValueError):
        I.section_dimension_rk(3, 3)


@pytest.mark.parametrize("n", NS)
def test_section_dimension_symmetry(n):
    for k in range(1, n):
        assert I.section_dimension_rk(n, k) == I.section_dimension_rk(n, n - k) >= 2


def test_cox_generator_counts():
    assert [I.cox_generator_count(n) for n in (2, 3, 4)] == [7, 18, 48]


def test_classify_to():
    r = I.classify_to(5)
    assert r.is_fano and r.extra["eff_ray_count"] == 4
    r = I.classify_to(6)
    assert r.is_weak_fano and not r.is_fano and r.extra["eff_ray_count"] == 6
    r = I.classify_to(2)
    assert r.is_fano and r.extra["eff_ray_count"] == 2
    assert r.provenance == "asserted-by-theorem"
    with pytest.raises(ValueError):
        I.classify_to(1)
