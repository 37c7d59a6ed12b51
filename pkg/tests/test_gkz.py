import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from bircones import gkz
from bircones.cone import Cone
from bircones.conics import is_chamber_cover
from bircones.gkz import (
    DegenerateConfiguration, ResourceBoundError, VectorConfiguration, arrangement_region_count, chamber_complex,
    chamber_complex_count, chamber_count, chamber_count_bruteforce, chambers, random_order, wall_hyperplanes,
)
from bircones.linalg import dot, rank


def cfg(*vs):
    return VectorConfiguration.from_vectors(vs)


@st.composite
def configurations(draw, dim=None, max_vectors=5):
    d = dim or draw(st.integers(2, 3))
    vec = st.tuples(*[st.integers(-2, 2)] * d).filter(any)
    vs = draw(st.lists(vec, min_size=d, max_size=max_vectors))
    c = VectorConfiguration.from_vectors(vs, d)
    from hypothesis import assume
    assume(c.spans)
    return c


def test_two_dimensional_examples():
    c = cfg((1, 0), (0, 1), (1, 1))
    assert len(wall_hyperplanes(c)) == 3
    assert chamber_count(c) == 2
    assert chamber_count(cfg((1, 0), (0, 1), (-1, -1))) == 6


def test_orthant_is_one_chamber():
    c = cfg((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert chamber_count(c) == 1
    assert chamber_complex_count(c) == 1
    assert arrangement_region_count(c) == 1


def test_duplicates_collapse():
    assert cfg((1, 0), (2, 0), (0, 1), (1, 0)).vectors == ((0, 1), (1, 0))


def test_degenerate_configuration():
    with pytest.raises(DegenerateConfiguration) as e:
        chamber_count(cfg((1, 0, 0), (0, 1, 0), (1, 1, 0)))
    assert e.value.span_dim == 2 and e.value.ambient_dim == 3


def test_bad_order():
    c = cfg((1, 0), (0, 1), (1, 1))
    with pytest.raises(ValueError):
        chambers(c, [0, 0, 1])


def test_tl_resource_bounds():
    with pytest.raises(ResourceBoundError, match="n <= 3"):
        gkz.chamber_count_tl(4)
    with pytest.raises(ResourceBoundError, match="n <= 4"):
        gkz.chamber_complex_count_tl(5)


def test_tl2():
    c = gkz.tl_configuration(2)
    assert chamber_count(c) == chamber_count_bruteforce(c) == arrangement_region_count(c) == 8
    assert gkz.chamber_complex_count_tl(2) == 8
    assert gkz.chamber_complex_count_tl(2, movable_only=True) == 1


def test_tl3_walls():
    c = gkz.tl_configuration(3)
    assert len(c.vectors) == 8
    assert len(wall_hyperplanes(c)) == 36


def test_tl3_zaslavsky():
    assert arrangement_region_count(gkz.tl_configuration(3)) == 2770


@pytest.mark.slow
def test_tl3_arrangement():
    assert gkz.chamber_count_tl(3) == 2770


def test_tl3_chamber_complex():
    assert gkz.chamber_complex_count_tl(3) == 94
    assert gkz.chamber_complex_count_tl(3, movable_only=True) == 8


@pytest.mark.slow
def test_tl4_chamber_complex():
    assert gkz.chamber_complex_count_tl(4) == 3041


@settings(max_examples=40)
@given(configurations())
def test_insertion_matches_bruteforce(c):
    if len(wall_hyperplanes(c)) <= 8:
        assert chamber_count(c) == chamber_count_bruteforce(c)


@settings(max_examples=40)
@given(configurations(), st.integers(0, 1000))
def test_order_independence(c, seed):
    a = chambers(c)
    b = chambers(c, random_order(c, seed))
    assert [x.signs for x in a] == [x.signs for x in b]


@settings(max_examples=40)
@given(configurations())
def test_zaslavsky_matches_insertion(c):
    assert arrangement_region_count(c) == chamber_count(c)


@settings(max_examples=30)
@given(configurations(), st.integers(0, 10))
def test_duplicate_invariance(c, k):
    v = c.vectors[k % len(c.vectors)]
    assert chamber_count(VectorConfiguration.from_vectors(c.vectors + (v, tuple(2 * x for x in v)))) == chamber_count(c)


@settings(max_examples=30)
@given(configurations(max_vectors=4), st.data())
def test_adding_a_vector_inside_the_cone_refines(c, data):
    # a vector already in cone(cfg) keeps the support and only adds walls
    k = data.draw(st.lists(st.integers(0, 3), min_size=len(c.vectors), max_size=len(c.vectors)))
    v = tuple(sum(ki * u[i] for ki, u in zip(k, c.vectors)) for i in range(c.ambient_dim))
    if any(v):
        bigger = VectorConfiguration.from_vectors(c.vectors + (v,))
        assert chamber_count(bigger) >= chamber_count(c)


@settings(max_examples=30)
@given(configurations())
def test_witnesses(c):
    walls = wall_hyperplanes(c)
    support = Cone(c.vectors, c.ambient_dim)
    for ch in chambers(c):
        assert support.interior_contains(ch.witness)
        assert all(s == (1 if dot(h, ch.witness) > 0 else -1) for s, h in zip(ch.signs, walls))


def _two_dim_complex_count(c):
    # rays of a 2-d configuration in angular order; whole plane vs pointed cone
    support = Cone(c.vectors, 2)
    if support.lineality:
        return None
    return len(c.vectors) - 1 if support.is_pointed else None


@settings(max_examples=40)
@given(configurations(dim=2, max_vectors=6))
def test_chamber_complex_two_dim(c):
    want = _two_dim_complex_count(c)
    if want is not None:
        assert chamber_complex_count(c) == want


def test_chamber_complex_whole_plane():
    assert chamber_complex_count(cfg((1, 0), (0, 1), (-1, -1))) == 3
    assert chamber_complex_count(cfg((1, 0), (0, 1), (-1, 0), (0, -1), (1, 1))) == 5


def _sampled_signatures(c, samples, seed):
    # a generic point's chamber is determined by which simplicial cones of the
    # configuration contain it in their interior
    rng = random.Random(seed)
    d = c.ambient_dim
    walls = wall_hyperplanes(c)
    simplices = [Cone(B, d) for B in itertools.combinations(c.vectors, d) if rank(B) == d]
    seen = set()
    for _ in range(samples):
        k = [rng.randint(1, 30) for _ in c.vectors]
        w = tuple(sum(ki * v[i] for ki, v in zip(k, c.vectors)) for i in range(d))
        if all(dot(h, w) != 0 for h in walls):
            seen.add(frozenset(k for k, s in enumerate(simplices) if s.interior_contains(w)))
    return seen


@settings(max_examples=15)
@given(configurations(dim=3, max_vectors=5))
def test_chamber_complex_against_sampling_and_tiling(c):
    cones = chamber_complex(c)
    assert is_chamber_cover(Cone(c.vectors, 3), cones)
    assert len(_sampled_signatures(c, 150, 0)) <= len(cones)


def test_chamber_complex_sampling_exact_on_fixed_example():
    c = cfg((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1))
    assert len(_sampled_signatures(c, 3000, 1)) == chamber_complex_count(c)


@pytest.mark.slow
def test_threads_give_same_result(monkeypatch):
    monkeypatch.setenv("BIRCONES_THREADS", "2")
    assert chamber_count(gkz.tl_configuration(3)) == 2770
