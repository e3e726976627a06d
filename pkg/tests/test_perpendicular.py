import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uniserial.catalog import line_objects, tube_objects
from uniserial.errors import EmptyKeepSet, NotInSubcategory
from uniserial.perpendicular import hom_via_window, perp
from uniserial.site import CoverPoint, big_tube, line, tube
from uniserial.tube import IntervalObject, ext_dim, hom_dim, make_object, simple

Z = big_tube()


def test_keep_two_over_z():
    pp = perp(Z, {0, 5})
    assert pp.inner == tube(2)
    assert pp.simples() == [make_object(Z, 0, 4, 0), make_object(Z, 5, -1, 0)]
    assert pp.vertex_map == {0: 0, 1: 5}


def test_identity_presentation():
    t3 = tube(3)
    pp = perp(t3, {0, 1, 2})
    assert pp.inner == t3
    for x in tube_objects(t3, 7):
        assert pp.include(x) == x
        assert pp.reflect(x) == x


def test_linear_presentations():
    assert perp(line(), {1, 2, 3}).inner == line(2)
    pp = perp(line(4), {1, 3})
    assert pp.inner == line(2)
    assert pp.simples() == [make_object(line(4), 1, 2), make_object(line(4), 3, 4)]
    with pytest.raises(EmptyKeepSet):
        perp(line(), {4})
    with pytest.raises(EmptyKeepSet):
        perp(Z, [])


def test_include_examples():
    pp = perp(Z, {0, 5})
    assert pp.include(simple(pp.inner, 0)) == make_object(Z, 0, 4, 0)
    x = pp.include(make_object(pp.inner, 0, 0, 1))
    assert x == make_object(Z, 0, 4, 1)
    partners = [make_object(pp.inner, s, t, n) for s, t, n in [(0, 0, 0), (1, 1, 0), (1, 0, 0), (0, 1, 1), (1, 1, 2)]]
    inner = make_object(pp.inner, 0, 0, 1)
    for y in partners:
        assert hom_dim(inner, y) == hom_dim(x, pp.include(y))
        assert hom_dim(y, inner) == hom_dim(pp.include(y), x)


def test_reflect_examples():
    pp = perp(Z, {0, 5})
    t1 = simple(pp.inner, 1)
    assert pp.reflect(make_object(Z, 3, 8, 0)) == t1
    assert hom_dim(make_object(Z, 3, 8, 0), pp.include(t1)) == 1 == hom_dim(t1, t1)
    assert pp.reflect(make_object(Z, 1, 4, 0)) is None


def test_hom_via_window_examples():
    x = make_object(Z, 0, 4, 0)
    assert hom_via_window(x, x, {0, 5}) == 1 == hom_dim(x, x)
    x, y = make_object(Z, 0, 4, 1), make_object(Z, 5, -1, 0)
    assert hom_via_window(x, y, {0, 5}) == hom_dim(x, y)
    with pytest.raises(NotInSubcategory):
        hom_via_window(make_object(Z, 1, 4, 0), x, {0, 5})
    t3 = tube(3)
    for u, v in itertools.product(tube_objects(t3, 6), repeat=2):
        assert hom_via_window(u, v, {0, 1, 2}) == hom_dim(u, v)


@settings(max_examples=60)
@given(st.sets(st.integers(-10, 10), min_size=1, max_size=3), st.randoms(use_true_random=False))
def test_window_reduction_over_z(keep, rng):
    pp = perp(Z, keep)
    inner_objs = tube_objects(pp.inner, 3 * pp.rank)
    objs = [pp.include(x) for x in inner_objs]
    for x, y in itertools.product(rng.sample(objs, min(8, len(objs))), repeat=2):
        assert pp.contains(x) and pp.contains(y)
        assert hom_via_window(x, y, keep) == hom_dim(x, y)
        assert pp.reflect(x) == pp.coordinates(x)


@settings(max_examples=60)
@given(st.sets(st.integers(-10, 10), min_size=1, max_size=4), st.integers(-15, 15), st.integers(-15, 15),
       st.integers(0, 2))
def test_membership_matches_vanishing(keep, s, t, n):
    x = make_object(Z, s, t, n)
    pp = perp(Z, keep)
    lo, hi = min(keep) - 40, max(keep) + 40
    dropped = [v for v in range(lo, hi) if v not in keep]
    vanishes = all(hom_dim(simple(Z, v), x) == 0 and ext_dim(simple(Z, v), x) == 0 for v in dropped)
    assert pp.contains(x) == vanishes


@pytest.mark.parametrize("site", [tube(5), line(6)])
def test_membership_matches_vanishing_finite(site):
    vs = site.vertices()
    objs = tube_objects(site, 12) if site.is_loop else line_objects(site)
    for k in range(1, len(vs) + 1):
        for keep in itertools.combinations(vs, k):
            try:
                pp = perp(site, keep)
            except EmptyKeepSet:
                continue
            for x in objs:
                dropped = [v for v in vs if v not in keep]
                vanishes = all(hom_dim(simple(site, v), x) == 0 and ext_dim(simple(site, v), x) == 0
                               for v in dropped)
                assert pp.contains(x) == vanishes, (keep, x)


def test_inner_simples_are_endo_simple():
    rng = random.Random(3)
    for _ in range(20):
        keep = rng.sample(range(-10, 11), rng.randint(1, 5))
        for s in perp(Z, keep).simples():
            assert hom_dim(s, s) == 1


def test_reflect_of_include_is_identity():
    for keep in ({0}, {0, 5}, {-3, 1, 2}, {-7, -1, 4, 9}):
        pp = perp(Z, keep)
        for y in tube_objects(pp.inner, 3 * pp.rank):
            assert pp.reflect(pp.include(y)) == y


def test_reflect_keeps_kept_factors():
    pp = perp(Z, {-3, 1, 2})
    x = IntervalObject(Z, CoverPoint(0, -5), CoverPoint(0, 7))
    r = pp.reflect(x)
    assert r.length == 3
