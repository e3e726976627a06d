import functools

import pytest
from hypothesis import given

from strategies import site_and_objects
from uniserial.errors import NoPath
from uniserial.paths import anchored_order, anchored_sort, endo_simple_between, path_within_two
from uniserial.site import big_tube, line, tube
from uniserial.tube import hom_dim, make_object, simple, tau

Z = big_tube()


def test_identity_witness():
    x = make_object(tube(3), 1, 0, 2)
    assert path_within_two(x, x).kind == "identity"


def test_via_witness_rank_three():
    t3 = tube(3)
    w = path_within_two(simple(t3, 0), simple(t3, 2))
    assert w.kind == "via"
    assert w.via == make_object(t3, 0, 2, 0)


def test_anchored_order_over_z():
    vs = [-2, -1, 0, 1, 2, 5]
    assert anchored_sort(Z, 0, vs) == [0, 1, 2, 5, -2, -1]
    cmp = anchored_order(Z, 0)
    assert all(cmp(v, tau(simple(Z, 0)).socle) <= 0 for v in range(-20, 20))
    assert all(cmp(0, v) <= 0 for v in range(-20, 20))


def test_endo_simple_between():
    assert endo_simple_between(Z, 0, 0) == simple(Z, 0)
    x = endo_simple_between(Z, 3, 1)
    assert x == make_object(Z, 3, 1, 0) and hom_dim(x, x) == 1
    with pytest.raises(NoPath):
        endo_simple_between(line(), 3, 1)


def test_anchored_order_is_inclusion():
    t4 = tube(4)
    for s in range(4):
        cmp = anchored_order(t4, s)
        for t1 in range(4):
            for t2 in range(4):
                x1, x2 = endo_simple_between(t4, s, t1), endo_simple_between(t4, s, t2)
                from uniserial.tube import is_subobject
                assert (cmp(t1, t2) <= 0) == is_subobject(x1, x2)


@given(site_and_objects(2))
def test_witness_is_valid(args):
    _, x, y = args
    w = path_within_two(x, y)
    h = hom_dim
    z = w.via
    checks = {
        "identity": lambda: x == y,
        "direct": lambda: h(x, y) > 0,
        "via": lambda: h(x, z) > 0 and h(z, y) > 0,
        "reverse": lambda: h(y, x) > 0,
        "reverse-via": lambda: h(y, z) > 0 and h(z, x) > 0,
        "sink": lambda: h(x, z) > 0 and h(y, z) > 0,
        "source": lambda: h(z, x) > 0 and h(z, y) > 0,
    }
    assert w.kind in checks, (x, y)
    assert checks[w.kind]()
