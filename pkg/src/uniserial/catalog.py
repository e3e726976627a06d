"""Enumerating and sampling indecomposables."""

from __future__ import annotations

import random

from .site import CoverPoint, Site
from .tube import IntervalObject, make_object


def tube_objects(site: Site, max_length: int) -> list[IntervalObject]:
    """Every object of a finite tube with length at most ``max_length``."""
    r = site.rank
    out = []
    for s in range(r):
        for n in range(1, max_length + 1):
            out.append(IntervalObject(site, CoverPoint(0, s), site.from_z(s + n - 1)))
    return out


def line_objects(site: Site) -> list[IntervalObject]:
    vs = site.vertices()
    return [make_object(site, s, t) for s in vs for t in vs if s <= t]


def random_vertex(site: Site, rng: random.Random, span: int = 20):
    if site.base == "cyclic":
        return rng.randrange(site.rank)
    if site.base == "finite":
        return rng.randint(1, site.size)
    if site.base == "int":
        return rng.randint(-span, span)
    return (rng.randint(-2, 2), rng.randint(-span, span))


def random_object(site: Site, rng: random.Random, max_winding: int = 3, span: int = 20) -> IntervalObject:
    """A random object; on linear sites socle and top are reordered as needed."""
    s, t = random_vertex(site, rng, span), random_vertex(site, rng, span)
    if not site.is_loop:
        s, t = min(s, t), max(s, t)
        return make_object(site, s, t)
    return make_object(site, s, t, rng.randint(0, max_winding))
