"""Short paths between indecomposables and the anchored order on simples."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable

from .errors import NoPath, SiteMismatch
from .site import CoverPoint, Site
from .tube import IntervalObject, hom_dim


@dataclass(frozen=True)
class PathWitness:
    """How ``source`` reaches ``target`` in at most two steps.

    ``kind`` is one of ``identity``, ``direct`` (Hom(X, Y) != 0), ``via``
    (X -> Z -> Y), ``reverse`` (Hom(Y, X) != 0), ``reverse-via``
    (Y -> Z -> X), ``sink`` (X -> Z <- Y) or ``source`` (X <- Z -> Y).
    """

    kind: str
    via: IntervalObject | None = None

    @property
    def oriented(self) -> bool:
        return self.kind in ("identity", "direct", "via")


def _candidates(x: IntervalObject, y: IntervalObject) -> list[IntervalObject]:
    site = x.site
    out = []
    if site.is_loop:
        k = site.min_shift_geq(y.a, x.b)
        out.append(IntervalObject.from_cover(site, x.a, site.shift(y.b, k)))
        span = max(x.winding, y.winding) + 3
        starts = [site.shift(p, i) for p in (x.a, y.a) for i in range(-span, span + 1)]
        ends = [site.shift(p, i) for p in (x.b, y.b) for i in range(-span, span + 1)]
    else:
        starts, ends = [x.a, y.a], [x.b, y.b]
    for p in starts:
        for q in ends:
            if p <= q:
                out.append(IntervalObject.from_cover(site, p, q))
    return list(dict.fromkeys(out))


def path_within_two(x: IntervalObject, y: IntervalObject) -> PathWitness:
    """A witness of length at most two, oriented whenever one exists."""
    if x.site != y.site:
        raise SiteMismatch(f"{x.site!r} vs {y.site!r}")
    if x == y:
        return PathWitness("identity")
    if hom_dim(x, y):
        return PathWitness("direct")
    cands = _candidates(x, y)
    for z in cands:
        if hom_dim(x, z) and hom_dim(z, y):
            return PathWitness("via", z)
    if hom_dim(y, x):
        return PathWitness("reverse")
    tests = (
        ("reverse-via", lambda z: hom_dim(y, z) and hom_dim(z, x)),
        ("sink", lambda z: hom_dim(x, z) and hom_dim(y, z)),
        ("source", lambda z: hom_dim(z, x) and hom_dim(z, y)),
    )
    for kind, ok in tests:
        for z in cands:
            if ok(z):
                return PathWitness(kind, z)
    return PathWitness("none")


# anchored order


def anchored_lift(site: Site, s, t) -> CoverPoint:
    """Least cover point over ``t`` that is not below the deck-0 point over ``s``."""
    s = site.check_vertex(s)
    t = site.check_vertex(t)
    if not site.is_loop:
        if t < s:
            raise NoPath(f"no path from simple {s} to simple {t}")
        return CoverPoint(0, t)
    return CoverPoint(0 if t >= s else 1, t)


def endo_simple_between(site: Site, s, t) -> IntervalObject:
    """The endo-simple object with socle ``s`` and top ``t``."""
    return IntervalObject(site, site.point(0, s), anchored_lift(site, s, t))


def anchored_order(site: Site, s) -> Callable:
    """Comparator on simples: ``T1 <= T2`` iff the endo-simple objects nest."""

    def cmp(t1, t2) -> int:
        return Site.compare(anchored_lift(site, s, t1), anchored_lift(site, s, t2))

    return cmp


def anchored_sort(site: Site, s, simples) -> list:
    return sorted(simples, key=functools.cmp_to_key(anchored_order(site, s)))
