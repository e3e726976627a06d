"""Perpendicular subcategories to all but finitely many simples.

Keeping a finite set ``K`` of simples, the perpendicular category consists
of the objects whose socle lies in ``K`` and whose top is a predecessor of
a point of ``K`` (on finite lines the maximum is also allowed as a top).
It is a finite tube of rank ``|K|`` over a loop site and a finite line over
a linear site.  The inner category is realised by contracting each segment
between consecutive kept points to a single vertex.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .errors import EmptyKeepSet, NotInSubcategory, SiteMismatch
from .site import CoverPoint, Site, line, tube
from .tube import IntervalObject, hom_dim


@dataclass(frozen=True)
class PerpPresentation:
    ambient: Site
    keep: tuple
    inner: Site

    @property
    def rank(self) -> int:
        return self.inner.rank if self.inner.is_loop else self.inner.size

    @property
    def vertex_map(self) -> dict:
        """Inner vertex -> kept ambient vertex (the socle of the inner simple)."""
        if self.inner.is_loop:
            return {i: v for i, v in enumerate(self.keep)}
        return {i + 1: v for i, v in enumerate(self.keep[: self.rank])}

    # index j of the j-th kept cover point (j in Z for loops, 0..|K|-1 on lines)

    def _point(self, j: int) -> CoverPoint:
        m = len(self.keep)
        if self.ambient.is_loop:
            return CoverPoint(j // m, self.keep[j % m])
        return CoverPoint(0, self.keep[j])

    def _top(self, j: int) -> CoverPoint:
        """Top of the inner simple number ``j``."""
        if not self.ambient.is_loop and j + 1 == len(self.keep):
            return CoverPoint(0, self.ambient.max_vertex)
        return self.ambient.pred(self._point(j + 1))

    def _index(self, p: CoverPoint) -> int | None:
        m = len(self.keep)
        try:
            i = self.keep.index(p.vertex)
        except ValueError:
            return None
        return p.deck * m + i if self.ambient.is_loop else i

    def _inner_point(self, j: int) -> CoverPoint:
        if self.inner.is_loop:
            return self.inner.from_z(j)
        return CoverPoint(0, j + 1)

    def _inner_index(self, p: CoverPoint) -> int:
        return self.inner.to_z(p) if self.inner.is_loop else p.vertex - 1

    def contains(self, x: IntervalObject) -> bool:
        if x.site != self.ambient:
            raise SiteMismatch(f"{x.site!r} vs {self.ambient!r}")
        if x.socle not in self.keep:
            return False
        s = self.ambient
        if not s.has_succ(x.b):
            return True
        return s.succ(x.b).vertex in self.keep

    def coordinates(self, x: IntervalObject) -> IntervalObject:
        """The inner object corresponding to an ambient object of the subcategory."""
        if not self.contains(x):
            raise NotInSubcategory(f"{x!r} is not in the perpendicular category")
        i = self._index(x.a)
        s = self.ambient
        j = self.rank - 1 if not s.has_succ(x.b) else self._index(s.succ(x.b)) - 1
        return IntervalObject.from_cover(self.inner, self._inner_point(i), self._inner_point(j))

    def simples(self) -> list[IntervalObject]:
        return [self.include(IntervalObject(self.inner, p, p)) for p in
                (self._inner_point(j) for j in range(self.rank))]

    def include(self, x: IntervalObject) -> IntervalObject:
        """The exact embedding of the inner category into the ambient one."""
        if x.site != self.inner:
            raise SiteMismatch(f"{x.site!r} vs {self.inner!r}")
        i, j = self._inner_index(x.a), self._inner_index(x.b)
        return IntervalObject.from_cover(self.ambient, self._point(i), self._top(j))

    def reflect(self, x: IntervalObject) -> IntervalObject | None:
        """The left adjoint of :meth:`include`; ``None`` is the zero object.

        The reflection keeps exactly the kept composition factors of ``x``.
        """
        if x.site != self.ambient:
            raise SiteMismatch(f"{x.site!r} vs {self.ambient!r}")
        m = len(self.keep)
        if self.ambient.is_loop:
            lo = bisect.bisect_left(self.keep, x.a.vertex)
            j1 = x.a.deck * m + lo
            j2 = x.b.deck * m + bisect.bisect_right(self.keep, x.b.vertex) - 1
        else:
            j1 = bisect.bisect_left(self.keep, x.a.vertex)
            j2 = bisect.bisect_right(self.keep, x.b.vertex) - 1
            if j2 >= self.rank:
                # the last kept point of an unbounded line is no socle
                return None
        if j1 > j2:
            return None
        return IntervalObject.from_cover(self.inner, self._inner_point(j1), self._inner_point(j2))


def perp(ambient: Site, keep) -> PerpPresentation:
    """Present the perpendicular category to every simple outside ``keep``."""
    keep = tuple(sorted({ambient.check_vertex(v) for v in keep}))
    if not keep:
        raise EmptyKeepSet("keep set is empty")
    m = len(keep)
    if ambient.is_loop:
        inner = tube(m)
    else:
        rank = m if ambient.base == "finite" else m - 1
        if rank == 0:
            raise EmptyKeepSet(f"keeping {keep} on {ambient!r} leaves the zero category")
        inner = line(rank)
    return PerpPresentation(ambient, keep, inner)


def hom_via_window(x: IntervalObject, y: IntervalObject, keep) -> int:
    """``dim Hom(x, y)`` computed inside the finite perpendicular category."""
    pp = perp(x.site, keep)
    return hom_dim(pp.coordinates(x), pp.coordinates(y))
