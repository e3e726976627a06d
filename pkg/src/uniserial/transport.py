"""Equivalences induced by order isomorphisms of the base.

A bijection ``beta`` of base vertices that respects successors lifts to an
order automorphism ``phi`` of the cover commuting with the deck shift.
Objects, basis maps, almost split sequences and injective matrix algebras
are carried along ``phi``.
"""

from __future__ import annotations

from typing import Callable

from .errors import NotOrderPreserving, SiteMismatch
from .proalgebra import SeriesMatrixAlgebra, inj_matrix_algebra
from .site import CoverPoint, Site
from .tube import ArData, IntervalObject, Morphism


class Transport:
    """The functor induced by ``beta`` from ``source`` to ``target``.

    ``window`` bounds the vertices on which compatibility with successors
    is verified for infinite bases.
    """

    def __init__(self, source: Site, target: Site, beta, window: int = 50):
        if source.kind != target.kind:
            raise SiteMismatch(f"{source!r} vs {target!r}")
        self.source = source
        self.target = target
        self.beta: Callable = beta.__getitem__ if isinstance(beta, dict) else beta
        self._wrap = {}
        if source.base == "cyclic":
            if target.base != "cyclic" or target.rank != source.rank:
                raise SiteMismatch(f"{source!r} vs {target!r}")
            images = [target.check_vertex(self.beta(v)) for v in range(source.rank)]
            w = 0
            for v in range(source.rank):
                if v and images[v] < images[v - 1]:
                    w += 1
                self._wrap[v] = w
            sample = [CoverPoint(0, v) for v in range(source.rank)]
        elif source.base == "finite":
            sample = [CoverPoint(0, v) for v in source.vertices()]
        elif source.base == "int":
            sample = [CoverPoint(0, v) for v in range(-window, window + 1)]
        else:
            sample = [CoverPoint(0, (i, j)) for i in range(-3, 4) for j in range(-window, window + 1)]
        self._validate(sample)

    def _validate(self, sample):
        s, t = self.source, self.target
        for p in sample:
            if not s.has_succ(p):
                if t.has_succ(self.point(p)):
                    raise NotOrderPreserving(f"maximum {p} is not sent to a maximum")
                continue
            if not t.has_succ(self.point(p)) or self.point(s.succ(p)) != t.succ(self.point(p)):
                raise NotOrderPreserving(f"successor of {p} is not preserved")

    def point(self, p: CoverPoint) -> CoverPoint:
        v = self.target.check_vertex(self.beta(p.vertex))
        return CoverPoint(p.deck + self._wrap.get(p.vertex, 0), v)

    def obj(self, x: IntervalObject) -> IntervalObject:
        if x.site != self.source:
            raise SiteMismatch(f"{x.site!r} vs {self.source!r}")
        return IntervalObject.from_cover(self.target, self.point(x.a), self.point(x.b))

    def index(self, x: IntervalObject, y: IntervalObject, k: int) -> int:
        """Index of the image of the basis map ``f_k: x -> y``."""
        if not self.source.is_loop:
            return k
        return k + self.point(y.a).deck - self.point(x.a).deck

    def morphism(self, f: Morphism) -> Morphism:
        coeffs = {self.index(f.source, f.target, k): c for k, c in f.coeffs}
        return Morphism.make(self.obj(f.source), self.obj(f.target), coeffs, f.field)

    def ar_image(self, data: ArData) -> tuple:
        """The objects of ``data`` mapped one by one, middle sorted."""
        return (self.obj(data.start), tuple(sorted((self.obj(m) for m in data.middle), key=_key)),
                self.obj(data.end))

    def algebra(self, a: SeriesMatrixAlgebra) -> SeriesMatrixAlgebra:
        anchor = a.keep[0]
        return inj_matrix_algebra(self.target, [self.beta(v) for v in a.keep], a.precision,
                                  anchor=self.beta(anchor), field=a.field)


def _key(x: IntervalObject):
    return (x.a, x.b)


def shift_transport(site: Site, c: int = 1) -> Transport:
    """Translation of ``int`` (or of the second coordinate of ``int_pairs_lex``)."""
    if site.base == "int":
        return Transport(site, site, lambda v: v + c)
    if site.base == "int_pairs_lex":
        return Transport(site, site, lambda v: (v[0], v[1] + c))
    raise ValueError(f"no shift on {site!r}")


def rotation(site: Site, c: int = 1) -> Transport:
    if site.base != "cyclic":
        raise ValueError(f"rotations need a finite tube, not {site!r}")
    return Transport(site, site, lambda v: (v + c) % site.rank)
