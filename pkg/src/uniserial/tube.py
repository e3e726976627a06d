"""Objects and morphisms of tubes, big tubes and linear-order categories.

An indecomposable object is a cover interval ``[a, b]`` (socle lift ``a``,
top lift ``b``).  On loop sites intervals are taken up to the deck shift and
stored with ``a.deck == 0``.  Subobjects are the initial segments
``[a, c]``, quotients the final segments ``[c, b]``.

A basis map ``f_k : X -> Y`` exists for every ``k`` with

    a_X <= sigma^k(a_Y) <= b_X <= sigma^k(b_Y)

and has image ``[sigma^k(a_Y), b_X]``.  On linear sites only ``k = 0`` is
available.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import (
    CompositionMismatch,
    InjectiveObject,
    InvalidLabel,
    ProjectiveObject,
    SiteMismatch,
)
from .fields import Field
from .site import CoverPoint, Site


@dataclass(frozen=True)
class IntervalObject:
    site: Site
    a: CoverPoint
    b: CoverPoint

    def __post_init__(self):
        if self.b < self.a:
            raise InvalidLabel(f"empty interval [{self.a}, {self.b}]")

    @classmethod
    def from_cover(cls, site: Site, a: CoverPoint, b: CoverPoint) -> "IntervalObject":
        """Build the canonical representative of the orbit of ``[a, b]``."""
        a = site.point(a.deck, a.vertex)
        b = site.point(b.deck, b.vertex)
        if site.is_loop and a.deck != 0:
            d = a.deck
            a, b = CoverPoint(0, a.vertex), CoverPoint(b.deck - d, b.vertex)
        return cls(site, a, b)

    @property
    def socle(self):
        return self.a.vertex

    @property
    def top(self):
        return self.b.vertex

    @property
    def winding(self) -> int:
        if not self.site.is_loop:
            return 0
        return self.site.max_shift_leq(self.a, self.b)

    @property
    def label(self) -> tuple:
        return (self.socle, self.top, self.winding)

    @property
    def length(self) -> int | None:
        """Composition length, ``None`` for objects of infinite length."""
        return self.site.count_between(self.a, self.b)

    @property
    def is_simple(self) -> bool:
        return self.a == self.b

    @property
    def is_projective(self) -> bool:
        return not self.site.has_pred(self.a)

    @property
    def is_injective(self) -> bool:
        return not self.site.has_succ(self.b)

    def shifted(self, k: int) -> tuple[CoverPoint, CoverPoint]:
        """The lift ``sigma^k [a, b]`` of this object."""
        return self.site.shift(self.a, k), self.site.shift(self.b, k)

    def __repr__(self):
        s, t, n = self.label
        return f"M({s},{t};{n})"


def make_object(site: Site, socle, top, winding: int = 0) -> IntervalObject:
    """The object ``M(socle, top; winding)``.

    The top lift sits ``winding + delta`` decks above the socle lift, where
    ``delta`` is 1 exactly when ``socle > top`` in the base order.
    """
    try:
        s = site.check_vertex(socle)
        t = site.check_vertex(top)
    except ValueError as exc:
        raise InvalidLabel(str(exc)) from None
    if winding < 0:
        raise InvalidLabel("winding must be non-negative")
    if not site.is_loop:
        if winding != 0:
            raise InvalidLabel(f"winding {winding} on linear site {site!r}")
        if s > t:
            raise InvalidLabel(f"socle {s} above top {t} on linear site")
        return IntervalObject(site, CoverPoint(0, s), CoverPoint(0, t))
    delta = 1 if s > t else 0
    return IntervalObject(site, CoverPoint(0, s), CoverPoint(winding + delta, t))


def simple(site: Site, v) -> IntervalObject:
    return make_object(site, v, v, 0)


def _same_site(*objs):
    site = objs[0].site
    for o in objs[1:]:
        if o.site != site:
            raise SiteMismatch(f"{site!r} vs {o.site!r}")
    return site


# Hom spaces


@dataclass(frozen=True)
class HomSpace:
    source: IntervalObject
    target: IntervalObject
    basis: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def image(self, k: int) -> tuple[CoverPoint, CoverPoint]:
        """Image of ``f_k`` as a cover interval inside the source coordinates."""
        if k not in self.basis:
            raise KeyError(k)
        return _shift(self.target.site, self.target.a, k), self.source.b


def _shift(site: Site, p: CoverPoint, k: int) -> CoverPoint:
    return site.shift(p, k) if site.is_loop else p


def hom_window(x: IntervalObject, y: IntervalObject) -> range:
    site = _same_site(x, y)
    if not site.is_loop:
        ok = x.a <= y.a <= x.b <= y.b
        return range(0, 1) if ok else range(0)
    lo = max(site.min_shift_geq(y.a, x.a), site.min_shift_geq(y.b, x.b))
    hi = site.max_shift_leq(y.a, x.b)
    return range(lo, max(lo, hi + 1))


def hom_space(x: IntervalObject, y: IntervalObject) -> HomSpace:
    return HomSpace(x, y, tuple(hom_window(x, y)))


def hom_dim(x: IntervalObject, y: IntervalObject) -> int:
    return len(hom_window(x, y))


def ext_dim(x: IntervalObject, y: IntervalObject) -> int:
    """``dim Ext^1(x, y)``, computed as ``dim Hom(y, tau x)``."""
    _same_site(x, y)
    if x.is_projective:
        return 0
    return hom_dim(y, tau(x))


# translation and almost split sequences


def tau(x: IntervalObject) -> IntervalObject:
    if x.is_projective:
        raise ProjectiveObject(f"{x!r} is projective")
    s = x.site
    return IntervalObject.from_cover(s, s.pred(x.a), s.pred(x.b))


def tau_inv(x: IntervalObject) -> IntervalObject:
    if x.is_injective:
        raise InjectiveObject(f"{x!r} is injective")
    s = x.site
    return IntervalObject.from_cover(s, s.succ(x.a), s.succ(x.b))


@dataclass(frozen=True)
class ArData:
    """The almost split sequence ``0 -> start -> (+) middle -> end -> 0``."""

    end: IntervalObject
    start: IntervalObject
    middle: tuple[IntervalObject, ...]
    # cover lifts used by the explicit realisation: start, middle..., end
    lifts: tuple = dc_field(default=(), compare=False, repr=False)


def ar_sequence(x: IntervalObject) -> ArData:
    if x.is_projective:
        raise ProjectiveObject(f"{x!r} is projective")
    s = x.site
    pa, pb = s.pred(x.a), s.pred(x.b)
    middle_lifts = [(pa, x.b)]
    if pb >= x.a:
        middle_lifts.append((x.a, pb))
    middle = tuple(IntervalObject.from_cover(s, u, v) for u, v in middle_lifts)
    lifts = ((pa, pb), tuple(middle_lifts), (x.a, x.b))
    return ArData(x, IntervalObject.from_cover(s, pa, pb), middle, lifts)


def irreducibles_out(x: IntervalObject) -> list[IntervalObject]:
    """Targets of irreducible maps out of ``x``: an epi then a mono."""
    s = x.site
    out = []
    if s.has_succ(x.a) and s.succ(x.a) <= x.b:
        out.append(IntervalObject.from_cover(s, s.succ(x.a), x.b))
    if s.has_succ(x.b):
        out.append(IntervalObject.from_cover(s, x.a, s.succ(x.b)))
    return out


def irreducibles_in(x: IntervalObject) -> list[IntervalObject]:
    """Sources of irreducible maps into ``x``: an epi then a mono."""
    s = x.site
    out = []
    if s.has_pred(x.a):
        out.append(IntervalObject.from_cover(s, s.pred(x.a), x.b))
    if s.has_pred(x.b) and s.pred(x.b) >= x.a:
        out.append(IntervalObject.from_cover(s, x.a, s.pred(x.b)))
    return out


# morphisms


@dataclass(frozen=True)
class Morphism:
    """A linear combination ``sum c_k f_k`` of basis maps."""

    source: IntervalObject
    target: IntervalObject
    coeffs: tuple[tuple[int, object], ...]
    field: Field = dc_field(default_factory=Field)

    @classmethod
    def make(cls, source, target, coeffs: dict, field: Field | None = None) -> "Morphism":
        field = field or Field()
        window = hom_window(source, target)
        clean = {}
        for k, c in coeffs.items():
            c = field(c)
            if field.is_zero(c):
                continue
            if k not in window:
                raise ValueError(f"f_{k} is not a basis map {source!r} -> {target!r}")
            clean[k] = c
        return cls(source, target, tuple(sorted(clean.items())), field)

    @classmethod
    def basis(cls, source, target, k: int, field: Field | None = None) -> "Morphism":
        return cls.make(source, target, {k: 1}, field)

    @classmethod
    def identity(cls, x: IntervalObject, field: Field | None = None) -> "Morphism":
        return cls.make(x, x, {0: 1}, field)

    @property
    def terms(self) -> dict:
        return dict(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Morphism") -> "Morphism":
        if (self.source, self.target) != (other.source, other.target):
            raise CompositionMismatch("cannot add morphisms between different objects")
        t = self.terms
        for k, c in other.coeffs:
            t[k] = self.field.add(t.get(k, self.field.zero), c)
        return Morphism.make(self.source, self.target, t, self.field)

    def scale(self, c) -> "Morphism":
        c = self.field(c)
        return Morphism.make(self.source, self.target, {k: self.field.mul(c, v) for k, v in self.coeffs}, self.field)

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return compose(self, other)


def compose(g: Morphism, f: Morphism) -> Morphism:
    """``g o f``: ``f_l`` after ``f_k`` is ``f_{k+l}`` when its image is nonzero."""
    if f.target != g.source:
        raise CompositionMismatch(f"{f.target!r} != {g.source!r}")
    if f.field != g.field:
        raise CompositionMismatch("morphisms over different fields")
    x, z = f.source, g.target
    site, fld = x.site, f.field
    out: dict[int, object] = {}
    for k, c in f.coeffs:
        for l, d in g.coeffs:
            if _shift(site, z.a, k + l) <= x.b:
                out[k + l] = fld.add(out.get(k + l, fld.zero), fld.mul(c, d))
    return Morphism.make(x, z, out, fld)


# monos, epis and subobjects


def has_mono(x: IntervalObject, y: IntervalObject) -> bool:
    site = x.site
    return any(_shift(site, y.a, k) == x.a for k in hom_window(x, y))


def has_epi(x: IntervalObject, y: IntervalObject) -> bool:
    site = x.site
    return any(_shift(site, y.b, k) == x.b for k in hom_window(x, y))


def is_subobject(x: IntervalObject, y: IntervalObject) -> bool:
    return has_mono(x, y)


@dataclass(frozen=True)
class SubobjectChain:
    """``0 = entries[0] < entries[1] < ...``; ``None`` stands for the zero object."""

    entries: tuple
    complete: bool


def subobject_chain(x: IntervalObject, limit: int | None = None) -> SubobjectChain:
    length = x.length
    if limit is None:
        if length is None:
            raise ValueError(f"{x!r} has infinite length; pass a limit")
        limit = length + 1
    entries = [None]
    for c in x.site.walk(x.a, x.b):
        if len(entries) >= limit:
            break
        entries.append(IntervalObject.from_cover(x.site, x.a, c))
    complete = length is not None and len(entries) == length + 1
    return SubobjectChain(tuple(entries[:limit]), complete)
