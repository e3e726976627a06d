"""Injective rays, the completed matrix algebra and the path coalgebra.

The injective envelope of a simple on a loop site is the ray ``[a, oo)``.
Basis maps ``f_k`` between rays compose without vanishing, so a Hom space
between rays is ``k[[x]]`` (when ``f_0`` exists) or ``x k[[x]]``, with
``f_k`` playing the role of ``x^k``.  Everything topological is handled at
a finite truncation ``N`` together with an explicit filtration degree.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field as dc_field

from .errors import InfiniteLength, NotALoop, PrecisionMismatch, SiteMismatch
from .fields import Field
from .paths import anchored_lift, anchored_sort
from .series import TruncatedSeries
from .site import CoverPoint, Site
from .tube import IntervalObject

DEFAULT_TRUNC = 8


@dataclass(frozen=True)
class InjectiveRay:
    """The injective envelope ``[a, oo)`` of the simple at ``a.vertex``.

    The stored lift fixes the identification of Hom spaces with series.
    """

    site: Site
    a: CoverPoint

    def __post_init__(self):
        if not self.site.is_loop:
            raise NotALoop(f"injective rays live on loop sites, not {self.site!r}")
        self.site.point(self.a.deck, self.a.vertex)

    @property
    def socle(self):
        return self.a.vertex

    def same_object(self, other: "InjectiveRay") -> bool:
        """Rays are equal up to the deck shift."""
        return self.site == other.site and self.socle == other.socle


@dataclass(frozen=True)
class RayHom:
    """``Hom(source, target)``: basis maps ``f_k`` for ``k >= min_order``."""

    source: InjectiveRay
    target: InjectiveRay
    min_order: int
    precision: int

    @property
    def basis(self) -> range:
        return range(self.min_order, self.precision)

    def element(self, coeffs, field: Field | None = None) -> TruncatedSeries:
        return TruncatedSeries.make(coeffs, self.precision, self.min_order, field)


def ray_hom(i1: InjectiveRay, i2: InjectiveRay, n: int = DEFAULT_TRUNC) -> RayHom:
    if i1.site != i2.site:
        raise SiteMismatch(f"{i1.site!r} vs {i2.site!r}")
    if n < 1:
        raise ValueError("precision must be at least 1")
    k0 = i1.site.min_shift_geq(i2.a, i1.a)
    if k0 not in (0, 1):
        raise ValueError("ray lifts are not anchored within one deck")
    return RayHom(i1, i2, k0, n)


def ray_compose(g: TruncatedSeries, f: TruncatedSeries) -> TruncatedSeries:
    """``g o f``; on rays ``f_l o f_k = f_{k+l}`` never vanishes."""
    if g.precision != f.precision:
        raise PrecisionMismatch(f"precision {g.precision} vs {f.precision}")
    return g * f


# the completed matrix algebra


@dataclass(frozen=True)
class SeriesMatrix:
    algebra: "SeriesMatrixAlgebra"
    entries: tuple  # tuple of row tuples of TruncatedSeries

    def __getitem__(self, ij) -> TruncatedSeries:
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        return self.algebra.add(self, other)

    def __mul__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        return self.algebra.multiply(self, other)

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)


@dataclass(frozen=True)
class SeriesMatrixAlgebra:
    """``End(I(T_1) + ... + I(T_m))`` truncated at ``x^N``.

    Entry ``(i, j)`` is ``Hom(I(T_j), I(T_i))`` so that composition is the
    matrix product.  The filtration degree of ``x^e`` in slot ``(i, j)`` is
    ``e*m + i - j``, the length of the corresponding path.
    """

    keep: tuple
    rays: tuple
    pattern: tuple
    precision: int
    field: Field = dc_field(default_factory=Field)

    @property
    def size(self) -> int:
        return len(self.keep)

    def element(self, entries) -> SeriesMatrix:
        m, n = self.size, self.precision
        rows = []
        for i in range(m):
            row = []
            for j in range(m):
                e = entries[i][j]
                if not isinstance(e, TruncatedSeries):
                    e = TruncatedSeries.make(e, n, self.pattern[i][j], self.field)
                if e.precision != n:
                    raise PrecisionMismatch(f"entry precision {e.precision} vs {n}")
                row.append(e.with_min_order(self.pattern[i][j]))
            rows.append(tuple(row))
        return SeriesMatrix(self, tuple(rows))

    def zero(self) -> SeriesMatrix:
        return self.element([[[] for _ in range(self.size)] for _ in range(self.size)])

    def one(self) -> SeriesMatrix:
        return self.element([[[1] if i == j else [] for j in range(self.size)] for i in range(self.size)])

    def unit(self, i: int, j: int, e: int = 0, c=1) -> SeriesMatrix:
        """``c x^e`` in slot ``(i, j)``."""
        if e < self.pattern[i][j]:
            raise ValueError(f"slot ({i}, {j}) only holds multiples of x")
        cs = [[[] for _ in range(self.size)] for _ in range(self.size)]
        cs[i][j] = [0] * e + [c]
        return self.element(cs)

    def add(self, u: SeriesMatrix, v: SeriesMatrix) -> SeriesMatrix:
        return self.element([[u[i, j] + v[i, j] for j in range(self.size)] for i in range(self.size)])

    def multiply(self, u: SeriesMatrix, v: SeriesMatrix) -> SeriesMatrix:
        m = self.size
        out = []
        for i in range(m):
            row = []
            for k in range(m):
                acc = TruncatedSeries.zero(self.precision, 0, self.field)
                for j in range(m):
                    acc = acc + ray_compose(u[i, j], v[j, k])
                row.append(acc)
            out.append(row)
        return self.element(out)

    def random(self, rng: random.Random, density: float = 0.5, bound: int = 5) -> SeriesMatrix:
        m, n = self.size, self.precision
        cs = []
        for i in range(m):
            row = []
            for j in range(m):
                lo = self.pattern[i][j]
                row.append([0] * lo + [rng.randint(-bound, bound) if rng.random() < density else 0
                                       for _ in range(n - lo)])
            cs.append(row)
        return self.element(cs)

    def degree(self, i: int, j: int, e: int) -> int:
        return e * self.size + i - j

    def filtration_degree(self, u: SeriesMatrix) -> int | None:
        """Least degree of a nonzero term, ``None`` for zero."""
        best = None
        for i in range(self.size):
            for j in range(self.size):
                for e, c in enumerate(u[i, j].coeffs):
                    if not self.field.is_zero(c):
                        d = self.degree(i, j, e)
                        best = d if best is None else min(best, d)
        return best

    def truncate_degree(self, u: SeriesMatrix, top: int) -> SeriesMatrix:
        """Drop every term of filtration degree above ``top``."""
        cs = [[[c if self.degree(i, j, e) <= top else 0 for e, c in enumerate(u[i, j].coeffs)]
               for j in range(self.size)] for i in range(self.size)]
        return self.element(cs)


def inj_matrix_algebra(site: Site, keep, n: int = DEFAULT_TRUNC, anchor=None,
                       field: Field | None = None) -> SeriesMatrixAlgebra:
    """The truncated endomorphism algebra of the injectives of ``keep``.

    Simples are sorted in the order anchored at ``anchor`` (default: the
    least kept vertex) and every ray uses its anchored lift.
    """
    if not site.is_loop:
        raise NotALoop(f"injective rays live on loop sites, not {site!r}")
    keep = [site.check_vertex(v) for v in keep]
    if not keep:
        raise ValueError("keep set is empty")
    anchor = min(keep) if anchor is None else site.check_vertex(anchor)
    ordered = tuple(anchored_sort(site, anchor, sorted(set(keep))))
    rays = tuple(InjectiveRay(site, anchored_lift(site, anchor, v)) for v in ordered)
    pattern = tuple(tuple(ray_hom(rays[j], rays[i], n).min_order for j in range(len(rays)))
                    for i in range(len(rays)))
    return SeriesMatrixAlgebra(ordered, rays, pattern, n, field or Field())


def displayed_pattern(m: int) -> tuple:
    """``k[[x]]`` on and below the diagonal, ``x k[[x]]`` strictly above."""
    return tuple(tuple(1 if j > i else 0 for j in range(m)) for i in range(m))


# the path coalgebra of the cyclic quiver (arrows v -> v-1)


@dataclass(frozen=True, order=True)
class Path:
    source: int
    length: int
    rank: int = dc_field(compare=False, default=1)

    @property
    def target(self) -> int:
        return (self.source - self.length) % self.rank

    def __repr__(self):
        return f"p({self.source};{self.length})"


@dataclass(frozen=True)
class PathCoalgebra:
    rank: int
    max_length: int
    basis: tuple
    delta: dict = dc_field(compare=False)
    counit: dict = dc_field(compare=False)

    def check_counit(self) -> Path | None:
        """First basis path violating a counit law, or ``None``."""
        for p in self.basis:
            left = Counter()
            right = Counter()
            for u, v in self.delta[p]:
                if self.counit[u]:
                    left[v] += self.counit[u]
                if self.counit[v]:
                    right[u] += self.counit[v]
            if +left != Counter({p: 1}) or +right != Counter({p: 1}):
                return p
        return None

    def check_coassociativity(self) -> Path | None:
        """First basis path with ``(D x 1) D != (1 x D) D``, or ``None``."""
        for p in self.basis:
            left = Counter()
            right = Counter()
            for u, v in self.delta[p]:
                for u1, u2 in self.delta[u]:
                    left[(u1, u2, v)] += 1
                for v1, v2 in self.delta[v]:
                    right[(u, v1, v2)] += 1
            if left != right:
                return p
        return None

    def dual_product(self) -> dict:
        """Structure constants of the dual algebra: ``(p, q) -> Counter of c``."""
        out: dict = {}
        for c in self.basis:
            for u, v in self.delta[c]:
                out.setdefault((u, v), Counter())[c] += 1
        return out


def path_coalgebra(r: int, n: int) -> PathCoalgebra:
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")
    basis = tuple(Path(v, length, r) for length in range(n + 1) for v in range(r))
    delta = {}
    for p in basis:
        delta[p] = tuple((Path(p.source, i, r), Path((p.source - i) % r, p.length - i, r))
                         for i in range(p.length + 1))
    counit = {p: 1 if p.length == 0 else 0 for p in basis}
    return PathCoalgebra(r, n, basis, delta, counit)


def path_to_matrix(p: Path, algebra: SeriesMatrixAlgebra) -> SeriesMatrix:
    """The element ``e_{s,t} x^e`` dual to the path ``p`` from ``s`` to ``t``."""
    row, col = algebra.keep.index(p.source), algebra.keep.index(p.target)
    e, rem = divmod(p.length - row + col, algebra.size)
    if rem:
        raise ValueError(f"{p!r} has no slot in this algebra")
    return algebra.unit(row, col, e)


@dataclass(frozen=True)
class DualCheck:
    ok: bool
    counterexample: tuple | None = None


def coalgebra_dual_check(c: PathCoalgebra, a: SeriesMatrixAlgebra) -> DualCheck:
    """Compare the dual of ``c`` with ``a`` modulo paths longer than ``c.max_length``.

    Dual basis elements go to matrix units; the check requires this to be
    a bijection onto the terms of degree at most ``N``, to send the counit
    to the identity, and to match every structure constant.
    """
    if a.size != c.rank:
        return DualCheck(False, ("size", a.size, c.rank))
    image = {p: path_to_matrix(p, a) for p in c.basis}
    slots = {(i, j, e) for i in range(a.size) for j in range(a.size) for e in range(a.precision)
             if e >= a.pattern[i][j] and a.degree(i, j, e) <= c.max_length}
    hit = set()
    for p, u in image.items():
        hit |= {(i, j, e) for i in range(a.size) for j in range(a.size)
                for e, x in enumerate(u[i, j].coeffs) if not a.field.is_zero(x)}
    if hit != slots or len(image) != len(slots):
        return DualCheck(False, ("basis", tuple(sorted(slots ^ hit))))
    unit = a.zero()
    for p in c.basis:
        if c.counit[p]:
            unit = unit + image[p]
    if unit != a.one():
        return DualCheck(False, ("unit",))
    consts = c.dual_product()
    for p in c.basis:
        for q in c.basis:
            want = a.zero()
            for r_, mult in consts.get((p, q), Counter()).items():
                for _ in range(mult):
                    want = want + image[r_]
            got = a.truncate_degree(image[p] * image[q], c.max_length)
            if got != want:
                return DualCheck(False, (p, q))
    return DualCheck(True)


# comodules


@dataclass(frozen=True)
class Coaction:
    """Right coaction on the point basis of a finite-length tube object."""

    obj: IntervalObject
    basis: tuple
    rho: dict  # point z -> tuple of (point, Path)
    coalgebra: PathCoalgebra

    def check_counit(self) -> int | None:
        c = self.coalgebra
        for z in self.basis:
            acc = Counter()
            for w, p in self.rho[z]:
                if c.counit[p]:
                    acc[w] += c.counit[p]
            if +acc != Counter({z: 1}):
                return z
        return None

    def check_coassociativity(self) -> int | None:
        c = self.coalgebra
        for z in self.basis:
            left = Counter()
            right = Counter()
            for w, p in self.rho[z]:
                for w2, q in self.rho[w]:
                    left[(w2, q, p)] += 1
                for p1, p2 in c.delta[p]:
                    right[(w, p1, p2)] += 1
            if left != right:
                return z
        return None


def comodule_coaction(x: IntervalObject, coalgebra: PathCoalgebra | None = None) -> Coaction:
    """``rho(z) = sum over L of (z + L) (x) path of length L ending at z``."""
    site = x.site
    if x.length is None:
        raise InfiniteLength(f"{x!r} has infinite length")
    if site.base != "cyclic":
        raise ValueError("comodule realisation needs a finite tube")
    r = site.rank
    lo, hi = site.to_z(x.a), site.to_z(x.b)
    c = coalgebra or path_coalgebra(r, hi - lo)
    if c.rank != r or c.max_length < hi - lo:
        raise ValueError("coalgebra too small for this object")
    basis = tuple(range(lo, hi + 1))
    rho = {z: tuple((z + length, Path((z + length) % r, length, r)) for length in range(hi - z + 1))
           for z in basis}
    return Coaction(x, basis, rho, c)
