"""Locally discrete linear orders, their covers and deck shifts.

Every category in the package lives on a :class:`Site`.  A site is a base
order ``L`` (``cyclic(r)``, ``int``, ``int_pairs_lex`` or ``finite(n)``)
together with the cover ``Z x L`` ordered lexicographically.  Loop sites
carry the deck shift ``sigma(m, v) = (m + 1, v)``; linear sites only use
deck 0.  For ``cyclic(r)`` the cover is the integer line, ``z = m*r + v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .errors import NotALoop, OutOfRange

Vertex = Union[int, tuple]

LOOP = "loop"
LINEAR = "linear"
BASES = ("cyclic", "int", "int_pairs_lex", "finite")


@dataclass(frozen=True, order=True)
class CoverPoint:
    """A point ``(deck, vertex)`` of the cover; ordered lexicographically."""

    deck: int
    vertex: Vertex

    def __repr__(self):
        return f"({self.deck}, {self.vertex})"


@dataclass(frozen=True)
class Site:
    kind: str
    base: str
    rank: int | None = None
    size: int | None = None

    def __post_init__(self):
        if self.kind not in (LOOP, LINEAR):
            raise ValueError(f"unknown site kind {self.kind!r}")
        if self.base not in BASES:
            raise ValueError(f"unknown base {self.base!r}")
        if self.base == "cyclic":
            if self.kind != LOOP:
                raise ValueError("cyclic bases only occur on loop sites")
            if self.rank is None or self.rank < 1:
                raise ValueError("cyclic base needs rank >= 1")
        if self.base == "finite":
            if self.kind != LINEAR:
                raise ValueError("finite bases only occur on linear sites")
            if self.size is None or self.size < 1:
                raise ValueError("finite base needs size >= 1")

    def __repr__(self):
        extra = f"({self.rank})" if self.base == "cyclic" else f"({self.size})" if self.base == "finite" else ""
        return f"{self.kind}/{self.base}{extra}"

    @property
    def is_loop(self) -> bool:
        return self.kind == LOOP

    @property
    def is_finite_tube(self) -> bool:
        return self.base == "cyclic"

    # base order

    def check_vertex(self, v) -> Vertex:
        if self.base == "int_pairs_lex":
            if not (isinstance(v, (tuple, list)) and len(v) == 2 and all(isinstance(c, int) for c in v)):
                raise ValueError(f"vertex {v!r} is not an integer pair")
            return (int(v[0]), int(v[1]))
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValueError(f"vertex {v!r} is not an integer")
        if self.base == "cyclic" and not 0 <= v < self.rank:
            raise ValueError(f"vertex {v} outside [0, {self.rank - 1}]")
        if self.base == "finite" and not 1 <= v <= self.size:
            raise ValueError(f"vertex {v} outside [1, {self.size}]")
        return v

    def point(self, deck: int, vertex) -> CoverPoint:
        vertex = self.check_vertex(vertex)
        if not self.is_loop and deck != 0:
            raise ValueError("linear sites only use deck 0")
        return CoverPoint(deck, vertex)

    @property
    def min_vertex(self) -> Vertex | None:
        return 1 if self.base == "finite" else None

    @property
    def max_vertex(self) -> Vertex | None:
        return self.size if self.base == "finite" else None

    def vertices(self) -> list[Vertex]:
        """All base vertices; only defined for finite bases."""
        if self.base == "cyclic":
            return list(range(self.rank))
        if self.base == "finite":
            return list(range(1, self.size + 1))
        raise ValueError(f"{self!r} has infinitely many vertices")

    # cover order

    def succ(self, p: CoverPoint) -> CoverPoint:
        v = p.vertex
        if self.base == "cyclic":
            return CoverPoint(p.deck + 1, 0) if v == self.rank - 1 else CoverPoint(p.deck, v + 1)
        if self.base == "int":
            return CoverPoint(p.deck, v + 1)
        if self.base == "int_pairs_lex":
            return CoverPoint(p.deck, (v[0], v[1] + 1))
        if v == self.size:
            raise OutOfRange(f"{v} is the maximum of {self!r}")
        return CoverPoint(p.deck, v + 1)

    def pred(self, p: CoverPoint) -> CoverPoint:
        v = p.vertex
        if self.base == "cyclic":
            return CoverPoint(p.deck - 1, self.rank - 1) if v == 0 else CoverPoint(p.deck, v - 1)
        if self.base == "int":
            return CoverPoint(p.deck, v - 1)
        if self.base == "int_pairs_lex":
            return CoverPoint(p.deck, (v[0], v[1] - 1))
        if v == 1:
            raise OutOfRange(f"{v} is the minimum of {self!r}")
        return CoverPoint(p.deck, v - 1)

    def has_succ(self, p: CoverPoint) -> bool:
        return not (self.base == "finite" and p.vertex == self.size)

    def has_pred(self, p: CoverPoint) -> bool:
        return not (self.base == "finite" and p.vertex == 1)

    def shift(self, p: CoverPoint, k: int = 1) -> CoverPoint:
        """The deck shift applied ``k`` times (``k`` may be negative)."""
        if not self.is_loop:
            raise NotALoop(f"{self!r} has no deck shift")
        return CoverPoint(p.deck + k, p.vertex)

    @staticmethod
    def compare(p: CoverPoint, q: CoverPoint) -> int:
        """-1, 0 or 1 as ``p`` is below, equal to or above ``q``."""
        return (p > q) - (p < q)

    def min_shift_geq(self, p: CoverPoint, q: CoverPoint) -> int:
        """Least ``k`` with ``shift(p, k) >= q``."""
        return q.deck - p.deck + (0 if p.vertex >= q.vertex else 1)

    def max_shift_leq(self, p: CoverPoint, q: CoverPoint) -> int:
        """Greatest ``k`` with ``shift(p, k) <= q``."""
        return q.deck - p.deck - (0 if p.vertex <= q.vertex else 1)

    def count_between(self, p: CoverPoint, q: CoverPoint) -> int | None:
        """Number of points in ``[p, q]``, or ``None`` if it is infinite."""
        if q < p:
            return 0
        if self.base == "cyclic":
            return (q.deck - p.deck) * self.rank + q.vertex - p.vertex + 1
        if p.deck != q.deck:
            return None
        if self.base == "int_pairs_lex":
            if p.vertex[0] != q.vertex[0]:
                return None
            return q.vertex[1] - p.vertex[1] + 1
        return q.vertex - p.vertex + 1

    def walk(self, p: CoverPoint, q: CoverPoint | None = None) -> Iterator[CoverPoint]:
        """Points ``p, succ p, ...`` up to ``q`` (inclusive), or forever."""
        x = p
        while q is None or x <= q:
            yield x
            if not self.has_succ(x):
                return
            x = self.succ(x)

    # cyclic flattening

    def to_z(self, p: CoverPoint) -> int:
        if self.base != "cyclic":
            raise ValueError("integer presentation only exists for cyclic bases")
        return p.deck * self.rank + p.vertex

    def from_z(self, z: int) -> CoverPoint:
        if self.base != "cyclic":
            raise ValueError("integer presentation only exists for cyclic bases")
        return CoverPoint(z // self.rank, z % self.rank)


def tube(rank: int) -> Site:
    """The finite tube of the cyclic quiver with ``rank`` vertices."""
    return Site(LOOP, "cyclic", rank=rank)


def big_tube(base: str = "int") -> Site:
    return Site(LOOP, base)


def line(size: int | None = None, base: str | None = None) -> Site:
    """A linear site: ``finite(size)`` when a size is given, else ``base`` (default ``int``)."""
    if size is not None:
        return Site(LINEAR, "finite", size=size)
    return Site(LINEAR, base or "int")
