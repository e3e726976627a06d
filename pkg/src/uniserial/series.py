"""Power series truncated at a fixed precision, over an exact field."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import PrecisionMismatch
from .fields import Field


@dataclass(frozen=True)
class TruncatedSeries:
    """``c_0 + c_1 x + ... + c_{N-1} x^{N-1}`` modulo ``x^N``.

    ``min_order`` is 1 for elements of the ideal ``x k[[x]]``.
    """

    coeffs: tuple
    precision: int
    min_order: int = dc_field(default=0, compare=False)
    field: Field = dc_field(default_factory=Field)

    def __post_init__(self):
        if self.precision < 1:
            raise ValueError("precision must be at least 1")
        if len(self.coeffs) != self.precision:
            raise ValueError(f"expected {self.precision} coefficients, got {len(self.coeffs)}")
        if self.min_order not in (0, 1):
            raise ValueError("min_order is 0 or 1")
        if self.min_order == 1 and not self.field.is_zero(self.coeffs[0]):
            raise ValueError("constant term of an x k[[x]] element must vanish")

    @classmethod
    def make(cls, coeffs, precision: int, min_order: int = 0, field: Field | None = None) -> "TruncatedSeries":
        field = field or Field()
        cs = [field(c) for c in list(coeffs)[:precision]]
        cs += [field.zero] * (precision - len(cs))
        return cls(tuple(cs), precision, min_order, field)

    @classmethod
    def zero(cls, precision: int, min_order: int = 0, field: Field | None = None) -> "TruncatedSeries":
        return cls.make([], precision, min_order, field)

    @classmethod
    def one(cls, precision: int, field: Field | None = None) -> "TruncatedSeries":
        return cls.make([1], precision, 0, field)

    @classmethod
    def monomial(cls, e: int, precision: int, c=1, field: Field | None = None) -> "TruncatedSeries":
        field = field or Field()
        cs = [0] * precision
        if e < precision:
            cs[e] = c
        return cls.make(cs, precision, 1 if e >= 1 else 0, field)

    def with_min_order(self, m: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, self.precision, m, self.field)

    @property
    def valuation(self) -> int | None:
        """Least exponent with a nonzero coefficient, ``None`` for zero."""
        return next((i for i, c in enumerate(self.coeffs) if not self.field.is_zero(c)), None)

    def is_zero(self) -> bool:
        return self.valuation is None

    def _check(self, other: "TruncatedSeries"):
        if self.precision != other.precision:
            raise PrecisionMismatch(f"precision {self.precision} vs {other.precision}")
        if self.field != other.field:
            raise PrecisionMismatch("series over different fields")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        f = self.field
        cs = tuple(f.add(u, v) for u, v in zip(self.coeffs, other.coeffs))
        return TruncatedSeries(cs, self.precision, min(self.min_order, other.min_order), f)

    def __neg__(self) -> "TruncatedSeries":
        return self.scale(-1)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, c) -> "TruncatedSeries":
        f = self.field
        c = f(c)
        return TruncatedSeries(tuple(f.mul(c, u) for u in self.coeffs), self.precision, self.min_order, f)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        f, n = self.field, self.precision
        out = [f.zero] * n
        for i, u in enumerate(self.coeffs):
            if f.is_zero(u):
                continue
            for j in range(n - i):
                v = other.coeffs[j]
                if not f.is_zero(v):
                    out[i + j] = f.add(out[i + j], f.mul(u, v))
        return TruncatedSeries(tuple(out), n, min(1, self.min_order + other.min_order), f)

    def __repr__(self):
        terms = [f"{c}" if i == 0 else f"{c}x^{i}" for i, c in enumerate(self.coeffs) if not self.field.is_zero(c)]
        return (" + ".join(terms) or "0") + f" + O(x^{self.precision})"
