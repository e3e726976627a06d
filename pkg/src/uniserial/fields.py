"""Exact scalar fields and the small amount of linear algebra the package needs.

Two fields are supported: the rationals (``Fraction`` scalars) and prime
fields F_p (scalars are ints in ``range(p)``).  Matrices are plain nested
lists or integer numpy arrays; ranks over F_p go through a vectorised numpy
elimination, everything else through a generic row reduction.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

DEFAULT_PRIME = 1009


class Field:
    """The rationals (``p=None``) or the prime field with ``p`` elements."""

    def __init__(self, p: int | None = None):
        if p is not None:
            p = int(p)
            if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
                raise ValueError(f"{p} is not prime")
        self.p = p

    @classmethod
    def parse(cls, value) -> "Field":
        """Accept ``"Q"``, ``None``, an int, or a decimal string."""
        if value is None or isinstance(value, Field):
            return value if isinstance(value, Field) else cls()
        if isinstance(value, str):
            if value.strip().upper() in ("Q", "QQ", "RATIONALS"):
                return cls()
            return cls(int(value))
        return cls(int(value))

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Field(Q)" if self.p is None else f"Field(F_{self.p})"

    @property
    def name(self) -> str:
        return "Q" if self.p is None else str(self.p)

    # scalar arithmetic

    def __call__(self, x):
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def add(self, x, y):
        return x + y if self.p is None else (x + y) % self.p

    def sub(self, x, y):
        return x - y if self.p is None else (x - y) % self.p

    def mul(self, x, y):
        return x * y if self.p is None else (x * y) % self.p

    def neg(self, x):
        return -x if self.p is None else (-x) % self.p

    def inv(self, x):
        if self.is_zero(x):
            raise ZeroDivisionError("inverse of zero")
        return 1 / x if self.p is None else pow(int(x), -1, self.p)

    def is_zero(self, x) -> bool:
        return x == 0

    # matrices

    def matrix(self, rows) -> list[list]:
        return [[self(v) for v in row] for row in np.asarray(rows, dtype=object).tolist()] if len(rows) else []

    def rank(self, rows) -> int:
        a = np.asarray(rows)
        if a.size == 0:
            return 0
        if self.p is not None and a.dtype.kind in "iu":
            return _rank_mod_p(a, self.p)
        return len(self.rref(self.matrix(a.tolist()))[1])

    def rref(self, rows: list[list]) -> tuple[list[list], list[int]]:
        """Reduced row echelon form of a matrix already coerced into the field."""
        m = [list(r) for r in rows]
        pivots: list[int] = []
        if not m:
            return m, pivots
        ncols = len(m[0])
        r = 0
        for c in range(ncols):
            piv = next((i for i in range(r, len(m)) if not self.is_zero(m[i][c])), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = self.inv(m[r][c])
            m[r] = [self.mul(inv, v) for v in m[r]]
            for i in range(len(m)):
                if i != r and not self.is_zero(m[i][c]):
                    f = m[i][c]
                    m[i] = [self.sub(vi, self.mul(f, vr)) for vi, vr in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == len(m):
                break
        return m, pivots

    def nullspace(self, rows, ncols: int | None = None) -> list[list]:
        """Basis of the right kernel ``{v : A v = 0}``."""
        a = self.matrix(rows) if len(rows) else []
        n = ncols if ncols is not None else (len(a[0]) if a else 0)
        if not a:
            return [[self.one if i == j else self.zero for i in range(n)] for j in range(n)]
        red, pivots = self.rref(a)
        free = [c for c in range(n) if c not in pivots]
        basis = []
        for f in free:
            v = [self.zero] * n
            v[f] = self.one
            for row, pc in zip(red, pivots):
                v[pc] = self.neg(row[f])
            basis.append(v)
        return basis

    def solvable(self, a, b) -> bool:
        """Whether ``A x = b`` has a solution."""
        a = np.asarray(a)
        b = np.asarray(b).reshape(-1, 1)
        if a.ndim < 2 or a.shape[1] == 0:
            return all(self.is_zero(self(v)) for v in b.ravel().tolist())
        return self.rank(a) == self.rank(np.hstack([a, b]))

    def matmul(self, x: list[list], y: list[list]) -> list[list]:
        if not x or not y:
            return [[self.zero] * (len(y[0]) if y else 0) for _ in x]
        cols = list(zip(*y))
        out = []
        for row in x:
            out_row = []
            for col in cols:
                s = self.zero
                for u, v in zip(row, col):
                    if not self.is_zero(u) and not self.is_zero(v):
                        s = self.add(s, self.mul(u, v))
                out_row.append(s)
            out.append(out_row)
        return out

    def inverse(self, rows) -> list[list] | None:
        """Inverse of a square matrix, or ``None`` when it is singular."""
        a = self.matrix(rows) if len(rows) else []
        n = len(a)
        if any(len(r) != n for r in a):
            return None
        aug = [r + [self.one if i == j else self.zero for j in range(n)] for i, r in enumerate(a)]
        red, pivots = self.rref(aug)
        if pivots[:n] != list(range(n)):
            return None
        return [r[n:] for r in red]

    def is_nilpotent(self, rows) -> bool:
        a = self.matrix(rows) if len(rows) else []
        n = len(a)
        if n == 0:
            return True
        power = a
        for _ in range(n - 1):
            power = self.matmul(power, a)
        return all(self.is_zero(v) for r in power for v in r)


def _rank_mod_p(a: np.ndarray, p: int) -> int:
    m = np.array(a, dtype=np.int64) % p
    nrows, ncols = m.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        below = m[r + 1:, c]
        idx = np.nonzero(below)[0]
        if idx.size:
            rows = r + 1 + idx
            m[rows] = (m[rows] - np.outer(m[rows, c], m[r])) % p
        r += 1
    return r
