"""Independent ground truth from explicit matrix representations.

Objects of finite tubes and finite lines are realised as nilpotent
representations of the cyclic quiver (arrows ``v -> v-1 mod r``) or of the
linearly oriented ``A_n`` quiver (arrows ``v -> v-1``).  The basis of a
realised interval is its set of cover points; every arrow sends a point to
its predecessor, or to zero below the socle.  Hom spaces are nullspaces of
the intertwining equations, Ext comes from the Euler form, and almost split
sequences are checked by rank computations.  None of this uses the interval
formulas of :mod:`uniserial.tube`.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import InfiniteLength, RankMismatch, SupportOutOfWindow
from .fields import DEFAULT_PRIME, Field
from .site import CoverPoint, Site
from .tube import IntervalObject, ar_sequence, ext_dim, hom_dim, tau


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple  # (source index, target index)

    @property
    def rank(self) -> int:
        return len(self.vertices)


def cyclic_quiver(r: int) -> Quiver:
    return Quiver(tuple(range(r)), tuple((v, (v - 1) % r) for v in range(r)))


def linear_quiver(n: int) -> Quiver:
    return Quiver(tuple(range(1, n + 1)), tuple((i, i - 1) for i in range(1, n)))


def quiver_of(site: Site) -> Quiver:
    if site.base == "cyclic":
        return cyclic_quiver(site.rank)
    if site.base == "finite":
        return linear_quiver(site.size)
    raise ValueError(f"no finite quiver for {site!r}")


@dataclass(frozen=True)
class MatrixRep:
    quiver: Quiver
    dims: tuple
    maps: tuple  # one integer matrix per arrow, shape (dims[target], dims[source])
    basis: tuple | None = dc_field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return self.quiver.rank

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def __add__(self, other: "MatrixRep") -> "MatrixRep":
        _same_quiver(self, other)
        maps = []
        for (s, t), m1, m2 in zip(self.quiver.arrows, self.maps, other.maps):
            blk = np.zeros((self.dims[t] + other.dims[t], self.dims[s] + other.dims[s]), dtype=np.int64)
            blk[: self.dims[t], : self.dims[s]] = m1
            blk[self.dims[t]:, self.dims[s]:] = m2
            maps.append(blk)
        dims = tuple(a + b for a, b in zip(self.dims, other.dims))
        return MatrixRep(self.quiver, dims, tuple(maps))


def _same_quiver(m: MatrixRep, n: MatrixRep):
    if m.quiver != n.quiver:
        raise RankMismatch(f"quivers of rank {m.rank} and {n.rank}")


def realize_lift(site: Site, a: CoverPoint, b: CoverPoint) -> MatrixRep:
    """Realise the cover interval ``[a, b]`` with its points as basis."""
    if site.count_between(a, b) is None:
        raise InfiniteLength(f"[{a}, {b}] has infinite length")
    q = quiver_of(site)
    index = {v: i for i, v in enumerate(q.vertices)}
    basis = [[] for _ in q.vertices]
    for p in site.walk(a, b):
        basis[index[p.vertex]].append(p)
    maps = []
    for s, t in q.arrows:
        m = np.zeros((len(basis[t]), len(basis[s])), dtype=np.int64)
        pos = {p: i for i, p in enumerate(basis[t])}
        for j, p in enumerate(basis[s]):
            if site.has_pred(p) and site.pred(p) in pos:
                m[pos[site.pred(p)], j] = 1
        maps.append(m)
    return MatrixRep(q, tuple(len(x) for x in basis), tuple(maps), tuple(tuple(x) for x in basis))


def realize(x: IntervalObject) -> MatrixRep:
    return realize_lift(x.site, x.a, x.b)


def _hom_system(m: MatrixRep, n: MatrixRep) -> tuple[np.ndarray, int]:
    """Matrix of the intertwining equations; unknowns are row-major ``phi_v``."""
    _same_quiver(m, n)
    offsets, total = [], 0
    for mv, nv in zip(m.dims, n.dims):
        offsets.append(total)
        total += mv * nv
    blocks = []
    for (s, t), ma, na in zip(m.quiver.arrows, m.maps, n.maps):
        rows = n.dims[t] * m.dims[s]
        if rows == 0:
            continue
        eq = np.zeros((rows, total), dtype=np.int64)
        # phi_t @ M_a - N_a @ phi_s = 0
        if m.dims[t] and n.dims[t]:
            eq[:, offsets[t]: offsets[t] + n.dims[t] * m.dims[t]] += np.kron(np.eye(n.dims[t], dtype=np.int64), ma.T)
        if m.dims[s] and n.dims[s]:
            eq[:, offsets[s]: offsets[s] + n.dims[s] * m.dims[s]] -= np.kron(na, np.eye(m.dims[s], dtype=np.int64))
        blocks.append(eq)
    a = np.vstack(blocks) if blocks else np.zeros((0, total), dtype=np.int64)
    return a, total


def oracle_hom_dim(m: MatrixRep, n: MatrixRep, field: Field | None = None) -> int:
    field = field or Field(DEFAULT_PRIME)
    a, unknowns = _hom_system(m, n)
    if unknowns == 0:
        return 0
    return unknowns - field.rank(a)


def euler_form(m: MatrixRep, n: MatrixRep) -> int:
    _same_quiver(m, n)
    return sum(x * y for x, y in zip(m.dims, n.dims)) - sum(m.dims[s] * n.dims[t] for s, t in m.quiver.arrows)


def oracle_ext_dim(m: MatrixRep, n: MatrixRep, field: Field | None = None) -> int:
    return oracle_hom_dim(m, n, field) - euler_form(m, n)


def oracle_socle_top(m: MatrixRep, field: Field | None = None) -> tuple[tuple, tuple]:
    """Dimension vectors of the socle and of the top."""
    field = field or Field(DEFAULT_PRIME)
    q = m.quiver
    socle, top = [], []
    for v in range(q.rank):
        out = [mat for (s, t), mat in zip(q.arrows, m.maps) if s == v and mat.shape[0]]
        k = m.dims[v] - (field.rank(np.vstack(out)) if out and m.dims[v] else 0)
        socle.append(k)
        inc = [mat for (s, t), mat in zip(q.arrows, m.maps) if t == v and mat.shape[1]]
        c = m.dims[v] - (field.rank(np.hstack(inc)) if inc and m.dims[v] else 0)
        top.append(c)
    return tuple(socle), tuple(top)


@dataclass(frozen=True)
class SubmoduleLattice:
    """The socle series ``0 = U_0 < U_1 < ...`` by dimension vectors."""

    series: tuple
    is_chain: bool

    @property
    def count(self) -> int:
        return len(self.series)


def oracle_submodules(m: MatrixRep, field: Field | None = None) -> SubmoduleLattice:
    """Socle series of ``m``; the submodules form a chain iff every layer is simple."""
    field = field or Field(DEFAULT_PRIME)
    q = m.quiver
    spaces = [[] for _ in range(q.rank)]  # basis rows of U_v
    series = [tuple(0 for _ in range(q.rank))]
    chain = True
    while sum(series[-1]) < m.dim:
        new = []
        for v in range(q.rank):
            constraints = []
            for (s, t), mat in zip(q.arrows, m.maps):
                if s != v or m.dims[t] == 0:
                    continue
                ann = _annihilator(spaces[t], m.dims[t], field)
                if ann:
                    constraints.extend(field.matmul(ann, field.matrix(mat.tolist())))
            if m.dims[v] == 0:
                new.append([])
            elif constraints:
                new.append(field.nullspace(constraints, m.dims[v]))
            else:
                new.append(field.nullspace([], m.dims[v]))
        dims = tuple(len(b) for b in new)
        if dims == series[-1]:
            break
        if sum(dims) - sum(series[-1]) != 1:
            chain = False
        series.append(dims)
        spaces = new
    return SubmoduleLattice(tuple(series), chain and sum(series[-1]) == m.dim)


def _annihilator(rows: list, n: int, field: Field) -> list:
    """Rows spanning ``{y : y . u = 0 for u in rows}``."""
    if not rows:
        return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    return field.nullspace(rows, n)


# explicit maps between realised lifts


def point_map(src: MatrixRep, tgt: MatrixRep, sign: int = 1) -> list[np.ndarray]:
    """Per-vertex matrices sending each basis point to the same point, or to 0."""
    out = []
    for bs, bt in zip(src.basis, tgt.basis):
        pos = {p: i for i, p in enumerate(bt)}
        m = np.zeros((len(bt), len(bs)), dtype=np.int64)
        for j, p in enumerate(bs):
            if p in pos:
                m[pos[p], j] = sign
        out.append(m)
    return out


def _hstack(blocks, rows):
    return np.hstack(blocks) if blocks else np.zeros((rows, 0), dtype=np.int64)


def _vstack(blocks, cols):
    return np.vstack(blocks) if blocks else np.zeros((0, cols), dtype=np.int64)


def is_homomorphism(f: list[np.ndarray], src: MatrixRep, tgt: MatrixRep) -> bool:
    for (s, t), ms, mt in zip(src.quiver.arrows, src.maps, tgt.maps):
        if not np.array_equal(f[t] @ ms, mt @ f[s]):
            return False
    return True


@dataclass(frozen=True)
class ArReport:
    homomorphisms: bool
    composite_zero: bool
    mono: bool
    epi: bool
    exact_middle: bool
    split: bool
    summands: int

    @property
    def ok(self) -> bool:
        return (self.homomorphisms and self.composite_zero and self.mono and self.epi
                and self.exact_middle and not self.split)


def oracle_ar_verify(x: IntervalObject, field: Field | None = None) -> ArReport:
    """Realise ``0 -> tau x -> E -> x -> 0`` with explicit matrices and check it."""
    field = field or Field(DEFAULT_PRIME)
    site = x.site
    ar = ar_sequence(x)
    (sa, sb), middle_lifts, (ea, eb) = ar.lifts
    start = realize_lift(site, sa, sb)
    end = realize_lift(site, ea, eb)
    middles = [realize_lift(site, u, v) for u, v in middle_lifts]
    e = middles[0]
    for extra in middles[1:]:
        e = e + extra
    q = start.quiver
    # f: start -> E stacks the two point maps; g: E -> end is (pi, -iota)
    f = [_vstack([point_map(start, mid)[v] for mid in middles], start.dims[v]) for v in range(q.rank)]
    signs = [1, -1]
    g = [_hstack([point_map(mid, end, sign)[v] for mid, sign in zip(middles, signs)], end.dims[v])
         for v in range(q.rank)]
    homs = is_homomorphism(f, start, e) and is_homomorphism(g, e, end)
    zero = all(field.rank(gv @ fv) == 0 for gv, fv in zip(g, f))
    mono = all(field.rank(fv) == start.dims[v] for v, fv in enumerate(f))
    epi = all(field.rank(gv) == end.dims[v] for v, gv in enumerate(g))
    exact = all(e.dims[v] == start.dims[v] + end.dims[v] for v in range(q.rank))
    split = _has_section(g, e, end, field)
    return ArReport(homs, zero, mono, epi, exact, split, len(middles))


def _has_section(g: list[np.ndarray], e: MatrixRep, x: MatrixRep, field: Field) -> bool:
    """Whether some homomorphism ``s: x -> e`` satisfies ``g s = 1``."""
    a, total = _hom_system(x, e)
    offsets, off = [], 0
    for xv, ev in zip(x.dims, e.dims):
        offsets.append(off)
        off += xv * ev
    rows, rhs = [a], [np.zeros(a.shape[0], dtype=np.int64)]
    for v, gv in enumerate(g):
        if x.dims[v] == 0:
            continue
        eq = np.zeros((x.dims[v] * x.dims[v], total), dtype=np.int64)
        # g_v @ s_v, s_v row-major of shape (e_v, x_v)
        if e.dims[v]:
            eq[:, offsets[v]: offsets[v] + e.dims[v] * x.dims[v]] = np.kron(gv, np.eye(x.dims[v], dtype=np.int64))
        rows.append(eq)
        rhs.append(np.eye(x.dims[v], dtype=np.int64).ravel())
    return field.solvable(np.vstack(rows), np.concatenate(rhs))


# thread quivers


@dataclass(frozen=True)
class ThreadQuiverRep:
    """A representation of the quiver ``Q_n`` as a right module.

    Vertices are ``a0..an`` and ``b0..bn``.  The upper arrow ``alpha`` runs
    ``a0 -> b0``, the lower branch ``a0 -> a1 -> ... -> an -> bn -> ... -> b0``.
    Each arrow ``u -> w`` carries a matrix from the space at ``w`` to the
    space at ``u``.
    """

    n: int
    spaces: dict
    maps: dict  # arrow name -> matrix

    @property
    def lower_branch(self) -> list[str]:
        return lower_branch(self.n)

    def alpha(self) -> np.ndarray:
        return self.maps["alpha"]

    def beta(self) -> np.ndarray:
        """The lower branch as a single map from ``b0`` to ``a0``."""
        out = np.eye(self.spaces["a0"], dtype=np.int64)
        for name in self.lower_branch:
            out = out @ self.maps[name]
        return out


def lower_branch(n: int) -> list[str]:
    names = [f"a{i}->a{i + 1}" for i in range(n)] + [f"a{n}->b{n}"]
    return names + [f"b{i}->b{i - 1}" for i in range(n, 0, -1)]


def _thread_arrows(n: int) -> dict:
    """Arrow name -> (source vertex, target vertex, source image, target image, winding)."""
    arrows = {"alpha": ("a0", "b0", 0, 0, 0)}
    for i in range(n):
        arrows[f"a{i}->a{i + 1}"] = (f"a{i}", f"a{i + 1}", i, i + 1, 0)
    arrows[f"a{n}->b{n}"] = (f"a{n}", f"b{n}", n, -n, 1)
    for i in range(n, 0, -1):
        arrows[f"b{i}->b{i - 1}"] = (f"b{i}", f"b{i - 1}", -i, -i + 1, 0)
    return arrows


def _points_over(x: IntervalObject, v: int) -> list[CoverPoint]:
    lo = x.a.deck if v >= x.a.vertex else x.a.deck + 1
    hi = x.b.deck if v <= x.b.vertex else x.b.deck - 1
    return [CoverPoint(d, v) for d in range(lo, hi + 1)]


def thread_restriction(x: IntervalObject, n: int) -> ThreadQuiverRep:
    """Restrict an object of the big tube over ``Z`` along ``a_i -> i, b_i -> -i``."""
    site = x.site
    if not (site.is_loop and site.base == "int"):
        raise ValueError("thread restriction needs the big tube over Z")
    if x.length is not None and not (-n <= x.a.vertex and x.b.vertex <= n):
        raise SupportOutOfWindow(f"{x!r} is not supported in [{-n}, {n}]")
    image = {f"a{i}": i for i in range(n + 1)} | {f"b{i}": -i for i in range(n + 1)}
    basis = {name: _points_over(x, v) for name, v in image.items()}
    maps = {}
    for name, (u, w, _, _, e) in _thread_arrows(n).items():
        pos = {p: i for i, p in enumerate(basis[u])}
        m = np.zeros((len(basis[u]), len(basis[w])), dtype=np.int64)
        for j, p in enumerate(basis[w]):
            target = CoverPoint(p.deck - e, image[u])
            if target in pos:
                m[pos[target], j] = 1
        maps[name] = m
    return ThreadQuiverRep(n, {k: len(b) for k, b in basis.items()}, maps)


def tube_membership(rep: ThreadQuiverRep, field: Field | None = None) -> bool:
    """``M(alpha)`` is invertible and ``M(alpha)^-1 M(beta)`` is nilpotent."""
    field = field or Field(DEFAULT_PRIME)
    a = rep.alpha()
    if a.shape[0] != a.shape[1]:
        return False
    if a.shape[0] == 0:
        return True
    inv = field.inverse(a.tolist())
    if inv is None:
        return False
    return field.is_nilpotent(field.matmul(inv, field.matrix(rep.beta().tolist())))


# sweeps


def oracle_sweep(objs: list[IntervalObject], field: Field | None = None) -> dict:
    """Compare the interval formulas with the matrix oracle on all ordered pairs."""
    field = field or Field(DEFAULT_PRIME)
    reps = [realize(x) for x in objs]
    mismatches = []
    for x, mx in zip(objs, reps):
        for y, my in zip(objs, reps):
            h = oracle_hom_dim(mx, my, field)
            e = h - euler_form(mx, my)
            want = {"hom": hom_dim(x, y), "ext": ext_dim(x, y),
                    "serre": 0 if x.is_projective else hom_dim(y, tau(x))}
            got = {"hom": h, "ext": e, "serre": e}
            for key in want:
                if want[key] != got[key]:
                    mismatches.append({"source": repr(x), "target": repr(y), "kind": key,
                                       "formula": want[key], "oracle": got[key]})
    return {"pairs": len(objs) ** 2, "mismatches": mismatches}
