"""Brute-force oracles over polytopal unit balls in finite truncations.

A truncation of a sequence space keeps the prefix ``x(1..N)`` and one limit
coordinate ``L`` (the constant tail).  On the primal side a hyperplane
constraint ``L = sum alpha(i) x(i)`` removes ``L`` as a free variable; on the
dual side coordinates are plain ``f(1..dim)``.  Every norm involved is a
maximum of finitely many linear functionals, so suprema over unit balls
reduce to maxima over vertices, which are enumerated exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product

from .hyperplane import HyperplaneSpec
from .linalg import inverse, linprog_min, matvec, rank, rref, solve_left
from .polytope import PolyhedralNorm
from .seqcore import ConvergentSeq, SummableSeq, l1_norm, pair, sup_norm

__all__ = [
    "DIMENSION_LIMIT",
    "OracleDimensionError",
    "NotOntoError",
    "TruncatedSpace",
    "truncate",
    "LinearMapSpec",
    "ball_vertices",
    "dual_norm_oracle",
    "op_norm",
    "inscribed_radius",
    "quotient_inverse_norm",
    "KernelBound",
    "kernel_distance_details",
    "kernel_distance_bound",
    "restricted_functional_norm",
]

DIMENSION_LIMIT = 10

PRIMAL_KINDS = ("sup", "renorm_n")
DUAL_KINDS = ("l1", "dual_n")


class OracleDimensionError(ValueError):
    pass


class NotOntoError(ValueError):
    pass


def _unit(i, d):
    return tuple(Fraction(int(i == j)) for j in range(d))


@dataclass(frozen=True)
class TruncatedSpace:
    """Finite-dimensional model of a sequence space with a polyhedral norm.

    Primal kinds ("sup", "renorm_n") use ambient coordinates
    ``(x(1), ..., x(N), L)`` with ``N = dim - 1``.  Dual kinds ("l1",
    "dual_n") use ``(f(1), ..., f(dim))``.
    """

    dim: int
    norm: str = "sup"
    constraint: SummableSeq | None = None
    n: int = 0
    limit: int = field(default=DIMENSION_LIMIT, compare=False)

    def __post_init__(self):
        if self.norm not in PRIMAL_KINDS + DUAL_KINDS:
            raise ValueError(f"unknown norm kind {self.norm!r}")
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if self.dim > self.limit:
            raise OracleDimensionError(
                f"oracle dimension limit: dim {self.dim} exceeds {self.limit}"
            )
        if self.is_primal and self.constraint is not None:
            if self.constraint.max_index > self.prefix_len:
                raise ValueError("constraint supported beyond the truncation")
        if self.norm in ("renorm_n", "dual_n"):
            if self.constraint is None or not 0 < self.r < 1:
                raise ValueError("renormed kinds need a constraint with mass in (0, 1)")
            if self.constraint.max_index > self.n:
                raise ValueError("renormed kinds need alpha supported on 1..n")
            bound = self.prefix_len if self.is_primal else self.dim
            if self.n > bound:
                raise ValueError("n exceeds the truncation")

    @property
    def is_primal(self) -> bool:
        return self.norm in PRIMAL_KINDS

    @property
    def prefix_len(self) -> int:
        return self.dim - 1

    @property
    def r(self) -> Fraction:
        return l1_norm(self.constraint.head(self.n)) if self.constraint is not None else Fraction(0)

    @property
    def constrained(self) -> bool:
        return self.is_primal and self.constraint is not None

    @property
    def free_dim(self) -> int:
        return self.dim - 1 if self.constrained else self.dim

    def embed(self, u) -> tuple:
        """Free coordinates -> ambient coordinates."""
        u = tuple(Fraction(v) for v in u)
        if not self.constrained:
            return u
        limit = sum((a * u[i - 1] for i, a in self.constraint.items()), Fraction(0))
        return u + (limit,)

    def restrict(self, amb) -> tuple:
        """Ambient coordinates -> free coordinates; checks the constraint."""
        amb = tuple(Fraction(v) for v in amb)
        if not self.constrained:
            return amb
        if self.embed(amb[:-1]) != amb:
            raise ValueError("point violates the hyperplane constraint")
        return amb[:-1]

    @cached_property
    def embedding(self) -> list:
        """Matrix E (dim x free_dim) with ambient = E @ free."""
        cols = [self.embed(_unit(j, self.free_dim)) for j in range(self.free_dim)]
        return [list(row) for row in zip(*cols)]

    def ambient_functionals(self) -> list:
        d = self.dim
        if self.norm == "sup":
            return [tuple(s * v for v in _unit(i, d)) for i in range(d) for s in (1, -1)]
        if self.norm == "l1":
            return [tuple(Fraction(s) for s in signs) for signs in product((1, -1), repeat=d)]
        r = self.r
        if self.norm == "renorm_n":
            funcs = []
            for k in range(self.n):
                for s in (1, -1):
                    funcs.append(tuple((1 + r) * s * v for v in _unit(k, d)))
            tail = range(self.n, d)
            a_pieces = [(t, c) for t in tail for c in (Fraction(1), -r)]
            b_pieces = [(t, c) for t in tail for c in (Fraction(-1), r)]
            for (ta, ca), (tb, cb) in product(a_pieces, b_pieces):
                vec = [Fraction(0)] * d
                vec[ta] += ca
                vec[tb] += cb
                funcs.append(tuple(vec))
            return funcs
        # dual_n
        funcs = []
        head, tail_len = self.n, d - self.n
        for signs in product((1, -1), repeat=head):
            for options in (((r, Fraction(-1))), ((Fraction(1), -r))):
                for choice in product(options, repeat=tail_len):
                    vec = tuple(Fraction(s) for s in signs) + tuple(choice)
                    funcs.append(tuple(v / (1 + r) for v in vec))
        return funcs

    @cached_property
    def ball(self) -> PolyhedralNorm:
        e = self.embedding
        funcs = []
        for a in self.ambient_functionals():
            funcs.append(tuple(sum((a[i] * e[i][j] for i in range(self.dim)), Fraction(0))
                               for j in range(self.free_dim)))
        return PolyhedralNorm(funcs, self.free_dim, self.norm)

    def norm_of(self, amb) -> Fraction:
        return self.ball.norm(self.restrict(amb))

    def to_point(self, amb):
        amb = tuple(Fraction(v) for v in amb)
        if self.is_primal:
            return ConvergentSeq(amb[:-1], amb[-1])
        return SummableSeq.from_list(amb)

    def from_point(self, p) -> tuple:
        if self.is_primal:
            amb = tuple(p.coords(self.prefix_len)) + (p.limit,)
            if any(p[i] != p.limit for i in range(self.prefix_len + 1, len(p.prefix) + 1)):
                raise ValueError("sequence is not representable in this truncation")
            return amb
        if p.max_index > self.dim:
            raise ValueError("functional supported beyond the truncation")
        return tuple(p.to_list(self.dim))

    def pairing_vector(self, f: SummableSeq) -> tuple:
        """Ambient vector g with (pairing of f with the point) = g . amb."""
        g = [Fraction(0)] * self.dim
        if self.constrained or not self.is_primal:
            if f.max_index > (self.prefix_len if self.is_primal else self.dim):
                raise ValueError("functional supported beyond the truncation")
            for i, v in f.items():
                g[i - 1] = v
        else:
            if f.max_index > self.dim:
                raise ValueError("functional supported beyond the truncation")
            for i, v in f.items():
                g[self.dim - 1 if i == 1 else i - 2] = v
        return tuple(g)


def truncate(spec: HyperplaneSpec, N: int, side: str = "primal") -> TruncatedSpace:
    """Truncated model of W_alpha (prefix length N) or of its dual (N coordinates)."""
    if side == "primal":
        kind = "renorm_n" if spec.primal_norm.value == "renorm_n" else "sup"
        return TruncatedSpace(N + 1, kind, spec.alpha, spec.n)
    kind = "dual_n" if spec.dual_norm.value == "dual_n" else "l1"
    return TruncatedSpace(N, kind, spec.alpha, spec.n)


def _ball_of(space):
    return space if isinstance(space, PolyhedralNorm) else space.ball


def ball_vertices(space: TruncatedSpace) -> list:
    """Vertices of the unit ball, in ambient coordinates, lexicographically sorted."""
    verts = [space.embed(v) for v in space.ball.vertices()]
    return sorted(verts)


def dual_norm_oracle(space: TruncatedSpace, f: SummableSeq) -> Fraction:
    """sup of the pairing with f over the unit ball, as a max over vertices."""
    g = space.pairing_vector(f)
    e = space.embedding
    gf = [sum((g[i] * e[i][j] for i in range(space.dim)), Fraction(0)) for j in range(space.free_dim)]
    return space.ball.support(gf)


@dataclass(frozen=True)
class LinearMapSpec:
    """A linear map given by its matrix on ambient coordinates (rows = outputs)."""

    matrix: tuple

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.matrix)
        if len({len(row) for row in rows}) > 1:
            raise ValueError("ragged matrix")
        object.__setattr__(self, "matrix", rows)

    @property
    def shape(self):
        return len(self.matrix), len(self.matrix[0]) if self.matrix else 0

    def __call__(self, amb) -> tuple:
        return tuple(matvec(self.matrix, amb))

    def compose(self, other: "LinearMapSpec") -> "LinearMapSpec":
        """self after other."""
        cols = list(zip(*other.matrix))
        return LinearMapSpec(tuple(
            tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols)
            for row in self.matrix
        ))

    def free_matrix(self, dom, cod) -> list:
        """The map in free coordinates of dom and cod."""
        if isinstance(dom, PolyhedralNorm):
            if self.shape != (cod.dim, dom.dim):
                raise ValueError("dimension mismatch")
            return [list(row) for row in self.matrix]
        if self.shape != (cod.dim, dom.dim):
            raise ValueError(f"dimension mismatch: map {self.shape}, spaces {cod.dim}x{dom.dim}")
        e = dom.embedding
        cols = []
        for j in range(dom.free_dim):
            col = [e[i][j] for i in range(dom.dim)]
            image = self(col)
            try:
                cols.append(cod.restrict(image))
            except ValueError:
                raise ValueError("map does not land in the codomain") from None
        return [list(row) for row in zip(*cols)] if cols else []

    def inverse(self, dom, cod) -> "LinearMapSpec":
        """Inverse as a map cod -> dom, in ambient coordinates."""
        finv = inverse(self.free_matrix(dom, cod))
        if isinstance(dom, PolyhedralNorm):
            return LinearMapSpec(tuple(tuple(r) for r in finv))
        e = dom.embedding
        # ambient_dom = E @ finv @ restrict(ambient_cod)
        k = cod.free_dim
        drop = [[Fraction(int(i == j)) for j in range(cod.dim)] for i in range(k)]
        m = [[sum((e[i][a] * finv[a][b] for a in range(dom.free_dim)), Fraction(0)) for b in range(k)]
             for i in range(dom.dim)]
        full = [[sum((m[i][b] * drop[b][j] for b in range(k)), Fraction(0)) for j in range(cod.dim)]
                for i in range(dom.dim)]
        return LinearMapSpec(tuple(tuple(r) for r in full))


def _as_spec(m):
    return m if isinstance(m, LinearMapSpec) else LinearMapSpec(tuple(tuple(r) for r in m))


def op_norm(map_, dom, cod) -> Fraction:
    """max over vertices v of the domain ball of ||map v|| in the codomain."""
    f = _as_spec(map_).free_matrix(dom, cod)
    cb = _ball_of(cod)
    return max(cb.norm(matvec(f, v)) for v in _ball_of(dom).vertices())


def inscribed_radius(map_, dom, cod) -> Fraction:
    """Largest delta with delta * B_cod inside the image of B_dom.

    Facets g.y <= 1 of the image polytope give delta = 1 / max_g ||g||_cod*.
    """
    f = _as_spec(map_).free_matrix(dom, cod)
    cb = _ball_of(cod)
    k = cb.dim
    if k == 0 or rank(f) < k:
        raise NotOntoError("not onto")
    image = PolyhedralNorm.from_points([tuple(matvec(f, v)) for v in _ball_of(dom).vertices()])
    worst = max(cb.support(g) for g in image.functionals)
    return 1 / worst


def quotient_inverse_norm(map_, dom, cod) -> Fraction:
    """||T~^{-1}|| for the induced isomorphism T~ : dom/ker T -> cod.

    The quotient is coordinatised by the row space of T.  The quotient ball
    is the hull of the projected domain vertices and its gauge is evaluated
    with an exact linear program; no facet enumeration is involved.
    """
    f = _as_spec(map_).free_matrix(dom, cod)
    cb = _ball_of(cod)
    if cb.dim == 0 or rank(f) < cb.dim:
        raise NotOntoError("not onto")
    red, pivots = rref(f)
    rows = [red[i] for i in range(len(pivots))]
    t_tilde = solve_left(f, rows)
    t_inv = inverse(t_tilde)
    qpoints = sorted({tuple(matvec(rows, v)) for v in _ball_of(dom).vertices()})
    cols = [list(c) for c in zip(*qpoints)]
    best = Fraction(0)
    for w in cb.vertices():
        z = matvec(t_inv, w)
        value, _ = linprog_min([Fraction(1)] * len(qpoints), cols, z)
        best = max(best, value)
    return best


@dataclass(frozen=True)
class KernelBound:
    bound: Fraction
    lam: Fraction
    delta: Fraction
    delta_reverse: Fraction
    delta_global: Fraction


def restricted_functional_norm(g: SummableSeq, h: SummableSeq) -> Fraction:
    """Norm of the functional g restricted to ker h, i.e. min_t |g - t h|_1.

    The objective is convex and piecewise linear in t, so its minimum sits
    at a breakpoint g(i)/h(i) (or anywhere, when h = 0).
    """
    if h.is_zero():
        return l1_norm(g)
    candidates = {g[i] / v for i, v in h.items()}
    return min(l1_norm(g - h.scale(t)) for t in candidates)


def kernel_distance_details(xstar: SummableSeq, xstar_n: SummableSeq, z: ConvergentSeq) -> KernelBound:
    """Upper bound on d(ker xstar, ker xstar_n) in c from explicit projections.

    With lam = 1 / xstar_n(z), the maps x -> x - lam xstar_n(x) z on ker xstar
    and y -> y - xstar(y) z on ker xstar_n are mutually inverse.  Each moves
    a point by at most (restricted functional norm) * ||z||.
    """
    if pair(xstar, z) != 1:
        raise ValueError("xstar(z) must equal 1")
    s = pair(xstar_n, z)
    if s <= 0:
        raise ValueError("normalization impossible: xstar_n(z) <= 0")
    lam = 1 / s
    zn = sup_norm(z)
    g = xstar_n.scale(lam) - xstar
    delta = restricted_functional_norm(g, xstar) * zn
    delta_rev = restricted_functional_norm(-g, xstar_n) * zn
    return KernelBound((1 + delta) * (1 + delta_rev), lam, delta, delta_rev, l1_norm(g) * zn)


def kernel_distance_bound(xstar: SummableSeq, xstar_n: SummableSeq, z: ConvergentSeq) -> Fraction:
    return kernel_distance_details(xstar, xstar_n, z).bound


def random_polyhedral_norm(rng, dim: int) -> PolyhedralNorm:
    """sup, l1, or sup intersected with a few random symmetric slabs."""
    kind = rng.choice(("sup", "l1", "mixed"))
    if kind == "sup":
        return PolyhedralNorm.sup(dim)
    if kind == "l1":
        return PolyhedralNorm.l1(dim)
    funcs = list(PolyhedralNorm.sup(dim).functionals)
    for _ in range(rng.randint(1, 3)):
        a = tuple(Fraction(rng.randint(-2, 2), 2) for _ in range(dim))
        funcs += [a, tuple(-v for v in a)]
    return PolyhedralNorm(funcs, dim, "mixed")


def random_surjection(rng, max_dom: int = 5, max_cod: int = 4):
    """(matrix, dom norm, cod norm) with the matrix of full row rank."""
    k = rng.randint(1, max_cod)
    d = rng.randint(k, max_dom)
    while True:
        m = [[Fraction(rng.randint(-2, 2)) for _ in range(d)] for _ in range(k)]
        if rank(m) == k:
            break
    return m, random_polyhedral_norm(rng, d), random_polyhedral_norm(rng, k)


__all__ += ["random_polyhedral_norm", "random_surjection"]
