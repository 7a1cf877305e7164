"""Exact vertex enumeration for bounded polytopes {x : a_j . x <= 1}.

The double description method runs on the homogenised cone
{(t, x) : a_j . x <= t, t >= 0} over Python integers.  Adjacency is
decided combinatorially from zero sets stored as bitmasks, which is exact
and copes with the heavy degeneracy of norm balls.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .linalg import inverse, rref

__all__ = ["UnboundedPolytopeError", "polytope_vertices", "PolyhedralNorm"]


class UnboundedPolytopeError(ValueError):
    pass


def _primitive(v):
    g = reduce(gcd, v, 0)
    if g > 1:
        return tuple(x // g for x in v)
    return tuple(v)


def _integer_row(a):
    den = reduce(lcm, (Fraction(v).denominator for v in a), 1)
    return [int(Fraction(v) * den) for v in a], den


def polytope_vertices(functionals, dim: int | None = None) -> list:
    """Vertices of {x : a . x <= 1 for a in functionals}, lexicographically sorted.

    The polytope must be bounded and contain the origin.
    """
    funcs = [tuple(Fraction(v) for v in a) for a in functionals]
    if dim is None:
        if not funcs:
            raise ValueError("dimension unknown for an empty constraint list")
        dim = len(funcs[0])
    if dim == 0:
        return [()]
    big = dim + 1
    rows = []
    for a in funcs:
        ints, den = _integer_row(a)
        rows.append(_primitive([den] + [-v for v in ints]))
    rows.append(tuple([1] + [0] * dim))
    rows = sorted(set(rows))

    # initial cone from big linearly independent rows
    chosen = []
    for idx, row in enumerate(rows):
        trial = [rows[i] for i in chosen] + [row]
        if len(rref([[Fraction(v) for v in r] for r in trial])[1]) == len(trial):
            chosen.append(idx)
            if len(chosen) == big:
                break
    if len(chosen) < big:
        raise UnboundedPolytopeError("constraints do not bound the polytope")

    binv = inverse([[Fraction(v) for v in rows[i]] for i in chosen])
    rays = []
    for k in range(big):
        col = [binv[r][k] for r in range(big)]
        den = reduce(lcm, (c.denominator for c in col), 1)
        ray = _primitive([int(c * den) for c in col])
        zeros = 0
        for j, i in enumerate(chosen):
            if j != k:
                zeros |= 1 << i
        rays.append((ray, zeros))

    chosen_set = set(chosen)
    for idx, row in enumerate(rows):
        if idx in chosen_set:
            continue
        bit = 1 << idx
        pos, neg, keep = [], [], []
        for ray, zeros in rays:
            s = sum(a * b for a, b in zip(row, ray))
            if s > 0:
                pos.append((ray, zeros, s))
                keep.append((ray, zeros))
            elif s < 0:
                neg.append((ray, zeros, s))
            else:
                keep.append((ray, zeros | bit))
        if not neg:
            rays = [(r, z) for r, z in keep]
            continue
        all_zero_sets = [z for _, z in rays]
        new = []
        need = big - 2
        for pr, pz, ps in pos:
            for nr, nz, ns in neg:
                common = pz & nz
                if common.bit_count() < need:
                    continue
                hits = 0
                for z in all_zero_sets:
                    if z & common == common:
                        hits += 1
                        if hits > 2:
                            break
                if hits > 2:
                    continue
                combo = _primitive([ps * b - ns * a for a, b in zip(pr, nr)])
                new.append((combo, common | bit))
        rays = keep + new

    verts = set()
    for ray, _ in rays:
        t = ray[0]
        if t <= 0:
            raise UnboundedPolytopeError("constraints do not bound the polytope")
        verts.add(tuple(Fraction(v, t) for v in ray[1:]))
    return sorted(verts)


class PolyhedralNorm:
    """A norm on R^d given as the maximum of finitely many linear functionals.

    The unit ball is {x : a . x <= 1 for every functional a}.  Vertices are
    computed on first use and cached.
    """

    def __init__(self, functionals, dim: int | None = None, name: str = "polyhedral"):
        funcs = {tuple(Fraction(v) for v in a) for a in functionals}
        if dim is None:
            dim = len(next(iter(funcs)))
        funcs.discard(tuple([Fraction(0)] * dim))
        self.functionals = sorted(funcs)
        self.dim = dim
        self.name = name
        self._vertices = None
        self._int_vertices = None

    @classmethod
    def sup(cls, dim: int) -> "PolyhedralNorm":
        funcs = []
        for i in range(dim):
            for s in (1, -1):
                funcs.append(tuple(Fraction(s * int(i == j)) for j in range(dim)))
        return cls(funcs, dim, "sup")

    @classmethod
    def l1(cls, dim: int) -> "PolyhedralNorm":
        funcs = []
        for mask in range(2 ** dim):
            funcs.append(tuple(Fraction(-1 if mask >> j & 1 else 1) for j in range(dim)))
        return cls(funcs, dim, "l1")

    @classmethod
    def from_points(cls, points, name: str = "hull") -> "PolyhedralNorm":
        """The gauge of conv(points); the origin must be interior to the hull.

        Facets of the hull are the vertices of its polar, so this is one more
        vertex enumeration.
        """
        points = [tuple(Fraction(v) for v in p) for p in points]
        dim = len(points[0])
        facets = polytope_vertices(points, dim)
        return cls(facets, dim, name)

    def __call__(self, u) -> Fraction:
        return self.norm(u)

    def norm(self, u) -> Fraction:
        best = Fraction(0)
        for a in self.functionals:
            s = sum((x * y for x, y in zip(a, u)), Fraction(0))
            if s > best:
                best = s
        return best

    def vertices(self) -> list:
        if self._vertices is None:
            self._vertices = polytope_vertices(self.functionals, self.dim)
        return self._vertices

    def _ints(self):
        if self._int_vertices is None:
            out = []
            for v in self.vertices():
                den = reduce(lcm, (c.denominator for c in v), 1)
                out.append((tuple(int(c * den) for c in v), den))
            self._int_vertices = out
        return self._int_vertices

    def support(self, g) -> Fraction:
        """max over the unit ball of g . x, i.e. the dual norm of g."""
        gi, gden = _integer_row(g)
        best = None
        for v, den in self._ints():
            val = Fraction(sum(a * b for a, b in zip(gi, v)), den)
            if best is None or val > best:
                best = val
        return best / gden

    dual_norm = support

    def __repr__(self):
        return f"PolyhedralNorm({self.name}, dim={self.dim}, facets={len(self.functionals)})"
