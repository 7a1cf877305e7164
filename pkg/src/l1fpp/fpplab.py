"""The convex set C, the fixed-point-free shift T, and their certificates.

Points of C are ``t0 * alpha + sum_k t_k e*_{n+k}`` with ``t_i >= 0`` summing
to one.  T sends the weight on alpha to ``e*_{n+1}`` and every ``e*_{n+k}``
to ``e*_{n+k+1}``.  Under the renormed dual norm T is an exact isometry of C
with no fixed point, which is what makes (l1, |.|_n) fail the weak* fixed
point property.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .hyperplane import HyperplaneSpec, PrimalNorm, dual_norm_n
from .seqcore import ConvergentSeq, SummableSeq, as_rational, basis, l1_norm, pair

__all__ = [
    "CPoint",
    "embed",
    "shift_T",
    "isometry_check",
    "FixedPointCertificate",
    "fixed_point_free_certificate",
    "midpoint",
    "krasnoselskii_orbit",
    "random_cpoint",
    "ClassicReport",
    "classic_embed",
    "classic_c_example",
]


@dataclass(frozen=True)
class CPoint:
    """Barycentric weights: ``t0`` on alpha, ``weights[k]`` on e*_{n+k} (k >= 1)."""

    t0: Fraction = Fraction(0)
    weights: tuple = ()

    def __post_init__(self):
        t0 = as_rational(self.t0)
        items = self.weights.items() if isinstance(self.weights, dict) else self.weights
        clean = {}
        for k, v in items:
            if k < 1:
                raise ValueError("tail weights are indexed from 1")
            v = as_rational(v)
            if v != 0:
                clean[int(k)] = clean.get(int(k), Fraction(0)) + v
        object.__setattr__(self, "t0", t0)
        object.__setattr__(self, "weights", tuple(sorted((k, v) for k, v in clean.items() if v != 0)))

    def weight(self, k: int) -> Fraction:
        if k == 0:
            return self.t0
        return dict(self.weights).get(k, Fraction(0))

    @property
    def support(self) -> int:
        return self.weights[-1][0] if self.weights else 0

    def in_simplex(self) -> bool:
        return (
            self.t0 >= 0
            and all(v >= 0 for _, v in self.weights)
            and self.t0 + sum((v for _, v in self.weights), Fraction(0)) == 1
        )

    def check(self):
        if not self.in_simplex():
            raise ValueError("weights must be non-negative and sum to 1")
        return self


def embed(spec: HyperplaneSpec, p: CPoint) -> SummableSeq:
    if spec.primal_norm is not PrimalNorm.RENORM_N:
        raise ValueError("C is defined for the renormed hyperplane")
    p.check()
    return spec.alpha.scale(p.t0) + SummableSeq(tuple((spec.n + k, v) for k, v in p.weights))


def shift_T(p: CPoint) -> CPoint:
    moved = [(1, p.t0)] + [(k + 1, v) for k, v in p.weights]
    return CPoint(Fraction(0), tuple(moved))


def isometry_check(spec: HyperplaneSpec, p: CPoint, q: CPoint) -> tuple[Fraction, Fraction]:
    before = dual_norm_n(spec, embed(spec, p) - embed(spec, q))
    after = dual_norm_n(spec, embed(spec, shift_T(p)) - embed(spec, shift_T(q)))
    return before, after


@dataclass
class FixedPointCertificate:
    K: int
    steps: list = field(default_factory=list)
    contradiction: str = ""
    ok: bool = False


def fixed_point_free_certificate(spec: HyperplaneSpec | None, K: int) -> FixedPointCertificate:
    """Show that T p = p has no solution in C among points supported on 1..K.

    Matching weights of p and T p coefficient by coefficient forces
    t0 = 0 and t_{k+1} = t_k, so every weight vanishes and the simplex
    constraint fails.  The trace records each forced equality.
    """
    if K < 1:
        raise ValueError("K must be at least 1")
    cert = FixedPointCertificate(K)
    # symbolic weights: value known to be zero once forced
    cert.steps.append("t0 = (T p)_0 = 0")
    known = {0: Fraction(0)}
    for k in range(1, K + 1):
        known[k] = known[k - 1]
        cert.steps.append(f"t{k} = (T p)_{k} = t{k - 1} = 0")
    total = sum(known.values(), Fraction(0))
    cert.steps.append(f"t{K + 1} = 0 outside the support, forcing t{K} = 0 consistently")
    if total != 1:
        cert.contradiction = f"sum of weights t0..t{K} is {total}, not 1"
        cert.ok = True
    return cert


def midpoint(p: CPoint, q: CPoint) -> CPoint:
    half = Fraction(1, 2)
    keys = {k for k, _ in p.weights} | {k for k, _ in q.weights}
    return CPoint(half * (p.t0 + q.t0), tuple((k, half * (p.weight(k) + q.weight(k))) for k in keys))


def krasnoselskii_orbit(spec: HyperplaneSpec, p0: CPoint, steps: int) -> list:
    """Displacements |p_k - T p_k|_n along p_{k+1} = (p_k + T p_k) / 2."""
    if steps < 1:
        raise ValueError("steps must be at least 1")
    p = p0.check()
    out = []
    for _ in range(steps):
        tp = shift_T(p)
        out.append(dual_norm_n(spec, embed(spec, p) - embed(spec, tp)))
        p = midpoint(p, tp)
    return out


def random_cpoint(rng: random.Random, support: int, max_den: int = 12) -> CPoint:
    """Random point of C with tail weights on 1..support (t0 included)."""
    raw = [Fraction(rng.randint(0, max_den)) for _ in range(support + 1)]
    if sum(raw) == 0:
        raw[rng.randrange(support + 1)] = Fraction(1)
    total = sum(raw)
    raw = [v / total for v in raw]
    return CPoint(raw[0], tuple((k, v) for k, v in enumerate(raw[1:], start=1)))


# classical failure for the predual c: alpha is replaced by e*_1 and the tail
# weights sit on e*_{1+k}, with the plain l1 norm.

def classic_embed(p: CPoint) -> SummableSeq:
    return basis(1).scale(p.t0) + SummableSeq(tuple((1 + k, v) for k, v in p.weights))


@dataclass
class ClassicReport:
    isometry_pairs: list
    fixed_point: FixedPointCertificate
    weak_star: list
    displacements: list

    @property
    def ok(self) -> bool:
        return (
            all(a == b for a, b in self.isometry_pairs)
            and self.fixed_point.ok
            and all(ok for *_, ok in self.weak_star)
            and all(d > 0 for d in self.displacements)
            and all(b <= a for a, b in zip(self.displacements, self.displacements[1:]))
        )


def classic_c_example(steps: int = 20, pairs: int = 50, seed: int = 1729, samples=None) -> ClassicReport:
    """Certify the shift on the simplex over the l1 basis, with c as predual.

    Basis vectors e*_m converge weak* to e*_1 because the pairing of e*_m
    with x is x(m-1), eventually the limit.  ``samples`` are the sequences
    used for that certificate.
    """
    rng = random.Random(seed)
    iso = []
    for _ in range(pairs):
        p = random_cpoint(rng, rng.randint(1, 8))
        q = random_cpoint(rng, rng.randint(1, 8))
        before = l1_norm(classic_embed(p) - classic_embed(q))
        after = l1_norm(classic_embed(shift_T(p)) - classic_embed(shift_T(q)))
        iso.append((before, after))

    if samples is None:
        samples = [ConvergentSeq((3,), 2), ConvergentSeq((1, -2, 5), Fraction(1, 3))]
    weak = []
    for x in samples:
        target = pair(basis(1), x)
        start = len(x.prefix) + 2
        vals = [pair(basis(m), x) for m in range(start, start + 5)]
        weak.append((x, target, vals, all(v == target for v in vals)))

    p = CPoint(1)
    disp = []
    for _ in range(steps):
        tp = shift_T(p)
        disp.append(l1_norm(classic_embed(p) - classic_embed(tp)))
        p = midpoint(p, tp)
    return ClassicReport(iso, fixed_point_free_certificate(None, 1), weak, disp)
