"""Hyperplanes W_alpha of c, the renormed norm ||.||_n and its dual |.|_n.

``W_alpha = {x in c : lim x = sum_i alpha(i) x(i)}``.  Its dual is l1 acting
coordinatewise (``direct_pair``).  When alpha is supported on 1..n with
``r_n = |alpha|_1`` in (0, 1), the renorming

    ||x||_n = (|R_n x+| v r_n|R_n x-|  +  |R_n x-| v r_n|R_n x+|) v (1+r_n)|P_n x|

(sup norms inside, ``v`` = max) has the closed-form dual norm computed by
:func:`dual_norm_n`, and :func:`witness` builds points of the unit ball on
which that dual norm is attained.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .seqcore import (
    ConvergentSeq,
    SummableSeq,
    as_rational,
    l1_norm,
    pos_neg,
    split_at,
    sup_norm,
)

__all__ = [
    "PrimalNorm",
    "DualNorm",
    "HyperplaneSpec",
    "renormed",
    "member",
    "lift",
    "constraint_value",
    "norm_n",
    "primal_norm",
    "dual_norm_n",
    "dual_norm",
    "witness",
    "lump_tail",
]


class PrimalNorm(str, Enum):
    SUP = "sup"
    RENORM_N = "renorm_n"


class DualNorm(str, Enum):
    L1 = "l1"
    DUAL_N = "dual_n"


@dataclass(frozen=True)
class HyperplaneSpec:
    """A model of W_alpha with a choice of primal and dual norm.

    ``r_n`` is always recomputed from alpha, never taken from the caller.
    """

    alpha: SummableSeq
    n: int = 0
    primal_norm: PrimalNorm = PrimalNorm.SUP
    dual_norm: DualNorm = DualNorm.L1

    def __post_init__(self):
        if not isinstance(self.alpha, SummableSeq):
            object.__setattr__(self, "alpha", SummableSeq.from_list(self.alpha))
        object.__setattr__(self, "primal_norm", PrimalNorm(self.primal_norm))
        object.__setattr__(self, "dual_norm", DualNorm(self.dual_norm))
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if l1_norm(self.alpha) > 1:
            raise ValueError("|alpha|_1 must not exceed 1")
        if self.primal_norm is PrimalNorm.RENORM_N or self.dual_norm is DualNorm.DUAL_N:
            if self.n < 1:
                raise ValueError("the renormed variant needs n >= 1")
            if self.alpha.max_index > self.n:
                raise ValueError("renormed variant needs alpha supported on 1..n")
            if not 0 < self.r_n < 1:
                raise ValueError("renormed variant needs r_n in (0, 1)")

    @property
    def r_n(self) -> Fraction:
        return l1_norm(self.alpha.head(self.n))

    @property
    def support_bound(self) -> int:
        return self.alpha.max_index


def renormed(alpha, n: int) -> HyperplaneSpec:
    """Spec for (W_alpha, ||.||_n) with dual (l1, |.|_n)."""
    if not isinstance(alpha, SummableSeq):
        alpha = SummableSeq.from_list([as_rational(a) for a in alpha])
    return HyperplaneSpec(alpha, n, PrimalNorm.RENORM_N, DualNorm.DUAL_N)


def constraint_value(alpha: SummableSeq, x: ConvergentSeq) -> Fraction:
    return sum((a * x[i] for i, a in alpha.items()), Fraction(0))


def member(spec: HyperplaneSpec, x: ConvergentSeq) -> bool:
    return x.limit == constraint_value(spec.alpha, x)


def lift(spec: HyperplaneSpec, prefix) -> ConvergentSeq:
    """Complete a prefix to the member of W_alpha whose tail is constant."""
    prefix = [as_rational(v) for v in prefix]
    if len(prefix) < spec.support_bound:
        raise ValueError("underdetermined: prefix shorter than the support of alpha")
    limit = sum((a * prefix[i - 1] for i, a in spec.alpha.items()), Fraction(0))
    return ConvergentSeq(tuple(prefix), limit)


def norm_n(spec: HyperplaneSpec, x: ConvergentSeq) -> Fraction:
    if spec.primal_norm is not PrimalNorm.RENORM_N:
        raise ValueError("spec does not carry the renormed primal norm")
    if not member(spec, x):
        raise ValueError("not in hyperplane")
    r = spec.r_n
    head, tail = split_at(x, spec.n)
    tp, tn = (sup_norm(part) for part in pos_neg(tail))
    tail_term = max(tp, r * tn) + max(tn, r * tp)
    return max(tail_term, (1 + r) * sup_norm(head))


def primal_norm(spec: HyperplaneSpec, x: ConvergentSeq) -> Fraction:
    """The norm selected by ``spec.primal_norm``."""
    if spec.primal_norm is PrimalNorm.RENORM_N:
        return norm_n(spec, x)
    if not member(spec, x):
        raise ValueError("not in hyperplane")
    return sup_norm(x)


def _dual_parts(spec, f):
    n = spec.n
    tail = f.tail(n)
    return l1_norm(tail.positive()), l1_norm(tail.negative()), l1_norm(f.head(n))


def dual_norm_n(spec: HyperplaneSpec, f: SummableSeq) -> Fraction:
    """Closed-form |f|_n.  f acts on W by sum_j f(j) x(j)."""
    r = spec.r_n
    plus, minus, head = _dual_parts(spec, f)
    return (max(r * plus + minus, plus + r * minus) + head) / (1 + r)


def dual_norm(spec: HyperplaneSpec, f: SummableSeq) -> Fraction:
    if spec.dual_norm is DualNorm.DUAL_N:
        return dual_norm_n(spec, f)
    return l1_norm(f)


def _sgn(v) -> int:
    return (v > 0) - (v < 0)


def witness(spec: HyperplaneSpec, f: SummableSeq, N: int, branch: str | None = None) -> ConvergentSeq:
    """A point of the ||.||_n unit ball on which f attains |f|_n.

    The construction assumes the negative tail mass dominates; otherwise the
    witness for -f is built and negated.  ``branch`` forces "direct" or
    "mirror" (used to exercise ties); by default ties take the direct branch.
    """
    n = spec.n
    if N <= n or N < f.max_index:
        raise ValueError("truncation below support")
    if f.is_zero():
        return ConvergentSeq.zero()
    plus, minus, _ = _dual_parts(spec, f)
    if branch is None:
        branch = "direct" if minus >= plus else "mirror"
    if branch == "mirror":
        return -_direct_witness(spec, -f, N)
    if branch != "direct":
        raise ValueError(f"unknown branch {branch!r}")
    return _direct_witness(spec, f, N)


def _direct_witness(spec, f, N):
    r = spec.r_n
    scale = 1 / (1 + r)
    coords = []
    for k in range(1, N + 1):
        fk = f[k]
        if k <= spec.n:
            coords.append(_sgn(fk) * scale)
        elif fk < 0:
            coords.append(-scale)
        else:
            coords.append(r * scale)
    limit = scale * sum((_sgn(f[i]) * a for i, a in spec.alpha.items()), Fraction(0))
    return ConvergentSeq(tuple(coords), limit)


def lump_tail(alpha: SummableSeq, n: int) -> SummableSeq:
    """Keep alpha(1..n) and put the absolute tail mass at coordinate n+1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    mass = l1_norm(alpha.tail(n))
    return SummableSeq(alpha.head(n).entries + ((n + 1, mass),))
