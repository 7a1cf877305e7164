"""Stability constants, Banach-Mazur upper bounds to c0, and the renorming pipeline.

For ``X = W_alpha`` the basis of l1 converges weak* to alpha, so
``r*(X) = |alpha|_1`` and ``gamma*(X) = 2 / (1 + r*(X))``.  Distances to c0
are bounded from above by explicit isomorphisms whose operator norms are
computed exactly by the polytope oracles.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .fpplab import fixed_point_free_certificate, isometry_check, random_cpoint
from .hyperplane import HyperplaneSpec, renormed
from .linalg import SingularMatrixError
from .polyoracle import LinearMapSpec, TruncatedSpace, op_norm
from .seqcore import SummableSeq, as_rational, basis, direct_pair, l1_norm

__all__ = [
    "r_star",
    "weak_star_certificate",
    "gamma_star",
    "IsoFamilyParams",
    "candidate_map",
    "default_family",
    "BMResult",
    "bm_upper_c0",
    "halving_alpha",
    "CounterexampleBundle",
    "counterexample_pipeline",
    "pipeline_bound",
    "Fact",
    "facts_table",
    "lookup_fact",
    "corollary_chain",
]


def r_star(alpha: SummableSeq) -> Fraction:
    """r*(W_alpha) = |alpha|_1: the weak* cluster points of +-e*_m are +-alpha."""
    mass = l1_norm(alpha)
    if mass > 1:
        raise ValueError("not a predual functional: |alpha|_1 > 1")
    return mass


def weak_star_certificate(alpha: SummableSeq, xs) -> bool:
    """Check e*_m(x) == alpha(x) for members x of W_alpha and m past the prefix.

    For the coordinatewise pairing e*_m(x) = x(m), which equals the limit
    once m leaves the prefix, and the limit is alpha(x) on W_alpha.
    """
    for x in xs:
        target = direct_pair(alpha, x)
        if x.limit != target:
            return False
        start = len(x.prefix) + 1
        if any(direct_pair(basis(m), x) != target for m in range(start, start + 5)):
            return False
    return True


def gamma_star(r) -> Fraction:
    r = as_rational(r)
    if not 0 <= r <= 1:
        raise ValueError("r* must lie in [0, 1]")
    return 2 / (1 + r)


@dataclass(frozen=True, order=True)
class IsoFamilyParams:
    """One candidate isomorphism W_alpha -> c0 on the truncation.

    Output coordinates, in order:

    * ``insert_scale`` c: a leading coordinate c * lim x;
    * every x(i) except ``drop_index`` (recovered from the constraint);
      the first ``head`` of them are multiplied by ``head_scale`` when it is
      set, the rest have lim x subtracted when ``translate`` is on.
    """

    insert_scale: Fraction | None = None
    drop_index: int | None = None
    translate: bool = True
    head_scale: Fraction | None = None
    head: int = 0

    def sort_key(self):
        return (
            self.insert_scale is not None, self.insert_scale or 0,
            self.drop_index or 0, self.translate,
            self.head_scale is not None, self.head_scale or 0, self.head,
        )

    def describe(self) -> dict:
        return {
            "insert_scale": None if self.insert_scale is None else str(self.insert_scale),
            "drop_index": self.drop_index,
            "translate": self.translate,
            "head_scale": None if self.head_scale is None else str(self.head_scale),
            "head": self.head,
        }


def candidate_map(alpha: SummableSeq, N: int, params: IsoFamilyParams) -> LinearMapSpec:
    """Ambient matrix of the candidate from W_alpha(N) to c0 (same N)."""
    if not params.translate and not alpha.is_zero():
        raise ValueError("image not in c0: untranslated coordinates tend to lim x")
    if params.drop_index is not None and alpha[params.drop_index] == 0:
        raise ValueError("drop_index must point at a nonzero alpha coordinate")
    dim = N + 1
    rows = []
    if params.insert_scale is not None:
        row = [Fraction(0)] * dim
        row[N] = Fraction(params.insert_scale)
        rows.append(row)
    for i in range(1, N + 1):
        if i == params.drop_index:
            continue
        row = [Fraction(0)] * dim
        if params.head_scale is not None and i <= params.head:
            row[i - 1] = Fraction(params.head_scale)
        else:
            row[i - 1] = Fraction(1)
            if params.translate:
                row[N] = Fraction(-1)
        rows.append(row)
    if len(rows) > N:
        raise ValueError("candidate is not square on the truncation")
    while len(rows) < N:
        rows.append([Fraction(0)] * dim)
    rows.append([Fraction(0)] * dim)  # limit of the image is 0
    return LinearMapSpec(tuple(tuple(r) for r in rows))


SCALE_GRID = tuple(Fraction(k, 4) for k in range(1, 17))


def default_family(alpha: SummableSeq) -> list:
    """Translations, limit insertions and head scalings over an exact grid.

    The grid is quarter steps from 1/4 to 4; the scale 1 + |alpha|_1 is added
    for head scalings since it balances the two operator norms.
    """
    mass = l1_norm(alpha)
    family = [IsoFamilyParams()]
    if not alpha.is_zero():
        drop = max(alpha.items(), key=lambda kv: (abs(kv[1]), -kv[0]))[0]
        for c in SCALE_GRID:
            family.append(IsoFamilyParams(insert_scale=c, drop_index=drop))
        head = alpha.max_index
        scales = sorted(set(SCALE_GRID) | {1 + mass})
        for s in scales:
            family.append(IsoFamilyParams(head_scale=s, head=head))
    return family


@dataclass
class BMResult:
    best: Fraction
    params: IsoFamilyParams
    report: list = field(default_factory=list)


def bm_upper_c0(alpha: SummableSeq, N: int, family=None) -> BMResult:
    """Smallest ||phi|| ||phi^-1|| over the family, on the truncation of length N.

    Candidates that are singular or do not map into c0 are skipped and
    listed in the report.  Ties are broken by the parameters' sort key so
    the result does not depend on family order.
    """
    if alpha.max_index > N:
        raise ValueError("alpha must be supported within 1..N")
    if family is None:
        family = default_family(alpha)
    if not family:
        raise ValueError("empty candidate family")
    dom = TruncatedSpace(N + 1, "sup", alpha)
    cod = TruncatedSpace(N + 1, "sup", SummableSeq())
    best = None
    report = []
    for params in sorted(set(family), key=IsoFamilyParams.sort_key):
        try:
            phi = candidate_map(alpha, N, params)
            inv = phi.inverse(dom, cod)
        except (ValueError, SingularMatrixError) as exc:
            report.append({"params": params.describe(), "status": "skipped", "reason": str(exc)})
            continue
        fwd = op_norm(phi, dom, cod)
        back = op_norm(inv, cod, dom)
        value = fwd * back
        report.append({"params": params.describe(), "status": "ok", "norm": fwd,
                       "inverse_norm": back, "product": value})
        if best is None or value < best[0]:
            best = (value, params)
    if best is None:
        raise ValueError("no candidate in the family is an isomorphism")
    return BMResult(best[0], best[1], report)


def halving_alpha(n: int, lumped: bool = True) -> SummableSeq:
    """(-1/2, -1/4, ..., -1/2^n), plus the tail mass 1/2^n at n+1 when lumped.

    The lumped form is exactly the tail lumping of the infinite sequence
    (-1/2, -1/4, -1/8, ...), which lies on the unit sphere of l1.
    """
    entries = [(i, Fraction(-1, 2 ** i)) for i in range(1, n + 1)]
    if lumped:
        entries.append((n + 1, Fraction(1, 2 ** n)))
    return SummableSeq(tuple(entries))


def pipeline_bound(r, eps) -> Fraction:
    r, eps = as_rational(r), as_rational(eps)
    return 2 * (1 + eps) / ((1 - eps) * (1 + r - eps))


@dataclass
class CounterexampleBundle:
    n: int
    r_n: Fraction
    renorm: HyperplaneSpec
    set_C: str
    map_T: str
    distance_bound: Fraction
    epsilon: Fraction
    r_star: Fraction
    certificates: dict = field(default_factory=dict)


def counterexample_pipeline(beta: SummableSeq, epsilon, checks: int = 50, seed: int = 1729,
                            K: int = 20) -> CounterexampleBundle:
    """Renorm a space close to W_beta so that its dual fails the w*-fpp.

    Picks the smallest n with tail mass |beta - P_n beta|_1 <= eps/2, renorms
    W_{P_n beta} with ||.||_n, and certifies the shift on C.
    """
    eps = as_rational(epsilon)
    rs = r_star(beta)
    if rs == 0:
        raise ValueError("degenerate head: beta = 0")
    if not 0 < eps < rs:
        raise ValueError("epsilon too large" if eps >= rs else "epsilon must be positive")
    n = next(k for k in range(1, beta.max_index + 1) if l1_norm(beta.tail(k)) <= eps / 2)
    head = beta.head(n)
    r_n = l1_norm(head)
    if r_n == 0:
        raise ValueError("degenerate head")
    if r_n >= 1:
        raise ValueError("head mass reaches 1; the renorming needs r_n < 1")
    spec = renormed(head, n)

    rng = random.Random(seed)
    iso_ok = True
    for _ in range(checks):
        p = random_cpoint(rng, rng.randint(1, 8))
        q = random_cpoint(rng, rng.randint(1, 8))
        a, b = isometry_check(spec, p, q)
        iso_ok &= a == b
    fpf = fixed_point_free_certificate(spec, K)
    certs = {
        "isometry": iso_ok,
        "fixed_point_free": fpf.ok,
        "r_n_window": rs - eps < r_n <= rs,
    }
    return CounterexampleBundle(
        n=n,
        r_n=r_n,
        renorm=spec,
        set_C=f"{{t0 * P_{n} beta + sum_k t_k e*_({n}+k) : t >= 0, sum t = 1}}",
        map_T=f"t0 * P_{n} beta + sum_k t_k e*_({n}+k)  ->  sum_k t_k e*_({n}+k+1)",
        distance_bound=pipeline_bound(rs, eps),
        epsilon=eps,
        r_star=rs,
        certificates=certs,
    )


@dataclass(frozen=True)
class Fact:
    key: str
    claim: str
    value: Fraction | bool
    relation: str
    provenance: str


def facts_table() -> list:
    """Constants established in the literature; recorded, not computed."""
    return [
        Fact("eta_star_c0", "eta*(c0) = 3", Fraction(3), "=",
             "upper bound from c, lower bound via Gordon and Alspach"),
        Fact("d_c_c0", "d(c, c0) = 3", Fraction(3), "=", "Cambern's theorem"),
        Fact("gamma_star_c0_upper", "gamma*(c0) <= 2", Fraction(2), "<=", "Lim's theorem"),
        Fact("r_star_zero_is_c0", "r*(X) = 0 implies X = c0", True, "implies",
             "Durier-Papini polyhedrality result"),
        Fact("r_star_one_gamma_one", "r*(X) = 1 implies gamma*(X) = 1", Fraction(1), "=",
             "earlier stability characterisation"),
        Fact("corollary_W_alpha", "gamma*(W_alpha) > 1 iff d(W_alpha, c0) < 3", True, "iff",
             "corollary of gamma* = 2/(1+r*) and d(W_alpha, c0) <= 1 + 2|alpha|_1"),
        Fact("isomorphism_norm_lower", "||T|| >= 3 for onto T: X -> c0 with ||T^-1|| = 1 "
             "when X* fails the w*-fpp", Fraction(3), ">=", "Gordon's theorem via Alspach"),
        Fact("d_W_alpha_sphere",
             "d(c0, W_alpha) = 3 for finitely supported alpha with |alpha|_1 = 1", Fraction(3), "=",
             "head-scaling isomorphism and Gordon's lower bound"),
    ]


def lookup_fact(key: str) -> Fact:
    for fact in facts_table():
        if fact.key == key:
            return fact
    raise KeyError(key)


def corollary_chain(alpha: SummableSeq) -> tuple[bool, bool, bool]:
    """(|alpha|_1 < 1, gamma* > 1, 1 + 2|alpha|_1 < 3) for W_alpha."""
    mass = r_star(alpha)
    return mass < 1, gamma_star(mass) > 1, 1 + 2 * mass < 3

