import random
from fractions import Fraction

import pytest

from l1fpp.hyperplane import dual_norm_n, renormed
from l1fpp.polyoracle import (
    LinearMapSpec,
    NotOntoError,
    OracleDimensionError,
    TruncatedSpace,
    ball_vertices,
    dual_norm_oracle,
    inscribed_radius,
    kernel_distance_bound,
    kernel_distance_details,
    op_norm,
    quotient_inverse_norm,
    random_surjection,
    restricted_functional_norm,
    truncate,
)
from l1fpp.polytope import PolyhedralNorm
from l1fpp.seqcore import ConvergentSeq, SummableSeq, basis

from cases import CONFIGS, random_f, rng, spec_for

F = Fraction
HALF = renormed([F(1, 2)], 1)


def test_sup_and_l1_vertices():
    assert ball_vertices(TruncatedSpace(2, "sup")) == [(-1, -1), (-1, 1), (1, -1), (1, 1)]
    assert ball_vertices(TruncatedSpace(2, "l1")) == [(-1, 0), (0, -1), (0, 1), (1, 0)]


def test_renormed_ball_contains_witness_vertex():
    verts = ball_vertices(truncate(HALF, 2))
    assert (F(2, 3), F(2, 3), F(1, 3)) in verts


def test_dual_oracle_examples():
    space = truncate(HALF, 3)
    assert dual_norm_oracle(space, basis(2)) == F(2, 3)
    assert dual_norm_oracle(space, SummableSeq()) == 0
    assert dual_norm_oracle(TruncatedSpace(3, "sup"), basis(2)) == 1


def test_dual_side_ball_is_polar():
    # the dual_n unit ball and the renorm_n primal ball are in duality
    space = truncate(HALF, 3)
    dual_space = truncate(HALF, 3, side="dual")
    gen = rng(11)
    for _ in range(40):
        f = random_f(gen, 3)
        assert dual_space.norm_of(tuple(f.to_list(3))) == dual_norm_oracle(space, f)


def test_dimension_limit():
    with pytest.raises(OracleDimensionError, match="oracle dimension limit"):
        truncate(HALF, 12)


@pytest.mark.parametrize("n,r", CONFIGS[:3])
def test_oracle_matches_closed_form_small(n, r):
    spec = spec_for(n, r)
    space = truncate(spec, 5)
    gen = rng(n)
    for _ in range(20):
        f = random_f(gen, 5)
        assert dual_norm_oracle(space, f) == dual_norm_n(spec, f)


def test_op_norm_identity_and_scaling():
    ball = PolyhedralNorm.l1(3)
    ident = [[F(int(i == j)) for j in range(3)] for i in range(3)]
    assert op_norm(ident, ball, ball) == 1
    assert op_norm([[2 * v for v in row] for row in ident], ball, ball) == 2


def test_c_to_c0_map():
    # y = (2 lim x, x(1) - lim x, x(2) - lim x, ...) on {lim x = x(1)}, truncated
    for N in range(2, 6):
        alpha = SummableSeq.from_list([1])
        dom = TruncatedSpace(N + 1, "sup", alpha)
        cod = TruncatedSpace(N + 1, "sup", SummableSeq())
        rows = [[F(0)] * N + [F(2)]]
        for i in range(2, N + 1):
            rows.append([F(int(j == i - 1)) for j in range(N)] + [F(-1)])
        rows.append([F(0)] * (N + 1))
        phi = LinearMapSpec(tuple(tuple(r) for r in rows))
        assert op_norm(phi, dom, cod) == 2
        assert op_norm(phi.inverse(dom, cod), cod, dom) == F(3, 2)


def test_inscribed_radius_examples():
    sq = PolyhedralNorm.sup(2)
    ident = [[F(1), F(0)], [F(0), F(1)]]
    assert inscribed_radius(ident, sq, sq) == 1
    assert inscribed_radius([[F(2), F(0)], [F(0), F(2)]], sq, sq) == 2
    proj = [[F(1), F(0), F(0)], [F(0), F(1), F(0)]]
    cube = PolyhedralNorm.sup(3)
    assert inscribed_radius(proj, cube, sq) == 1
    assert quotient_inverse_norm(proj, cube, sq) == 1


def test_not_onto():
    sq = PolyhedralNorm.sup(2)
    with pytest.raises(NotOntoError):
        inscribed_radius([[F(1), F(1)], [F(2), F(2)]], sq, sq)
    with pytest.raises(NotOntoError):
        quotient_inverse_norm([[F(1), F(1)], [F(2), F(2)]], sq, sq)


@pytest.mark.parametrize("seed", range(20))
def test_radius_times_quotient_inverse_is_one(seed):
    m, dom, cod = random_surjection(random.Random(seed))
    assert inscribed_radius(m, dom, cod) * quotient_inverse_norm(m, dom, cod) == 1


def test_restricted_functional_norm():
    g = SummableSeq.from_list([0, F(1, 2)])
    assert restricted_functional_norm(g, basis(1)) == F(1, 2)
    assert restricted_functional_norm(basis(1), basis(1)) == 0
    assert restricted_functional_norm(g, SummableSeq()) == F(1, 2)


def test_kernel_bound_examples():
    xs = basis(1)
    z = ConvergentSeq((), 1)
    assert kernel_distance_bound(xs, xs, z) == 1
    z = ConvergentSeq((0,), 1)
    for k in range(1, 8):
        xn = SummableSeq.from_list([1, F(1, k)])
        kb = kernel_distance_details(xs, xn, z)
        assert kb.lam == 1
        assert kb.delta == kb.delta_reverse == F(1, k)
        assert kb.bound == (1 + F(1, k)) ** 2
        assert kb.bound <= (1 + kb.delta_global) ** 2


def test_kernel_bound_errors():
    with pytest.raises(ValueError, match="must equal 1"):
        kernel_distance_bound(basis(1), basis(1), ConvergentSeq((), 2))
    with pytest.raises(ValueError, match="normalization impossible"):
        kernel_distance_bound(basis(1), SummableSeq.from_list([1, -2]), ConvergentSeq((1,), 1))
