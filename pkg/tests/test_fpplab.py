from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from l1fpp.fpplab import (
    CPoint,
    classic_c_example,
    classic_embed,
    embed,
    fixed_point_free_certificate,
    isometry_check,
    krasnoselskii_orbit,
    midpoint,
    shift_T,
)
from l1fpp.hyperplane import dual_norm_n, renormed
from l1fpp.seqcore import ConvergentSeq, SummableSeq, basis, l1_norm

from cases import CONFIGS, spec_for

F = Fraction
HALF = renormed([F(1, 2)], 1)


def test_embed_examples():
    assert embed(HALF, CPoint(1)) == SummableSeq.from_list([F(1, 2)])
    assert embed(HALF, CPoint(0, ((1, 1),))) == basis(2)
    assert embed(HALF, CPoint(F(1, 2), ((1, F(1, 2)),))) == SummableSeq.from_list([F(1, 4), F(1, 2)])


def test_embed_rejects_off_simplex():
    with pytest.raises(ValueError, match="sum to 1"):
        embed(HALF, CPoint(F(1, 2)))
    with pytest.raises(ValueError):
        embed(HALF, CPoint(F(3, 2), ((1, F(-1, 2)),)))


def test_shift_examples():
    assert shift_T(CPoint(1)) == CPoint(0, ((1, 1),))
    assert shift_T(CPoint(0, ((1, 1),))) == CPoint(0, ((2, 1),))
    assert shift_T(CPoint(F(1, 2), ((1, F(1, 2)),))) == CPoint(0, ((1, F(1, 2)), (2, F(1, 2))))


def test_isometry_examples():
    assert isometry_check(HALF, CPoint(1), CPoint(0, ((1, 1),))) == (1, 1)
    p = CPoint(F(1, 3), ((2, F(2, 3)),))
    assert isometry_check(HALF, p, p) == (0, 0)
    assert isometry_check(HALF, CPoint(0, ((1, 1),)), CPoint(0, ((2, 1),))) == (1, 1)


@pytest.mark.parametrize("K", [1, 5, 100])
def test_fixed_point_free_certificate(K):
    cert = fixed_point_free_certificate(HALF, K)
    assert cert.ok
    assert "not 1" in cert.contradiction
    assert len(cert.steps) == K + 2


def test_orbit_first_step():
    disp = krasnoselskii_orbit(HALF, CPoint(1), 1)
    assert disp == [dual_norm_n(HALF, embed(HALF, CPoint(1)) - basis(2))] == [1]
    assert len(krasnoselskii_orbit(HALF, CPoint(1), 7)) == 7


weights = st.lists(st.integers(min_value=0, max_value=6), min_size=1, max_size=9).filter(any)


def to_cpoint(ws):
    total = sum(ws)
    return CPoint(F(ws[0], total), tuple((k, F(w, total)) for k, w in enumerate(ws[1:], start=1)))


@settings(max_examples=150)
@given(st.sampled_from(CONFIGS), weights, weights)
def test_shift_is_isometry_on_C(config, a, b):
    spec = spec_for(*config)
    p, q = to_cpoint(a), to_cpoint(b)
    before, after = isometry_check(spec, p, q)
    assert before == after
    assert shift_T(p).in_simplex()


@settings(max_examples=60)
@given(st.sampled_from(CONFIGS), weights)
def test_orbit_non_increasing(config, a):
    disp = krasnoselskii_orbit(spec_for(*config), to_cpoint(a), 25)
    assert all(d > 0 for d in disp)
    assert all(y <= x for x, y in zip(disp, disp[1:]))


def test_midpoint_stays_in_C():
    m = midpoint(CPoint(1), CPoint(0, ((3, 1),)))
    assert m.in_simplex() and m.weight(0) == m.weight(3) == F(1, 2)


def test_classic_example():
    report = classic_c_example(steps=10, pairs=30)
    assert report.ok
    assert l1_norm(classic_embed(CPoint(1)) - classic_embed(CPoint(0, ((1, 1),)))) == 2
    x, target, values, ok = report.weak_star[0]
    assert x == ConvergentSeq((3,), 2) and target == 2 and ok
