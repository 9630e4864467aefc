from fractions import Fraction as F

import pytest

from sym3lift.hecke import GL2, GSP4
from sym3lift.poly import UniPoly
from sym3lift.scalars import PAdicContext
from sym3lift.weights import (
    WeightPoint,
    adapted_disc_contains,
    bad_primes,
    classical_point,
    hodge_tate_weights,
    iota,
    iota_image_equation,
    is_classical_label_consistent,
    sen_eigenvalue_differences,
    sen_eigenvalues,
)


@pytest.mark.parametrize("p", [5, 7])
def test_iota_on_classical_weights(p):
    ctx = PAdicContext(p)
    u = ctx.u
    for k in range(1, 21):
        img = iota(classical_point(k, ctx), ctx)
        assert img.coords == (F(u) ** (2 * k - 1) - 1, F(u) ** (k + 1) - 1)
        assert img.label == (2 * k - 1, k + 1)
        assert is_classical_label_consistent(img, ctx)


@pytest.mark.parametrize("p", [5, 7])
def test_image_equation_is_identity(p):
    ctx = PAdicContext(p)
    t = UniPoly.x()
    t1, t2 = iota(WeightPoint(1, (t,)), ctx).coords
    assert iota_image_equation(t1, t2, ctx) == UniPoly(())


def test_image_equation_off_image():
    ctx = PAdicContext(5)
    assert iota_image_equation(F(0), F(0), ctx) != 0


def test_hodge_tate():
    assert hodge_tate_weights(12, GL2) == (0, 11)
    assert hodge_tate_weights((23, 13), GSP4) == (0, 11, 22, 33)
    # the lift of weight k has Sym^3 of (0, k-1) as weights
    for k in range(2, 15):
        assert hodge_tate_weights((2 * k - 1, k + 1), GSP4) == tuple(i * (k - 1) for i in range(4))


def test_adapted_disc():
    ctx = PAdicContext(5)
    assert adapted_disc_contains(25, 2, ctx)
    assert not adapted_disc_contains(5, 2, ctx)
    assert adapted_disc_contains(3, F(1, 2), ctx)
    assert adapted_disc_contains(10, F(3, 2), ctx)
    assert not adapted_disc_contains(12, F(3, 2), ctx)
    with pytest.raises(ValueError):
        adapted_disc_contains(3, -1, ctx)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_sen_differences_factor(p):
    ctx = PAdicContext(p)
    facts = sen_eigenvalue_differences(ctx)
    assert len(facts) == 6
    bad = bad_primes(ctx)
    for f in facts:
        assert f.holds()
        assert bad[f.divisor_name] == f.divisor


def test_sen_eigenvalues_at_classical_point():
    # at (k1, k2) the exp-Sen eigenvalues are u^{-HT weight}, up to the common unit
    ctx = PAdicContext(5)
    u = ctx.u
    k1, k2 = 7, 4
    t1, t2 = F(u) ** k1 - 1, F(u) ** k2 - 1
    vals = sorted(ev(t1, t2) for ev in sen_eigenvalues(ctx))
    assert vals == sorted(F(u) ** w for w in (0, k2 - 2, k1 - 1, k1 + k2 - 3))


def test_weight_point_validation():
    with pytest.raises(ValueError):
        WeightPoint(2, (1,))
