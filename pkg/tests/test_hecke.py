import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from sym3lift import oracle
from sym3lift.hecke import (
    GL2,
    GSP4,
    BadBranch,
    GroupMismatch,
    TorusHeckeElement,
    UnsupportedGenerator,
    WeylElement,
    apply_transfer_iwahori,
    branch_exponents,
    delta,
    extend_character,
    from_diagonal,
    is_dilating,
    is_weyl_invariant,
    minimal_polynomial,
    orbit,
    preserves_dilating_cone,
    quartic_from_spherical,
    satake,
    sym3_monomial_transfers,
    to_diagonal,
    transfer_iwahori,
    transfer_unramified,
    weyl_act,
    weyl_group,
)
from sym3lift.poly import UniPoly, sym3_quadratic

ells = st.sampled_from([2, 3, 5, 7, 11])
nonzero = st.fractions(min_value=-12, max_value=12, max_denominator=6).filter(bool)
rationals = st.fractions(min_value=-12, max_value=12, max_denominator=6)


class TestLattice:
    @given(st.lists(st.integers(-6, 6), min_size=3, max_size=3))
    def test_diagonal_round_trip(self, e):
        assert from_diagonal(GSP4, to_diagonal(GSP4, e)) == tuple(e)

    def test_weyl_group_orders(self):
        assert len(weyl_group(GL2)) == 2
        assert len(weyl_group(GSP4)) == 8

    def test_weyl_action_preserves_similitude(self):
        # d0 * d3 = d1 * d2 in multiplicative terms: d0 + d3 == d1 + d2
        for w in weyl_group(GSP4):
            for e in itertools.product(range(-2, 3), repeat=3):
                d = to_diagonal(GSP4, w.act_exponent(e))
                assert d[0] + d[3] == d[1] + d[2]

    def test_bad_generator(self):
        with pytest.raises(ValueError):
            WeylElement(GL2, ("w1",))

    def test_group_mismatch(self):
        with pytest.raises(GroupMismatch):
            delta(TorusHeckeElement.generator(GSP4, 3, 1))

    def test_dilating(self):
        assert is_dilating(GSP4, (0, 1, 0)) and is_dilating(GSP4, (-1, 0, 1))
        assert not is_dilating(GL2, (4, -2))


class TestSatake:
    @pytest.mark.parametrize("group,idx", [(GL2, 0), (GL2, 1), (GSP4, 0), (GSP4, 1), (GSP4, 2)])
    def test_images_are_weyl_invariant(self, group, idx):
        assert is_weyl_invariant(satake(group, 5, idx))

    def test_unknown_generator(self):
        with pytest.raises(UnsupportedGenerator):
            satake(GL2, 3, 2)

    def test_orbit_sizes(self):
        assert len(orbit(TorusHeckeElement.generator(GSP4, 2, 2))) == 4
        assert len(orbit(TorusHeckeElement.generator(GL2, 2, 1))) == 2


class TestMinimalPolynomials:
    def test_gl2(self):
        mp = minimal_polynomial(TorusHeckeElement.generator(GL2, 5, 1))
        assert mp.degree == 2
        # X^2 - T X + l T0 at T = 7, T0 = 3
        assert mp.evaluate((7, 3)) == UniPoly((15, -7, 1))

    @pytest.mark.parametrize("ell", [2, 3])
    def test_gsp4_t2(self, ell):
        mp = minimal_polynomial(TorusHeckeElement.generator(GSP4, ell, 2))
        assert mp.degree == 4
        for c in mp.torus_coeffs:
            assert is_weyl_invariant(c)
        for t0, t1, t2 in [(1, 2, 3), (F(1, 2), -1, 4)]:
            assert mp.evaluate((t0, t1, t2)) == quartic_from_spherical(ell, t0, t1, t2)

    def test_gsp4_t1_coefficients_invariant(self):
        mp = minimal_polynomial(TorusHeckeElement.generator(GSP4, 3, 1))
        assert all(is_weyl_invariant(c) for c in mp.torus_coeffs)

    def test_unsupported(self):
        with pytest.raises(UnsupportedGenerator):
            minimal_polynomial(TorusHeckeElement.generator(GSP4, 3, 0))


class TestTransfer:
    def test_anchor_triple(self):
        vals = tuple(transfer_unramified(2, j).evaluate((3, 1)) for j in range(3))
        assert vals == (1, 151, 15)

    @settings(max_examples=60)
    @given(rationals, nonzero, ells)
    def test_matches_matrix_oracle(self, a, c, ell):
        t0, t1, t2 = (transfer_unramified(ell, j).evaluate((a, c)) for j in range(3))
        quartic = quartic_from_spherical(ell, t0, t1, t2)
        companion = oracle.mat([[0, -ell * c], [1, a]])
        assert quartic == oracle.char_poly(oracle.sym3_matrix(companion))
        assert quartic == sym3_quadratic(a, ell * c)

    def test_branch_table(self):
        assert transfer_iwahori(1, 1).terms == (((1, 4), 1),)
        assert branch_exponents(5) == ((3, 0), (5, -4), (3, -3))
        with pytest.raises(BadBranch):
            branch_exponents(9)

    def test_delta_pairs_branches(self):
        for i in range(1, 5):
            for j in range(3):
                assert delta(transfer_iwahori(i, j)) == transfer_iwahori(i + 4, j)

    def test_apply_is_multiplicative(self):
        x = TorusHeckeElement.generator(GSP4, 0, 1)
        y = TorusHeckeElement.generator(GSP4, 0, 2)
        for i in range(1, 9):
            assert apply_transfer_iwahori(i, x * y) == apply_transfer_iwahori(i, x) * apply_transfer_iwahori(i, y)

    def test_cone(self):
        assert [preserves_dilating_cone(i) for i in range(1, 5)] == [True, True, True, False]

    def test_brute_force_finds_exactly_the_eight_branches(self):
        assert sym3_monomial_transfers() == {branch_exponents(i) for i in range(1, 9)}

    def test_branch_images_are_sym3_roots(self):
        # t2 orbit under each branch lands on {a^3, a^2 b, a b^2, b^3} with a = t1, b = t0/t1
        alpha, beta = F(2), F(3)
        chi = (alpha * beta, alpha)
        for i in range(1, 9):
            img = apply_transfer_iwahori(i, TorusHeckeElement.generator(GSP4, 0, 2))
            val = extend_character(chi, img)
            assert val in {alpha**3, alpha**2 * beta, alpha * beta**2, beta**3}


class TestCharacterExtension:
    @given(nonzero, nonzero, st.lists(st.integers(-3, 3), min_size=2, max_size=2))
    def test_extension_is_a_character(self, a, b, e):
        chi = (a * b, a)
        x = TorusHeckeElement.monomial(GL2, 0, e)
        y = TorusHeckeElement.generator(GL2, 0, 1)
        assert extend_character(chi, x * y) == extend_character(chi, x) * extend_character(chi, y)

    def test_weyl_act_involution(self):
        w = WeylElement(GL2, ("w",))
        x = TorusHeckeElement.generator(GL2, 3, 1)
        assert weyl_act(w, weyl_act(w, x)) == x
