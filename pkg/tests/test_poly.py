from fractions import Fraction as F
import itertools

import pytest
from hypothesis import given, settings, strategies as st

from sym3lift.poly import (
    BiPoly,
    UniPoly,
    charpoly_from_power_traces,
    divide_exact,
    power_sums,
    quadratic_power_traces,
    sym3_power_traces,
    sym3_quadratic,
    sym3_trace,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=9)


class TestUniPoly:
    def test_from_roots(self):
        f = UniPoly.from_roots([1, 2, 4, 8])
        assert f.coeffs == (64, -120, 70, -15, 1)
        assert f.degree == 4
        assert all(f(r) == 0 for r in (1, 2, 4, 8))

    def test_elementary_round_trip(self):
        f = UniPoly.from_roots([F(1, 2), -3, 5])
        assert UniPoly.monic_from_elementary(f.elementary()) == f

    def test_arithmetic(self):
        x = UniPoly.x()
        assert (x + 1) * (x - 1) == x * x - 1
        assert (x * x - 1) - (x * x) == UniPoly((-1,))


class TestSym3Quadratic:
    def test_roots_one_two(self):
        # alpha, beta = 1, 2 -> Sym^3 roots 1, 2, 4, 8
        assert sym3_quadratic(3, 2) == UniPoly.from_roots([1, 2, 4, 8])

    @given(rationals, rationals)
    def test_matches_cubed_roots(self, a, b):
        roots = [a**3, a * a * b, a * b * b, b**3]
        assert sym3_quadratic(a + b, a * b) == UniPoly.from_roots(roots)


class TestPowerTraces:
    @settings(max_examples=80)
    @given(st.lists(rationals, min_size=1, max_size=4))
    def test_inverts_power_sums(self, roots):
        f = UniPoly.from_roots(roots)
        s = power_sums(roots, len(roots))
        assert charpoly_from_power_traces(s) == f

    def test_sym3_trace_example(self):
        # T(g) = 3, T(g^2) = 5 gives det 2, roots 1 and 2
        assert sym3_trace(3, 5) == 15
        assert sum(r for r in (1, 2, 4, 8)) == 15

    @given(rationals, rationals)
    def test_sym3_trace_is_product(self, t, d):
        _, tr1, tr2 = quadratic_power_traces(t, d, 2)
        assert sym3_trace(tr1, tr2) == sym3_quadratic(t, d).elementary()[0]

    @given(rationals, rationals)
    def test_sym3_power_traces_give_the_quartic(self, t, d):
        assert charpoly_from_power_traces(sym3_power_traces(t, d, 4)) == sym3_quadratic(t, d)


class TestBiPoly:
    def test_exact_division(self):
        t1, t2 = BiPoly.t1(), BiPoly.t2()
        f = (t1 + 1) * (t2 - 3)
        assert divide_exact(f, t2 - 3) == t1 + 1
        assert divide_exact(f + 1, t2 - 3) is None

    @settings(max_examples=50)
    @given(st.lists(st.integers(-5, 5), min_size=9, max_size=9), st.lists(st.integers(-5, 5), min_size=4, max_size=4))
    def test_division_round_trip(self, cf, cg):
        t1, t2 = BiPoly.t1(), BiPoly.t2()
        mons = [t1 ** i * t2 ** j if i + j else BiPoly.const(1) for i, j in itertools.product(range(3), repeat=2)]
        q = sum((c * m for c, m in zip(cf, mons)), BiPoly.const(0))
        g = cg[0] * t1 + cg[1] * t2 + cg[2] * t1 * t2 + (cg[3] or 1)
        assert divide_exact(q * g, g) == q

    def test_evaluate(self):
        t1, t2 = BiPoly.t1(), BiPoly.t2()
        f = t1 * t1 - t2 * 3 + 2
        assert f(2, 1) == 3

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            divide_exact(BiPoly.t1(), BiPoly.const(0))
