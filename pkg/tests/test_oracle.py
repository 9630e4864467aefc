import random
from fractions import Fraction as F

from hypothesis import given, settings, strategies as st

from sym3lift import oracle
from sym3lift.poly import UniPoly, sym3_quadratic

small = st.fractions(min_value=-9, max_value=9, max_denominator=5)
matrices = st.tuples(small, small, small, small).filter(lambda m: m[0] * m[3] - m[1] * m[2] != 0)


def as_mat(m):
    return oracle.mat([[m[0], m[1]], [m[2], m[3]]])


def test_unipotent_tensor_rows():
    u = oracle.mat([[1, 1], [0, 1]])
    assert oracle.sym3_matrix(u) == oracle.mat([[1, 1, 1, 1], [0, 1, 2, 3], [0, 0, 1, 3], [0, 0, 0, 1]])


def test_unipotent_substitution_rows():
    u = oracle.mat([[1, 1], [0, 1]])
    got = oracle.sym3_matrix(u, convention="substitution")
    assert got == oracle.mat([[1, 3, 3, 1], [0, 1, 2, 1], [0, 0, 1, 1], [0, 0, 0, 1]])


def test_diagonal():
    g = oracle.mat([[2, 0], [0, 3]])
    m = oracle.sym3_matrix(g)
    assert [m[i][i] for i in range(4)] == [8, 12, 18, 27]


def test_derived_forms():
    assert oracle.derive_j4() == oracle.J4
    assert [oracle.J4[i][3 - i] for i in range(4)] == [3, -1, 1, -3]
    assert oracle.derive_j4("substitution") == oracle.J4_SUBSTITUTION


def test_char_poly_known():
    a = oracle.mat([[2, 1], [1, 2]])
    assert oracle.char_poly(a) == UniPoly.from_roots([1, 3])
    assert oracle.det(oracle.mat([[1, 2, 3], [0, 1, 4], [5, 6, 0]])) == 1


@settings(max_examples=60)
@given(matrices, matrices)
def test_multiplicative(a, b):
    for conv in ("tensor", "substitution"):
        s = lambda g: oracle.sym3_matrix(g, convention=conv)  # noqa: E731
        assert s(oracle.mat_mul(as_mat(a), as_mat(b))) == oracle.mat_mul(s(as_mat(a)), s(as_mat(b)))


@settings(max_examples=60)
@given(matrices)
def test_similitude_both_conventions(m):
    g = as_mat(m)
    nu = oracle.det2(g) ** 3
    assert oracle.similitude_check(oracle.sym3_matrix(g), nu, oracle.J4)
    assert oracle.similitude_check(oracle.sym3_matrix(g, convention="substitution"), nu, oracle.J4_SUBSTITUTION)


@settings(max_examples=60)
@given(matrices)
def test_conventions_share_char_poly(m):
    g = as_mat(m)
    a = oracle.char_poly(oracle.sym3_matrix(g))
    b = oracle.char_poly(oracle.sym3_matrix(g, convention="substitution"))
    assert a == b == sym3_quadratic(oracle.trace(g), oracle.det2(g))


def test_char_poly_against_determinant():
    rng = random.Random(3)
    for _ in range(20):
        a = oracle.mat([[F(rng.randint(-5, 5)) for _ in range(4)] for _ in range(4)])
        f = oracle.char_poly(a)
        for x in (-2, 0, 3):
            shifted = [[(x if i == j else 0) - a[i][j] for j in range(4)] for i in range(4)]
            assert f(x) == oracle.det(oracle.mat(shifted))
