"""Brute-force matrix layer used to validate every closed formula.

Matrices are tuples of row tuples of Fractions.  ``sym3_matrix`` supports two
multiplicative conventions:

* ``"tensor"`` (default): ``g`` acts on column vectors and ``Sym^3 g`` is the
  matrix of the induced map on symmetric tensors in the basis
  ``e1^3, e1^2 e2, e1 e2^2, e2^3`` (column ``j`` = image of basis vector ``j``).
  Its invariant form is antidiagonal proportional to ``(3, -1, 1, -3)``.
* ``"substitution"``: row ``i`` holds the coordinates of ``m_i o g`` for the
  cubic monomials ``m_i = x^(3-i) y^i``; the upper unipotent then has the
  binomial rows ``(1,3,3,1), (0,1,2,1), ...`` and the invariant form is
  proportional to ``(1, -3, 3, -1)``.

The two are conjugate by ``diag(1, 3, 3, 1)``, so characteristic polynomials
agree.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from . import _linalg
from .poly import UniPoly

Mat = tuple


def mat(rows) -> Mat:
    return tuple(tuple(Fraction(x) for x in r) for r in rows)


def identity(n: int) -> Mat:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt) for row in a)


def mat_transpose(a: Mat) -> Mat:
    return tuple(zip(*a))


def mat_scale(a: Mat, s) -> Mat:
    return tuple(tuple(s * x for x in r) for r in a)


def trace(a: Mat):
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def det2(g: Mat):
    return g[0][0] * g[1][1] - g[0][1] * g[1][0]


def det(a: Mat):
    n = len(a)
    return char_poly(a).coeff(0) * (-1) ** n


def char_poly(a: Mat) -> UniPoly:
    """``det(X I - a)`` by Faddeev-LeVerrier."""
    n = len(a)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n))
    eye = identity(n)
    for k in range(1, n + 1):
        m = mat_mul(a, m)
        m = tuple(
            tuple(m[i][j] + coeffs[n - k + 1] * eye[i][j] for j in range(n)) for i in range(n)
        )
        coeffs[n - k] = -trace(mat_mul(a, m)) / k
    return UniPoly(coeffs)


def _binary_form_power(a, b, k):
    # coefficients of (a x + b y)^k in the basis x^k, x^(k-1) y, ..., y^k
    return [comb(k, i) * a ** (k - i) * b**i for i in range(k + 1)]


def _poly_mul(f, g):
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return out


def sym3_matrix(g: Mat, convention: str = "tensor") -> Mat:
    g = mat(g)
    if convention == "tensor":
        # natural action on Sym^3 of column vectors = substitution by g^T, transposed
        return mat_transpose(sym3_matrix(mat_transpose(g), "substitution"))
    if convention != "substitution":
        raise ValueError(f"unknown convention {convention!r}")
    (a, b), (c, d) = g
    xs = _binary_form_power(a, b, 1)  # image of x
    ys = _binary_form_power(c, d, 1)  # image of y
    rows = []
    for i in range(4):
        f = [Fraction(1)]
        for _ in range(3 - i):
            f = _poly_mul(f, xs)
        for _ in range(i):
            f = _poly_mul(f, ys)
        rows.append(f)
    return mat(rows)


def similitude_check(m: Mat, nu, j4: Mat) -> bool:
    """Whether ``m^T J m == nu J`` exactly."""
    lhs = mat_mul(mat_mul(mat_transpose(m), j4), m)
    return lhs == mat_scale(j4, Fraction(nu))


_PAIRS = [(i, j) for i in range(4) for j in range(i + 1, 4)]


def derive_j4(convention: str = "tensor") -> Mat:
    """Solve ``S^T J S = det(g)^3 J`` over antisymmetric ``J`` for a set of generators.

    The solution space is one dimensional; the returned generator is scaled so
    that its (0, 3) entry is 3.
    """
    gens = [
        ((1, 1), (0, 1)),
        ((1, 0), (1, 1)),
        ((2, 0), (0, 3)),
        ((0, 1), (-1, 0)),
    ]
    eqs = []
    for g in gens:
        s = sym3_matrix(g, convention)
        nu = det2(mat(g)) ** 3
        for r in range(4):
            for c in range(4):
                row = []
                for (i, j) in _PAIRS:
                    # J = sum over pairs of x_ij (E_ij - E_ji)
                    val = s[i][r] * s[j][c] - s[j][r] * s[i][c]
                    here = (1 if (r, c) == (i, j) else -1 if (r, c) == (j, i) else 0)
                    row.append(val - nu * here)
                eqs.append(row)
    basis = _linalg.nullspace(eqs)
    if len(basis) != 1:
        raise AssertionError(f"expected a one-dimensional invariant space, got {len(basis)}")
    v = basis[0]
    j = [[Fraction(0)] * 4 for _ in range(4)]
    for x, (r, c) in zip(v, _PAIRS):
        j[r][c] = x
        j[c][r] = -x
    scale = Fraction(3) / j[0][3]
    return mat_scale(mat(j), scale)


# frozen regression constants; tests re-derive them with derive_j4()
J4 = mat(
    [
        (0, 0, 0, 3),
        (0, 0, -1, 0),
        (0, 1, 0, 0),
        (-3, 0, 0, 0),
    ]
)

J4_SUBSTITUTION = mat(
    [
        (0, 0, 0, 3),
        (0, 0, -9, 0),
        (0, 9, 0, 0),
        (-3, 0, 0, 0),
    ]
)
