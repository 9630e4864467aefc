"""Small exact polynomial toolkit.

``UniPoly`` is a dense univariate polynomial over exact scalars (Fractions or
``QuadExt``).  ``BiPoly`` is a sparse polynomial in two variables ``T1, T2``
over the rationals, with lexicographic order ``T1 > T2`` for division.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


def _clean(x):
    return Fraction(x) if isinstance(x, int) else x


class UniPoly:
    """Univariate polynomial, coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_clean(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots) -> "UniPoly":
        out = cls([1])
        for r in roots:
            out = out * cls([-r, 1])
        return out

    @classmethod
    def monic_from_elementary(cls, es) -> "UniPoly":
        """``X^d - e1 X^(d-1) + e2 X^(d-2) - ...``"""
        d = len(es)
        cs = [Fraction(0)] * (d + 1)
        cs[d] = Fraction(1)
        for i, e in enumerate(es, start=1):
            cs[d - i] = e if i % 2 == 0 else -e
        return cls(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def elementary(self) -> tuple:
        """(e1, ..., ed) of a monic polynomial."""
        d = self.degree
        if d < 0 or self.coeffs[-1] != 1:
            raise ValueError("polynomial is not monic")
        return tuple(self.coeff(d - i) * (-1) ** i for i in range(1, d + 1))

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _lift(self, other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other])

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly(self.coeff(i) + o.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = UniPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"({c})*{mono}")
            else:
                terms.append(f"({c})")
        return " + ".join(terms)


def sym3_quadratic(t, d) -> UniPoly:
    """Characteristic polynomial of Sym^3 g for g with trace ``t``, determinant ``d``.

    The roots are ``a^3, a^2 b, a b^2, b^3`` for the roots ``a, b`` of ``X^2 - tX + d``.
    """
    t, d = _clean(t), _clean(d)
    e1 = t * t * t - 2 * t * d
    e2 = d * (t**4 - 3 * d * t * t + 2 * d * d)
    e3 = d * d * d * e1
    e4 = d**6
    return UniPoly.monic_from_elementary((e1, e2, e3, e4))


def charpoly_from_power_traces(s, d: int | None = None) -> UniPoly:
    """Monic polynomial whose roots have power sums ``s[0..d-1]`` (Newton's identities)."""
    s = [_clean(x) for x in s]
    d = len(s) if d is None else d
    if d not in (1, 2, 3, 4) or len(s) < d:
        raise ValueError("need 1 <= d <= 4 power sums")
    e = [Fraction(1)]
    for k in range(1, d + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            acc = acc + (-1) ** (i - 1) * e[k - i] * s[i - 1]
        e.append(acc / k)
    return UniPoly.monic_from_elementary(e[1:])


def power_sums(roots, n: int) -> list:
    return [sum((r**k for r in roots), Fraction(0)) for k in range(1, n + 1)]


def quadratic_power_traces(t, d, n: int) -> list:
    """``tr(g^k)`` for k = 0..n from trace ``t`` and determinant ``d``."""
    t, d = _clean(t), _clean(d)
    out = [Fraction(2), t]
    while len(out) <= n:
        out.append(t * out[-1] - d * out[-2])
    return out[: n + 1]


def sym3_trace(tr_g, tr_g2):
    """Trace of Sym^3 of a 2-dimensional pseudocharacter: ``T(g) * T(g^2)``."""
    return tr_g * tr_g2


def sym3_power_traces(t, d, n: int = 4) -> list:
    """Power sums ``tr(Sym^3 g^k)``, k = 1..n, from trace and determinant of g."""
    pt = quadratic_power_traces(t, d, 2 * n)
    return [sym3_trace(pt[k], pt[2 * k]) for k in range(1, n + 1)]


# ---------------------------------------------------------------------------
# bivariate


class BiPoly:
    """Sparse polynomial in ``T1, T2`` with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {
            (int(i), int(j)): Fraction(c) for (i, j), c in (terms or {}).items() if c != 0
        }

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def t1(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def t2(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def _lift(self, other):
        if isinstance(other, BiPoly):
            return other
        return BiPoly.const(other)

    def __add__(self, other):
        o = self._lift(other)
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        out: dict = {}
        for (i, j), a in self.terms.items():
            for (k, l), b in o.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = BiPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def leading(self):
        """Leading (exponent, coefficient) in lex order with T1 > T2."""
        k = max(self.terms)
        return k, self.terms[k]

    def __call__(self, t1, t2):
        return sum((c * t1**i * t2**j for (i, j), c in self.terms.items()), Fraction(0))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, reverse=True):
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("T1" if i == 1 else f"T1^{i}"),
                    "" if j == 0 else ("T2" if j == 1 else f"T2^{j}"),
                ) if s
            )
            c = self.terms[(i, j)]
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)


def divide_exact(f: BiPoly, g: BiPoly):
    """``q`` with ``f == q*g`` exactly, or None if ``g`` does not divide ``f``."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    (gi, gj), gc = g.leading()
    q = BiPoly()
    r = f
    while not r.is_zero():
        (ri, rj), rc = r.leading()
        if ri < gi or rj < gj:
            return None
        term = BiPoly({(ri - gi, rj - gj): rc / gc})
        q = q + term
        r = r - term * g
    return q
