"""Exact scalars and p-adic valuations.

Rationals are plain :class:`fractions.Fraction` (ints are accepted anywhere a
rational is).  Quadratic irrationalities live in :class:`QuadExt`, elements
``a + b*alpha`` with ``alpha**2 = t*alpha - d``.  The ``branch`` field of a
``QuadExt`` picks which root of ``X^2 - tX + d`` in ``Q_p`` the symbol
``alpha`` is sent to when a valuation is requested; the algebra itself is
branch independent.

Branch convention: branch 0 is the root of smaller Newton-polygon slope.  On a
slope tie the unit parts of the two roots are compared modulo ``p``, then
``p^2``, ... as integers in ``[0, p^j)`` and the smaller one is branch 0.  When
the quadratic does not split over ``Q_p`` both branches have the same
valuation on every element and the label only distinguishes the two exact
values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

INF = math.inf

DEFAULT_CAP = 64


class PrecisionExhausted(ArithmeticError):
    """A capped p-adic computation could not decide its answer."""


class NonSimpleRoot(ArithmeticError):
    """Hensel lifting was seeded at a root where the derivative vanishes mod p."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PAdicContext:
    """A prime ``p`` together with the default digit cap for lifting.

    The weight-space generator is ``u = 1 + p``.
    """

    p: int
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.cap < 1:
            raise ValueError("precision cap must be positive")

    @property
    def u(self) -> Fraction:
        return Fraction(1 + self.p)


def _ctx(ctx) -> PAdicContext:
    return ctx if isinstance(ctx, PAdicContext) else PAdicContext(int(ctx))


# ---------------------------------------------------------------------------
# integer helpers


def vp_int(n: int, p: int) -> int | float:
    if n == 0:
        return INF
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp(q, p: int):
    """Valuation of a rational number (``INF`` for zero)."""
    q = Fraction(q)
    if q == 0:
        return INF
    return vp_int(q.numerator, p) - vp_int(q.denominator, p)


def unit_part(q, p: int) -> Fraction:
    q = Fraction(q)
    return q / Fraction(p) ** vp(q, p)


def residue(q, p: int, n: int) -> int:
    """Image of a ``p``-integral rational in ``Z/p^n``."""
    q = Fraction(q)
    mod = p**n
    if q.denominator % p == 0:
        raise ValueError(f"{q} is not {p}-integral")
    return q.numerator * pow(q.denominator, -1, mod) % mod


def integer_nth_root(n: int, k: int) -> int:
    """Floor of the real ``k``-th root of ``n >= 0``."""
    if n < 0:
        raise ValueError("negative radicand")
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def _exact_int_root(n: int, k: int):
    sign = -1 if n < 0 else 1
    if sign < 0 and k % 2 == 0:
        return None
    r = integer_nth_root(abs(n), k)
    return sign * r if r**k == abs(n) else None


def rational_root(q, k: int):
    """The rational ``k``-th root of ``q`` (the non-negative one for even ``k``), or None."""
    q = Fraction(q)
    num = _exact_int_root(q.numerator, k)
    if num is None:
        return None
    den = _exact_int_root(q.denominator, k)
    if den is None:
        return None
    return Fraction(num, den)


def rational_sqrt(q):
    return rational_root(q, 2)


def rational_cube_root(q):
    return rational_root(q, 3)


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_mod_prime(a: int, p: int) -> int:
    """Tonelli-Shanks; ``a`` must be a nonzero square mod odd ``p``."""
    a %= p
    if legendre(a, p) != 1:
        raise ValueError(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


# ---------------------------------------------------------------------------
# capped p-adic numbers


@dataclass(frozen=True)
class PadicApprox:
    """``p^val * unit`` with ``unit`` known modulo ``p^rel``.

    ``unit == 0`` means the number is indistinguishable from zero at the
    working precision; ``val`` is then a lower bound for its valuation.
    """

    p: int
    val: int
    unit: int
    rel: int

    @property
    def abs_prec(self) -> int:
        return self.val + self.rel

    @property
    def is_zero(self) -> bool:
        return self.unit == 0

    @classmethod
    def zero(cls, p: int, abs_prec: int) -> "PadicApprox":
        return cls(p, abs_prec, 0, 0)

    @classmethod
    def from_rational(cls, q, p: int, abs_prec: int) -> "PadicApprox":
        q = Fraction(q)
        if q == 0:
            return cls.zero(p, abs_prec)
        v = vp(q, p)
        rel = abs_prec - v
        if rel <= 0:
            return cls.zero(p, abs_prec)
        return cls(p, v, residue(unit_part(q, p), p, rel), rel)

    def valuation(self) -> int:
        if self.is_zero:
            raise PrecisionExhausted(
                f"value is zero modulo p^{self.val}; raise the precision cap"
            )
        return self.val

    def unit_residue(self, n: int) -> int:
        if n > self.rel:
            raise PrecisionExhausted("not enough relative precision")
        return self.unit % self.p**n

    def __mul__(self, other: "PadicApprox") -> "PadicApprox":
        p = self.p
        if self.is_zero or other.is_zero:
            bound = self.val + other.val
            return PadicApprox.zero(p, bound)
        rel = min(self.rel, other.rel)
        return PadicApprox(p, self.val + other.val, self.unit * other.unit % p**rel, rel)

    def inverse(self) -> "PadicApprox":
        if self.is_zero:
            raise PrecisionExhausted("cannot invert an approximate zero")
        mod = self.p**self.rel
        return PadicApprox(self.p, -self.val, pow(self.unit, -1, mod), self.rel)

    def __truediv__(self, other: "PadicApprox") -> "PadicApprox":
        return self * other.inverse()

    def __neg__(self) -> "PadicApprox":
        if self.is_zero:
            return self
        return PadicApprox(self.p, self.val, -self.unit % self.p**self.rel, self.rel)

    def __add__(self, other: "PadicApprox") -> "PadicApprox":
        p = self.p
        n = min(self.abs_prec, other.abs_prec)
        e = min(self.val, other.val)
        if n <= e:
            return PadicApprox.zero(p, n)
        mod = p ** (n - e)
        total = 0
        for x in (self, other):
            if not x.is_zero:
                total += x.unit * p ** (x.val - e)
        total %= mod
        if total == 0:
            return PadicApprox.zero(p, n)
        shift = vp_int(total, p)
        return PadicApprox(p, e + shift, (total // p**shift) % p ** (n - e - shift), n - e - shift)

    def __sub__(self, other: "PadicApprox") -> "PadicApprox":
        return self + (-other)

    def agrees_with(self, q) -> bool:
        """Whether the rational ``q`` is compatible with this approximation."""
        diff = self - PadicApprox.from_rational(q, self.p, self.abs_prec)
        return diff.is_zero


def hensel_lift(t, d, seed_residue: int, ctx, digits: int) -> int:
    """Lift a simple root of ``X^2 - tX + d`` from ``Z/p`` to ``Z/p^digits``.

    Returns the representative in ``[0, p^digits)``.
    """
    ctx = _ctx(ctx)
    p = ctx.p
    if digits < 1:
        raise ValueError("digits must be positive")
    t, d = Fraction(t), Fraction(d)
    if t.denominator % p == 0 or d.denominator % p == 0:
        raise ValueError("polynomial does not have integral reduction")
    r = seed_residue % p
    tp, dp = residue(t, p, 1), residue(d, p, 1)
    if (r * r - tp * r + dp) % p:
        raise ValueError(f"{seed_residue} is not a root mod {p}")
    if (2 * r - tp) % p == 0:
        raise NonSimpleRoot(f"derivative vanishes at {seed_residue} mod {p}")
    n = 1
    while n < digits:
        n = min(2 * n, digits)
        mod = p**n
        tn, dn = residue(t, p, n), residue(d, p, n)
        f = (r * r - tn * r + dn) % mod
        df = (2 * r - tn) % mod
        r = (r - f * pow(df, -1, mod)) % mod
    return r % p**digits


def _sqrt_unit(u: Fraction, p: int, rel: int):
    """Square root of a p-adic unit to ``rel`` digits, or None if not a square."""
    if p == 2:
        m = residue(u, 2, rel + 2)
        if m % 8 != 1:
            return None
        x = 1
        for k in range(3, rel + 2):
            if (x * x - m) % 2 ** (k + 1):
                x += 1 << (k - 1)
        return PadicApprox(2, 0, x % 2**rel, rel)
    a = residue(u, p, 1)
    if legendre(a, p) != 1:
        return None
    x = sqrt_mod_prime(a, p)
    n = 1
    while n < rel:
        n = min(2 * n, rel)
        mod = p**n
        un = residue(u, p, n)
        x = (x - (x * x - un) * pow(2 * x, -1, mod)) % mod
    return PadicApprox(p, 0, x, rel)


def _compare_units(x: PadicApprox, y: PadicApprox) -> int:
    """-1 if x's unit is smaller at the first differing residue level, +1 otherwise."""
    p = x.p
    for j in range(1, min(x.rel, y.rel) + 1):
        a, b = x.unit % p**j, y.unit % p**j
        if a != b:
            return -1 if a < b else 1
    raise PrecisionExhausted("roots agree to the working precision; raise the cap")


def _order_key_rational(r: Fraction, p: int):
    return vp(r, p)


def ordered_rational_roots(t, d, p: int):
    """The rational roots of ``X^2 - tX + d`` in branch order, or None."""
    t, d = Fraction(t), Fraction(d)
    disc = t * t - 4 * d
    s = rational_sqrt(disc)
    if s is None:
        return None
    r1, r2 = (t + s) / 2, (t - s) / 2
    v1, v2 = vp(r1, p), vp(r2, p)
    if v1 != v2:
        return (r1, r2) if v1 < v2 else (r2, r1)
    if r1 == r2:
        return (r1, r2)
    u1, u2 = unit_part(r1, p), unit_part(r2, p)
    j = 1
    while True:
        a, b = residue(u1, p, j), residue(u2, p, j)
        if a != b:
            return (r1, r2) if a < b else (r2, r1)
        j += 1


def padic_roots(t, d, ctx, digits: int | None = None):
    """Both roots of ``X^2 - tX + d`` in ``Q_p`` (branch order), or None if it does not split.

    Rational roots come back as exact Fractions; otherwise as
    :class:`PadicApprox` values carrying at least ``digits`` relative digits.
    """
    ctx = _ctx(ctx)
    p = ctx.p
    digits = ctx.cap if digits is None else digits
    t, d = Fraction(t), Fraction(d)
    exact = ordered_rational_roots(t, d, p)
    if exact is not None:
        return exact
    disc = t * t - 4 * d
    v = vp(disc, p)
    if v % 2:
        return None
    vt, vd = vp(t, p), vp(d, p)
    # enough digits that (t +- s)/2 keeps `digits` relative digits
    work = digits + 4 + max(0, int(abs(v)) + int(abs(vd)) + (0 if vt == INF else int(abs(vt))))
    s_unit = _sqrt_unit(unit_part(disc, p), p, work)
    if s_unit is None:
        return None
    s = PadicApprox(p, v // 2, s_unit.unit, s_unit.rel)
    tt = PadicApprox.from_rational(t, p, s.abs_prec + 2)
    half = PadicApprox.from_rational(Fraction(1, 2), p, s.abs_prec + 4)
    plus, minus = (tt + s) * half, (tt - s) * half
    big = minus if plus.is_zero or (not minus.is_zero and minus.val < plus.val) else plus
    if big.is_zero:
        raise PrecisionExhausted("could not separate the roots; raise the cap")
    dd = PadicApprox.from_rational(d, p, big.rel + vd + 2)
    small = dd / big
    if big.val != small.val:
        return (big, small) if big.val < small.val else (small, big)
    return (big, small) if _compare_units(big, small) < 0 else (small, big)


def quad_root_valuations(t, d, ctx):
    """Valuations of the two roots of ``X^2 - tX + d`` read off the Newton polygon."""
    ctx = _ctx(ctx)
    t, d = Fraction(t), Fraction(d)
    if t == 0 and d == 0:
        raise ValueError("(T, D) = (0, 0) has no Newton polygon")
    vt, vd = vp(t, ctx.p), vp(d, ctx.p)
    if vd == INF:
        return (Fraction(vt), INF)
    half = Fraction(vd, 2)
    if vt <= half:
        return (Fraction(vt), Fraction(vd) - vt)
    return (half, half)


# ---------------------------------------------------------------------------
# quadratic extensions


def _fr(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class QuadExt:
    """``a + b*alpha`` in ``Q[X]/(X^2 - tX + d)``; ``alpha`` embeds via ``branch``."""

    t: Fraction
    d: Fraction
    a: Fraction
    b: Fraction
    branch: int = 0

    def __post_init__(self):
        for name in ("t", "d", "a", "b"):
            object.__setattr__(self, name, _fr(getattr(self, name)))
        if self.branch not in (0, 1):
            raise ValueError("branch must be 0 or 1")

    @classmethod
    def root(cls, t, d, branch: int = 0) -> "QuadExt":
        return cls(t, d, 0, 1, branch)

    @classmethod
    def element(cls, t, d, a, b, branch: int = 0) -> Union[Fraction, "QuadExt"]:
        """``a + b*alpha``, collapsed to a Fraction when ``b == 0``."""
        return _fr(a) if b == 0 else cls(t, d, a, b, branch)

    def _make(self, a, b) -> Union[Fraction, "QuadExt"]:
        if b == 0:
            return _fr(a)
        return QuadExt(self.t, self.d, a, b, self.branch)

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if (other.t, other.d, other.branch) != (self.t, self.d, self.branch):
                raise ValueError("QuadExt operands live in different extensions")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return _fr(other), Fraction(0)
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return self._make(self.a + c[0], self.b + c[1])

    __radd__ = __add__

    def __neg__(self):
        return self._make(-self.a, -self.b)

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return self._make(self.a - c[0], self.b - c[1])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        x, y = c
        a, b = self.a, self.b
        bd = b * y
        return self._make(a * x - bd * self.d, a * y + b * x + bd * self.t)

    __rmul__ = __mul__

    def conj(self):
        """Image under ``alpha -> t - alpha``."""
        return self._make(self.a + self.b * self.t, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a + self.a * self.b * self.t + self.b * self.b * self.d

    def trace(self) -> Fraction:
        return 2 * self.a + self.b * self.t

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("element is a zero divisor")
        c = self.conj()
        if isinstance(c, QuadExt):
            return self._make(c.a / n, c.b / n)
        return c / n

    def __truediv__(self, other):
        if isinstance(other, QuadExt):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            return self._make(self.a / other, self.b / other)
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result: Union[Fraction, QuadExt] = Fraction(1)
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __repr__(self):
        return f"QuadExt({self.a} + {self.b}*alpha | alpha^2 = {self.t}*alpha - {self.d}, branch={self.branch})"


Scalar = Union[int, Fraction, QuadExt]


def same_extension(*xs) -> bool:
    keys = {(x.t, x.d, x.branch) for x in xs if isinstance(x, QuadExt)}
    return len(keys) <= 1


def power(x, n: int):
    """``x**n`` for any scalar, negative exponents included."""
    if isinstance(x, QuadExt):
        return x**n
    return Fraction(x) ** n


def embed(x, ctx, digits: int | None = None):
    """Image of ``x`` in ``Q_p``: an exact Fraction or a :class:`PadicApprox`."""
    ctx = _ctx(ctx)
    if not isinstance(x, QuadExt):
        return Fraction(x)
    roots = padic_roots(x.t, x.d, ctx, digits)
    if roots is None:
        raise ValueError("the extension does not split over Q_p; no embedding")
    r = roots[x.branch]
    if isinstance(r, Fraction):
        return x.a + x.b * r
    p = ctx.p
    prec = r.abs_prec + int(abs(vp(x.b, p)))
    return PadicApprox.from_rational(x.a, p, prec) + PadicApprox.from_rational(x.b, p, prec) * r


def valuation(x, ctx):
    """p-adic valuation with ``v(p) = 1``; ``INF`` for zero.

    Non-split quadratic elements get ``v(Norm)/2``.  Split ones are embedded
    through their branch root; the valuation is read from a capped Hensel
    approximation and :class:`PrecisionExhausted` is raised if the cap does not
    determine it.
    """
    ctx = _ctx(ctx)
    p = ctx.p
    if not isinstance(x, QuadExt):
        return vp(x, p)
    exact = ordered_rational_roots(x.t, x.d, p)
    if exact is not None:
        return vp(x.a + x.b * exact[x.branch], p)
    n = x.norm()
    if n == 0:
        return INF
    vtr, vn = vp(x.trace(), p), vp(n, p)
    if vtr >= Fraction(vn, 2):
        return Fraction(vn, 2)
    # distinct conjugate valuations: the embedding decides which one x has
    image = embed(x, ctx)
    options = {Fraction(vtr), Fraction(vn - vtr)}
    if image.is_zero:
        raise PrecisionExhausted("valuation exceeds the precision cap")
    v = Fraction(image.valuation())
    if v not in options:
        raise AssertionError("embedded valuation inconsistent with Newton polygon")
    return v


# ---------------------------------------------------------------------------
# wire format


def encode_scalar(x):
    if isinstance(x, QuadExt):
        return {
            "t": encode_scalar(x.t),
            "d": encode_scalar(x.d),
            "a": encode_scalar(x.a),
            "b": encode_scalar(x.b),
            "branch": x.branch,
        }
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def decode_scalar(obj):
    if isinstance(obj, dict):
        return QuadExt.element(
            decode_scalar(obj["t"]),
            decode_scalar(obj["d"]),
            decode_scalar(obj["a"]),
            decode_scalar(obj["b"]),
            int(obj.get("branch", 0)),
        )
    if isinstance(obj, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        return Fraction(obj.strip())
    raise TypeError(f"cannot decode scalar from {obj!r}")
