"""Torus Hecke algebras of GL2 and GSp4 at a prime, and the Sym^3 transfer maps.

Torus elements are Laurent polynomials in the generators ``t_0, t_1`` (GL2)
or ``t_0, t_1, t_2`` (GSp4), stored as sparse maps from integer exponent
vectors to rationals.  Each exponent vector corresponds to a cocharacter,
i.e. a vector ``d`` of diagonal ``ell``-exponents:

* GL2:  ``(e0, e1) -> d = (e0, e0 + e1)``; so ``t_0 = diag(l, l)``,
  ``t_1 = diag(1, l)``.
* GSp4: ``(e0, e1, e2) -> d = (e0, e0+e1, e0+e1+e2, e0+2e1+e2)``; so
  ``t_0 = diag(l,l,l,l)``, ``t_1 = diag(1,l,l,l^2)``, ``t_2 = diag(1,1,l,l)``.

Weyl groups act by permuting ``d``: ``w`` swaps the two GL2 entries; for
GSp4, ``w0 = (1 2)(3 4)``, ``w1 = (2 3)``, ``w2 = (1 4)``.  Under these,
``t_2`` is ``w0``-invariant and ``t_1 = t_2 * t_2^{w1}`` is ``w1``-invariant.

Actions compose on the right: the word ``("w1", "w2")`` means ``(x^{w1})^{w2}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import _linalg
from .poly import UniPoly

GL2 = "GL2"
GSP4 = "GSp4"

RANK = {GL2: 2, GSP4: 3}


class GroupMismatch(ValueError):
    pass


class UnsupportedGenerator(ValueError):
    pass


class BadBranch(ValueError):
    pass


def _check_group(group):
    if group not in RANK:
        raise ValueError(f"unknown group {group!r}")


# ---------------------------------------------------------------------------
# lattice coordinates


def to_diagonal(group: str, e) -> tuple:
    if group == GL2:
        e0, e1 = e
        return (e0, e0 + e1)
    e0, e1, e2 = e
    return (e0, e0 + e1, e0 + e1 + e2, e0 + 2 * e1 + e2)


def from_diagonal(group: str, d) -> tuple:
    if group == GL2:
        return (d[0], d[1] - d[0])
    if d[0] + d[3] != d[1] + d[2]:
        raise ValueError(f"{d} is not a GSp4 cocharacter")
    return (d[0], d[1] - d[0], d[2] - d[1])


def similitude_degree(group: str, e) -> int:
    d = to_diagonal(group, e)
    return d[0] + d[-1]


_PERMS = {
    GL2: {"w": (1, 0)},
    GSP4: {"w0": (1, 0, 3, 2), "w1": (0, 2, 1, 3), "w2": (3, 1, 2, 0)},
}


@dataclass(frozen=True)
class WeylElement:
    group: str
    word: tuple = ()

    def __post_init__(self):
        _check_group(self.group)
        object.__setattr__(self, "word", tuple(self.word))
        for g in self.word:
            if g not in _PERMS[self.group]:
                raise ValueError(f"{g!r} is not a Weyl generator of {self.group}")

    def act_exponent(self, e) -> tuple:
        d = list(to_diagonal(self.group, e))
        for g in self.word:
            perm = _PERMS[self.group][g]
            d = [d[perm[i]] for i in range(len(d))]
        return from_diagonal(self.group, d)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if other.group != self.group:
            raise GroupMismatch("Weyl elements of different groups")
        return WeylElement(self.group, self.word + other.word)


def weyl_group(group: str) -> list:
    """All elements (as shortest words found by breadth-first search)."""
    _check_group(group)
    n = 2 if group == GL2 else 4
    start = tuple(range(n))
    seen = {start: ()}
    frontier = [start]
    while frontier:
        nxt = []
        for state in frontier:
            for g, perm in _PERMS[group].items():
                new = tuple(state[perm[i]] for i in range(n))
                if new not in seen:
                    seen[new] = seen[state] + (g,)
                    nxt.append(new)
        frontier = nxt
    return [WeylElement(group, w) for w in seen.values()]


# ---------------------------------------------------------------------------
# torus elements


@dataclass(frozen=True)
class TorusHeckeElement:
    group: str
    ell: int
    terms: tuple = field(default=())

    def __post_init__(self):
        _check_group(self.group)
        acc: dict = {}
        for e, c in (self.terms.items() if isinstance(self.terms, dict) else self.terms):
            e = tuple(int(x) for x in e)
            if len(e) != RANK[self.group]:
                raise ValueError("exponent vector has the wrong length")
            acc[e] = acc.get(e, 0) + Fraction(c)
        object.__setattr__(self, "terms", tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    @classmethod
    def monomial(cls, group, ell, e, coeff=1) -> "TorusHeckeElement":
        return cls(group, ell, {tuple(e): coeff})

    @classmethod
    def generator(cls, group, ell, i: int) -> "TorusHeckeElement":
        e = [0] * RANK[group]
        e[i] = 1
        return cls.monomial(group, ell, e)

    @classmethod
    def scalar(cls, group, ell, c) -> "TorusHeckeElement":
        return cls.monomial(group, ell, (0,) * RANK[group], c)

    def as_dict(self) -> dict:
        return dict(self.terms)

    def _same(self, other):
        if not isinstance(other, TorusHeckeElement):
            return TorusHeckeElement.scalar(self.group, self.ell, other)
        if (other.group, other.ell) != (self.group, self.ell):
            raise GroupMismatch("torus elements of different algebras")
        return other

    def __add__(self, other):
        o = self._same(other)
        return TorusHeckeElement(self.group, self.ell, list(self.terms) + list(o.terms))

    __radd__ = __add__

    def __neg__(self):
        return TorusHeckeElement(self.group, self.ell, [(e, -c) for e, c in self.terms])

    def __sub__(self, other):
        return self + (-self._same(other))

    def __rsub__(self, other):
        return self._same(other) - self

    def __mul__(self, other):
        o = self._same(other)
        out = []
        for e, a in self.terms:
            for f, b in o.terms:
                out.append((tuple(x + y for x, y in zip(e, f)), a * b))
        return TorusHeckeElement(self.group, self.ell, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials are invertible")
            (e, c), = self.terms
            return TorusHeckeElement.monomial(
                self.group, self.ell, tuple(-n * x for x in e), Fraction(1) / c**-n
            )
        out = TorusHeckeElement.scalar(self.group, self.ell, 1)
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms


def weyl_act(w: WeylElement, x: TorusHeckeElement) -> TorusHeckeElement:
    if w.group != x.group:
        raise GroupMismatch(f"{w.group} Weyl element acting on {x.group} torus element")
    return TorusHeckeElement(x.group, x.ell, [(w.act_exponent(e), c) for e, c in x.terms])


def is_weyl_invariant(x: TorusHeckeElement) -> bool:
    return all(weyl_act(w, x) == x for w in weyl_group(x.group))


def orbit(x: TorusHeckeElement) -> list:
    seen = []
    for w in weyl_group(x.group):
        y = weyl_act(w, x)
        if y not in seen:
            seen.append(y)
    return seen


def is_dilating(group: str, e) -> bool:
    """Exponent vector lies in the dilating cone (all non-similitude exponents >= 0)."""
    return all(x >= 0 for x in e[1:])


# ---------------------------------------------------------------------------
# spherical polynomials


SPHERICAL_NAMES = {GL2: ("T", "T0"), GSP4: ("T0", "T1", "T2")}


@dataclass(frozen=True)
class SphericalPoly:
    """Polynomial in the spherical generators at ``ell``.

    Variables are ``(T, T0)`` for GL2 (``T = T_{l,1}``) and ``(T0, T1, T2)``
    for GSp4.  Exponents of ``T0`` may be negative since ``T0`` is a unit.
    """

    group: str
    ell: int
    terms: tuple = ()

    def __post_init__(self):
        acc: dict = {}
        for e, c in (self.terms.items() if isinstance(self.terms, dict) else self.terms):
            e = tuple(int(x) for x in e)
            acc[e] = acc.get(e, 0) + Fraction(c)
        object.__setattr__(self, "terms", tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    def evaluate(self, values):
        """Substitute scalar values for the generators (same order as the names)."""
        total = Fraction(0)
        for e, c in self.terms:
            term = c
            for v, k in zip(values, e):
                term = term * (v**k if k >= 0 else (1 / v) ** (-k))
            total = total + term
        return total

    def __repr__(self):
        names = SPHERICAL_NAMES[self.group]
        parts = []
        for e, c in self.terms:
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts) or "0"


def satake(group: str, ell: int, index: int) -> TorusHeckeElement:
    """Image of a spherical generator in the torus algebra.

    GL2: ``T -> t1 + t1^w``, ``T0 -> l^{-1} t0``.  GSp4: ``T0 -> l^{-3} t0``,
    ``T2 -> `` orbit sum of ``t2``, and ``T1`` chosen so that the quartic
    relation for ``t2`` has ``X^2``-coefficient ``T2^2 - T1 - l^2 T0``.
    """
    t = lambda i: TorusHeckeElement.generator(group, ell, i)  # noqa: E731
    if group == GL2:
        if index == 0:
            return t(1) + weyl_act(WeylElement(GL2, ("w",)), t(1))
        if index == 1:
            return t(0) * Fraction(1, ell)
    else:
        if index == 0:
            return t(0) * Fraction(1, ell**3)
        if index == 2:
            return sum(orbit(t(2)), TorusHeckeElement.scalar(GSP4, ell, 0))
        if index == 1:
            roots = orbit(t(2))
            e2 = TorusHeckeElement.scalar(GSP4, ell, 0)
            for a, b in itertools.combinations(roots, 2):
                e2 = e2 + a * b
            s2 = satake(GSP4, ell, 2)
            return s2 * s2 - e2 - satake(GSP4, ell, 0) * ell**2
    raise UnsupportedGenerator(f"no spherical generator {index} for {group}")


def _spherical_degrees(group):
    # similitude degree of each spherical generator
    return (1, 2) if group == GL2 else (2, 2, 1)


def _express_spherical(x: TorusHeckeElement, degree: int) -> SphericalPoly:
    group, ell = x.group, x.ell
    degs = _spherical_degrees(group)
    n = len(degs)
    t0_slot = 1 if group == GL2 else 0
    gens = [satake(group, ell, i) for i in range(n)]
    t0_inv = TorusHeckeElement.monomial(
        group, ell, tuple(-1 if i == 0 else 0 for i in range(RANK[group])), 1
    ) * (ell if group == GL2 else ell**3)
    cands = []
    bound = degree + 2 * 2
    for expo in itertools.product(*(range(-2, bound + 1) for _ in range(n))):
        if any(k < 0 for i, k in enumerate(expo) if i != t0_slot):
            continue
        if sum(k * dg for k, dg in zip(expo, degs)) != degree:
            continue
        cands.append(expo)
    images = []
    for expo in cands:
        m = TorusHeckeElement.scalar(group, ell, 1)
        for i, k in enumerate(expo):
            m = m * (gens[i] ** k if k >= 0 else t0_inv ** (-k))
        images.append(m.as_dict())
    keys = sorted(set().union(x.as_dict(), *images))
    target = x.as_dict()
    rows = [[img.get(k, 0) for img in images] for k in keys]
    rhs = [target.get(k, 0) for k in keys]
    sol = _linalg.solve(rows, rhs) if cands else None
    if sol is None:
        raise ArithmeticError("element is not in the spherical algebra")
    return SphericalPoly(group, ell, {e: c for e, c in zip(cands, sol)})


@dataclass(frozen=True)
class MinimalPolynomial:
    """``prod (X - x^w)`` over the orbit; ``coeffs[k]`` multiplies ``X^k``."""

    generator: TorusHeckeElement
    orbit: tuple
    coeffs: tuple  # SphericalPoly, ascending in X
    torus_coeffs: tuple  # the same coefficients inside the torus algebra

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, values) -> UniPoly:
        return UniPoly(c.evaluate(values) for c in self.coeffs)


def minimal_polynomial(x: TorusHeckeElement) -> MinimalPolynomial:
    supported = {
        (GL2, (0, 1)),
        (GSP4, (0, 1, 0)),
        (GSP4, (0, 0, 1)),
    }
    if len(x.terms) != 1 or x.terms[0][1] != 1 or (x.group, x.terms[0][0]) not in supported:
        raise UnsupportedGenerator("minimal polynomials are implemented for t1 (GL2), t1 and t2 (GSp4)")
    orb = orbit(x)
    zero = TorusHeckeElement.scalar(x.group, x.ell, 0)
    one = TorusHeckeElement.scalar(x.group, x.ell, 1)
    coeffs = [one]
    for r in orb:
        # multiply by (X - r)
        shifted = [zero] + coeffs
        coeffs = [shifted[i] - (r * coeffs[i] if i < len(coeffs) else zero) for i in range(len(shifted))]
    n = len(orb)
    s = similitude_degree(x.group, x.terms[0][0])
    spherical = tuple(_express_spherical(coeffs[k], s * (n - k)) for k in range(n + 1))
    return MinimalPolynomial(x, tuple(orb), spherical, tuple(coeffs))


# ---------------------------------------------------------------------------
# characters


def evaluate_monomial(values, e):
    out = Fraction(1)
    for v, k in zip(values, e):
        if k > 0:
            out = out * v**k
        elif k < 0:
            out = out / v ** (-k)
    return out


def extend_character(chi_minus, x: TorusHeckeElement):
    """Value of the unique extension of a dilating character at ``x``.

    ``chi_minus`` gives the character's values on ``t_0, t_1, ...``.  Each
    exponent vector is split as ``g1 - g2`` with both parts dilating.
    """
    total = Fraction(0)
    for e, c in x.terms:
        g2 = tuple(max(0, -k) for k in e)
        g1 = tuple(k + m for k, m in zip(e, g2))
        num, den = evaluate_monomial(chi_minus, g1), evaluate_monomial(chi_minus, g2)
        if den == 0:
            raise ZeroDivisionError(f"character vanishes on the denominator of {e}")
        val = num / den
        # a second decomposition, shifted by t_1, must give the same value
        shift = tuple(int(i == 1) for i in range(len(e)))
        num2 = evaluate_monomial(chi_minus, tuple(a + b for a, b in zip(g1, shift)))
        den2 = evaluate_monomial(chi_minus, tuple(a + b for a, b in zip(g2, shift)))
        if den2 != 0 and num2 / den2 != val:
            raise AssertionError("character extension depends on the decomposition")
        total = total + c * val
    return total


# ---------------------------------------------------------------------------
# transfer morphisms


def transfer_unramified(ell: int, target: int) -> SphericalPoly:
    """Image of ``T_{l,target}`` (GSp4) as a polynomial in GL2's ``(T, T0)``."""
    a = lambda i, j: (i, j)  # exponent of (T, T0)  # noqa: E731
    if target == 0:
        terms = {a(0, 3): 1}
    elif target == 2:
        terms = {a(3, 0): 1, a(1, 1): -2 * ell}
    elif target == 1:
        terms = {
            a(6, 0): 1,
            a(4, 1): -5 * ell,
            a(2, 2): 7 * ell**2,
            a(0, 3): -(ell**2 + 2 * ell**3),
        }
    else:
        raise UnsupportedGenerator(f"no GSp4 spherical generator T{target}")
    return SphericalPoly(GL2, ell, terms)


def quartic_from_spherical(ell, t0, t1, t2) -> UniPoly:
    """The degree-4 relation for ``t_2`` evaluated at spherical values."""
    e1 = t2
    e2 = t2 * t2 - t1 - ell**2 * t0
    e3 = ell**3 * t2 * t0
    e4 = ell**6 * t0 * t0
    return UniPoly.monic_from_elementary((e1, e2, e3, e4))


# images of (t0, t1, t2) as GL2 exponent vectors (t0, t1)
BRANCH_EXPONENTS = {
    1: ((3, 0), (1, 4), (0, 3)),
    2: ((3, 0), (2, 2), (0, 3)),
    3: ((3, 0), (1, 4), (1, 1)),
    4: ((3, 0), (4, -2), (1, 1)),
}


def delta_exponent(e) -> tuple:
    """``delta(t1) = t0 t1^{-1}``, ``delta(t0) = t0``."""
    return (e[0] + e[1], -e[1])


def delta(x: TorusHeckeElement) -> TorusHeckeElement:
    if x.group != GL2:
        raise GroupMismatch("delta acts on the GL2 torus algebra")
    return TorusHeckeElement(GL2, x.ell, [(delta_exponent(e), c) for e, c in x.terms])


def branch_exponents(i: int) -> tuple:
    if i in BRANCH_EXPONENTS:
        return BRANCH_EXPONENTS[i]
    if i in (5, 6, 7, 8):
        return tuple(delta_exponent(e) for e in BRANCH_EXPONENTS[i - 4])
    raise BadBranch(f"branch index must be in 1..8, got {i}")


def transfer_iwahori(i: int, target: int, ell: int = 0) -> TorusHeckeElement:
    """Image of the GSp4 torus generator ``t_target`` under branch ``i``."""
    if target not in (0, 1, 2):
        raise UnsupportedGenerator(f"no GSp4 torus generator t{target}")
    return TorusHeckeElement.monomial(GL2, ell, branch_exponents(i)[target])


def apply_transfer_iwahori(i: int, x: TorusHeckeElement) -> TorusHeckeElement:
    if x.group != GSP4:
        raise GroupMismatch("transfer maps GSp4 torus elements")
    rows = branch_exponents(i)
    out = []
    for e, c in x.terms:
        img = tuple(sum(k * rows[j][m] for j, k in enumerate(e)) for m in range(2))
        out.append((img, c))
    return TorusHeckeElement(GL2, x.ell, out)


def preserves_dilating_cone(i: int) -> bool:
    rows = branch_exponents(i)
    # cone generators: t0^{+-1}, t1, t2
    gens = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for g in gens:
        img = tuple(sum(k * rows[j][m] for j, k in enumerate(g)) for m in range(2))
        if not is_dilating(GL2, img):
            return False
    return True


def sym3_monomial_transfers() -> set:
    """All monomial maps (t0, t1, t2) -> GL2 exponents compatible with Sym^3.

    Brute force over bijections of the ``t_2``-orbit onto the Sym^3 Satake
    roots ``a^3, a^2 b, a b^2, b^3`` that respect the torus relation
    ``t2 * t2^{w1 w2} = t2^{w1} * t2^{w2}``.  Returns exponent triples.
    """
    roots = [(3, 0), (2, 1), (1, 2), (0, 3)]  # exponents of (alpha, beta)
    found = set()
    for a, b, c, d in itertools.permutations(roots):
        # a = t2, b = t2^{w1}, c = t2^{w2}, d = t2^{w1 w2}
        if (a[0] + d[0], a[1] + d[1]) != (b[0] + c[0], b[1] + c[1]):
            continue
        t2 = a
        t1 = (a[0] + b[0], a[1] + b[1])
        t0 = (a[0] + d[0], a[1] + d[1])
        # alpha^x beta^y = t0^y t1^(x-y)
        conv = lambda m: (m[1], m[0] - m[1])  # noqa: E731
        found.add((conv(t0), conv(t1), conv(t2)))
    return found
