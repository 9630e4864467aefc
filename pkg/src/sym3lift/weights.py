"""Weight-space coordinates, the Sym^3 weight map and Sen eigenvalue checks.

Weights are coordinatized by ``T = kappa(u) - 1`` with ``u = 1 + p``, so the
classical weight ``k`` sits at ``T = u^k - 1`` (genus 1) and ``(k1, k2)`` at
``(u^k1 - 1, u^k2 - 1)`` (genus 2).  Coordinates may be rationals or
polynomials (``UniPoly``/``BiPoly``) for symbolic identities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .hecke import GL2, GSP4
from .poly import BiPoly, divide_exact
from .scalars import PAdicContext, _ctx, vp


@dataclass(frozen=True)
class WeightPoint:
    genus: int
    coords: tuple
    label: object = None

    def __post_init__(self):
        if self.genus not in (1, 2) or len(self.coords) != self.genus:
            raise ValueError("genus and number of coordinates disagree")


def classical_point(k, ctx) -> WeightPoint:
    u = _ctx(ctx).u
    if isinstance(k, tuple):
        return WeightPoint(2, tuple(u**ki - 1 for ki in k), tuple(k))
    return WeightPoint(1, (u**k - 1,), k)


def is_classical_label_consistent(w: WeightPoint, ctx) -> bool:
    if w.label is None:
        return True
    return classical_point(w.label, ctx).coords == w.coords


def iota(w: WeightPoint, ctx) -> WeightPoint:
    """``T -> (u^-1 (1+T)^2 - 1, u (1+T) - 1)``; label ``k -> (2k-1, k+1)``."""
    if w.genus != 1:
        raise ValueError("iota takes a genus-1 weight")
    u = _ctx(ctx).u
    (t,) = w.coords
    one_t = t + 1
    t1 = one_t * one_t * (1 / u) - 1
    t2 = one_t * u - 1
    label = None if w.label is None else (2 * w.label - 1, w.label + 1)
    return WeightPoint(2, (t1, t2), label)


def iota_image_equation(t1, t2, ctx):
    """``u^-3 (1+T2)^2 - (1+T1)``; vanishes exactly on the image of iota."""
    u = _ctx(ctx).u
    return (t2 + 1) * (t2 + 1) * (1 / u**3) - (t1 + 1)


def hodge_tate_weights(weight, group: str) -> tuple:
    if group == GL2:
        k = int(weight)
        return tuple(sorted((0, k - 1)))
    if group == GSP4:
        k1, k2 = (int(x) for x in weight)
        return tuple(sorted((0, k2 - 2, k1 - 1, k1 + k2 - 3)))
    raise ValueError(f"unknown group {group!r}")


def adapted_disc_contains(k, s_h, ctx) -> bool:
    """Whether the classical weight ``k`` lies in the disc of radius ``p^-s_h``."""
    p = _ctx(ctx).p
    s_h = Fraction(s_h)
    if s_h < 0:
        raise ValueError("s_h must be non-negative")
    ks = k if isinstance(k, tuple) else (k,)
    return all(vp(ki, p) > s_h - 1 for ki in ks)


# ---------------------------------------------------------------------------
# Sen eigenvalues


def sen_eigenvalues(ctx) -> tuple:
    """The four exp-Sen eigenvalues in ``Q[T1, T2]``."""
    u = _ctx(ctx).u
    one1 = BiPoly.t1() + 1
    one2 = BiPoly.t2() + 1
    return (
        BiPoly.const(1),
        one2 * (1 / u**2),
        one1 * (1 / u),
        one1 * one2 * (1 / u**3),
    )


def bad_primes(ctx) -> dict:
    u = _ctx(ctx).u
    one1 = BiPoly.t1() + 1
    one2 = BiPoly.t2() + 1
    return {
        "1+T1-u": one1 - u,
        "1+T2-u^2": one2 - u**2,
        "1+T2-u(1+T1)": one2 - one1 * u,
        "(1+T1)(1+T2)-u^3": one1 * one2 - u**3,
    }


class NoBadDivisor(ArithmeticError):
    pass


@dataclass(frozen=True)
class SenFactor:
    pair: tuple  # indices (i, j) of the eigenvalues, difference = ev[j] - ev[i]
    difference: BiPoly
    divisor_name: str
    divisor: BiPoly
    cofactor: BiPoly

    def holds(self) -> bool:
        return self.difference == self.divisor * self.cofactor


def sen_eigenvalue_differences(ctx) -> list:
    ev = sen_eigenvalues(ctx)
    bad = bad_primes(ctx)
    out = []
    for i, j in itertools.combinations(range(4), 2):
        diff = ev[j] - ev[i]
        for name, g in bad.items():
            q = divide_exact(diff, g)
            if q is not None:
                out.append(SenFactor((i, j), diff, name, g, q))
                break
        else:
            raise NoBadDivisor(f"eigenvalue difference {(i, j)} has no bad-prime divisor")
    return out
