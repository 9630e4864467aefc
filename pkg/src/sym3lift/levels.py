"""Tame levels and conductor exponents for the symmetric cube."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def factorize(n: int) -> dict:
    """Prime factorization by trial division (desk-scale levels)."""
    if n < 1:
        raise ValueError("level must be a positive integer")
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def sym3_level(n: int) -> int:
    """Level of the lift: exponent 1 stays 1, exponent a > 1 becomes 3a."""
    m = 1
    for ell, a in factorize(n).items():
        m *= ell ** (1 if a == 1 else 3 * a)
    return m


@dataclass(frozen=True)
class RamificationProfile:
    """Codimension of inertia invariants and the higher ramification tail.

    ``tail`` lists ``(index, d)`` pairs: ``index = [I : I_k]`` and ``d`` the
    codimension of the ``I_k``-fixed space.
    """

    d_inertia: int
    tail: tuple = ()
    dim: int = 4

    def __post_init__(self):
        object.__setattr__(self, "tail", tuple((int(i), int(d)) for i, d in self.tail))
        if not 0 <= self.d_inertia <= self.dim:
            raise ValueError("inertia codimension out of range")
        prev_i, prev_d = 1, self.d_inertia
        for i, d in self.tail:
            if i <= prev_i:
                raise ValueError("subgroup indices must increase strictly and exceed 1")
            if not 0 <= d <= prev_d:
                raise ValueError("codimensions must be non-increasing along the filtration")
            prev_i, prev_d = i, d


@dataclass(frozen=True)
class ConductorExponent:
    value: Fraction
    integral: bool

    @property
    def flags(self) -> tuple:
        return () if self.integral else ("non-integral-input",)


def conductor_exponent(profile: RamificationProfile) -> ConductorExponent:
    n = Fraction(profile.d_inertia) + sum((Fraction(d, i) for i, d in profile.tail), Fraction(0))
    return ConductorExponent(n, n.denominator == 1)


def sym3_conductor_bound_check(n: int, n_sym3: int) -> bool:
    if n < 0 or n_sym3 < 0:
        raise ValueError("conductor exponents are non-negative")
    return n_sym3 <= 3 * n


def tripled_profile(profile: RamificationProfile) -> RamificationProfile:
    """Pointwise ``d -> min(3d, 4)`` on a profile, as a model of the Sym^3 profile."""
    return RamificationProfile(
        min(3 * profile.d_inertia, 4),
        tuple((i, min(3 * d, 4)) for i, d in profile.tail),
        dim=4,
    )
