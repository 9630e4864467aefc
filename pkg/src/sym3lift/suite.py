"""Seeded cross-checks of every closed formula against the matrix oracle."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import oracle
from .eigensys import (
    DirichletCharacter,
    satisfied_branches,
    slope,
    stabilized_from_roots,
    sym3_lift,
    twist,
    twist_gl2,
)
from .hecke import SphericalPoly, quartic_from_spherical, transfer_unramified
from .poly import sym3_quadratic
from .scalars import PAdicContext, QuadExt, encode_scalar
from .weights import sen_eigenvalue_differences

FAULTS = ("transfer-T1",)


@dataclass
class CheckResult:
    name: str
    trials: int = 0
    passed: bool = True
    reproducer: dict | None = None

    def as_dict(self) -> dict:
        out = {"name": self.name, "trials": self.trials, "passed": self.passed}
        if self.reproducer is not None:
            out["reproducer"] = self.reproducer
        return out


@dataclass
class SuiteResult:
    seed: int
    trials: int
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self):
        return next((c for c in self.checks if not c.passed), None)

    def as_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }


def random_rational(rng: random.Random, size: int = 12, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-size, size), rng.randint(1, size))
        if q != 0 or not nonzero:
            return q


def random_invertible(rng: random.Random):
    while True:
        g = oracle.mat([[random_rational(rng) for _ in range(2)] for _ in range(2)])
        if oracle.det2(g) != 0:
            return g


def _transfer_images(ell, fault):
    images = [transfer_unramified(ell, j) for j in range(3)]
    if fault == "transfer-T1":
        terms = dict(images[1].terms)
        key = (2, 2)
        terms[key] = -terms[key]
        images[1] = SphericalPoly(images[1].group, ell, terms)
    return images


def _s(x):
    return encode_scalar(x)


def _check_functoriality(rng, trials):
    res = CheckResult("functoriality")
    for _ in range(trials):
        g = random_invertible(rng)
        res.trials += 1
        lhs = oracle.char_poly(oracle.sym3_matrix(g))
        if lhs != sym3_quadratic(oracle.trace(g), oracle.det2(g)):
            res.passed = False
            res.reproducer = {"g": [[_s(x) for x in r] for r in g]}
            break
    return res


def _check_similitude(rng, trials):
    res = CheckResult("similitude")
    for _ in range(trials):
        g = random_invertible(rng)
        res.trials += 1
        if not oracle.similitude_check(oracle.sym3_matrix(g), oracle.det2(g) ** 3, oracle.J4):
            res.passed = False
            res.reproducer = {"g": [[_s(x) for x in r] for r in g]}
            break
    return res


def _check_transfer(rng, trials, fault):
    res = CheckResult("transfer-functoriality")
    for _ in range(trials):
        ell = rng.choice((2, 3, 5, 7, 11))
        a, c = random_rational(rng), random_rational(rng, nonzero=True)
        res.trials += 1
        images = _transfer_images(ell, fault)
        t0, t1, t2 = (im.evaluate((a, c)) for im in images)
        quartic = quartic_from_spherical(ell, t0, t1, t2)
        companion = oracle.mat([[0, -ell * c], [1, a]])
        if quartic != oracle.char_poly(oracle.sym3_matrix(companion)):
            res.passed = False
            res.reproducer = {"ell": ell, "a": _s(a), "c": _s(c)}
            break
    return res


def lift_input_with_slope(p, k, h):
    """Stabilized GL2 data with v(alpha) = h, v(beta) = k - 1 - h."""
    m = int(h)
    if h == m:
        alpha = Fraction(p) ** m * (1 + p)
    else:
        alpha = QuadExt(0, -p, 0, Fraction(p) ** m)  # p^m * sqrt(p)
    beta = Fraction(p) ** (k - 1) / alpha
    return stabilized_from_roots(p, k, alpha, beta)


def expected_slopes(k, h) -> list:
    return sorted([7 * h, k - 1 + 5 * h, k - 1 + 5 * h, 4 * (k - 1) - h])


def _check_slopes(rng, trials):
    res = CheckResult("slope-table")
    for _ in range(trials):
        p = rng.choice((5, 7, 11))
        k = rng.randint(2, 12)
        h = Fraction(rng.randint(0, 2 * (k - 1)), 2)
        res.trials += 1
        chi = lift_input_with_slope(p, k, h)
        got = sorted(slope(sym3_lift(chi, i)) for i in (1, 2, 3, 4))
        if got != expected_slopes(k, h):
            res.passed = False
            res.reproducer = {"p": p, "k": k, "h": _s(h)}
            break
    return res


def random_separated_roots(rng, p):
    while True:
        va, vb = rng.randint(0, 4), rng.randint(0, 4)
        if va == vb:
            continue
        ua = Fraction(rng.choice([u for u in range(1, 4 * p) if u % p]), rng.choice([1, 2, 3, 4]))
        ub = Fraction(rng.choice([u for u in range(1, 4 * p) if u % p]), rng.choice([1, 2, 3, 4]))
        return ua * p**va, ub * p**vb, max(va, vb) + 1


def _check_branch_separation(rng, trials):
    res = CheckResult("branch-separation")
    for _ in range(trials):
        p = rng.choice((5, 7))
        a, b, k = random_separated_roots(rng, p)
        chi = stabilized_from_roots(p, k, a, b)
        res.trials += 1
        for i in (1, 2, 3, 4):
            if satisfied_branches(sym3_lift(chi, i).iwahori_p) != frozenset({i}):
                res.passed = False
                res.reproducer = {"p": p, "alpha": _s(a), "beta": _s(b), "branch": i}
                return res
    return res


def _check_twist(rng, trials):
    res = CheckResult("twist-compatibility")
    for _ in range(trials):
        p = rng.choice((5, 7))
        q = rng.choice([q for q in (3, 11, 13) if q != p])
        eta = DirichletCharacter.legendre(q)
        a, b, k = random_separated_roots(rng, p)
        sph = {ell: (random_rational(rng), random_rational(rng, nonzero=True)) for ell in (2, 3, 11, 13) if ell not in (p, q)}
        chi = stabilized_from_roots(p, k, a, b, spherical=tuple(sph.items()))
        res.trials += 1
        for i in (1, 2, 3, 4):
            left = sym3_lift(twist_gl2(chi, eta), i)
            right = twist(sym3_lift(chi, i), eta.power(3))
            ok = left.spherical == right.spherical and left.iwahori_p == right.iwahori_p
            ok = ok and slope(right) == slope(sym3_lift(chi, i))
            if not ok:
                res.passed = False
                res.reproducer = {"p": p, "q": q, "alpha": _s(a), "beta": _s(b), "branch": i}
                return res
    return res


def _check_sen(rng, trials):
    res = CheckResult("sen-factorization")
    for p in (5, 7, 11, 13)[: max(1, min(4, trials))]:
        res.trials += 1
        facts = sen_eigenvalue_differences(PAdicContext(p))
        if len(facts) != 6 or not all(f.holds() for f in facts):
            res.passed = False
            res.reproducer = {"p": p}
            break
    return res


def oracle_suite(seed: int = 0, trials: int = 100, inject_fault: str | None = None) -> SuiteResult:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if inject_fault is not None and inject_fault not in FAULTS:
        raise ValueError(f"unknown fault {inject_fault!r}; known: {', '.join(FAULTS)}")
    rng = random.Random(seed)
    out = SuiteResult(seed, trials)
    out.checks.append(_check_functoriality(rng, trials))
    out.checks.append(_check_similitude(rng, trials))
    out.checks.append(_check_transfer(rng, trials, inject_fault))
    out.checks.append(_check_slopes(rng, trials))
    out.checks.append(_check_branch_separation(rng, trials))
    out.checks.append(_check_twist(rng, trials))
    out.checks.append(_check_sen(rng, trials))
    return out
