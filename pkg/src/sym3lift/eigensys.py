"""Eigensystems of GL2 and GSp4 and the symmetric cube lift between them.

A GL2 system stores ``(T_l, T_{l,0})`` at good primes and, once stabilized,
torus values ``(t0, t1) = (alpha*beta, alpha)`` at ``p``.  A GSp4 system
stores ``(T_{l,0}, T_{l,1}, T_{l,2})`` and torus values ``(t0, t1, t2)``; the
``U_{p,i}`` eigenvalues are the torus values ``t_i``.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import _linalg
from .hecke import (
    GL2,
    GSP4,
    BRANCH_EXPONENTS,
    BadBranch,
    evaluate_monomial,
    extend_character,
    TorusHeckeElement,
    transfer_unramified,
)
from .levels import sym3_level
from .scalars import (
    PAdicContext,
    QuadExt,
    ordered_rational_roots,
    rational_cube_root,
    rational_sqrt,
    valuation,
)


class NotSym3(ValueError):
    """The eigensystem is not in the symmetric cube locus."""


class AmbiguousBranch(ValueError):
    """More than one branch relation holds, so the branch cannot be identified."""


class ModeError(ValueError):
    """A character's values are not representable in the exact scalar field."""


# ---------------------------------------------------------------------------
# Dirichlet characters


@dataclass(frozen=True)
class DirichletCharacter:
    """Character mod ``modulus``; ``values`` maps units mod ``modulus`` to values.

    Exact mode holds values ``+-1``.  Formal mode (``formal=True``) stands for
    a character with root-of-unity values that are only tracked as units.
    """

    modulus: int
    values: tuple = ()
    formal: bool = False

    def __post_init__(self):
        vals = dict(self.values) if not isinstance(self.values, dict) else self.values
        vals = {int(k) % self.modulus: Fraction(v) for k, v in vals.items()} if self.modulus > 1 else {0: Fraction(1)}
        if self.modulus > 1:
            for a in range(1, self.modulus):
                if math.gcd(a, self.modulus) == 1 and a not in vals:
                    raise ValueError(f"missing value at {a} mod {self.modulus}")
            if vals.get(1, 1) != 1:
                raise ValueError("a character takes the value 1 at 1")
        if not self.formal and any(abs(v) != 1 for v in vals.values()):
            raise ModeError("exact-mode characters take values +-1")
        object.__setattr__(self, "values", tuple(sorted(vals.items())))

    @classmethod
    def trivial(cls) -> "DirichletCharacter":
        return cls(1, ())

    @classmethod
    def legendre(cls, q: int) -> "DirichletCharacter":
        """The quadratic character ``n -> (n / q)`` for an odd prime ``q``."""
        vals = {a: (1 if pow(a, (q - 1) // 2, q) == 1 else -1) for a in range(1, q)}
        return cls(q, tuple(vals.items()))

    def __call__(self, n: int) -> Fraction:
        if self.modulus == 1:
            return Fraction(1)
        if math.gcd(n, self.modulus) != 1:
            return Fraction(0)
        return dict(self.values)[n % self.modulus]

    @property
    def order(self) -> int:
        k = 1
        while any(v**k != 1 for _, v in self.values):
            k += 1
        return k

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        m = self.modulus * other.modulus // math.gcd(self.modulus, other.modulus)
        vals = {a: self(a) * other(a) for a in range(1, m) if math.gcd(a, m) == 1} if m > 1 else {}
        return DirichletCharacter(m, tuple(vals.items()), self.formal or other.formal)

    def power(self, k: int) -> "DirichletCharacter":
        vals = {a: v**k for a, v in self.values} if self.modulus > 1 else {}
        return DirichletCharacter(self.modulus, tuple(vals.items()), self.formal)


# ---------------------------------------------------------------------------
# eigensystems


def _as_scalar(x):
    if isinstance(x, (QuadExt, Fraction)):
        return x
    return Fraction(x)


@dataclass(frozen=True)
class Eigensystem:
    group: str
    p: int
    tame_level: int
    weight: object
    spherical: tuple = ()  # ((ell, (values...)), ...) sorted by ell
    iwahori_p: tuple | None = None
    nebentypus: DirichletCharacter | None = None
    flags: tuple = ()
    id: str | None = None

    def __post_init__(self):
        if self.group not in (GL2, GSP4):
            raise ValueError(f"unknown group {self.group!r}")
        if math.gcd(self.tame_level, self.p) != 1:
            raise ValueError("tame level must be prime to p")
        sph = dict(self.spherical) if not isinstance(self.spherical, dict) else self.spherical
        width = 2 if self.group == GL2 else 3
        clean = []
        for ell, vals in sorted((int(k), v) for k, v in sph.items()):
            vals = tuple(_as_scalar(v) for v in vals)
            if len(vals) != width:
                raise ValueError(f"expected {width} spherical values at {ell}")
            if self.tame_level % ell == 0:
                raise ValueError(f"{ell} divides the tame level")
            if ell == self.p and (self.group != GL2 or self.iwahori_p is not None):
                raise ValueError("spherical values at p only make sense before stabilization")
            clean.append((ell, vals))
        object.__setattr__(self, "spherical", tuple(clean))
        if self.iwahori_p is not None:
            iw = tuple(_as_scalar(v) for v in self.iwahori_p)
            if len(iw) != width:
                raise ValueError(f"expected {width} torus values at p")
            object.__setattr__(self, "iwahori_p", iw)
        if self.group == GL2:
            if int(self.weight) < 1:
                raise ValueError("weight must be a positive integer")
            object.__setattr__(self, "weight", int(self.weight))
        else:
            k1, k2 = (int(k) for k in self.weight)
            if k1 < k2:
                raise ValueError("GSp4 weights satisfy k1 >= k2")
            object.__setattr__(self, "weight", (k1, k2))
        object.__setattr__(self, "flags", tuple(sorted(set(self.flags))))

    @property
    def spherical_dict(self) -> dict:
        return dict(self.spherical)

    @property
    def primes(self) -> tuple:
        return tuple(ell for ell, _ in self.spherical)

    def replace(self, **kw) -> "Eigensystem":
        return dataclasses.replace(self, **kw)

    def with_flags(self, *extra) -> "Eigensystem":
        return self.replace(flags=self.flags + tuple(extra))


def normalize(chi: Eigensystem) -> Eigensystem:
    """Scale ``U_{p,1}`` by ``p^{-(k2-2)}`` (GSp4); GL2 systems are returned unchanged."""
    if chi.group == GL2 or "normalized" in chi.flags:
        return chi
    if chi.iwahori_p is None:
        return chi.with_flags("normalized")
    k2 = chi.weight[1]
    t0, t1, t2 = chi.iwahori_p
    t1 = t1 * Fraction(chi.p) ** (-(k2 - 2))
    return chi.replace(iwahori_p=(t0, t1, t2)).with_flags("normalized")


def stabilizations(chi: Eigensystem) -> list:
    """The two ``p``-stabilizations of an unstabilized GL2 system."""
    if chi.group != GL2:
        raise ValueError("stabilizations are defined for GL2 systems")
    p = chi.p
    sph = chi.spherical_dict
    if p not in sph:
        raise ValueError("spherical values at p are required")
    tp, tp0 = sph[p]
    if isinstance(tp, QuadExt) or isinstance(tp0, QuadExt):
        raise ValueError("stabilization needs rational Hecke eigenvalues at p")
    d = p * tp0
    exact = ordered_rational_roots(tp, d, p)
    if exact is not None:
        alpha, beta = exact
    else:
        alpha = QuadExt.root(tp, d, 0)
        beta = alpha.conj()
    rest = tuple((ell, v) for ell, v in chi.spherical if ell != p)
    flags = ["stabilized"]
    if alpha == beta:
        flags.append("degenerate-double-root")
    out = []
    for name, root in (("alpha", alpha), ("beta", beta)):
        out.append(
            chi.replace(spherical=rest, iwahori_p=(d, root), flags=chi.flags + tuple(flags) + (f"root:{name}",))
        )
    return out


def stabilized_from_roots(p, k, alpha, beta, tame_level=1, spherical=(), nebentypus=None, id=None) -> Eigensystem:
    """A stabilized GL2 system with prescribed torus values ``(alpha*beta, alpha)``."""
    return Eigensystem(
        GL2, p, tame_level, k, spherical, (alpha * beta, alpha), nebentypus, ("stabilized",), id
    )


def _iwahori_image(branch: int, t0, t1):
    rows = BRANCH_EXPONENTS[branch]
    out = []
    for e in rows:
        x = TorusHeckeElement.monomial(GL2, 0, e)
        out.append(extend_character((t0, t1), x))
    return tuple(out)


def sym3_lift(chi: Eigensystem, branch: int) -> Eigensystem:
    if chi.group != GL2:
        raise ValueError("the lift starts from a GL2 system")
    if branch not in BRANCH_EXPONENTS:
        raise BadBranch(f"branch must be 1..4, got {branch}")
    if chi.iwahori_p is None:
        raise ValueError("the lift needs a p-stabilized system")
    sph = {}
    for ell, (a, c) in chi.spherical:
        if ell == chi.p:
            continue
        sph[ell] = tuple(transfer_unramified(ell, j).evaluate((a, c)) for j in range(3))
    t0, t1 = chi.iwahori_p
    k = chi.weight
    neb = chi.nebentypus.power(3) if chi.nebentypus is not None else None
    flags = tuple(f for f in chi.flags if f == "degenerate-double-root") + (f"lift:branch{branch}",)
    return Eigensystem(
        GSP4,
        chi.p,
        sym3_level(chi.tame_level),
        (2 * k - 1, k + 1),
        tuple(sph.items()),
        _iwahori_image(branch, t0, t1),
        neb,
        flags,
        None if chi.id is None else f"{chi.id}:sym3:{branch}",
    )


def slope(chi: Eigensystem, ctx: PAdicContext | None = None):
    """Valuation of the normalized ``U_p`` eigenvalue."""
    if chi.iwahori_p is None:
        raise ValueError("slope needs torus values at p")
    ctx = ctx or PAdicContext(chi.p)
    if chi.group == GL2:
        return valuation(chi.iwahori_p[1], ctx)
    _, t1, t2 = chi.iwahori_p
    v = valuation(t1 * t2, ctx)
    if "normalized" in chi.flags:
        return v
    return v - (chi.weight[1] - 2)


def classicality_guaranteed(chi: Eigensystem, ctx: PAdicContext | None = None) -> bool:
    if chi.group != GSP4:
        raise ValueError("the criterion is stated for GSp4 systems")
    return slope(chi, ctx) < chi.weight[1] - 3


# ---------------------------------------------------------------------------
# twisting


def _check_twistable(chi: Eigensystem, eta: DirichletCharacter):
    if eta.formal:
        raise ModeError("formal-unit characters cannot twist exact eigenvalues")
    if math.gcd(eta.modulus, chi.p) != 1:
        raise ValueError("the twisting character must have conductor prime to p")


def twist(chi: Eigensystem, eta: DirichletCharacter) -> Eigensystem:
    """Twist a GSp4 system by ``eta``."""
    if chi.group != GSP4:
        raise ValueError("use twist_gl2 for GL2 systems")
    _check_twistable(chi, eta)
    sph = {}
    for ell, (t0, t1, t2) in chi.spherical:
        if eta.modulus % ell == 0:
            continue
        e1, e2 = eta(ell), eta(ell * ell)
        sph[ell] = (e2 * t0, e2 * t1, e1 * t2)
    iw = None
    if chi.iwahori_p is not None:
        ep = eta(chi.p)
        t0, t1, t2 = chi.iwahori_p
        iw = (ep * ep * t0, ep * ep * t1, ep * t2)
    m = chi.tame_level * eta.modulus // math.gcd(chi.tame_level, eta.modulus)
    neb = eta.power(2) if chi.nebentypus is None else chi.nebentypus * eta.power(2)
    return chi.replace(spherical=tuple(sph.items()), iwahori_p=iw, tame_level=m * m, nebentypus=neb)


def twist_gl2(chi: Eigensystem, eta: DirichletCharacter) -> Eigensystem:
    if chi.group != GL2:
        raise ValueError("use twist for GSp4 systems")
    _check_twistable(chi, eta)
    sph = {}
    for ell, (a, c) in chi.spherical:
        if eta.modulus % ell == 0:
            continue
        sph[ell] = (eta(ell) * a, eta(ell * ell) * c)
    iw = None
    if chi.iwahori_p is not None:
        ep = eta(chi.p)
        t0, t1 = chi.iwahori_p
        iw = (ep * ep * t0, ep * t1)
    m0sq = eta.modulus**2
    level = chi.tame_level * m0sq // math.gcd(chi.tame_level, m0sq)
    neb = eta.power(2) if chi.nebentypus is None else chi.nebentypus * eta.power(2)
    return chi.replace(spherical=tuple(sph.items()), iwahori_p=iw, tame_level=level, nebentypus=neb)


# ---------------------------------------------------------------------------
# the symmetric cube locus


@dataclass(frozen=True)
class TransferBranch:
    index: int
    exponents: tuple
    kernel: tuple  # primitive integer vector (k0, k1, k2)

    @property
    def binomial(self) -> tuple:
        """(positive exponents, negative exponents) of ``U^k+ - U^k-``."""
        pos = tuple(max(0, k) for k in self.kernel)
        neg = tuple(max(0, -k) for k in self.kernel)
        return pos, neg

    def vanishes_at(self, u) -> bool:
        pos, neg = self.binomial
        return evaluate_monomial(u, pos) == evaluate_monomial(u, neg)

    def __str__(self):
        def mono(e):
            parts = [f"U{i}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k]
            return "*".join(parts) or "1"

        pos, neg = self.binomial
        return f"{mono(pos)} - {mono(neg)}"


def transfer_branch(index: int) -> TransferBranch:
    if index not in BRANCH_EXPONENTS:
        raise BadBranch(f"branch must be 1..4, got {index}")
    rows = BRANCH_EXPONENTS[index]
    # v with sum_j v_j * rows[j] = 0
    basis = _linalg.nullspace(_linalg.transpose(rows))
    if len(basis) != 1:
        raise AssertionError("branch exponent matrix should have rank 2")
    return TransferBranch(index, rows, tuple(_linalg.primitive_integer(basis[0])))


def branch_binomials(branch) -> list:
    b = branch if isinstance(branch, TransferBranch) else transfer_branch(branch)
    return [b]


def satisfied_branches(iwahori) -> frozenset:
    return frozenset(i for i in BRANCH_EXPONENTS if transfer_branch(i).vanishes_at(iwahori))


def _integer_roots_monic_cubic(b: int, c: int, d: int) -> list:
    f = lambda s: ((s + b) * s + c) * s + d  # noqa: E731
    bound = 1 + max(abs(b), abs(c), abs(d))
    found = set()

    def search(lo, hi, increasing):
        if lo > hi:
            return
        # first s in [lo, hi] with f(s) >= 0 (increasing) or <= 0 (decreasing)
        ok = (lambda v: v >= 0) if increasing else (lambda v: v <= 0)
        if not ok(f(hi)):
            return
        while lo < hi:
            mid = (lo + hi) // 2
            if ok(f(mid)):
                hi = mid
            else:
                lo = mid + 1
        if f(lo) == 0:
            found.add(lo)

    disc = b * b - 3 * c
    if disc <= 0:
        search(-bound, bound, True)
    else:
        r = math.isqrt(disc)
        lo1 = (-b - r - 1) // 3
        lo2 = (-b + r) // 3
        for s in list(range(lo1, lo1 + 3)) + list(range(lo2, lo2 + 3)):
            if f(s) == 0:
                found.add(s)
        search(-bound, lo1, True)
        search(lo1 + 2, lo2, False)
        search(lo2 + 2, bound, True)
    return sorted(found)


def rational_roots_cubic(b, c, d) -> list:
    """Rational roots of ``t^3 + b t^2 + c t + d``."""
    b, c, d = Fraction(b), Fraction(c), Fraction(d)
    den = 1
    for x in (b, c, d):
        den = den * x.denominator // math.gcd(den, x.denominator)
    bi, ci, di = b * den, c * den**2, d * den**3
    roots = _integer_roots_monic_cubic(int(bi), int(ci), int(di))
    return [Fraction(s, den) for s in roots]


@dataclass(frozen=True)
class CubicExtParams:
    """``T = lam * t`` and ``D = lam^2 * d`` with ``lam^3 = m`` (a symbolic cube root)."""

    t: Fraction
    d: Fraction
    m: Fraction


def is_sym3_quartic(e1, e2, e3, e4, ell=None, allow_cubic_ext: bool = False):
    """All ``(T, D)`` whose Sym^3 quartic has elementary functions ``e1..e4``.

    Returns a list of rational pairs, or of :class:`CubicExtParams` when the
    cube root of ``D^3`` is irrational and ``allow_cubic_ext`` is set; None
    when there is no solution.  ``ell`` is accepted for symmetry with the
    classifier and is not used: the quartic determines ``D`` by itself.
    """
    e1, e2, e3, e4 = (Fraction(x) for x in (e1, e2, e3, e4))
    if e1 != 0:
        cubes = [e3 / e1]
        if e4 != cubes[0] ** 2:
            return None
    else:
        if e3 != 0:
            return None
        s = rational_sqrt(e4)
        if s is None:
            return None
        cubes = [s] if s == 0 else [s, -s]
    out = []
    for r in cubes:
        dd = rational_cube_root(r)
        if dd is not None:
            for t in rational_roots_cubic(0, -2 * dd, -e1):
                if dd * (t**4 - 3 * dd * t * t + 2 * dd * dd) == e2:
                    out.append((t, dd))
        elif allow_cubic_ext:
            # T = lam t, D = lam^2 r with lam^3 = 1/r turns everything rational
            for t in rational_roots_cubic(0, -2 * r, -r * e1):
                if (t**4 - 3 * r * t * t + 2 * r * r) / r == e2:
                    out.append(CubicExtParams(t, r, 1 / r))
    if not out:
        return None
    return sorted(set(out), key=repr)


def spherical_quartic(ell, t0, t1, t2) -> tuple:
    return (t2, t2 * t2 - t1 - ell**2 * t0, ell**3 * t2 * t0, ell**6 * t0 * t0)


@dataclass(frozen=True)
class Sym3Classification:
    verdict: str  # "sym3-candidate" or "not-sym3"
    witness: int | None = None
    params: tuple = ()  # ((ell, (a, c) or CubicExtParams), ...)
    branches: frozenset | None = None
    flags: tuple = ()

    @property
    def is_candidate(self) -> bool:
        return self.verdict == "sym3-candidate"


def classify_sym3(chi: Eigensystem, allow_cubic_ext: bool = False, primes=None) -> Sym3Classification:
    if chi.group != GSP4:
        raise ValueError("classification applies to GSp4 systems")
    sph = chi.spherical_dict
    primes = sorted(sph) if primes is None else sorted(primes)
    params = []
    flags = set()
    for ell in primes:
        if ell not in sph:
            raise KeyError(f"no spherical values at {ell}")
        vals = sph[ell]
        if any(isinstance(v, QuadExt) for v in vals):
            raise ValueError("the classifier expects rational spherical values")
        sols = is_sym3_quartic(*spherical_quartic(ell, *vals), ell=ell, allow_cubic_ext=allow_cubic_ext)
        if sols is None:
            return Sym3Classification("not-sym3", witness=ell)
        sol = sols[0]
        if len(sols) > 1:
            flags.add("multiple-solutions")
        if isinstance(sol, CubicExtParams):
            flags.add("cubic-extension")
            params.append((ell, sol))
        else:
            params.append((ell, (sol[0], sol[1] / ell)))
    branches = None
    if chi.iwahori_p is not None:
        branches = satisfied_branches(chi.iwahori_p)
    return Sym3Classification("sym3-candidate", None, tuple(params), branches, tuple(sorted(flags)))


@dataclass(frozen=True)
class MatchResult:
    params: tuple  # ((ell, (a, c)), ...)
    branch: int | None
    iwahori_p: tuple | None
    flags: tuple = ()


def match_lift(x: Eigensystem, primes=None, allow_cubic_ext: bool = False) -> MatchResult:
    """Invert the lift on a single GSp4 system."""
    cls = classify_sym3(x, allow_cubic_ext, primes)
    if not cls.is_candidate:
        raise NotSym3(f"not in the symmetric cube locus (witness prime {cls.witness})")
    flags = set(cls.flags)
    if x.p % 3 == 1:
        # Q_p contains the cube roots of unity; (a, c) is only defined up to them
        flags.add("cube-root-of-unity-ambiguity")
    branch, iw = None, None
    if cls.branches is not None:
        if len(cls.branches) > 1:
            raise AmbiguousBranch(f"branches {sorted(cls.branches)} all fit")
        if len(cls.branches) == 1:
            (branch,) = cls.branches
            u0, u1, u2 = x.iwahori_p
            t0 = rational_cube_root(u0) if not isinstance(u0, QuadExt) else None
            if t0 is None:
                flags.add("torus-cube-root-not-rational")
            else:
                if branch == 1:
                    t1 = u1 / (u2 * t0)
                elif branch == 2:
                    t1 = u2 * t0 * t0 / u1
                else:
                    t1 = u2 / t0
                iw = (t0, t1)
    return MatchResult(cls.params, branch, iw, tuple(sorted(flags)))
