"""Constructed datasets shared by the congruence and acceptance tests."""

import random
from fractions import Fraction as F

from sym3lift.eigensys import Eigensystem, stabilized_from_roots, sym3_lift
from sym3lift.hecke import GSP4

P = 11
PRIMES = (2, 3, 5)


def gl2_forms(rng, n=5, p=P):
    """``n`` stabilized GL2 systems whose ``T_{2,0}`` are distinct mod p.

    Cubing is a bijection mod 11, so the lifts' ``T_{2,0} = c^3`` are distinct
    mod p too and unrelated forms never agree past depth 0.
    """
    cs = [r + p * rng.randint(0, 3) for r in rng.sample(range(1, p), n)]
    forms = []
    for i, c in enumerate(cs):
        sph = ((2, (rng.randint(-20, 20), c)), (3, (rng.randint(-20, 20), rng.randint(1, 30))), (5, (rng.randint(-20, 20), rng.randint(1, 30))))
        alpha = F(rng.choice([u for u in range(1, p) if u % p]))
        beta = F(p * rng.choice([u for u in range(1, p)])) / alpha
        forms.append(stabilized_from_roots(p, 2, alpha, beta, spherical=sph, id=f"f{i}"))
    return forms


def perturb(x: Eigensystem, depth: int, rng, p=P) -> Eigensystem:
    """Shift ``T_{3,1}`` by ``p^depth`` times a unit."""
    sph = dict(x.spherical)
    t0, t1, t2 = sph[3]
    sph[3] = (t0, t1 + p**depth * rng.choice([u for u in range(1, p)]), t2)
    return x.replace(spherical=tuple(sph.items()), flags=(), id=None)


def random_gsp4(rng, forms, p=P) -> Eigensystem:
    lifted_t0 = {sym3_lift(f, 1).spherical_dict[2][0] % p for f in forms}
    t0 = rng.choice([v for v in range(p * 3) if v % p not in lifted_t0])
    sph = {2: (t0, rng.randint(-99, 99), rng.randint(-99, 99))}
    for ell in (3, 5):
        sph[ell] = tuple(rng.randint(-99, 99) for _ in range(3))
    iw = (p**3, rng.randint(1, 99), rng.randint(1, 99))
    return Eigensystem(GSP4, p, 1, (3, 3), tuple(sph.items()), iw)


def congruence_dataset(seed=0):
    """20 GSp4 entries with the expected (verdict, depth, match) of each."""
    rng = random.Random(seed)
    forms = gl2_forms(rng)
    entries, expected = [], []
    for i, f in enumerate(forms):
        b = 1 + i % 4
        x = sym3_lift(f, b).replace(id=f"exact{i}")
        entries.append(x)
        expected.append(("exact-sym3", None, f.id, (b,)))
    for i, f in enumerate(forms):
        depth = 1 + i % 3
        x = perturb(sym3_lift(f, 1 + (i + 1) % 4), depth, rng).replace(id=f"near{i}")
        entries.append(x)
        expected.append(("congruent-to-sym3", depth, f.id, None))
    for i in range(10):
        entries.append(random_gsp4(rng, forms).replace(id=f"rand{i}"))
        expected.append(("not-congruent", 0, None, None))
    return entries, forms, expected
