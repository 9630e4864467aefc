"""Scanning GSp4 eigensystem tables for congruences with symmetric cube lifts.

Congruence here is valuewise: ``X`` is congruent to a lift ``L`` modulo
``p^n`` when every tested eigenvalue (spherical values at the chosen primes,
plus the torus values at ``p`` when both sides carry them) agrees mod ``p^n``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .eigensys import Eigensystem, sym3_lift
from .hecke import GSP4, GL2
from .scalars import INF, PAdicContext, valuation

EXACT = "exact-sym3"
CONGRUENT = "congruent-to-sym3"
NOT_CONGRUENT = "not-congruent"


class NonIntegralValue(ValueError):
    pass


@dataclass(frozen=True)
class EntryVerdict:
    entry: str
    verdict: str
    depth: int
    exact: bool = False
    match: str | None = None
    branches: tuple = ()
    witnesses: tuple = ()

    def as_dict(self) -> dict:
        return {
            "entry": self.entry,
            "verdict": self.verdict,
            "depth": self.depth,
            "exact": self.exact,
            "match": self.match,
            "branches": list(self.branches),
            "witnesses": [str(w) for w in self.witnesses],
        }


@dataclass(frozen=True)
class CongruenceReport:
    entries: tuple
    metadata: dict = field(default_factory=dict)

    def by_id(self) -> dict:
        return {e.entry: e for e in self.entries}

    def as_dict(self) -> dict:
        return {"metadata": dict(self.metadata), "entries": [e.as_dict() for e in self.entries]}

    def to_table(self) -> str:
        head = ("entry", "verdict", "depth", "match", "branches", "witnesses")
        rows = [head]
        for e in self.entries:
            rows.append(
                (
                    e.entry,
                    e.verdict,
                    "exact" if e.exact else str(e.depth),
                    e.match or "-",
                    ",".join(map(str, e.branches)) or "-",
                    ",".join(map(str, e.witnesses)) or "-",
                )
            )
        widths = [max(len(r[i]) for r in rows) for i in range(len(head))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
        return "\n".join(lines)


def _entry_id(x: Eigensystem, kind: str, i: int) -> str:
    return x.id if x.id is not None else f"{kind}[{i}]"


def _check_integral(x: Eigensystem, name: str, primes, ctx):
    vals = []
    sph = x.spherical_dict
    for ell in primes:
        if ell not in sph:
            raise KeyError(f"{name}: no spherical values at {ell}")
        vals.extend(sph[ell])
    if x.iwahori_p is not None:
        vals.extend(x.iwahori_p)
    for v in vals:
        if valuation(v, ctx) < 0:
            raise NonIntegralValue(f"{name}: value {v} is not p-integral")


def _depth(x: Eigensystem, lift: Eigensystem, primes, use_iwahori: bool, cap: int, ctx):
    """(depth, witnesses) with depth capped at ``cap``; INF means exact agreement."""
    best = INF
    witnesses = []
    xs, ls = x.spherical_dict, lift.spherical_dict
    pairs = [(ell, list(zip(xs[ell], ls[ell]))) for ell in primes]
    if use_iwahori:
        pairs.append(("p", list(zip(x.iwahori_p, lift.iwahori_p))))
    for label, vals in pairs:
        local = INF
        for a, b in vals:
            try:
                v = valuation(a - b, ctx)
            except ValueError:
                v = 0  # values in unrelated quadratic fields are not compared
            local = min(local, v)
        if local < best:
            best, witnesses = local, [label]
        elif local == best and local != INF:
            witnesses.append(label)
    if best == INF:
        return INF, ()
    return min(int(best), cap), tuple(witnesses)


def _scan_one(args):
    x, name, lifts, primes, max_depth, cap = args
    ctx = PAdicContext(x.p, cap)
    best_depth, best = -1, None
    exact_branches, exact_match = set(), None
    for gl2_name, branch, lift in lifts:
        use_iw = branch is not None and x.iwahori_p is not None
        d, wit = _depth(x, lift, primes, use_iw, max_depth, ctx)
        if d == INF:
            if exact_match is None or exact_match == gl2_name:
                exact_match = gl2_name
                if branch is not None:
                    exact_branches.add(branch)
            continue
        if d > best_depth:
            best_depth, best = d, (gl2_name, branch, wit)
    if exact_match is not None:
        return EntryVerdict(name, EXACT, max_depth, True, exact_match, tuple(sorted(exact_branches)))
    if best is not None and best_depth >= 1:
        g, b, wit = best
        return EntryVerdict(name, CONGRUENT, best_depth, False, g, (b,) if b else (), wit)
    return EntryVerdict(name, NOT_CONGRUENT, 0)


def scan_congruences(gsp4_entries, gl2_entries, primes, max_depth: int, jobs: int = 1, cap: int | None = None):
    primes = tuple(sorted(primes))
    if max_depth < 1:
        raise ValueError("max_depth must be at least 1")
    if not gsp4_entries:
        return CongruenceReport((), {"primes": list(primes), "max_depth": max_depth, "gsp4": 0, "gl2": len(gl2_entries)})
    p = gsp4_entries[0].p
    cap = cap or max(64, max_depth + 8)
    ctx = PAdicContext(p, cap)
    for x in list(gsp4_entries) + list(gl2_entries):
        if x.p != p:
            raise ValueError("all entries must share the same p")
        if p in primes:
            raise ValueError("p itself is tested through the torus values, not as a spherical prime")
    lifts = []
    for i, f in enumerate(gl2_entries):
        if f.group != GL2:
            raise ValueError("gl2_entries must be GL2 systems")
        name = _entry_id(f, "gl2", i)
        _check_integral(f, name, primes, ctx)
        if f.iwahori_p is not None:
            for b in (1, 2, 3, 4):
                lifts.append((name, b, sym3_lift(f, b)))
        else:
            lifts.append((name, None, sym3_lift(f.replace(iwahori_p=(1, 1)), 1)))
    tasks = []
    for i, x in enumerate(gsp4_entries):
        if x.group != GSP4:
            raise ValueError("gsp4_entries must be GSp4 systems")
        name = _entry_id(x, "gsp4", i)
        _check_integral(x, name, primes, ctx)
        tasks.append((x, name, lifts, primes, max_depth, cap))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(_scan_one, tasks))
    else:
        verdicts = [_scan_one(t) for t in tasks]
    meta = {"p": p, "primes": list(primes), "max_depth": max_depth, "gsp4": len(gsp4_entries), "gl2": len(gl2_entries)}
    return CongruenceReport(tuple(verdicts), meta)
