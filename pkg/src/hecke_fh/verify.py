"""
Self-check suites run by ``hecke-fh verify``.

Each suite returns a list of :class:`Check` records; nothing raises on a
failed identity, so a report always covers the whole suite.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import combinatorics as cb
from . import composed as dc
from . import fh_constants as fh
from . import hecke as hk
from .coefficients import Laurent

SUITES = ("relations", "centers", "composed", "theorem1")


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        out = {"name": self.name, "ok": self.ok}
        if self.detail:
            out["detail"] = self.detail
        return out


def _run(name: str, fn) -> Check:
    try:
        return Check(name, bool(fn()))
    except Exception as exc:  # a crash is a failed check, not a crashed report
        return Check(name, False, f"{type(exc).__name__}: {exc}")


# ---------------------------------------------------------------------------

def hecke_relations(n: int) -> bool:
    one = hk.HeckeElement.one(n)
    t = [None] + [hk.HeckeElement.generator(n, i) for i in range(1, n)]
    q = Laurent.q()
    for i in range(1, n):
        if t[i] * t[i] != t[i].scale(q - 1) + one.scale(q):
            return False
        for j in range(i + 1, n):
            if j == i + 1:
                if t[i] * t[j] * t[i] != t[j] * t[i] * t[j]:
                    return False
            elif t[i] * t[j] != t[j] * t[i]:
                return False
    return True


def composed_relations(n: int) -> bool:
    s = [None] + [dc.generator_s(n, i) for i in range(1, n)]
    e = [None] + [dc.generator_i(n, i) for i in range(1, n)]
    q = Laurent.q()
    for i in range(1, n):
        if s[i] * s[i] != s[i].scale(q - 1) + e[i].scale(q):
            return False
        if s[i] * e[i] != s[i] or e[i] * e[i] != e[i]:
            return False
        for j in range(1, n):
            if s[i] * e[j] != e[j] * s[i] or e[i] * e[j] != e[j] * e[i]:
                return False
            if j == i + 1 and s[i] * s[j] * s[i] != s[j] * s[i] * s[j]:
                return False
            if abs(i - j) > 1 and s[i] * s[j] != s[j] * s[i]:
                return False
    return True


def matsumoto(n: int) -> bool:
    for w in cb.perms(n):
        words = cb.all_reduced_words(w)
        results = set()
        for word in words:
            x = hk.HeckeElement.one(n)
            for i in word:
                x = x.times_generator(i)
            results.add(str(x))
        if len(results) != 1 or results.pop() != str(hk.HeckeElement.basis(n, w)):
            return False
    return True


def norms_central_and_symmetric(n: int) -> bool:
    for c in cb.compositions(n):
        x = hk.norm(c)
        if not x.is_central() or x != hk.norm(cb.partition(c)):
            return False
    return True


def gr_characterization(n: int) -> bool:
    return all(hk.verify_gr_characterization(lam) for lam in cb.partitions(n))


def center_bases_span(n: int) -> bool:
    norms = {lam: hk.norm(lam) for lam in cb.partitions(n)}
    for lam in cb.partitions(n):
        hk.expand_in_center_basis(hk.geck_rouquier(lam), norms)
    return True


# ---------------------------------------------------------------------------

def psi_bijective(n: int) -> bool:
    labels = dc.basis_labels(n)
    if len(labels) != dc.dimension(n):
        return False
    for p, c in labels:
        x = dc.ComposedElement.basis(p, c)
        if dc.psi_inverse(dc.psi(x)) != x:
            return False
    return True


def psi_multiplicative(n: int, samples: int = 40, seed: int = 0) -> bool:
    rng = random.Random(seed)
    labels = dc.basis_labels(n)
    for _ in range(samples):
        a = dc.ComposedElement.basis(*rng.choice(labels))
        b = dc.ComposedElement.basis(*rng.choice(labels))
        if dc.psi(a * b) != dc.psi(a) * dc.psi(b):
            return False
    return True


def generic_norm_compatibility(max_c: int, max_n: int) -> bool:
    comps = [()] + [c for k in range(1, max_c + 1) for c in cb.compositions(k)]
    for big in range(1, max_n + 1):
        for c in comps:
            m = dc.generic_norm(c, big)
            if not dc.is_in_dprime(m):
                return False
            if sum(c) <= big:
                full = c + ((big - sum(c),) if big > sum(c) else ())
                if dc.pr(m) != hk.norm(full):
                    return False
            for small in range(1, big + 1):
                if dc.phi(m, small) != dc.generic_norm(c, small):
                    return False
    return True


# ---------------------------------------------------------------------------

def pairs_up_to(s: int) -> list:
    ps = cb.partitions_up_to(s)
    return [(a, b) for a, b in itertools.combinations_with_replacement(ps, 2)
            if sum(a) + sum(b) <= s]


def theorem1_pair(lam, mu, max_n: int) -> bool:
    table = fh.a_polynomials(lam, mu, check_routes=False)
    fh.verify_routes(table, nodes=[n for n in fh.route_nodes(table) if n <= max_n])
    for nu, p in table.entries.items():
        if sum(nu) > sum(lam) + sum(mu):
            return False
    return True


def q1_shadow(lam, mu, max_n: int) -> bool:
    table = fh.a_polynomials(lam, mu, check_routes=False)
    for n in range(1, min(max_n, 6) + 1):
        if sum(lam) + len(lam) > n or sum(mu) + len(mu) > n:
            continue
        want = hk.fh_product_q1(lam, mu, n)
        got = {nu: v.at_one() for nu, v in table(n).items() if v.at_one() != 0}
        if got != {k: v for k, v in want.items() if v != 0}:
            return False
    return True


# ---------------------------------------------------------------------------

def run_suite(name: str, max_n: int) -> list[Check]:
    checks: list[Check] = []
    if name == "relations":
        for n in range(2, max_n + 1):
            checks.append(_run(f"hecke relations n={n}", lambda n=n: hecke_relations(n)))
        for n in range(2, min(max_n, 4) + 1):
            checks.append(_run(f"composed relations n={n}", lambda n=n: composed_relations(n)))
        for n in range(1, min(max_n, 5) + 1):
            checks.append(_run(f"reduced-word independence n={n}", lambda n=n: matsumoto(n)))
    elif name == "centers":
        for n in range(1, min(max_n, 5) + 1):
            checks.append(_run(f"norms central, part order free n={n}",
                               lambda n=n: norms_central_and_symmetric(n)))
            checks.append(_run(f"Geck-Rouquier characterization n={n}",
                               lambda n=n: gr_characterization(n)))
            checks.append(_run(f"norm and GR bases span the center n={n}",
                               lambda n=n: center_bases_span(n)))
    elif name == "composed":
        for n in range(1, min(max_n, 4) + 1):
            checks.append(_run(f"psi bijective, dim D_{n}={dc.dimension(n)}",
                               lambda n=n: psi_bijective(n)))
            checks.append(_run(f"psi multiplicative n={n}", lambda n=n: psi_multiplicative(n)))
        checks.append(_run(f"generic norms: phi and pr compatibility n<={min(max_n, 6)}",
                           lambda: generic_norm_compatibility(min(4, max_n), min(max_n, 6))))
    elif name == "theorem1":
        for lam, mu in pairs_up_to(min(4, max_n)):
            tag = f"{cb.render_partition(lam) or '0'} x {cb.render_partition(mu) or '0'}"
            checks.append(_run(f"three routes agree {tag}",
                               lambda l=lam, m=mu: theorem1_pair(l, m, max_n)))
            checks.append(_run(f"q=1 class-sum oracle {tag}",
                               lambda l=lam, m=mu: q1_shadow(l, m, max_n)))
    else:
        raise ValueError(f"unknown suite {name!r}")
    return checks
