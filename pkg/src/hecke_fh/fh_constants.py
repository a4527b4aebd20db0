"""
Structure constants of completed norms and completed Geck-Rouquier classes.

``g``: ``N_(lam,n) N_(mu,n) = sum_nu g^nu N_(nu,n)`` with ``g`` independent of
``n``.  At a single level several ``nu`` can complete to the same partition
of ``n``, so the ``g`` are solved from several levels at once.

``a``: ``Gamma_(lam,n) Gamma_(mu,n) = sum_nu a^nu(n) Gamma_(nu,n)``, obtained by
three independent routes:

* ``direct``: multiply the two Geck-Rouquier elements in ``H(n, q)``;
* ``norm``: expand both factors in completed norms with ``P(n)``, multiply
  the norms in ``H(n, q)`` and convert back with ``E2M(n)``;
* ``tensor``: ``(q/(q-1))^(|lam|+|mu|-|nu|) sum P P g Q`` with no Hecke work.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from . import combinatorics as cb
from . import hecke as hk
from .coefficients import (
    InterpolationError, Laurent, NPolynomial, RationalFunction, interpolate,
    q_over_q_minus_1, to_laurent_strict,
)
from .symfunc import e2m_matrix, m2e_matrix, p_polynomial, p_row, q_polynomial


class ConstantsError(ArithmeticError):
    """A computed table violates polynomiality, stability or the support bound."""


# ---------------------------------------------------------------------------
# coordinates in the norm basis

def norm_coordinates(z: hk.HeckeElement) -> dict:
    """Coordinates of a central element in ``{N_kappa : kappa |- n}``.

    Reads Geck-Rouquier coordinates first, then uses
    ``Gamma_lam = (q/(q-1))^(n-l(lam)) sum_mu M2E[lam, mu] N_mu``.
    """
    return _gamma_to_norm(hk.gamma_coordinates(z), z.n)


def _gamma_to_norm(gamma: dict, n: int) -> dict:
    m2e = m2e_matrix(n)
    acc: dict = {}
    for lam, c in gamma.items():
        if c.is_zero():
            continue
        scaled = q_over_q_minus_1(n - len(lam)) * c
        for mu, e in m2e.row(lam).items():
            acc[mu] = acc.get(mu, RationalFunction(0)) + scaled * e
    return {mu: to_laurent_strict(v) for mu, v in acc.items() if not v.is_zero()}


def _norm_to_gamma(norms: dict, n: int) -> dict:
    e2m = e2m_matrix(n)
    acc: dict = {}
    for kappa, c in norms.items():
        for tau, e in e2m.row(kappa).items():
            acc[tau] = acc.get(tau, RationalFunction(0)) + q_over_q_minus_1(
                -(n - len(tau))) * c * e
    return {tau: v for tau, v in acc.items() if not v.is_zero()}


# ---------------------------------------------------------------------------
# g-constants

@dataclass
class GTable:
    lam: tuple
    mu: tuple
    entries: dict                      # nu -> Laurent
    levels: list                       # n used in the joint solve
    agreed_at: list                    # levels whose expansion matches the table
    onset: int | None                   # first level that separates all completed norms

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam), "mu": list(self.mu),
            "entries": [{"nu": list(nu), "coeff": c.to_json()} for nu, c in self.entries.items()],
            "levels": self.levels, "agreed_at": self.agreed_at, "onset": self.onset,
        }


def _level_equations(lam, mu, n: int, unknowns: list, bound: int | None):
    x = hk.norm_completed(lam, n, bound)
    y = hk.norm_completed(mu, n, bound)
    if x.is_zero() or y.is_zero():
        coords = {}
    else:
        coords = _gamma_to_norm(hk.central_product_gamma(x, y), n)
    fibers: dict = {}
    for j, nu in enumerate(unknowns):
        if sum(nu) <= n:
            fibers.setdefault(cb.complete_up(nu, n), []).append(j)
    for kappa in coords:
        if kappa not in fibers:
            raise ConstantsError(
                f"N_{cb.render_partition(kappa)} appears at n={n} but no |nu| <= "
                f"{sum(lam) + sum(mu)} completes to it")
    return [(fibers[k], coords.get(k, Laurent())) for k in fibers]


def _solve_01(rows: list, size: int) -> list:
    """Solve ``sum_(j in idx) x_j = rhs`` for every ``(idx, rhs)`` in ``rows``.

    Exact Gaussian elimination with rational pivots and Laurent right-hand
    sides; raises when the system is inconsistent or underdetermined.
    """
    mat = [[Fraction(int(j in idx)) for j in range(size)] for idx, _ in rows]
    rhs = [Laurent.coerce(r) for _, r in rows]
    pivots = []
    r = 0
    for col in range(size):
        piv = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        rhs[r], rhs[piv] = rhs[piv], rhs[r]
        p = mat[r][col]
        mat[r] = [v / p for v in mat[r]]
        rhs[r] = rhs[r].scale(1 / p)
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
                rhs[i] = rhs[i] - rhs[r].scale(f)
        pivots.append(col)
        r += 1
    if any(not rhs[i].is_zero() for i in range(r, len(mat))):
        raise ConstantsError("norm products are not consistent across levels")
    if len(pivots) < size:
        raise ConstantsError("not enough levels to separate the completed norms")
    return rhs[:size]


def _min_level(s: int) -> int:
    return max(s, 1)


@lru_cache(maxsize=None)
def _g_cached(lam, mu, levels: tuple, bound) -> GTable:
    s = sum(lam) + sum(mu)
    unknowns = cb.partitions_up_to(s)
    per_level = {n: _level_equations(lam, mu, n, unknowns, bound) for n in levels}
    rows = [row for n in levels for row in per_level[n]]
    sol = _solve_01(rows, len(unknowns))
    entries = {nu: v for nu, v in zip(unknowns, sol) if not v.is_zero()}
    agreed = [n for n in levels
              if all(sum((sol[j] for j in idx), Laurent()) == rhs for idx, rhs in per_level[n])]
    if agreed != list(levels):
        raise ConstantsError(f"g-values disagree at levels {sorted(set(levels) - set(agreed))}")
    return GTable(lam, mu, entries, list(levels), agreed, _separating_level(s, levels[-1]))


def _separating_level(s: int, last: int) -> int | None:
    """First ``n`` at which ``nu -> nu ^ n`` is injective on ``|nu| <= s``, so a
    single level reads off every g-value (``None`` if beyond ``last``)."""
    nus = cb.partitions_up_to(s)
    for n in range(_min_level(s), last + 1):
        if len({cb.complete_up(nu, n) for nu in nus if sum(nu) <= n}) == len(nus):
            return n
    return None


def g_constants(lam, mu, levels=None, bound: int | None = None) -> GTable:
    """Stable coefficients of ``N_(lam,n) N_(mu,n)`` in completed norms.

    Without explicit ``levels`` the solve starts with three consecutive
    levels from ``max(|lam| + |mu|, 1)`` and adds levels until the joint
    system has full rank.

    >>> t = g_constants((1,), (1,))
    >>> {cb.render_partition(k): str(v) for k, v in t.entries.items()}
    {'1': '1', '2': '-q - 2 - q^-1', '1,1': 'q + 1 + q^-1'}
    """
    lam, mu = cb.partition(lam), cb.partition(mu)
    if levels is not None:
        levels = tuple(sorted(levels))
        if len(levels) < 3 or any(b != a + 1 for a, b in zip(levels, levels[1:])):
            raise ConstantsError("need at least three consecutive levels")
        return _g_cached(lam, mu, levels, bound)
    cap = hk.COMPUTE_BOUND if bound is None else bound
    start = _min_level(sum(lam) + sum(mu))
    stop = start + 2
    while True:
        try:
            return _g_cached(lam, mu, tuple(range(start, stop + 1)), bound)
        except ConstantsError as exc:
            if "not enough levels" not in str(exc) or stop >= cap:
                raise
            stop += 1


# ---------------------------------------------------------------------------
# a-constants at a fixed n

def _support_check(out: dict, s: int, where: str):
    for nu in out:
        if sum(nu) > s:
            raise ConstantsError(f"{where}: Gamma_{cb.render_partition(nu)} exceeds the size bound {s}")


def a_direct(lam, mu, n: int, bound: int | None = None) -> dict:
    """Expand ``Gamma_(lam,n) Gamma_(mu,n)`` computed in ``H(n, q)``."""
    x = hk.gamma_completed(lam, n, bound)
    y = hk.gamma_completed(mu, n, bound)
    if x.is_zero() or y.is_zero():
        return {}
    coords = hk.central_product_gamma(x, y)
    return {cb.strip_arrow(k): v for k, v in coords.items() if not v.is_zero()}


def a_norm_route(lam, mu, n: int, bound: int | None = None) -> dict:
    """Expand both factors in completed norms via ``P(n)``, multiply the norms
    in ``H(n, q)``, and convert back through ``E2M(n)``."""
    lam, mu = cb.partition(lam), cb.partition(mu)
    if sum(lam) + len(lam) > n or sum(mu) + len(mu) > n:
        return {}
    pl, pm = p_row(lam), p_row(mu)
    acc: dict = {}
    for rho, a in pl.items():
        for sig, b in pm.items():
            coeff = a(n) * b(n)
            if coeff.is_zero():
                continue
            x, y = hk.norm_completed(rho, n, bound), hk.norm_completed(sig, n, bound)
            if x.is_zero() or y.is_zero():
                continue
            for kappa, c in _gamma_to_norm(hk.central_product_gamma(x, y), n).items():
                acc[kappa] = acc.get(kappa, Laurent()) + c * coeff
    factor = q_over_q_minus_1(sum(lam) + sum(mu))
    gam = _norm_to_gamma({k: v for k, v in acc.items() if not v.is_zero()}, n)
    return {cb.strip_arrow(k): to_laurent_strict(factor * v) for k, v in gam.items()
            if not (factor * v).is_zero()}


def _tensor_terms(lam, mu, bound):
    """``[(rho, sigma, P_lam_rho * P_mu_sigma, g-table)]`` for the tensor formula."""
    out = []
    for rho, a in p_row(lam).items():
        for sig, b in p_row(mu).items():
            table = g_constants(rho, sig, bound=bound)
            out.append((a * b, table.entries))
    return out


def a_tensor(lam, mu, n: int, bound: int | None = None) -> dict:
    """``a^nu(n) = (q/(q-1))^(s-|nu|) sum P_(lam,rho) P_(mu,sigma) g^tau_(rho,sigma) Q_(tau,nu)``."""
    lam, mu = cb.partition(lam), cb.partition(mu)
    s = sum(lam) + sum(mu)
    acc: dict = {}
    for pp, entries in _tensor_terms(lam, mu, bound):
        w = pp(n)
        if w.is_zero():
            continue
        for tau, g in entries.items():
            for nu in cb.partitions_up_to(sum(tau)):
                if sum(nu) + len(nu) > n:
                    continue
                qv = q_polynomial(tau, nu)(n)
                if not qv.is_zero():
                    acc[nu] = acc.get(nu, Laurent()) + w * g * qv
    out = {}
    for nu, v in acc.items():
        r = q_over_q_minus_1(s - sum(nu)) * v
        if not r.is_zero():
            out[nu] = to_laurent_strict(r)
    return out


ROUTES = {"direct": a_direct, "norm": a_norm_route, "tensor": a_tensor}


def a_constants_at_n(lam, mu, n: int, route: str = "direct", bound: int | None = None) -> dict:
    """Coefficients of ``Gamma_(lam,n) Gamma_(mu,n)`` in ``{Gamma_(nu,n)}``.

    >>> {cb.render_partition(k): str(v) for k, v in a_constants_at_n((1,), (1,), 4).items()}
    {'': '6*q', '1': '3*q - 3', '2': 'q + 1 + q^-1', '1,1': 'q + q^-1'}
    """
    if route not in ROUTES:
        raise ValueError(f"route must be one of {sorted(ROUTES)}, got {route!r}")
    lam, mu = cb.partition(lam), cb.partition(mu)
    out = ROUTES[route](lam, mu, n, bound)
    _support_check(out, sum(lam) + sum(mu), f"{route} route at n={n}")
    return dict(sorted(out.items(), key=lambda kv: (sum(kv[0]), _rank(kv[0]))))


def _rank(nu):
    return cb.partitions(sum(nu)).index(nu)


# ---------------------------------------------------------------------------
# polynomials in n

@dataclass
class ATable:
    lam: tuple
    mu: tuple
    entries: dict                       # nu -> NPolynomial
    nodes: list                         # interpolation nodes
    held_out: list                      # extra nodes checked against the fit
    degree_bound: int
    verified_at: list = field(default_factory=list)   # n checked by Hecke routes

    def __call__(self, n: int) -> dict:
        out = {}
        for nu, p in self.entries.items():
            if sum(nu) + len(nu) <= n:
                v = p(n)
                if not v.is_zero():
                    out[nu] = v
        return out

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam), "mu": list(self.mu),
            "entries": [{"nu": list(nu), "poly": p.to_json()} for nu, p in self.entries.items()],
            "nodes": self.nodes, "held_out": self.held_out,
            "degree_bound": self.degree_bound, "verified_at": self.verified_at,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ATable":
        return cls(
            tuple(data["lambda"]), tuple(data["mu"]),
            {tuple(e["nu"]): NPolynomial.from_json(e["poly"]) for e in data["entries"]},
            list(data["nodes"]), list(data.get("held_out", [])),
            int(data.get("degree_bound", 0)), list(data.get("verified_at", [])),
        )


def symbolic_a(lam, mu, bound: int | None = None) -> dict:
    """The tensor formula evaluated with ``n`` kept symbolic.

    Only valid for ``n`` large enough that every completed object is nonzero.
    """
    lam, mu = cb.partition(lam), cb.partition(mu)
    s = sum(lam) + sum(mu)
    acc: dict = {}
    for pp, entries in _tensor_terms(lam, mu, bound):
        for tau, g in entries.items():
            for nu in cb.partitions_up_to(sum(tau)):
                qp = q_polynomial(tau, nu)
                if not qp.is_zero():
                    acc[nu] = acc.get(nu, NPolynomial()) + pp * qp * NPolynomial.const(g)
    out = {}
    for nu, p in acc.items():
        k = s - sum(nu)
        coeffs = {d: _divide_laurent(c * Laurent.q(k), k) for d, c in p.coeffs.items()}
        poly = NPolynomial(coeffs)
        if not poly.is_zero():
            out[nu] = poly
    return out


def _divide_laurent(c: Laurent, k: int) -> Laurent:
    r = RationalFunction.coerce(c) / (RationalFunction((-1, 1)) ** k)
    return to_laurent_strict(r)


def fit_nodes(lam, mu, degree: int) -> tuple[list, list]:
    s = sum(lam) + sum(mu)
    # every Gamma_nu with |nu| <= s must be nonzero at the first node; (1^s) needs 2s
    n0 = max(s + len(lam) + len(mu) + 1, 2 * s)
    nodes = list(range(n0, n0 + degree + 1))
    return nodes, [nodes[-1] + 1, nodes[-1] + 2]


def a_polynomials(lam, mu, bound: int | None = None, check_routes: bool = True) -> ATable:
    """Fit ``a^nu(n)`` as polynomials in ``n``.

    Values at the nodes come from the tensor formula, which needs no Hecke
    algebra work; the fit is confirmed at two held-out nodes, against the
    symbolic tensor product, and (with ``check_routes``) against the direct
    and norm routes at every node that fits inside the compute bound.
    """
    lam, mu = cb.partition(lam), cb.partition(mu)
    s = sum(lam) + sum(mu)
    degree = s + 2
    for attempt in range(2):
        nodes, held = fit_nodes(lam, mu, degree)
        values = {n: a_tensor(lam, mu, n, bound) for n in nodes + held}
        labels = sorted({nu for v in values.values() for nu in v},
                        key=lambda nu: (sum(nu), _rank(nu)))
        try:
            entries = {}
            for nu in labels:
                pts = [(n, values[n].get(nu, Laurent())) for n in nodes + held]
                p = interpolate(pts, degree)
                if not p.is_zero():
                    entries[nu] = p
            symbolic = symbolic_a(lam, mu, bound)
            if symbolic != entries:
                raise ConstantsError("fitted polynomials differ from the symbolic tensor formula")
            break
        except (InterpolationError, ConstantsError):
            if attempt:
                raise
            degree += 2
    table = ATable(lam, mu, entries, nodes, held, degree)
    if check_routes:
        verify_routes(table, bound)
    return table


#: largest level at which the Hecke routes are recomputed by default
ROUTE_CHECK_MAX = 7


def route_nodes(table: ATable, bound: int | None = None) -> list:
    """Levels inside the compute bound where the direct routes are compared.

    Normally ``lo..ROUTE_CHECK_MAX``; when both classes first exist above that
    ceiling, the first such level is still checked if the bound allows it.
    """
    bound = hk.COMPUTE_BOUND if bound is None else bound
    lo = max(sum(table.lam) + len(table.lam), sum(table.mu) + len(table.mu), 1)
    return list(range(lo, max(min(bound, ROUTE_CHECK_MAX), min(lo, bound)) + 1))


def _restrict(values: dict, n: int) -> dict:
    return {nu: v for nu, v in values.items() if sum(nu) + len(nu) <= n and not v.is_zero()}


def verify_routes(table: ATable, bound: int | None = None, nodes=None) -> dict:
    """Compare the fitted table with the direct and norm routes; raise on mismatch."""
    nodes = route_nodes(table, bound) if nodes is None else nodes
    report = {}
    for n in nodes:
        fitted = _restrict(table(n), n)
        direct = _restrict(a_constants_at_n(table.lam, table.mu, n, "direct", bound), n)
        via_norms = _restrict(a_constants_at_n(table.lam, table.mu, n, "norm", bound), n)
        tensor = _restrict(a_constants_at_n(table.lam, table.mu, n, "tensor", bound), n)
        ok = fitted == direct == via_norms == tensor
        report[n] = ok
        if not ok:
            raise ConstantsError(f"routes disagree at n={n}")
        if n not in table.verified_at:
            table.verified_at.append(n)
    return report


@dataclass
class Theorem1Report:
    lam: tuple
    mu: tuple
    checks: dict                        # n -> {nu: bool}

    @property
    def all_match(self) -> bool:
        return all(all(v.values()) for v in self.checks.values())

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam), "mu": list(self.mu), "all_match": self.all_match,
            "checks": {str(n): {cb.render_partition(nu): ok for nu, ok in v.items()}
                       for n, v in self.checks.items()},
        }


def verify_theorem1(lam, mu, extra_nodes, table: ATable | None = None,
                    bound: int | None = None, jobs: int = 1) -> Theorem1Report:
    """Evaluate the fitted polynomials at ``extra_nodes`` and compare with the
    direct Hecke computation there."""
    lam, mu = cb.partition(lam), cb.partition(mu)
    table = table or a_polynomials(lam, mu, bound, check_routes=False)
    extra = list(extra_nodes)
    if jobs > 1 and len(extra) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            direct = list(pool.map(_direct_job, [(lam, mu, n, bound) for n in extra]))
    else:
        direct = [_direct_job((lam, mu, n, bound)) for n in extra]
    checks = {}
    for n, got in zip(extra, direct):
        fitted = _restrict(table(n), n)
        got = _restrict(got, n)
        checks[n] = {nu: fitted.get(nu, Laurent()) == got.get(nu, Laurent())
                     for nu in sorted(set(fitted) | set(got), key=lambda x: (sum(x), _rank(x)))}
    return Theorem1Report(lam, mu, checks)


def _direct_job(args):
    lam, mu, n, bound = args
    return a_constants_at_n(lam, mu, n, "direct", bound)


# ---------------------------------------------------------------------------
# on-disk cache

def cache_dir(override: str | os.PathLike | None = None) -> Path:
    return Path(override or os.environ.get("HECKE_FH_CACHE", "./.hecke-fh-cache"))


def _cache_path(kind: str, lam, mu, root: Path) -> Path:
    tag = lambda p: "-".join(map(str, p)) or "0"
    return root / f"{kind}_{tag(lam)}_{tag(mu)}.json"


def write_json_atomic(path: Path, data) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(data, fh, indent=1, sort_keys=True)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cached_a_polynomials(lam, mu, root=None, bound: int | None = None) -> ATable:
    """``a_polynomials`` with a JSON cache keyed by ``(lam, mu)``."""
    lam, mu = cb.partition(lam), cb.partition(mu)
    path = _cache_path("a", lam, mu, cache_dir(root))
    if path.exists():
        return ATable.from_json(json.loads(path.read_text()))
    table = a_polynomials(lam, mu, bound)
    write_json_atomic(path, table.to_json())
    return table


def clear_cache(root=None) -> int:
    """Delete cached tables; returns the number of files removed."""
    d = cache_dir(root)
    if not d.is_dir():
        return 0
    count = 0
    for f in d.glob("*.json"):
        f.unlink()
        count += 1
    return count
