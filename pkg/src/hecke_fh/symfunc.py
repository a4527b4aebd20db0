"""
Transition matrices between the elementary and monomial symmetric functions,
and their completed versions as polynomials in ``n``.

``E2M`` counts 0-1 matrices: ``e_mu = sum_lam E2M[mu, lam] m_lam`` where the
entry is the number of 0-1 matrices with row sums ``mu`` and column sums
``lam``.

>>> m2e_matrix(3).row((3,))
{(3,): 3, (2, 1): -3, (1, 1, 1): 1}
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import comb

from . import combinatorics as cb
from .coefficients import InterpolationError, NPolynomial, interpolate


@lru_cache(maxsize=None)
def count_01_matrices(rows: tuple, cols: tuple) -> int:
    """Number of 0-1 matrices with the given row and column sums.

    >>> count_01_matrices((2, 1), (1, 1, 1))
    3
    """
    if sum(rows) != sum(cols):
        return 0
    return _fill(tuple(sorted((r for r in rows if r), reverse=True)),
                 tuple(sorted((c for c in cols if c), reverse=True)))


@lru_cache(maxsize=None)
def _fill(rows: tuple, cols: tuple) -> int:
    if not cols:
        return 1 if not rows else 0
    c, rest = cols[0], cols[1:]
    if c > len(rows):
        return 0
    # group rows by remaining sum; pick how many of each group get a 1
    groups: dict[int, int] = {}
    for r in rows:
        groups[r] = groups.get(r, 0) + 1
    keys = list(groups)
    total = 0
    for picks in iproduct(*(range(min(groups[k], c) + 1) for k in keys)):
        if sum(picks) != c:
            continue
        ways = 1
        new_rows: list[int] = []
        for k, t in zip(keys, picks):
            ways *= comb(groups[k], t)
            new_rows += [k - 1] * t + [k] * (groups[k] - t)
        total += ways * _fill(tuple(sorted((r for r in new_rows if r), reverse=True)), rest)
    return total


@dataclass(frozen=True)
class TransitionMatrix:
    """A square matrix indexed by partitions of ``n`` (reverse lex order)."""

    n: int
    direction: str                      # "E2M" or "M2E"
    entries: dict = field(repr=False)   # (row, col) -> int

    @property
    def labels(self) -> tuple:
        return cb.partitions(self.n)

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def row(self, lam) -> dict:
        lam = cb.partition(lam)
        return {mu: self.entries[lam, mu] for mu in self.labels if (lam, mu) in self.entries}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "direction": self.direction,
            "labels": [cb.render_partition(p) for p in self.labels],
            "rows": [[self[r, c] for c in self.labels] for r in self.labels],
        }


@lru_cache(maxsize=None)
def e2m_matrix(n: int) -> TransitionMatrix:
    labels = cb.partitions(n)
    entries = {}
    for mu in labels:
        for lam in labels:
            v = count_01_matrices(mu, lam)
            if v:
                entries[mu, lam] = v
    return TransitionMatrix(n, "E2M", entries)


def _invert(matrix: list[list]) -> list[list[Fraction]]:
    size = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(size)]
         for i, row in enumerate(matrix)]
    for col in range(size):
        piv = next((r for r in range(col, size) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(size):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[size:] for row in a]


@lru_cache(maxsize=None)
def m2e_matrix(n: int) -> TransitionMatrix:
    """Inverse of :func:`e2m_matrix`; entries are integers."""
    labels = cb.partitions(n)
    e2m = e2m_matrix(n)
    inv = _invert([[e2m[r, c] for c in labels] for r in labels])
    entries = {}
    for i, r in enumerate(labels):
        for j, c in enumerate(labels):
            if inv[i][j] != 0:
                if inv[i][j].denominator != 1:
                    raise ArithmeticError("M2E entry is not an integer")
                entries[r, c] = int(inv[i][j])
    return TransitionMatrix(n, "M2E", entries)


# ---------------------------------------------------------------------------
# completed transition coefficients

def q_value(rho, nu, n: int) -> int:
    """Coefficient of ``m_(nu -> n)`` in ``e_(rho ^ n)`` at a fixed ``n``."""
    rho, nu = cb.partition(rho), cb.partition(nu)
    if sum(rho) > n or sum(nu) + len(nu) > n:
        return 0
    return count_01_matrices(cb.complete_up(rho, n), cb.complete_arrow(nu, n))


@lru_cache(maxsize=None)
def _p_block(k: int, n: int) -> tuple[tuple, dict]:
    """Inverse of the block of completed E2M on partitions of weight ``<= k``."""
    labels = tuple(cb.partitions_up_to(k))
    inv = _invert([[q_value(r, c, n) for c in labels] for r in labels])
    return labels, {(labels[i], labels[j]): inv[i][j]
                    for i in range(len(labels)) for j in range(len(labels)) if inv[i][j]}


def p_value(lam, mu, n: int) -> Fraction:
    """Coefficient of ``e_(mu ^ n)`` in ``m_(lam -> n)`` at a fixed ``n``.

    Requires ``n > 2|lam|`` so the completions of all partitions of weight at
    most ``|lam|`` are distinct partitions of ``n``.
    """
    lam, mu = cb.partition(lam), cb.partition(mu)
    k = sum(lam)
    if n <= 2 * k:
        raise ValueError(f"n={n} is too small for a completed expansion of {lam}")
    if sum(mu) > k:
        return Fraction(0)
    return _p_block(k, n)[1].get((lam, mu), Fraction(0))


def _fit(values, start: int, degree: int) -> NPolynomial:
    try:
        return interpolate([(n, values(n)) for n in range(start, start + degree + 3)], degree)
    except InterpolationError:
        degree += 2
        return interpolate([(n, values(n)) for n in range(start, start + degree + 3)], degree)


@lru_cache(maxsize=None)
def q_polynomial(rho, nu) -> NPolynomial:
    """``Q_(rho, nu)(n)`` with ``e_(rho ^ n) = sum_nu Q(n) m_(nu -> n)``.

    >>> q_polynomial((2, 1), ())
    NPolynomial((1/2)*n^3 + (-3/2)*n^2 + (1)*n)
    """
    rho, nu = cb.partition(rho), cb.partition(nu)
    start = max(2 * sum(rho) + 1, sum(nu) + len(nu))
    return _fit(lambda n: q_value(rho, nu, n), start, sum(rho))


@lru_cache(maxsize=None)
def p_polynomial(lam, mu) -> NPolynomial:
    """``P_(lam, mu)(n)`` with ``m_(lam -> n) = sum_mu P(n) e_(mu ^ n)``.

    >>> p_polynomial((2, 1), (1, 1))
    NPolynomial((-1)*n + (3))
    """
    lam, mu = cb.partition(lam), cb.partition(mu)
    return _fit(lambda n: p_value(lam, mu, n), 2 * sum(lam) + 1, sum(lam))


def p_row(lam) -> dict:
    """All nonzero ``P_(lam, mu)`` keyed by ``mu``."""
    lam = cb.partition(lam)
    out = {}
    for mu in cb.partitions_up_to(sum(lam)):
        p = p_polynomial(lam, mu)
        if not p.is_zero():
            out[mu] = p
    return out


def q_row(rho) -> dict:
    """All nonzero ``Q_(rho, nu)`` keyed by ``nu``."""
    rho = cb.partition(rho)
    out = {}
    for nu in cb.partitions_up_to(sum(rho)):
        p = q_polynomial(rho, nu)
        if not p.is_zero():
            out[nu] = p
    return out


# ---------------------------------------------------------------------------
# brute-force oracle: polynomials in finitely many variables

def elementary_poly(mu, nvars: int) -> dict:
    """``e_mu`` in ``nvars`` variables as ``{exponent tuple: coeff}``."""
    from itertools import combinations
    poly = {(0,) * nvars: 1}
    for part in cb.partition(mu):
        factor = {}
        for subset in combinations(range(nvars), part):
            e = [0] * nvars
            for i in subset:
                e[i] = 1
            factor[tuple(e)] = 1
        new: dict = {}
        for a, x in poly.items():
            for b, y in factor.items():
                k = tuple(i + j for i, j in zip(a, b))
                new[k] = new.get(k, 0) + x * y
        poly = new
    return poly


def monomial_poly(lam, nvars: int) -> dict:
    """``m_lam`` in ``nvars`` variables (zero if ``l(lam) > nvars``)."""
    from itertools import permutations
    lam = cb.partition(lam)
    if len(lam) > nvars:
        return {}
    base = tuple(lam) + (0,) * (nvars - len(lam))
    return {e: 1 for e in set(permutations(base))}


def collect_monomials(poly: dict) -> dict:
    """Expand a symmetric polynomial in monomial functions, keyed by partition."""
    out = {}
    for e, c in poly.items():
        if c and list(e) == sorted(e, reverse=True):
            out[cb.partition(e)] = c
    return out
