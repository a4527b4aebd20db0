"""
The Iwahori-Hecke algebra ``H(n, q)`` of type A in its ``T``-basis, with the
norm and Geck-Rouquier bases of its center, and the symmetric group algebra
used as the ``q = 1`` oracle.

Normalization: ``T_s**2 = (q-1) T_s + q`` and ``T_w T_s = T_(ws)`` when the
length goes up.

An element is stored densely: one row per permutation of ``S_n`` (in the
canonical order: by length, then lexicographically) and one column per power
of ``q`` starting at ``low``.  Integral elements use ``int64`` and are promoted
to Python integers before any operation that could overflow.

>>> s1 = HeckeElement.generator(3, 1)
>>> print(s1 * s1)
(q)·T_123 + (q - 1)·T_213
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping

import numpy as np

from . import combinatorics as cb
from .coefficients import (
    Laurent, RationalFunction, as_rational, q_over_q_minus_1, solve, to_laurent_strict,
)

# int64 entries are kept below this bound; past it arrays switch to objects
_SAFE = 2 ** 58

#: default ceiling on n for computations inside H(n, q)
COMPUTE_BOUND = 8


class HeckeError(ValueError):
    """Raised for degree mismatches, bad indices and failed expansions."""


class BoundExceeded(HeckeError):
    """A requested ``n`` is beyond the configured compute or enumeration bound."""


# ---------------------------------------------------------------------------
# symmetric group tables

@dataclass(frozen=True)
class GroupTable:
    n: int
    perms: tuple                # canonical order
    index: dict                 # perm -> row
    lengths: np.ndarray
    inverse: np.ndarray         # row -> row of the inverse
    rmul: tuple                 # rmul[i][row] = row of w*s_i (i = 1..n-1, slot 0 unused)
    lmul: tuple                 # lmul[i][row] = row of s_i*w
    rup: tuple                  # rup[i][row]  = l(w s_i) > l(w)
    lup: tuple

    @property
    def size(self) -> int:
        return len(self.perms)


@lru_cache(maxsize=None)
def group_table(n: int) -> GroupTable:
    perms = sorted(cb.perms(n), key=lambda p: (cb.length(p), p))
    index = {p: k for k, p in enumerate(perms)}
    lengths = np.array([cb.length(p) for p in perms], dtype=np.int64)
    inv = np.array([index[cb.inverse(p)] for p in perms], dtype=np.int64)
    rmul, lmul, rup, lup = [None], [None], [None], [None]
    for i in range(1, n):
        r = np.array([index[cb.right_mult(p, i)] for p in perms], dtype=np.int64)
        l_ = np.array([index[cb.left_mult(i, p)] for p in perms], dtype=np.int64)
        rmul.append(r)
        lmul.append(l_)
        rup.append(lengths[r] > lengths)
        lup.append(lengths[l_] > lengths)
    return GroupTable(n, tuple(perms), index, lengths, inv,
                      tuple(rmul), tuple(lmul), tuple(rup), tuple(lup))


# ---------------------------------------------------------------------------
# array helpers

def _maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(x) for x in a.flat)
    return int(np.abs(a).max())


def _guard(a: np.ndarray, factor: int = 4) -> np.ndarray:
    """Promote int64 data to Python ints when ``factor * max`` could overflow."""
    if a.dtype != object and _maxabs(a) * factor >= _SAFE:
        return a.astype(object)
    return a


def _common(a: np.ndarray, b: np.ndarray):
    if a.dtype == object or b.dtype == object:
        return a.astype(object), b.astype(object)
    return a, b


def _trim(data: np.ndarray, low: int):
    if data.size == 0:
        return data[:, :0], 0
    nz = np.flatnonzero(np.any(data != 0, axis=0))
    if nz.size == 0:
        return data[:, :0], 0
    lo, hi = int(nz[0]), int(nz[-1]) + 1
    return data[:, lo:hi], low + lo


def _as_array(values, rows: int, width: int) -> np.ndarray:
    if any(isinstance(v, Fraction) for v in values):
        return np.zeros((rows, width), dtype=object)
    return np.zeros((rows, width), dtype=np.int64)


# ---------------------------------------------------------------------------
# Hecke elements

class HeckeElement:
    """An element ``sum_w c_w(q) T_w`` of ``H(n, q)``."""

    __slots__ = ("n", "data", "low")

    def __init__(self, n: int, data: np.ndarray, low: int = 0):
        if data.shape[0] != factorial(n):
            raise HeckeError("row count must be n!")
        self.n = n
        self.data, self.low = _trim(data, low)
        if self.data.dtype == object:
            self._demote()

    def _demote(self):
        vals = list(self.data.flat)
        if all(isinstance(v, int) or (isinstance(v, Fraction) and v.denominator == 1)
               for v in vals):
            ints = [int(v) for v in vals]
            if not ints or max(map(abs, ints)) < _SAFE:
                self.data = np.array(ints, dtype=np.int64).reshape(self.data.shape)

    # -- construction ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "HeckeElement":
        return cls(n, np.zeros((factorial(n), 0), dtype=np.int64))

    @classmethod
    def from_terms(cls, n: int, terms: Mapping) -> "HeckeElement":
        """Build from ``{perm: scalar}`` where scalar is int, Fraction or Laurent."""
        tab = group_table(n)
        terms = {cb.check_perm(p): Laurent.coerce(c) for p, c in terms.items()}
        terms = {p: c for p, c in terms.items() if not c.is_zero()}
        if not terms:
            return cls.zero(n)
        lo = min(c.low() for c in terms.values())
        hi = max(c.high() for c in terms.values())
        vals = [x for c in terms.values() for x in c.terms.values()]
        data = _as_array(vals, tab.size, hi - lo + 1)
        for p, c in terms.items():
            if len(p) != n:
                raise HeckeError(f"permutation {p} has degree {len(p)}, expected {n}")
            row = tab.index[p]
            for k, x in c.terms.items():
                data[row, k - lo] = x
        return cls(n, data, lo)

    @classmethod
    def basis(cls, n: int, perm) -> "HeckeElement":
        return cls.from_terms(n, {tuple(perm): 1})

    @classmethod
    def one(cls, n: int) -> "HeckeElement":
        return cls.basis(n, cb.identity(n))

    @classmethod
    def generator(cls, n: int, i: int) -> "HeckeElement":
        if not 1 <= i < n:
            raise HeckeError(f"generator index {i} out of range for n={n}")
        return cls.basis(n, cb.right_mult(cb.identity(n), i))

    # -- inspection --------------------------------------------------------

    @property
    def table(self) -> GroupTable:
        return group_table(self.n)

    def rows(self) -> np.ndarray:
        return np.flatnonzero(np.any(self.data != 0, axis=1))

    def row_laurent(self, row: int) -> Laurent:
        r = self.data[row]
        return Laurent({self.low + k: (int(x) if not isinstance(x, Fraction) else x)
                        for k, x in enumerate(r) if x != 0})

    def coeff(self, perm) -> Laurent:
        return self.row_laurent(self.table.index[tuple(perm)])

    @property
    def terms(self) -> dict:
        """``{perm: Laurent}`` in canonical permutation order."""
        perms = self.table.perms
        return {perms[r]: self.row_laurent(r) for r in self.rows()}

    def support(self) -> list:
        perms = self.table.perms
        return [perms[r] for r in self.rows()]

    def is_zero(self) -> bool:
        return self.data.shape[1] == 0

    def __len__(self):
        return len(self.rows())

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        if self.n != other.n or self.low != other.low or self.data.shape != other.data.shape:
            return self.n == other.n and self.is_zero() and other.is_zero()
        return bool(np.all(self.data == other.data))

    def __hash__(self):
        return hash((self.n, tuple(self.terms.items())))

    # -- linear structure --------------------------------------------------

    def _aligned(self, other: "HeckeElement"):
        if self.n != other.n:
            raise HeckeError(f"degree mismatch: {self.n} vs {other.n}")
        lo = min(self.low, other.low) if not (self.is_zero() or other.is_zero()) else (
            other.low if self.is_zero() else self.low)
        hi = max(self.low + self.data.shape[1], other.low + other.data.shape[1])
        a, b = _common(_guard(self.data, 2), _guard(other.data, 2))
        rows = a.shape[0]
        out_a = np.zeros((rows, hi - lo), dtype=a.dtype)
        out_b = np.zeros((rows, hi - lo), dtype=b.dtype)
        if a.shape[1]:
            out_a[:, self.low - lo:self.low - lo + a.shape[1]] = a
        if b.shape[1]:
            out_b[:, other.low - lo:other.low - lo + b.shape[1]] = b
        return out_a, out_b, lo

    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        a, b, lo = self._aligned(other)
        return HeckeElement(self.n, a + b, lo)

    def __sub__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        a, b, lo = self._aligned(other)
        return HeckeElement(self.n, a - b, lo)

    def __neg__(self):
        return HeckeElement(self.n, -self.data, self.low)

    def scale(self, c) -> "HeckeElement":
        """Multiply by a scalar (int, Fraction or Laurent)."""
        c = Laurent.coerce(c)
        if c.is_zero() or self.is_zero():
            return HeckeElement.zero(self.n)
        data = self.data
        cvals = list(c.terms.values())
        bound = max(abs(x) for x in cvals) * len(cvals)
        if any(isinstance(x, Fraction) for x in cvals) or _maxabs(data) * bound >= _SAFE:
            data = data.astype(object)
        span = c.high() - c.low()
        out = np.zeros((data.shape[0], data.shape[1] + span), dtype=data.dtype)
        for k, x in c.terms.items():
            off = k - c.low()
            out[:, off:off + data.shape[1]] += data * x
        return HeckeElement(self.n, out, self.low + c.low())

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction, Laurent)):
            return self.scale(c)
        return NotImplemented

    # -- multiplication ----------------------------------------------------

    def _gen(self, i: int, right: bool) -> "HeckeElement":
        if not 1 <= i < self.n:
            raise HeckeError(f"generator index {i} out of range for n={self.n}")
        if self.is_zero():
            return self
        tab = self.table
        tgt = tab.rmul[i] if right else tab.lmul[i]
        up = tab.rup[i] if right else tab.lup[i]
        data = _guard(self.data, 4)
        rows, w = data.shape
        out = np.zeros((rows, w + 1), dtype=data.dtype)
        out[tgt[up], :w] += data[up]
        dn = ~up
        d = data[dn]
        out[dn, 1:] += d
        out[dn, :w] -= d
        out[tgt[dn], 1:] += d
        return HeckeElement(self.n, out, self.low)

    def times_generator(self, i: int) -> "HeckeElement":
        """``self * T_(s_i)``."""
        return self._gen(i, right=True)

    def generator_times(self, i: int) -> "HeckeElement":
        """``T_(s_i) * self``."""
        return self._gen(i, right=False)

    def times_basis(self, perm) -> "HeckeElement":
        """``self * T_perm``."""
        out = self
        for i in cb.reduced_word(tuple(perm)):
            out = out.times_generator(i)
        return out

    def basis_times(self, perm) -> "HeckeElement":
        """``T_perm * self``."""
        out = self
        for i in reversed(cb.reduced_word(tuple(perm))):
            out = out.generator_times(i)
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Laurent)):
            return self.scale(other)
        if not isinstance(other, HeckeElement):
            return NotImplemented
        if self.n != other.n:
            raise HeckeError(f"degree mismatch: {self.n} vs {other.n}")
        if self.is_zero() or other.is_zero():
            return HeckeElement.zero(self.n)
        if len(other) <= len(self):
            return _expand_product(self, other, right=True)
        return _expand_product(other, self, right=False)

    def conjugate_by_generator(self, i: int) -> "HeckeElement":
        """``T_i * self * T_i``."""
        return self.generator_times(i).times_generator(i)

    def is_central(self) -> bool:
        return all(self.times_generator(i) == self.generator_times(i) for i in range(1, self.n))

    # -- specializations ---------------------------------------------------

    def specialize_q1(self) -> "GroupAlgebraElement":
        perms = self.table.perms
        sums = self.data.sum(axis=1) if self.data.shape[1] else np.zeros(len(perms), dtype=np.int64)
        return GroupAlgebraElement(self.n, {perms[r]: sums[r] for r in range(len(perms)) if sums[r] != 0})

    # -- rendering ---------------------------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for p, c in self.terms.items():
            word = cb.render_perm(p)
            parts.append(f"T_{word}" if c == 1 else f"({c})·T_{word}")
        return " + ".join(parts)

    def __repr__(self):
        return f"HeckeElement(n={self.n}: {self})"

    def to_json(self) -> list:
        return [{"perm": cb.render_perm(p), "coeff": c.to_json()} for p, c in self.terms.items()]


def _expand_product(big: HeckeElement, small: HeckeElement, right: bool) -> HeckeElement:
    """``big * small`` (``right``) or ``small * big`` (not ``right``), walking
    the reduced words of the support of ``small`` with shared prefixes."""
    n = big.n
    words = []
    for p, c in small.terms.items():
        w = cb.reduced_word(p)
        words.append((w if right else tuple(reversed(w)), c))
    words.sort()
    acc = HeckeElement.zero(n)
    stack: list[tuple[tuple, HeckeElement]] = [((), big)]
    for word, c in words:
        while not (len(stack[-1][0]) <= len(word) and word[:len(stack[-1][0])] == stack[-1][0]):
            stack.pop()
        prefix, elem = stack[-1]
        for i in word[len(prefix):]:
            elem = elem.times_generator(i) if right else elem.generator_times(i)
            prefix = prefix + (i,)
            stack.append((prefix, elem))
        acc = acc + elem.scale(c)
    return acc


def product_coefficient(x: HeckeElement, y: HeckeElement, perm) -> Laurent:
    """Coefficient of ``T_perm`` in ``x * y`` without forming the product.

    Uses the symmetrizing trace ``tau(T_a T_b) = q^l(a) [a = b^-1]``:
    ``[T_w](xy) = q^-l(w) sum_u q^l(u) x_u [T_(u^-1)](y T_(w^-1))``.
    """
    if x.n != y.n:
        raise HeckeError("degree mismatch")
    tab = x.table
    perm = tuple(perm)
    if x.is_zero() or y.is_zero():
        return Laurent()
    yw = y.times_basis(cb.inverse(perm))
    if yw.is_zero():
        return Laurent()
    b = yw.data[tab.inverse]
    a = x.data
    maxlen = int(tab.lengths.max())
    rows = a.shape[0]
    shifted = np.zeros((rows, a.shape[1] + maxlen), dtype=a.dtype)
    for ell in range(maxlen + 1):
        sel = tab.lengths == ell
        shifted[sel, ell:ell + a.shape[1]] = a[sel]
    if (a.dtype == object or b.dtype == object
            or _maxabs(a) * _maxabs(b) * rows >= _SAFE):
        shifted, b = shifted.astype(object), b.astype(object)
    m = shifted.T @ b
    out: dict[int, object] = {}
    base = x.low + yw.low - cb.length(perm)
    for i in range(m.shape[0]):
        for j in range(m.shape[1]):
            v = m[i, j]
            if v != 0:
                out[base + i + j] = out.get(base + i + j, 0) + (v if isinstance(v, Fraction) else int(v))
    return Laurent(out)


# ---------------------------------------------------------------------------
# q = 1: the symmetric group algebra

class GroupAlgebraElement:
    """``sum_w c_w w`` in ``Q S_n`` with rational coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping = ()):
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for p, c in items:
            acc[tuple(p)] = acc.get(tuple(p), 0) + c
        self.terms = {p: (int(c) if isinstance(c, (int, np.integer)) else Fraction(c))
                      for p, c in sorted(acc.items()) if c != 0}

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __add__(self, other):
        acc = dict(self.terms)
        for p, c in other.terms.items():
            acc[p] = acc.get(p, 0) + c
        return GroupAlgebraElement(self.n, acc)

    def scale(self, c) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.n, {p: c * x for p, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self.n != other.n:
            raise HeckeError("degree mismatch")
        acc: dict = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                ab = cb.compose(a, b)
                acc[ab] = acc.get(ab, 0) + x * y
        return GroupAlgebraElement(self.n, acc)

    def __repr__(self):
        body = " + ".join(f"{c}·{cb.render_perm(p)}" for p, c in self.terms.items())
        return f"GroupAlgebraElement(n={self.n}: {body or 0})"


def class_sum(lam, n: int) -> GroupAlgebraElement:
    """``C_(lam, n)``: sum of permutations of type ``lam -> n``; zero if too big."""
    lam = cb.partition(lam)
    if sum(lam) + len(lam) > n:
        return GroupAlgebraElement(n)
    return class_sum_of_type(cb.complete_arrow(lam, n))


def class_sum_of_type(kappa) -> GroupAlgebraElement:
    kappa = cb.partition(kappa)
    n = sum(kappa)
    return GroupAlgebraElement(n, {p: 1 for p in cb.perms(n) if cb.cycle_type(p) == kappa})


def expand_in_class_sums(z: GroupAlgebraElement) -> dict:
    """Coordinates of a central group-algebra element in the class sums,
    keyed by cycle type.  Raises if ``z`` is not a class function."""
    out: dict = {}
    for p, c in z.terms.items():
        t = cb.cycle_type(p)
        if out.setdefault(t, c) != c:
            raise HeckeError("element is not constant on conjugacy classes")
    for t, c in out.items():
        if sum(1 for p in z.terms if cb.cycle_type(p) == t) != cb.class_size(t):
            raise HeckeError("element is not constant on conjugacy classes")
    return out


def fh_product_q1(lam, mu, n: int) -> dict:
    """Expansion of ``C_(lam,n) * C_(mu,n)`` in completed class sums ``C_(nu,n)``."""
    if n > cb.ENUMERATION_BOUND:
        raise BoundExceeded(f"n={n} exceeds the enumeration bound")
    prod_ = class_sum(lam, n) * class_sum(mu, n)
    return {cb.strip_arrow(t): c for t, c in expand_in_class_sums(prod_).items()}


# ---------------------------------------------------------------------------
# the center: norms and Geck-Rouquier elements

def _check_n(n: int, bound: int | None):
    bound = COMPUTE_BOUND if bound is None else bound
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the compute bound {bound}")


def _relative_norm(x: HeckeElement, reps: list) -> HeckeElement:
    """``sum_v q^-l(v) T_(v^-1) x T_v`` over ``reps``, sharing word prefixes."""
    words = sorted(cb.reduced_word(v) for v in reps)
    acc = HeckeElement.zero(x.n)
    stack = [((), x)]
    for word in words:
        while word[:len(stack[-1][0])] != stack[-1][0]:
            stack.pop()
        prefix, elem = stack[-1]
        for i in word[len(prefix):]:
            elem = elem.conjugate_by_generator(i)
            prefix = prefix + (i,)
            stack.append((prefix, elem))
        acc = acc + elem.scale(Laurent.q(-len(word)))
    return acc


def norm(c, bound: int | None = None) -> HeckeElement:
    """``N_c = sum_w q^-l(w) T_(w^-1) T_w`` over distinguished right coset
    representatives of the Young subgroup ``S_c``.

    Built as a tower of relative norms, merging the first two blocks each
    step; minimal coset representatives factor along the tower with
    additive lengths.
    """
    c = cb.check_composition(c)
    n = sum(c)
    _check_n(n, bound)
    return _norm_cached(c)


@lru_cache(maxsize=None)
def _norm_cached(c) -> HeckeElement:
    n = sum(c)
    x = HeckeElement.one(n)
    sizes = list(c)
    while len(sizes) > 1:
        a, b = sizes[0], sizes[1]
        reps = [cb.extend(v, n) for v in cb.distinguished_reps((a, b))]
        x = _relative_norm(x, reps)
        sizes = [a + b] + sizes[2:]
    return x


def norm_by_definition(c) -> HeckeElement:
    """Direct evaluation of the defining sum (test oracle, small ``n``)."""
    c = cb.check_composition(c)
    n = sum(c)
    acc = HeckeElement.zero(n)
    for w in cb.distinguished_reps(c):
        term = HeckeElement.basis(n, cb.inverse(w)) * HeckeElement.basis(n, w)
        acc = acc + term.scale(Laurent.q(-cb.length(w)))
    return acc


def divide_by_q_minus_1(x: HeckeElement, times: int = 1) -> HeckeElement:
    """Exact division of every coefficient by ``(q-1)**times``."""
    data, low = x.data, x.low
    for _ in range(times):
        if data.shape[1] == 0:
            break
        cs = np.cumsum(data, axis=1)
        if np.any(cs[:, -1] != 0):
            raise HeckeError("coefficients are not divisible by q - 1")
        data = -cs[:, :-1]
    return HeckeElement(x.n, data, low)


def geck_rouquier(lam, bound: int | None = None) -> HeckeElement:
    """``Gamma_lam = (q/(q-1))^(n-l(lam)) sum_mu M2E[lam, mu] N_mu``."""
    lam = cb.partition(lam)
    n = sum(lam)
    _check_n(n, bound)
    return _gamma_cached(lam)


@lru_cache(maxsize=None)
def _gamma_cached(lam) -> HeckeElement:
    from .symfunc import m2e_matrix

    n = sum(lam)
    m2e = m2e_matrix(n)
    acc = HeckeElement.zero(n)
    for mu, c in m2e.row(lam).items():
        acc = acc + norm(mu, bound=n).scale(c)
    k = n - len(lam)
    return divide_by_q_minus_1(acc.scale(Laurent.q(k)), k)


def gamma_completed(mu, n: int, bound: int | None = None) -> HeckeElement:
    """``Gamma_(mu, n)``: ``Gamma_(mu -> n)`` or zero when ``|mu| + l(mu) > n``."""
    mu = cb.partition(mu)
    if sum(mu) + len(mu) > n:
        return HeckeElement.zero(n)
    return geck_rouquier(cb.complete_arrow(mu, n), bound)


def norm_completed(lam, n: int, bound: int | None = None) -> HeckeElement:
    """``N_(lam, n)``: ``N_(lam ^ n)`` or zero when ``|lam| > n``."""
    lam = cb.partition(lam)
    if sum(lam) > n:
        return HeckeElement.zero(n)
    return norm(cb.complete_up(lam, n), bound)


def class_reps(n: int) -> dict:
    """One minimal-length permutation per cycle type of ``S_n``."""
    return {lam: cb.coxeter_rep(lam) for lam in cb.partitions(n)}


def gamma_coordinates(z: HeckeElement) -> dict:
    """Coordinates of a central ``z`` in the Geck-Rouquier basis.

    ``Gamma_lam`` has coefficient 1 on the minimal-length elements of its own
    class and 0 on those of every other class, so the coordinates are the
    coefficients of ``z`` at one minimal-length element per class.
    """
    return {lam: z.coeff(w) for lam, w in class_reps(z.n).items()}


def central_product_gamma(x: HeckeElement, y: HeckeElement) -> dict:
    """Geck-Rouquier coordinates of ``x * y`` for central ``x``, ``y``."""
    return {lam: product_coefficient(x, y, w) for lam, w in class_reps(x.n).items()}


def combine(coords: Mapping, basis: Mapping, n: int) -> HeckeElement:
    """``sum_k coords[k] * basis[k]`` with Laurent coordinates."""
    acc = HeckeElement.zero(n)
    for k, c in coords.items():
        c = to_laurent_strict(c)
        if not c.is_zero():
            acc = acc + basis[k].scale(c)
    return acc


def expand_in_center_basis(z: HeckeElement, basis: Mapping) -> dict:
    """Solve ``z = sum_k x_k basis[k]`` exactly over rational functions in ``q``.

    ``basis`` must hold ``p(n)`` central elements.  Rows of the system are the
    coefficients at one minimal-length permutation per class; the solution is
    then checked against every coefficient of ``z``.
    """
    n = z.n
    labels = list(basis)
    reps = list(class_reps(n).values())
    if len(labels) != len(reps):
        raise HeckeError(f"need {len(reps)} basis elements, got {len(labels)}")
    matrix = [[basis[k].coeff(w) for k in labels] for w in reps]
    rhs = [[z.coeff(w) for w in reps]]
    try:
        sol = solve(matrix, rhs)[0]
    except ZeroDivisionError as exc:
        raise HeckeError("basis is singular") from exc
    coords = dict(zip(labels, sol))
    _check_expansion(z, coords, basis)
    return coords


def _check_expansion(z: HeckeElement, coords: Mapping, basis: Mapping):
    den = RationalFunction(1)
    for c in coords.values():
        den = den * RationalFunction(c.den) / _gcd_rf(den, RationalFunction(c.den))
    scaled = {k: to_laurent_strict(c * den) for k, c in coords.items()}
    lhs = z.scale(to_laurent_strict(den))
    if lhs != combine(scaled, basis, z.n):
        raise HeckeError("element is not in the span of the basis")


def _gcd_rf(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    from .coefficients import _pgcd
    return RationalFunction(_pgcd(a.num, b.num))


def verify_gr_characterization(lam, bound: int = cb.ENUMERATION_BOUND) -> bool:
    """Gamma_lam is central, specializes to the class sum at ``q = 1``, and
    ``Gamma_lam - C_lam`` has no permutation of minimal length in its class."""
    lam = cb.partition(lam)
    n = sum(lam)
    gamma = geck_rouquier(lam)
    if not gamma.is_central():
        return False
    if gamma.specialize_q1() != class_sum_of_type(lam):
        return False
    for p, c in gamma.terms.items():
        if cb.cycle_type(p) == lam and c == 1:
            continue
        if cb.length(p) == cb.min_length_in_class(cb.cycle_type(p), bound):
            return False
    return True


def parse_element(n: int, text: str) -> HeckeElement:
    """Parse ``"perm:coeff, perm:coeff"`` with Laurent JSON-free coefficients
    written as ``exp=num/den;exp=num/den`` (used by the CLI)."""
    terms = {}
    for chunk in filter(None, (t.strip() for t in text.split(","))):
        word, _, coeff = chunk.partition(":")
        if coeff:
            lau = Laurent((int(e), Fraction(v)) for e, v in
                          (kv.split("=") for kv in coeff.split(";")))
        else:
            lau = Laurent.const(1)
        terms[cb.parse_perm(word)] = lau
    return HeckeElement.from_terms(n, terms)
