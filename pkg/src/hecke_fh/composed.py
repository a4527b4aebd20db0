"""
The Hecke algebra ``D(n, q)`` of composed permutations.

A composed permutation ``(sigma, c)`` pairs a permutation with a composition
whose interval blocks are unions of orbits of ``sigma``.  The basis elements
are ``T_(sigma, c) = T_sigma I_c``.

Products are computed through the isomorphism
``psi: D(n, q) -> (+)_c H(c, q)`` onto a direct sum of Young subalgebras, whose
``d``-component sends ``T_(sigma, c)`` to ``T_sigma`` when ``d`` coarsens
``c`` and to zero otherwise.  Elements are stored as
``{c: HeckeElement supported on S_c}``, the coefficient block of each
composition, so ``psi`` and its inverse are zeta and Moebius sums over the
Boolean lattice of compositions.

>>> s1 = generator_s(3, 1)
>>> print(s1 * s1)
(q)·T[12|3] + (q - 1)·T[21|3]
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Mapping

from . import combinatorics as cb
from .coefficients import Laurent
from .hecke import HeckeElement


class ComposedError(ValueError):
    pass


def semigroup_product(a: tuple, b: tuple) -> tuple:
    """``(sigma, c)(tau, d) = (sigma tau, c v d)``.

    >>> semigroup_product(((2, 1, 3), (2, 1)), ((1, 3, 2), (1, 2)))
    ((2, 3, 1), (3,))
    """
    (s, c), (t, d) = a, b
    if len(s) != len(t):
        raise ComposedError(f"degree mismatch: {len(s)} vs {len(t)}")
    return cb.compose(s, t), cb.join(c, d)


def _check_support(n: int, c, elem: HeckeElement):
    for p in elem.support():
        if not cb.in_young_subgroup(p, c):
            raise ComposedError(
                f"{cb.render_perm(p)} does not preserve the blocks of {cb.render_composition(c)}")


class ComposedElement:
    """``sum x_(sigma, c) T_(sigma, c)``, grouped by composition."""

    __slots__ = ("n", "parts")

    def __init__(self, n: int, parts: Mapping | None = None, check: bool = True):
        self.n = n
        self.parts: dict = {}
        for c, elem in (parts or {}).items():
            c = cb.check_composition(c)
            if sum(c) != n or elem.n != n:
                raise ComposedError(f"composition {c} or element has wrong degree for n={n}")
            if check:
                _check_support(n, c, elem)
            if not elem.is_zero():
                self.parts[c] = elem

    @classmethod
    def from_terms(cls, n: int, terms: Mapping) -> "ComposedElement":
        """Build from ``{(sigma, c): scalar}``."""
        grouped: dict = {}
        for (sigma, c), coeff in terms.items():
            grouped.setdefault(tuple(c), {})[tuple(sigma)] = coeff
        return cls(n, {c: HeckeElement.from_terms(n, t) for c, t in grouped.items()})

    @classmethod
    def basis(cls, sigma, c) -> "ComposedElement":
        sigma, c = tuple(sigma), cb.check_composition(c)
        if not cb.is_composed(sigma, c):
            raise ComposedError(f"{sigma} is not compatible with {c}")
        return cls.from_terms(len(sigma), {(sigma, c): 1})

    @classmethod
    def zero(cls, n: int) -> "ComposedElement":
        return cls(n)

    @property
    def terms(self) -> dict:
        """``{(sigma, c): Laurent}``, compositions coarsest first."""
        out = {}
        for c in cb.compositions(self.n):
            if c in self.parts:
                for p, v in self.parts[c].terms.items():
                    out[p, c] = v
        return out

    def is_zero(self) -> bool:
        return not self.parts

    def __eq__(self, other):
        if not isinstance(other, ComposedElement):
            return NotImplemented
        return self.n == other.n and self.parts.keys() == other.parts.keys() and all(
            self.parts[c] == other.parts[c] for c in self.parts)

    def __add__(self, other):
        _same_degree(self, other)
        parts = dict(self.parts)
        for c, e in other.parts.items():
            parts[c] = parts[c] + e if c in parts else e
        return ComposedElement(self.n, parts, check=False)

    def __neg__(self):
        return ComposedElement(self.n, {c: -e for c, e in self.parts.items()}, check=False)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "ComposedElement":
        return ComposedElement(self.n, {c: e.scale(s) for c, e in self.parts.items()}, check=False)

    def __mul__(self, other):
        if isinstance(other, ComposedElement):
            return d_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __str__(self):
        if self.is_zero():
            return "0"
        out = []
        for (p, c), v in self.terms.items():
            word = f"T[{cb.render_composed(p, c)}]"
            out.append(word if v == 1 else f"({v})·{word}")
        return " + ".join(out)

    def __repr__(self):
        return f"ComposedElement(n={self.n}: {self})"

    def to_json(self) -> list:
        return [{"sigma": cb.render_perm(p), "c": list(c), "coeff": v.to_json()}
                for (p, c), v in self.terms.items()]


def _same_degree(x, y):
    if x.n != y.n:
        raise ComposedError(f"degree mismatch: {x.n} vs {y.n}")


@dataclass(frozen=True)
class BlockDecomposition:
    """An element of ``(+)_c H(c, q)``: one Hecke element per composition."""

    n: int
    components: dict

    def __post_init__(self):
        for c, e in self.components.items():
            _check_support(self.n, c, e)

    def __mul__(self, other: "BlockDecomposition") -> "BlockDecomposition":
        comps = {}
        for c, e in self.components.items():
            if c in other.components:
                p = e * other.components[c]
                if not p.is_zero():
                    comps[c] = p
        return BlockDecomposition(self.n, comps)

    def __eq__(self, other):
        keys = set(self.components) | set(other.components)
        z = HeckeElement.zero(self.n)
        return all(self.components.get(k, z) == other.components.get(k, z) for k in keys)


def psi(x: ComposedElement) -> BlockDecomposition:
    """Component ``d`` collects ``T_sigma`` from every ``T_(sigma, c)`` with ``c`` refining ``d``."""
    comps: dict = {}
    for c, e in x.parts.items():
        for d in cb.coarsenings(c):
            comps[d] = comps[d] + e if d in comps else e
    return BlockDecomposition(x.n, {d: e for d, e in comps.items() if not e.is_zero()})


def psi_inverse(y: BlockDecomposition) -> ComposedElement:
    """Moebius inversion: ``x_c = sum_(d refines c) (-1)^(l(d) - l(c)) y_d``."""
    parts: dict = {}
    for d, e in y.components.items():
        signed = e
        for c in cb.coarsenings(d):
            term = signed if (len(d) - len(c)) % 2 == 0 else -signed
            parts[c] = parts[c] + term if c in parts else term
    return ComposedElement(y.n, parts, check=False)


def d_multiply(x: ComposedElement, y: ComposedElement) -> ComposedElement:
    _same_degree(x, y)
    return psi_inverse(psi(x) * psi(y))


# ---------------------------------------------------------------------------
# distinguished elements

def unit(n: int) -> ComposedElement:
    return ComposedElement.basis(cb.identity(n), (1,) * n)


def idempotent(c) -> ComposedElement:
    """``I_c = T_(id, c)``."""
    c = cb.check_composition(c)
    return ComposedElement.basis(cb.identity(sum(c)), c)


def generator_i(n: int, i: int) -> ComposedElement:
    _check_index(n, i)
    return idempotent(cb.from_code({i}, n))


def generator_s(n: int, i: int) -> ComposedElement:
    _check_index(n, i)
    return ComposedElement.basis(cb.right_mult(cb.identity(n), i), cb.from_code({i}, n))


def t_element(sigma) -> ComposedElement:
    """``T_sigma`` inside ``D(n, q)``: ``T_(sigma, c)`` with the finest valid ``c``."""
    sigma = tuple(sigma)
    return ComposedElement.basis(sigma, cb.interval_closure(sigma))


def inverse_generator_s(n: int, i: int) -> ComposedElement:
    """``S_i^-1 = q^-1 S_i + (q^-1 - 1) I_i``, inverse relative to ``I_i``."""
    return generator_s(n, i).scale(Laurent.q(-1)) + generator_i(n, i).scale(Laurent.q(-1) - 1)


def _check_index(n: int, i: int):
    if not 1 <= i < n:
        raise ComposedError(f"generator index {i} out of range for n={n}")


@lru_cache(maxsize=None)
def basis_labels(n: int) -> tuple:
    """All composed permutations of order ``n``.

    >>> len(basis_labels(3)), len(basis_labels(4))
    (11, 47)
    """
    return tuple((p, c) for c in cb.compositions(n) for p in cb.perms(n)
                 if cb.in_young_subgroup(p, c))


def dimension(n: int) -> int:
    """``sum_(c composition of n) prod c_i!``."""
    return sum(prod(factorial(x) for x in c) for c in cb.compositions(n))


# ---------------------------------------------------------------------------
# maps out of D(n, q)

def pr(x: ComposedElement) -> HeckeElement:
    """Specialization ``I_i -> 1``: ``T_(sigma, c) -> T_sigma``."""
    acc = HeckeElement.zero(x.n)
    for e in x.parts.values():
        acc = acc + e
    return acc


def phi(x: ComposedElement, m: int) -> ComposedElement:
    """Truncation ``D(n, q) -> D(m, q)`` killing ``S_i`` and ``I_i`` for ``i >= m``."""
    if not 1 <= m <= x.n:
        raise ComposedError(f"target degree {m} must lie in [1, {x.n}]")
    if m == x.n:
        return x
    tail = (1,) * (x.n - m)
    terms = {}
    for c, e in x.parts.items():
        if c[len(c) - len(tail):] != tail or sum(c[:len(c) - len(tail)]) != m:
            continue
        cm = c[:len(c) - len(tail)]
        for p, v in e.terms.items():
            if all(p[i] == i + 1 for i in range(m, x.n)):
                terms[p[:m], cm] = v
    return ComposedElement.from_terms(m, terms)


def is_in_dprime(x: ComposedElement) -> bool:
    """Every composition in the support is a hook ``(k, 1^(n-k))``."""
    return all(cb.is_hook(c) for c in x.parts)


def commutation_defect(x: ComposedElement, i: int) -> ComposedElement:
    """``I_i x - S_i x S_i^-1``."""
    _check_index(x.n, i)
    return generator_i(x.n, i) * x - generator_s(x.n, i) * x * inverse_generator_s(x.n, i)


# ---------------------------------------------------------------------------
# generic norms

def generic_norm(c, n: int) -> ComposedElement:
    """``M_(c, n) = sum_w q^-l(w) T_(w^-1) T_w J_c`` over distinguished
    representatives of ``S_(c ^ n)`` in ``S_n``, with ``J_c = I_1 ... I_(|c|-1)``.

    Computed through ``psi``: the ``d``-component is the partial norm over
    representatives inside ``S_d`` when ``d`` contains the hook ``(|c|, 1, ...)``
    and zero otherwise.
    """
    c = tuple(c)
    if c:
        cb.check_composition(c)
    k = sum(c)
    if k > n:
        return ComposedElement.zero(n)
    full = c + ((n - k,) if n > k else ())
    needed = set(range(1, k))
    reps = cb.distinguished_reps(full) if full else [()]
    pieces = []
    for w in reps:
        term = HeckeElement.basis(n, cb.inverse(w)).times_basis(w).scale(Laurent.q(-cb.length(w)))
        pieces.append((cb.interval_closure(w), term))
    comps = {}
    for d in cb.compositions(n):
        if not needed <= cb.code(d):
            continue
        acc = HeckeElement.zero(n)
        for closure, term in pieces:
            if cb.refines(closure, d):
                acc = acc + term
        if not acc.is_zero():
            comps[d] = acc
    return psi_inverse(BlockDecomposition(n, comps))


# ---------------------------------------------------------------------------
# test oracle: rewriting with the defining relations

def rewrite_times_generator(terms: Mapping, kind: str, j: int, n: int) -> dict:
    """Right-multiply ``{(sigma, c): Laurent}`` by ``S_j`` or ``I_j`` using only
    the presentation: ``I`` generators are central idempotents absorbed into
    ``I_c``, ``S_j = S_j I_j``, and the quadratic relation reduces squares."""
    _check_index(n, j)
    cj = cb.from_code({j}, n)
    out: dict = {}

    def add(key, v):
        out[key] = out.get(key, Laurent()) + v

    for (sigma, c), v in terms.items():
        c2 = cb.join(c, cj)
        if kind == "I":
            add((sigma, c2), v)
            continue
        s2 = cb.right_mult(sigma, j)
        if cb.length(s2) > cb.length(sigma):
            add((s2, c2), v)
        else:
            add((sigma, c2), v * (Laurent.q() - 1))
            add((s2, c2), v * Laurent.q())
    return {k: v for k, v in out.items() if not v.is_zero()}


def rewrite_word(word, n: int) -> ComposedElement:
    """Evaluate a word like ``[("S", 1), ("I", 2)]`` by rewriting from the unit."""
    terms = {(cb.identity(n), (1,) * n): Laurent.const(1)}
    for kind, j in word:
        terms = rewrite_times_generator(terms, kind, j, n)
    return ComposedElement.from_terms(n, terms)
