"""
Permutations, partitions, compositions and set partitions of type A.

Permutations are tuples in one-line notation on ``1..n``.  Composition of
permutations is right-to-left: ``(s*t)(i) == s(t(i))``.  With that
convention ``w * s_i`` swaps the *positions* ``i, i+1`` of the word of ``w``
and ``s_i * w`` swaps the *values* ``i, i+1``.

>>> length((2, 4, 5, 1, 3))
5
>>> cycle_type((2, 4, 5, 1, 3))
(3, 2)
>>> sorted(code((3, 2, 3)))
[1, 2, 4, 6, 7]
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]
Partition = tuple[int, ...]
Composition = tuple[int, ...]

#: default ceiling for exhaustive enumeration of a symmetric group
ENUMERATION_BOUND = 8


class CombinatoricsError(ValueError):
    """Raised on malformed combinatorial input."""


# ---------------------------------------------------------------------------
# permutations

def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def check_perm(p: Sequence[int]) -> Perm:
    p = tuple(p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise CombinatoricsError(f"not a permutation word: {p}")
    return p


def compose(s: Perm, t: Perm) -> Perm:
    """Return ``s*t``, i.e. ``i -> s(t(i))``.

    >>> compose((2, 1, 3), (1, 3, 2))
    (2, 3, 1)
    """
    if len(s) != len(t):
        raise CombinatoricsError("degree mismatch")
    return tuple(s[j - 1] for j in t)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p, 1):
        inv[v - 1] = i
    return tuple(inv)


def extend(p: Perm, n: int) -> Perm:
    """Embed ``p`` into a larger symmetric group by appending fixed points."""
    if n < len(p):
        raise CombinatoricsError("cannot extend to a smaller degree")
    return p + tuple(range(len(p) + 1, n + 1))


def length(p: Perm) -> int:
    """Number of inversions."""
    return sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j])


def right_mult(p: Perm, i: int) -> Perm:
    """``p * s_i``: swap positions ``i`` and ``i+1``."""
    w = list(p)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def left_mult(i: int, p: Perm) -> Perm:
    """``s_i * p``: swap values ``i`` and ``i+1``."""
    swap = {i: i + 1, i + 1: i}
    return tuple(swap.get(v, v) for v in p)


def from_word(word: Iterable[int], n: int) -> Perm:
    """The permutation ``s_{i1} s_{i2} ... s_{ir}``."""
    p = identity(n)
    for i in word:
        if not 1 <= i < n:
            raise CombinatoricsError(f"generator index {i} out of range for n={n}")
        p = right_mult(p, i)
    return p


def reduced_word(p: Perm) -> tuple[int, ...]:
    """Lexicographically smallest reduced word of ``p``.

    The first letter is always the smallest left descent.

    >>> reduced_word((3, 2, 1))
    (1, 2, 1)
    >>> reduced_word((1, 2, 3))
    ()
    """
    w = list(p)
    pos = {v: k for k, v in enumerate(w)}
    word = []
    n = len(w)
    while True:
        for i in range(1, n):
            if pos[i] > pos[i + 1]:
                break
        else:
            return tuple(word)
        word.append(i)
        a, b = pos[i], pos[i + 1]
        w[a], w[b] = i + 1, i
        pos[i], pos[i + 1] = b, a


def all_reduced_words(p: Perm) -> set[tuple[int, ...]]:
    """Every reduced word of ``p`` (exponential; small ``n`` only)."""
    if length(p) == 0:
        return {()}
    out = set()
    for i in range(1, len(p)):
        if p.index(i) > p.index(i + 1):
            for rest in all_reduced_words(left_mult(i, p)):
                out.add((i,) + rest)
    return out


def orbits(p: Perm) -> list[list[int]]:
    seen = set()
    out = []
    for start in range(1, len(p) + 1):
        if start in seen:
            continue
        orb = []
        x = start
        while x not in seen:
            seen.add(x)
            orb.append(x)
            x = p[x - 1]
        out.append(orb)
    return out


def cycle_type(p: Perm) -> Partition:
    return tuple(sorted((len(o) for o in orbits(p)), reverse=True))


def perms(n: int) -> Iterator[Perm]:
    return itertools.permutations(range(1, n + 1))


def render_perm(p: Perm) -> str:
    if len(p) <= 9:
        return "".join(map(str, p))
    return ",".join(map(str, p))


def parse_perm(text: str) -> Perm:
    text = text.strip()
    if "," in text:
        return check_perm(int(t) for t in text.split(","))
    return check_perm(int(ch) for ch in text)


# ---------------------------------------------------------------------------
# partitions

def partition(parts: Iterable[int]) -> Partition:
    """Normalize to a weakly decreasing tuple, dropping zero parts."""
    parts = tuple(parts)
    if any(x < 0 for x in parts):
        raise CombinatoricsError(f"negative part in {parts}")
    return tuple(sorted((x for x in parts if x), reverse=True))


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """Partitions of ``n`` in reverse lexicographic order.

    >>> partitions(3)
    ((3,), (2, 1), (1, 1, 1))
    """
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions(n - k, k):
            out.append((k,) + rest)
    return tuple(out)


def partitions_up_to(k: int) -> list[Partition]:
    """All partitions of size at most ``k``, by size then reverse lex."""
    return [lam for m in range(k + 1) for lam in partitions(m)]


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def m1(lam: Partition) -> int:
    return lam.count(1)


def dominates(lam: Partition, mu: Partition) -> bool:
    """``mu <= lam`` in dominance order, comparing partial sums with zero padding.

    Sizes may differ; a smaller partition can still be dominated.
    """
    size = max(len(lam), len(mu))
    a = b = 0
    for i in range(size):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if b > a:
            return False
    return True


def complete_arrow(lam: Partition, n: int) -> Partition:
    """``(lam_1+1, ..., lam_r+1, 1^(n-|lam|-l(lam)))``.

    >>> complete_arrow((2,), 5)
    (3, 1, 1)
    """
    extra = n - sum(lam) - len(lam)
    if extra < 0:
        raise CombinatoricsError(f"|lam|+l(lam) > {n} for {lam}")
    return tuple(x + 1 for x in lam) + (1,) * extra


def complete_up(lam: Partition, n: int) -> Partition:
    """``lam`` with a part ``n-|lam|`` added (zero part dropped), re-sorted.

    >>> complete_up((2, 1), 5)
    (2, 2, 1)
    """
    extra = n - sum(lam)
    if extra < 0:
        raise CombinatoricsError(f"|lam| > {n} for {lam}")
    return partition(lam + (extra,))


def strip_arrow(kappa: Partition) -> Partition:
    """Inverse of ``complete_arrow``: subtract one from every part >= 2."""
    return tuple(x - 1 for x in kappa if x >= 2)


def strip_up(kappa: Partition) -> Partition:
    """A preimage of ``complete_up``: remove one largest part."""
    return kappa[1:]


def render_partition(lam: Sequence[int]) -> str:
    return ",".join(map(str, lam))


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text or text in ("0", "()", "∅"):
        return ()
    return partition(int(t) for t in text.split(","))


# ---------------------------------------------------------------------------
# compositions and set partitions

def check_composition(c: Iterable[int]) -> Composition:
    c = tuple(c)
    if any(x <= 0 for x in c):
        raise CombinatoricsError(f"compositions have positive parts: {c}")
    return c


def descents(c: Composition) -> frozenset[int]:
    """``{c1, c1+c2, ..., n}``."""
    return frozenset(itertools.accumulate(c))


def code(c: Composition) -> frozenset[int]:
    n = sum(c)
    return frozenset(range(1, n + 1)) - descents(c)


def from_descents(desc: Iterable[int], n: int) -> Composition:
    cuts = sorted(set(desc) | {n})
    return tuple(b - a for a, b in zip([0] + cuts[:-1], cuts))


def from_code(code_set: Iterable[int], n: int) -> Composition:
    return from_descents(set(range(1, n + 1)) - set(code_set), n)


def compositions(n: int) -> list[Composition]:
    """All compositions of ``n``, coarsest first."""
    out = []
    for k in range(n):
        for cuts in itertools.combinations(range(1, n), k):
            out.append(from_descents(cuts, n))
    return out


def blocks(c: Composition) -> list[range]:
    out = []
    start = 1
    for part in c:
        out.append(range(start, start + part))
        start += part
    return out


def set_partition(c: Composition) -> frozenset[frozenset[int]]:
    """``pi(c)``, the interval set partition of ``c``."""
    return frozenset(frozenset(b) for b in blocks(c))


def refines(c: Composition, d: Composition) -> bool:
    """True when ``pi(c) <= pi(d)``, i.e. ``d`` coarsens ``c``."""
    return sum(c) == sum(d) and descents(d) <= descents(c)


def join(c: Composition, d: Composition) -> Composition:
    """Finest composition coarser than both.

    >>> join((3, 2, 3), (2, 3, 3))
    (5, 3)
    """
    if sum(c) != sum(d):
        raise CombinatoricsError(f"size mismatch: {c} vs {d}")
    return from_descents(descents(c) & descents(d), sum(c))


def mobius(c: Composition, d: Composition) -> int:
    """Moebius function of the interval ``[c, d]`` of compositions."""
    if not refines(c, d):
        raise CombinatoricsError(f"{d} does not coarsen {c}")
    return (-1) ** (len(c) - len(d))


def coarsenings(c: Composition) -> list[Composition]:
    """All ``d`` with ``pi(d) >= pi(c)``."""
    n = sum(c)
    inner = sorted(descents(c) - {n})
    return [from_descents(sub, n)
            for k in range(len(inner) + 1)
            for sub in itertools.combinations(inner, k)]


def interval_closure(p: Perm) -> Composition:
    """Finest composition coarsening the orbits of ``p``.

    Its code is exactly the set of letters in any reduced word of ``p``.
    """
    n = len(p)
    desc = [i for i in range(1, n + 1) if max(p[:i]) == i]
    return from_descents(desc, n)


def is_composed(p: Perm, c: Composition) -> bool:
    return len(p) == sum(c) and refines(interval_closure(p), c)


def is_hook(c: Composition) -> bool:
    return all(x == 1 for x in c[1:])


def hook(k: int, n: int) -> Composition:
    """``(k, 1^(n-k))``; ``k = 0`` is read as ``(1^n)``."""
    k = max(k, 1) if n else 0
    return ((k,) if k else ()) + (1,) * (n - k)


def in_young_subgroup(p: Perm, c: Composition) -> bool:
    return all(set(p[i - 1] for i in b) == set(b) for b in blocks(c))


def render_composition(c: Sequence[int]) -> str:
    return ",".join(map(str, c))


def render_composed(p: Perm, c: Composition) -> str:
    """Bar notation, e.g. ``32154|867``."""
    sep = "" if len(p) <= 9 else ","
    return "|".join(sep.join(str(p[i - 1]) for i in b) for b in blocks(c))


def parse_composed(text: str) -> tuple[Perm, Composition]:
    chunks = text.split("|")
    if any("," in ch for ch in chunks):
        groups = [[int(t) for t in ch.split(",")] for ch in chunks]
    else:
        groups = [[int(t) for t in ch] for ch in chunks]
    p = check_perm(x for g in groups for x in g)
    c = check_composition(len(g) for g in groups)
    if not is_composed(p, c):
        raise CombinatoricsError(f"{text}: composition does not coarsen the orbits")
    return p, c


# ---------------------------------------------------------------------------
# cosets and conjugacy classes

def distinguished_reps(c: Composition) -> list[Perm]:
    """Minimal-length representatives of the right cosets ``S_c w``.

    These are the shuffles of the increasing words on the blocks of ``c``.

    >>> [render_perm(w) for w in distinguished_reps((2, 3))][:4]
    ['12345', '13245', '13425', '13452']
    """
    n = sum(c)
    nxt = [b.start for b in blocks(c)]
    stop = [b.stop for b in blocks(c)]
    out: list[Perm] = []
    word: list[int] = []

    def walk():
        if len(word) == n:
            out.append(tuple(word))
            return
        for k in range(len(c)):
            if nxt[k] < stop[k]:
                word.append(nxt[k])
                nxt[k] += 1
                walk()
                nxt[k] -= 1
                word.pop()

    walk()
    out.sort()
    assert len(out) == factorial(n) // prod(factorial(x) for x in c)
    return out


def recoils(p: Perm) -> frozenset[int]:
    """Descents of the inverse: values ``i`` with ``i+1`` left of ``i``."""
    pos = inverse(p)
    return frozenset(i for i in range(1, len(p)) if pos[i - 1] > pos[i])


def coxeter_rep(lam: Partition) -> Perm:
    """A minimal-length permutation of cycle type ``lam``: one cycle
    ``s_a s_(a+1) ... s_(b-1)`` per block of consecutive positions."""
    n = sum(lam)
    word = []
    start = 1
    for part in lam:
        word.extend(range(start, start + part - 1))
        start += part
    return from_word(word, n)


def min_length_in_class(lam: Partition, bound: int = ENUMERATION_BOUND) -> int:
    """Minimal length over the class of type ``lam``, by exhaustive search."""
    lam = partition(lam)
    return _class_min_lengths(sum(lam), bound)[lam]


@lru_cache(maxsize=None)
def _class_min_lengths(n: int, bound: int) -> dict[Partition, int]:
    if n > bound:
        raise CombinatoricsError(f"n={n} exceeds the enumeration bound {bound}")
    best: dict[Partition, int] = {}
    for p in perms(n):
        t = cycle_type(p)
        ell = length(p)
        if ell < best.get(t, ell + 1):
            best[t] = ell
    return best


def class_size(lam: Partition) -> int:
    n = sum(lam)
    z = 1
    for k in set(lam):
        m = lam.count(k)
        z *= k ** m * factorial(m)
    return factorial(n) // z
