"""
Exact scalars: Laurent polynomials in ``q``, rational functions in ``q``,
and polynomials in ``n`` whose coefficients are Laurent polynomials.

All values are immutable and hashable.  Rationals are ``fractions.Fraction``
(integral values are kept as ``int``).

>>> q = Laurent.q()
>>> ((q - 1) * q**-1).at_one()
0
>>> (q + 2 + q**-1).is_q_symmetric()
True
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rational = Union[int, Fraction]


class InterpolationError(ValueError):
    """The sampled values are not a polynomial of the claimed degree."""


def _norm(x) -> Rational:
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int):
        return x
    return _norm(Fraction(x))


def render_rational(x: Rational) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Rational:
    return _norm(Fraction(text))


# ---------------------------------------------------------------------------
# Laurent polynomials

class Laurent:
    """A finite sum ``sum_k c_k q^k`` with rational ``c_k`` and integer ``k``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Rational] | Iterable[tuple[int, Rational]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Rational] = {}
        for k, c in items:
            acc[int(k)] = acc.get(int(k), 0) + c
        self._terms = {k: _norm(c) for k, c in sorted(acc.items()) if c != 0}
        self._hash = None

    @classmethod
    def q(cls, k: int = 1) -> "Laurent":
        return cls({k: 1})

    @classmethod
    def const(cls, c: Rational) -> "Laurent":
        return cls({0: c})

    @classmethod
    def coerce(cls, x) -> "Laurent":
        if isinstance(x, Laurent):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Laurent")

    @property
    def terms(self) -> dict[int, Rational]:
        return dict(self._terms)

    def coeff(self, k: int) -> Rational:
        return self._terms.get(k, 0)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def low(self) -> int:
        return min(self._terms) if self._terms else 0

    def high(self) -> int:
        return max(self._terms) if self._terms else 0

    def __eq__(self, other):
        try:
            other = Laurent.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other):
        try:
            other = Laurent.coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return Laurent(acc)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = Laurent.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Laurent.coerce(other) - self

    def __mul__(self, other):
        try:
            other = Laurent.coerce(other)
        except TypeError:
            return NotImplemented
        acc: dict[int, Rational] = {}
        for a, x in self._terms.items():
            for b, y in other._terms.items():
                acc[a + b] = acc.get(a + b, 0) + x * y
        return Laurent(acc)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if len(self._terms) != 1:
                raise ZeroDivisionError("only monomials are invertible Laurent polynomials")
            (k, c), = self._terms.items()
            return Laurent({k * e: Fraction(1) / Fraction(c) ** -e})
        out = Laurent.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, k: int) -> "Laurent":
        return Laurent({e + k: c for e, c in self._terms.items()})

    def scale(self, c: Rational) -> "Laurent":
        return Laurent({e: x * c for e, x in self._terms.items()})

    def at_one(self) -> Rational:
        return _norm(sum(self._terms.values(), 0))

    def evaluate(self, q) -> Rational:
        return sum((c * Fraction(q) ** k for k, c in self._terms.items()), Fraction(0))

    def is_q_symmetric(self) -> bool:
        return all(self._terms.get(-k) == c for k, c in self._terms.items())

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def __repr__(self):
        return f"Laurent({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for k, c in sorted(self._terms.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "q" if k == 1 else f"q^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> list:
        return [[k, render_rational(c)] for k, c in self._terms.items()]

    @classmethod
    def from_json(cls, data: Sequence) -> "Laurent":
        return cls((int(k), parse_rational(c)) for k, c in data)


def q_over_q_minus_1(power: int) -> "RationalFunction":
    """``(q/(q-1))**power`` as a rational function."""
    base = RationalFunction(Laurent.q(), Laurent.q() - 1)
    return base ** power


# ---------------------------------------------------------------------------
# dense univariate polynomials over Q, used by RationalFunction

def _ptrim(p: list) -> tuple:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(a, b):
    m = max(len(a), len(b))
    return _ptrim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(m)])


def _pneg(a):
    return tuple(-x for x in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim(out)


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [Fraction(x) for x in _ptrim(a)]
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = a[-1] / lead
        quot[shift] = f
        for i, y in enumerate(b):
            a[i + shift] -= f * y
        a.pop()
        a = list(_ptrim(a))
    return _ptrim(quot), _ptrim(a)


def _pgcd(a, b):
    a, b = _ptrim(a), _ptrim(b)
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return ()
    lead = Fraction(a[-1])
    return tuple(_norm(Fraction(x) / lead) for x in a)


def _pmonic(a):
    lead = Fraction(a[-1])
    return tuple(_norm(Fraction(x) / lead) for x in a), lead


# ---------------------------------------------------------------------------
# rational functions

class RationalFunction:
    """``num(q)/den(q)`` over Q, reduced with a monic denominator.

    >>> q = Laurent.q()
    >>> x = RationalFunction(q**2, (q - 1)**2)
    >>> (x * RationalFunction(3) - x).to_laurent() is None
    True
    >>> RationalFunction(q**2 - 1, q - 1).to_laurent()
    Laurent(q + 1)
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num_p = _to_poly(num)
        den_p = _to_poly(den)
        if not den_p:
            raise ZeroDivisionError("zero denominator")
        if not num_p:
            self.num, self.den = (), (1,)
            return
        g = _pgcd(num_p, den_p)
        if len(g) > 1:
            num_p = _pdivmod(num_p, g)[0]
            den_p = _pdivmod(den_p, g)[0]
        den_p, lead = _pmonic(den_p)
        self.num = tuple(_norm(Fraction(x) / lead) for x in num_p)
        self.den = den_p

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        return as_rational(x)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return _rf(_padd(self.num, other.num), self.den)
        return _rf(_padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
                   _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(RationalFunction)
        out.num, out.den = _pneg(self.num), self.den
        return out

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return _rf(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return _rf(self.den, self.num)

    def __truediv__(self, other):
        return self * RationalFunction.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** -e
        out = RationalFunction(1)
        for _ in range(e):
            out = out * self
        return out

    def to_laurent(self) -> Laurent | None:
        """The Laurent polynomial equal to this function, or None if the
        denominator is not a power of ``q``."""
        if any(self.den[:-1]):
            return None
        shift = len(self.den) - 1
        return Laurent({k - shift: c for k, c in enumerate(self.num)})

    def __repr__(self):
        lau = self.to_laurent()
        if lau is not None:
            return f"RationalFunction({lau})"
        return f"RationalFunction({_pstr(self.num)} / {_pstr(self.den)})"

    __str__ = __repr__


def _pstr(p) -> str:
    return str(Laurent(dict(enumerate(p))))


def _rf(num, den) -> RationalFunction:
    return RationalFunction(num, den)


def _to_poly(x) -> tuple:
    """Coerce a scalar, Laurent (nonneg exponents only) or tuple to a poly."""
    if isinstance(x, tuple):
        return _ptrim(x)
    if isinstance(x, (int, Fraction)):
        return _ptrim((x,))
    if isinstance(x, Laurent):
        if x.is_zero():
            return ()
        if x.low() < 0:
            raise ValueError("negative exponents: wrap with as_rational()")
        return _ptrim([x.coeff(k) for k in range(x.high() + 1)])
    if isinstance(x, RationalFunction):
        raise TypeError("nested rational function")
    raise TypeError(f"cannot coerce {type(x).__name__} to a polynomial")


def as_rational(x) -> RationalFunction:
    """Lift an int, Fraction, Laurent or RationalFunction."""
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Laurent):
        if x.is_zero():
            return RationalFunction(0)
        low = x.low()
        if low >= 0:
            return RationalFunction(x)
        return RationalFunction(x.shift(-low), Laurent.q(-low))
    return RationalFunction(x)


def to_laurent_strict(x) -> Laurent:
    """Convert to Laurent or raise ``ValueError`` when a pole remains."""
    if isinstance(x, Laurent):
        return x
    lau = as_rational(x).to_laurent()
    if lau is None:
        raise ValueError(f"not a Laurent polynomial: {x}")
    return lau


def solve(matrix: list[list], rhs: list[list]) -> list[list[RationalFunction]]:
    """Solve ``matrix @ X = rhs`` exactly for a square nonsingular matrix.

    ``rhs`` is a list of right-hand-side columns, each of length ``len(matrix)``.
    Pivoting takes the first nonzero entry of each column in row order.
    """
    size = len(matrix)
    a = [[as_rational(x) for x in row] for row in matrix]
    b = [[as_rational(col[i]) for col in rhs] for i in range(size)]
    for col in range(size):
        piv = next((r for r in range(col, size) if not a[r][col].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        b[col], b[piv] = b[piv], b[col]
        inv = a[col][col].inverse()
        a[col] = [x * inv for x in a[col]]
        b[col] = [x * inv for x in b[col]]
        for r in range(size):
            if r != col and not a[r][col].is_zero():
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                b[r] = [x - f * y for x, y in zip(b[r], b[col])]
    return [[b[i][k] for i in range(size)] for k in range(len(rhs))]


# ---------------------------------------------------------------------------
# polynomials in n with Laurent coefficients

class NPolynomial:
    """``sum_d c_d(q) n^d``.

    >>> p = NPolynomial({2: Fraction(1, 2), 1: Fraction(-1, 2)})
    >>> p(4)
    Laurent(6)
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, object] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, Laurent] = {}
        for d, c in items:
            acc[d] = acc.get(d, Laurent()) + Laurent.coerce(c)
        self._coeffs = {d: c for d, c in sorted(acc.items()) if not c.is_zero()}

    @classmethod
    def const(cls, c) -> "NPolynomial":
        return cls({0: c})

    @classmethod
    def n(cls) -> "NPolynomial":
        return cls({1: 1})

    @classmethod
    def coerce(cls, x) -> "NPolynomial":
        if isinstance(x, NPolynomial):
            return x
        return cls.const(Laurent.coerce(x))

    @property
    def coeffs(self) -> dict[int, Laurent]:
        return dict(self._coeffs)

    def degree(self) -> int:
        return max(self._coeffs) if self._coeffs else -1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __call__(self, n: int) -> Laurent:
        out = Laurent()
        for d, c in self._coeffs.items():
            out = out + c.scale(Fraction(n) ** d)
        return out

    def __eq__(self, other):
        try:
            other = NPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def __add__(self, other):
        try:
            other = NPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._coeffs)
        for d, c in other._coeffs.items():
            acc[d] = acc.get(d, Laurent()) + c
        return NPolynomial(acc)

    __radd__ = __add__

    def __neg__(self):
        return NPolynomial({d: -c for d, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-NPolynomial.coerce(other))

    def __rsub__(self, other):
        return NPolynomial.coerce(other) - self

    def __mul__(self, other):
        try:
            other = NPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        acc: dict[int, Laurent] = {}
        for a, x in self._coeffs.items():
            for b, y in other._coeffs.items():
                acc[a + b] = acc.get(a + b, Laurent()) + x * y
        return NPolynomial(acc)

    __rmul__ = __mul__

    def at_q_one(self) -> dict[int, Rational]:
        return {d: c.at_one() for d, c in self._coeffs.items() if c.at_one() != 0}

    def __repr__(self):
        return f"NPolynomial({self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for d, c in sorted(self._coeffs.items(), reverse=True):
            mono = "" if d == 0 else ("n" if d == 1 else f"n^{d}")
            if d == 0:
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def to_json(self) -> list:
        return [[d, c.to_json()] for d, c in self._coeffs.items()]

    @classmethod
    def from_json(cls, data) -> "NPolynomial":
        return cls({int(d): Laurent.from_json(c) for d, c in data})


def _interpolate_rational(xs: Sequence[int], ys: Sequence[Rational]) -> list[Fraction]:
    """Coefficients (low degree first) of the Lagrange polynomial through the points."""
    size = len(xs)
    coeffs = [Fraction(0)] * size
    for i in range(size):
        if ys[i] == 0:
            continue
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(size):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        f = Fraction(ys[i]) / denom
        for k, b in enumerate(basis):
            coeffs[k] += f * b
    return coeffs


def interpolate(points: Sequence[tuple[int, object]], degree_bound: int) -> NPolynomial:
    """Fit a polynomial in ``n`` of degree at most ``degree_bound``.

    The first ``degree_bound + 1`` points determine the fit; any further
    points must agree exactly or ``InterpolationError`` is raised.

    >>> interpolate([(n, n * (n - 4)) for n in range(4, 9)], 2)
    NPolynomial((1)*n^2 + (-4)*n)
    """
    points = [(int(n), Laurent.coerce(v)) for n, v in points]
    xs = [n for n, _ in points]
    if len(set(xs)) != len(xs):
        raise InterpolationError("nodes must be distinct")
    if len(points) < degree_bound + 1:
        raise InterpolationError(f"need {degree_bound + 1} points, got {len(points)}")
    fit, extra = points[:degree_bound + 1], points[degree_bound + 1:]
    exps = sorted({k for _, v in fit for k in v.terms})
    acc: dict[int, dict[int, Rational]] = {}
    fx = [n for n, _ in fit]
    for k in exps:
        cs = _interpolate_rational(fx, [v.coeff(k) for _, v in fit])
        for d, c in enumerate(cs):
            if c:
                acc.setdefault(d, {})[k] = c
    poly = NPolynomial({d: Laurent(t) for d, t in acc.items()})
    for n, v in extra:
        if poly(n) != v:
            raise InterpolationError(
                f"value at n={n} is {v}, fitted polynomial gives {poly(n)}")
    return poly


def laurent_eval_q1(a) -> Rational:
    """Value at ``q = 1``.

    >>> laurent_eval_q1(Laurent.q() + 1 + Laurent.q(-1))
    3
    """
    return Laurent.coerce(a).at_one()
