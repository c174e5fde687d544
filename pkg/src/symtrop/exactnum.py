"""Exact scalars: rationals, real quadratic fields and univariate polynomials.

Rationals are plain :class:`fractions.Fraction` values.  A real quadratic
field Q(sqrt r) is modelled by :class:`QuadExt`, whose sign is decided with
two integer comparisons.  :class:`UniPoly` works over either field and
provides Sturm-chain root counting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence, Union

Rational = Fraction


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or "num/den" string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q) -> str:
    q = to_rational(q)
    return f"{q.numerator}/{q.denominator}"


def _sign(q) -> int:
    return (q > 0) - (q < 0)


@dataclass(frozen=True)
class QuadExt:
    """The real number a + b*sqrt(radicand) with rational a, b."""

    a: Fraction
    b: Fraction
    radicand: int = 2

    def __post_init__(self):
        object.__setattr__(self, "a", to_rational(self.a))
        object.__setattr__(self, "b", to_rational(self.b))
        r = self.radicand
        if not isinstance(r, int) or r < 2 or isqrt(r) ** 2 == r:
            raise ValueError(f"radicand must be a positive non-square integer, got {r!r}")

    def _coerce(self, other) -> "QuadExt | None":
        if isinstance(other, QuadExt):
            if other.radicand != self.radicand:
                raise ValueError("mixing different quadratic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(Fraction(other), Fraction(0), self.radicand)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.radicand)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.radicand)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.radicand)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        r = self.radicand
        return QuadExt(self.a * o.a + r * self.b * o.b, self.a * o.b + self.b * o.a, r)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.radicand * self.b * self.b

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return QuadExt(self.a / n, -self.b / n, self.radicand)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadExt(Fraction(1), Fraction(0), self.radicand)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.radicand) == (other.a, other.b, other.radicand)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.radicand))

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(r)."""
        sa, sb = _sign(self.a), _sign(self.b)
        if sa == 0 or sb == 0 or sa == sb:
            return sa or sb
        # opposite signs: the term with larger square wins
        lhs, rhs = self.a * self.a, self.radicand * self.b * self.b
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * self.radicand ** 0.5

    def to_json(self) -> dict:
        return {"a": format_rational(self.a), "b": format_rational(self.b)}

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.radicand})"


def QSqrt2(a, b) -> QuadExt:
    return QuadExt(to_rational(a), to_rational(b), 2)


def sqrt_of(radicand: int) -> QuadExt:
    return QuadExt(Fraction(0), Fraction(1), radicand)


def sign(x) -> int:
    """Sign of a rational or quadratic-field element."""
    if isinstance(x, QuadExt):
        return x.sign()
    return _sign(x)


def sign_qsqrt2(x: QuadExt) -> int:
    if x.radicand != 2:
        raise ValueError("expected an element of Q(sqrt 2)")
    return x.sign()


Scalar = Union[Fraction, QuadExt]


class UniPoly:
    """Dense univariate polynomial, coefficients listed from degree 0 upward."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [c if isinstance(c, QuadExt) else to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1]

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return UniPoly([other]) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return UniPoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UniPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [0] * max(len(rem) - other.degree, 0)
        lead = other.leading
        while len(rem) - 1 >= other.degree and rem:
            shift = len(rem) - 1 - other.degree
            factor = rem[-1] / lead
            quot[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[i + shift] = rem[i + shift] - factor * c
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return UniPoly(quot), UniPoly(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def derivative(self) -> "UniPoly":
        return UniPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lead = self.leading
        return UniPoly(c / lead for c in self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_constant(self) -> bool:
        return self.degree <= 0


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic greatest common divisor."""
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    return (p // poly_gcd(p, p.derivative())).monic()


def squarefree_decomposition(p: UniPoly) -> list[UniPoly]:
    """Yun's algorithm: monic, pairwise coprime a_1, a_2, ... with p = c * prod a_i**i."""
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree decomposition")
    dp = p.derivative()
    g = poly_gcd(p, dp)
    c = p // g
    d = dp // g - c.derivative()
    factors = []
    while not c.is_constant():
        a = poly_gcd(c, d)
        c = c // a
        d = d // a - c.derivative()
        factors.append(a)
    return factors


def sturm_chain(p: UniPoly) -> list[UniPoly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def sturm_real_roots(p: UniPoly) -> int:
    """Number of distinct real roots of p."""
    if p.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    q = squarefree_part(p)
    if q.degree <= 0:
        return 0
    chain = sturm_chain(q)
    at_pos = [sign(s.leading) for s in chain]
    at_neg = [sign(s.leading) * (-1) ** s.degree for s in chain]
    return _variations(at_neg) - _variations(at_pos)


def globally_nonnegative(p: UniPoly) -> bool:
    """True iff p(x) >= 0 for every real x.

    Needs even degree, positive leading coefficient and no real root of odd
    multiplicity; the last condition is read off Yun's decomposition.
    """
    if p.is_zero():
        raise ValueError("zero polynomial rejected")
    if p.degree % 2 or sign(p.leading) <= 0:
        return False
    odd_part = [a for i, a in enumerate(squarefree_decomposition(p), start=1) if i % 2]
    return all(sturm_real_roots(a) == 0 for a in odd_part if a.degree > 0)
