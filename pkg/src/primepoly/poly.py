"""Exact dense polynomial arithmetic over the rationals.

Polynomials are stored densely by ascending degree with `Fraction`
coefficients.  Besides ring arithmetic the module provides the binomial
(falling-factorial) basis with its integer-valuedness test, denominator
clearing, affine substitution, and exact evaluation over the rationals,
the Gaussian rationals, and real quadratic extensions Q(sqrt(d)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

#: Degree reported for the zero polynomial.
NEG_INFINITY = float("-inf")

RationalLike = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class RatPolynomial:
    """A polynomial with exact rational coefficients, ascending degree.

    Trailing zero coefficients are trimmed on construction; the zero
    polynomial is the empty tuple and reports degree -inf.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = tuple(_frac(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other) -> "RatPolynomial":
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPolynomial(tuple(out))

    __radd__ = __add__

    def __neg__(self) -> "RatPolynomial":
        return RatPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "RatPolynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "RatPolynomial":
        return _as_poly(other) + (-self)

    def __mul__(self, other) -> "RatPolynomial":
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return ZERO
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RatPolynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        return evaluate(self, x)

    def __str__(self) -> str:
        return format_poly(self)


def _as_poly(x) -> RatPolynomial:
    if isinstance(x, RatPolynomial):
        return x
    return RatPolynomial((_frac(x),))


ZERO = RatPolynomial(())
ONE = RatPolynomial((Fraction(1),))
X = RatPolynomial((Fraction(0), Fraction(1)))


def make_poly(coeffs: Sequence[RationalLike]) -> RatPolynomial:
    """Build a polynomial from ascending-degree rational coefficients."""
    return RatPolynomial(tuple(_frac(c) for c in coeffs))


def derivative(p: RatPolynomial) -> RatPolynomial:
    """Formal derivative."""
    return RatPolynomial(tuple(i * c for i, c in enumerate(p.coeffs) if i > 0))


def compose_affine(p: RatPolynomial, sigma: int, tau: int, a: int) -> RatPolynomial:
    """Return sigma * p(tau*x + a) with sigma, tau in {+1, -1} and integer a."""
    if sigma not in (1, -1) or tau not in (1, -1):
        raise ValueError("sigma and tau must be +1 or -1")
    inner = RatPolynomial((Fraction(a), Fraction(tau)))
    result = ZERO
    for c in reversed(p.coeffs):
        result = result * inner + _as_poly(c)
    return sigma * result


def scale_to_integer(p: RatPolynomial) -> tuple[RatPolynomial, int]:
    """Return (D*p, D) where D is the least common denominator of p.

    D*p has integer coefficients and D is minimal positive with that
    property.  Rejects the zero polynomial.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no canonical integer scaling")
    d = 1
    for c in p.coeffs:
        d = d * c.denominator // math.gcd(d, c.denominator)
    return RatPolynomial(tuple(c * d for c in p.coeffs)), d


def integer_coeffs(p: RatPolynomial) -> list[int]:
    """Coefficients of D*p as plain ints (D the least common denominator)."""
    scaled, _ = scale_to_integer(p)
    return [int(c) for c in scaled.coeffs]


def is_integer_coeff(p: RatPolynomial) -> bool:
    return all(c.denominator == 1 for c in p.coeffs)


# ---------------------------------------------------------------------------
# Binomial (falling-factorial) basis
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BinomialForm:
    """Coefficients c_k of f(x) = sum c_k * C(x, k)."""

    coeffs: tuple[Fraction, ...]

    @property
    def is_integer_valued(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)


def binomial_basis_poly(k: int) -> RatPolynomial:
    """The polynomial C(x, k) = x(x-1)...(x-k+1) / k!."""
    p = ONE
    for i in range(k):
        p = p * RatPolynomial((Fraction(-i), Fraction(1)))
    return RatPolynomial(tuple(c / math.factorial(k) for c in p.coeffs))


def to_binomial(p: RatPolynomial) -> BinomialForm:
    """Exact change of basis from powers of x to C(x, k).

    Solves the triangular system given by the values p(0), ..., p(n):
    p(m) = sum_{k<=m} c_k C(m, k), so c_m = p(m) - sum_{k<m} c_k C(m, k).
    """
    if p.is_zero:
        return BinomialForm(())
    n = len(p.coeffs) - 1
    cs: list[Fraction] = []
    for m in range(n + 1):
        acc = evaluate(p, m)
        for k in range(m):
            acc -= cs[k] * math.comb(m, k)
        cs.append(acc)
    return BinomialForm(tuple(cs))


def from_binomial(b: BinomialForm) -> RatPolynomial:
    """Inverse of `to_binomial`."""
    result = ZERO
    for k, c in enumerate(b.coeffs):
        if c != 0:
            result = result + c * binomial_basis_poly(k)
    return result


def is_integer_valued(p: RatPolynomial) -> bool:
    """True iff p maps every integer to an integer."""
    return to_binomial(p).is_integer_valued


# ---------------------------------------------------------------------------
# Evaluation rings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number re + im*i with rational parts."""

    re: Fraction
    im: Fraction

    def __post_init__(self):
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    def __add__(self, other) -> "GaussianRational":
        other = _as_gaussian(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other) -> "GaussianRational":
        return self + (-_as_gaussian(other))

    def __rsub__(self, other) -> "GaussianRational":
        return _as_gaussian(other) + (-self)

    def __mul__(self, other) -> "GaussianRational":
        other = _as_gaussian(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    @property
    def is_rational(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        return f"{self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i"


def _as_gaussian(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(_frac(x), Fraction(0))


@dataclass(frozen=True)
class QuadExtElement:
    """Exact element a + b*sqrt(d) of a real quadratic extension.

    d must be a fixed square-free positive integer; arithmetic between
    elements with different d is rejected.
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))
        if self.d <= 0:
            raise ValueError("d must be a positive integer")

    def _check(self, other) -> "QuadExtElement":
        other = _as_quad(other, self.d)
        if other.d != self.d:
            raise ValueError(f"mixed quadratic extensions: sqrt({self.d}) vs sqrt({other.d})")
        return other

    def __add__(self, other) -> "QuadExtElement":
        other = self._check(other)
        return QuadExtElement(self.a + other.a, self.b + other.b, self.d)

    __radd__ = __add__

    def __neg__(self) -> "QuadExtElement":
        return QuadExtElement(-self.a, -self.b, self.d)

    def __sub__(self, other) -> "QuadExtElement":
        return self + (-self._check(other))

    def __rsub__(self, other) -> "QuadExtElement":
        return self._check(other) + (-self)

    def __mul__(self, other) -> "QuadExtElement":
        other = self._check(other)
        return QuadExtElement(
            self.a * other.a + self.b * other.b * self.d,
            self.a * other.b + self.b * other.a,
            self.d,
        )

    __rmul__ = __mul__

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(d)."""
        if self.b == 0:
            return 0 if self.a == 0 else (1 if self.a > 0 else -1)
        if self.a == 0:
            return 1 if self.b > 0 else -1
        if self.a > 0 and self.b > 0:
            return 1
        if self.a < 0 and self.b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 d
        if self.a * self.a > self.b * self.b * self.d:
            return 1 if self.a > 0 else -1
        if self.a * self.a < self.b * self.b * self.d:
            return 1 if self.b > 0 else -1
        return 0

    def __str__(self) -> str:
        return f"{self.a}{'+' if self.b >= 0 else '-'}{abs(self.b)}*sqrt({self.d})"


def _as_quad(x, d: int) -> QuadExtElement:
    if isinstance(x, QuadExtElement):
        return x
    return QuadExtElement(_frac(x), Fraction(0), d)


def evaluate(p: RatPolynomial, x):
    """Exact Horner evaluation of p at a rational, Gaussian-rational, or
    quadratic-extension point; the result has the same numeric kind."""
    if isinstance(x, GaussianRational):
        acc: GaussianRational = GaussianRational(Fraction(0), Fraction(0))
        for c in reversed(p.coeffs):
            acc = acc * x + GaussianRational(c, Fraction(0))
        return acc
    if isinstance(x, QuadExtElement):
        accq = QuadExtElement(Fraction(0), Fraction(0), x.d)
        for c in reversed(p.coeffs):
            accq = accq * x + QuadExtElement(c, Fraction(0), x.d)
        return accq
    xf = _frac(x)
    accf = Fraction(0)
    for c in reversed(p.coeffs):
        accf = accf * xf + c
    return accf


def eval_int_scaled(int_coeffs: Sequence[int], m: int) -> int:
    """Horner evaluation of an integer-coefficient polynomial at integer m."""
    acc = 0
    for c in reversed(int_coeffs):
        acc = acc * m + c
    return acc


# ---------------------------------------------------------------------------
# Text grammar (CLI interchange format)
# ---------------------------------------------------------------------------


def parse_poly(text: str) -> RatPolynomial:
    """Parse the comma-separated ascending-coefficient grammar.

    Each coefficient is `int` or `int/int`; the optional prefix `binom:`
    interprets the coefficients in the binomial basis.
    """
    text = text.strip()
    binom = False
    if text.startswith("binom:"):
        binom = True
        text = text[len("binom:"):]
    if not text:
        raise ValueError("empty polynomial")
    try:
        coeffs = tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad polynomial {text!r}: {exc}") from None
    if binom:
        return from_binomial(BinomialForm(coeffs))
    return RatPolynomial(coeffs)


def format_poly(p: RatPolynomial) -> str:
    """Canonical text form: comma-separated coefficients, ascending degree."""
    if p.is_zero:
        return "0"
    return ",".join(str(c) for c in p.coeffs)
