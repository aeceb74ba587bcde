"""Exact real root machinery built on Sturm sequences.

Everything here reduces to integer arithmetic: rational polynomials are
cleared to primitive integer coefficient lists, Sturm chains use primitive
pseudo-remainders (no coefficient blowup, no floating point), and interval
endpoints stay dyadic because every subdivision is a bisection.

Provided operations: distinct-real-root counting on an interval, root
isolation with on-demand refinement, complete integer solution sets of
p(x) = v, the exact sign of a polynomial at an isolated algebraic point,
and two-sided brackets for the Lebesgue measure of {x : |p(x)| <= K}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .poly import RatPolynomial, evaluate, integer_coeffs, make_poly

IntCoeffs = tuple[int, ...]


# ---------------------------------------------------------------------------
# Integer polynomial helpers (dense ascending coefficient tuples)
# ---------------------------------------------------------------------------


def _strip(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _primitive(c: list[int]) -> list[int]:
    c = _strip(list(c))
    if not c:
        return c
    g = 0
    for v in c:
        g = math.gcd(g, v)
    return [v // g for v in c]


def _to_int(p: RatPolynomial) -> list[int]:
    if p.is_zero:
        return []
    return _primitive(integer_coeffs(p))


def _deriv(c: list[int]) -> list[int]:
    return _strip([i * v for i, v in enumerate(c) if i > 0])


def _eval_at_int(c: list[int], m: int) -> int:
    acc = 0
    for v in reversed(c):
        acc = acc * m + v
    return acc


def _eval_scaled_frac(c: list[int], num: int, den: int) -> int:
    """den^deg * p(num/den), exact in integers (den >= 1)."""
    if not c:
        return 0
    if den == 1:
        return _eval_at_int(c, num)
    acc = c[-1]
    dp = 1
    for v in reversed(c[:-1]):
        dp *= den
        acc = acc * num + v * dp
    return acc


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _chain(c: list[int]) -> list[list[int]]:
    """Canonical Sturm chain with primitive-part scaling (sign-correct)."""
    chain = [list(c)]
    d = _deriv(c)
    if d:
        chain.append(d)
    while len(chain[-1]) > 1:
        a, b = chain[-2], chain[-1]
        r, factor_sign = _pseudo_rem(a, b)
        if not r:
            break
        chain.append(_primitive([-v * factor_sign for v in r]))
    return chain


def _pseudo_rem(a: list[int], b: list[int]) -> tuple[list[int], int]:
    """Integer pseudo-remainder of a by b and the sign of the scale factor.

    Returns (r, s) with r = lc(b)^k * (a mod b) for some k >= 0 and
    s = sign(lc(b)^k), so that s * r has the sign of the true remainder.
    """
    lc = b[-1]
    db = len(b) - 1
    r = list(a)
    k = 0
    while len(r) - 1 >= db and r:
        k += 1
        shift = len(r) - 1 - db
        coef = r[-1]
        r = [v * lc for v in r]
        for i, bv in enumerate(b):
            r[shift + i] -= coef * bv
        r = _strip(r)
    s = 1 if (lc > 0 or k % 2 == 0) else -1
    return r, s


def _variations(signs: list[int]) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _var_at(chain: list[list[int]], num: int, den: int) -> int:
    return _variations([_sign(_eval_scaled_frac(c, num, den)) for c in chain])


def _var_at_inf(chain: list[list[int]], positive: bool) -> int:
    signs = []
    for c in chain:
        s = _sign(c[-1]) if c else 0
        if not positive and (len(c) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def _gcd_poly(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd of two integer polynomials (positive leading coeff)."""
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r, _ = _pseudo_rem(a, b)
        a, b = b, _primitive(r)
    if a and a[-1] < 0:
        a = [-v for v in a]
    return a


def _exact_div(a: list[int], b: list[int]) -> list[int]:
    """Exact quotient a / b over Q, returned primitive over Z."""
    fa = [Fraction(v) for v in a]
    q: list[Fraction] = [Fraction(0)] * (len(a) - len(b) + 1)
    while len(fa) >= len(b) and any(fa):
        while fa and fa[-1] == 0:
            fa.pop()
        if len(fa) < len(b):
            break
        coef = fa[-1] / b[-1]
        shift = len(fa) - len(b)
        q[shift] = coef
        for i, bv in enumerate(b):
            fa[shift + i] -= coef * bv
    lcd = 1
    for v in q:
        lcd = lcd * v.denominator // math.gcd(lcd, v.denominator)
    return _primitive([int(v * lcd) for v in q])


def _squarefree(c: list[int]) -> list[int]:
    c = _primitive(c)
    if len(c) <= 2:
        return c
    g = _gcd_poly(c, _deriv(c))
    if len(g) <= 1:
        return c
    return _exact_div(c, g)


def _div_out_root(c: list[int], r: Fraction) -> list[int]:
    """Divide by (x - r) for a known rational root r, primitive result."""
    num, den = r.numerator, r.denominator
    # synthetic division by (den*x - num), then the content wash
    out: list[Fraction] = [Fraction(0)] * (len(c) - 1)
    acc = Fraction(0)
    for i in range(len(c) - 1, 0, -1):
        acc = acc + c[i]
        out[i - 1] = acc
        acc = acc * r
    lcd = 1
    for v in out:
        lcd = lcd * v.denominator // math.gcd(lcd, v.denominator)
    return _primitive([int(v * lcd) for v in out])


def _cauchy_bound(c: list[int]) -> int:
    """Integer B with every real root strictly inside (-B, B)."""
    lead = abs(c[-1])
    m = max((abs(v) for v in c[:-1]), default=0)
    return 1 + m // lead + 1


# ---------------------------------------------------------------------------
# Public types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IsolatedRoot:
    """A real algebraic number: a square-free defining polynomial plus a
    rational isolating interval containing exactly one of its roots.

    A rational root is stored exactly as a degenerate interval lo == hi;
    otherwise neither endpoint is a root.
    """

    defining: RatPolynomial
    lo: Fraction
    hi: Fraction
    _ints: IntCoeffs = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if not self._ints:
            object.__setattr__(self, "_ints", tuple(_to_int(self.defining)))

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def refine(self, width: Fraction) -> "IsolatedRoot":
        """Bisect until the interval is at most `width` wide (or exact)."""
        if self.is_exact:
            return self
        c = list(self._ints)
        lo, hi = self.lo, self.hi
        s_lo = _sign(_eval_scaled_frac(c, lo.numerator, lo.denominator))
        while hi - lo > width:
            mid = (lo + hi) / 2
            s_mid = _sign(_eval_scaled_frac(c, mid.numerator, mid.denominator))
            if s_mid == 0:
                return IsolatedRoot(self.defining, mid, mid, self._ints)
            if s_mid == s_lo:
                lo = mid
            else:
                hi = mid
        return IsolatedRoot(self.defining, lo, hi, self._ints)

    def refine_step(self) -> "IsolatedRoot":
        """One bisection step."""
        if self.is_exact:
            return self
        return self.refine(self.width * Fraction(3, 4))

    def __str__(self) -> str:
        if self.is_exact:
            return f"={self.lo}"
        return f"({self.lo},{self.hi})"


@dataclass(frozen=True)
class MeasureBracket:
    """Two-sided rational bracket for a Lebesgue measure."""

    lower: Fraction
    upper: Fraction
    tolerance: Fraction

    def __contains__(self, value) -> bool:
        return self.lower <= value <= self.upper


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def sturm_count(p: RatPolynomial, lo, hi) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi]."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    c = _squarefree(_to_int(p))
    if len(c) <= 1:
        return 0
    extra = 0
    if _eval_scaled_frac(c, hi.numerator, hi.denominator) == 0:
        c = _div_out_root(c, hi)
        extra = 1
    if c and _eval_scaled_frac(c, lo.numerator, lo.denominator) == 0:
        c = _div_out_root(c, lo)
    if len(c) <= 1:
        return extra
    chain = _chain(c)
    return (
        _var_at(chain, lo.numerator, lo.denominator)
        - _var_at(chain, hi.numerator, hi.denominator)
        + extra
    )


def count_real_roots(p: RatPolynomial) -> int:
    """Number of distinct real roots of p over the whole real line."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    c = _squarefree(_to_int(p))
    if len(c) <= 1:
        return 0
    chain = _chain(c)
    return _var_at_inf(chain, positive=False) - _var_at_inf(chain, positive=True)


def isolate_roots(p: RatPolynomial) -> list[IsolatedRoot]:
    """Disjoint isolating intervals, one per distinct real root, ascending.

    Intervals are refined to width at most 1; rational roots found along
    the way are returned as exact (degenerate) intervals.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    c = _squarefree(_to_int(p))
    if len(c) <= 1:
        return []
    defining = make_poly(c)
    ints = tuple(c)
    if len(c) == 2:
        return [IsolatedRoot(defining, Fraction(-c[0], c[1]), Fraction(-c[0], c[1]), ints)]
    chain = _chain(c)
    bound = _cauchy_bound(c)

    def var(x: Fraction) -> int:
        return _var_at(chain, x.numerator, x.denominator)

    found: list[IsolatedRoot] = []
    stack = [(Fraction(-bound), Fraction(bound), var(Fraction(-bound)), var(Fraction(bound)))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        n = vlo - vhi
        if n == 0:
            continue
        if n == 1:
            found.append(_refine_new(defining, ints, lo, hi, Fraction(1)))
            continue
        mid = (lo + hi) / 2
        if _eval_scaled_frac(c, mid.numerator, mid.denominator) == 0:
            delta = (hi - lo) / 4
            while True:
                a, b = mid - delta, mid + delta
                if (
                    _eval_scaled_frac(c, a.numerator, a.denominator) != 0
                    and _eval_scaled_frac(c, b.numerator, b.denominator) != 0
                    and var(a) - var(b) == 1
                ):
                    break
                delta /= 2
            found.append(IsolatedRoot(defining, mid, mid, ints))
            stack.append((lo, a, vlo, var(a)))
            stack.append((b, hi, var(b), vhi))
        else:
            vmid = var(mid)
            stack.append((lo, mid, vlo, vmid))
            stack.append((mid, hi, vmid, vhi))
    found.sort(key=lambda r: (r.lo, r.hi))
    return found


def _refine_new(defining, ints, lo: Fraction, hi: Fraction, width: Fraction) -> IsolatedRoot:
    root = IsolatedRoot(defining, lo, hi, ints).refine(width)
    if not root.is_exact:
        # snap integer roots to exact form; non-integer rational roots of
        # degree >= 2 keep their interval (nothing downstream needs more)
        m = math.floor(root.lo) + 1
        while m < root.hi:
            if _eval_at_int(list(ints), m) == 0:
                return IsolatedRoot(defining, Fraction(m), Fraction(m), ints)
            m += 1
    return root


def integer_solutions(p: RatPolynomial, v) -> list[int]:
    """All integers m with p(m) = v, ascending.

    Found by isolating the real roots of p - v to width below 1 and
    testing the nearby integers by exact evaluation; no divisor
    enumeration of the constant term is involved, so huge constant terms
    are harmless.
    """
    if not p.degree >= 1:
        raise ValueError("p must be nonconstant")
    q = p - Fraction(v)
    out = []
    for root in isolate_roots(q):
        if root.is_exact:
            if root.lo.denominator == 1:
                out.append(int(root.lo))
            continue
        root = root.refine(Fraction(1, 2))
        m = math.floor(root.lo) + 1
        while m < root.hi:
            if evaluate(p, m) == Fraction(v):
                out.append(m)
            m += 1
    return sorted(set(out))


def sign_at(q: RatPolynomial, r: IsolatedRoot) -> int:
    """Exact sign of q at the algebraic point r (0 iff q vanishes there)."""
    if q.is_zero:
        return 0
    if r.is_exact:
        val = evaluate(q, r.lo)
        return (val > 0) - (val < 0)
    cq = _to_int(q)
    if len(cq) == 1:
        return _sign(cq[0])
    g = _gcd_poly(cq, list(r._ints))
    if len(g) > 1 and sturm_count(make_poly(g), r.lo, r.hi) >= 1:
        return 0
    chain = _chain(list(cq))
    cur = r
    while True:
        s_lo = _sign(_eval_scaled_frac(cq, cur.lo.numerator, cur.lo.denominator))
        if s_lo != 0:
            inside = _var_at(chain, cur.lo.numerator, cur.lo.denominator) - _var_at(
                chain, cur.hi.numerator, cur.hi.denominator
            )
            if inside == 0 and _eval_scaled_frac(cq, cur.hi.numerator, cur.hi.denominator) != 0:
                return s_lo
        cur = cur.refine(cur.width / 2)
        if cur.is_exact:
            val = evaluate(q, cur.lo)
            return (val > 0) - (val < 0)


def _separate(roots: list[IsolatedRoot]) -> list[IsolatedRoot]:
    """Refine a family of roots of distinct reals until pairwise disjoint."""
    roots = sorted(roots, key=lambda r: (r.lo, r.hi))
    changed = True
    while changed:
        changed = False
        for i in range(len(roots) - 1):
            a, b = roots[i], roots[i + 1]
            if a.hi >= b.lo and not (a.is_exact and b.is_exact):
                roots[i] = a.refine(a.width / 4) if not a.is_exact else a
                roots[i + 1] = b.refine(b.width / 4) if not b.is_exact else b
                changed = True
        roots.sort(key=lambda r: (r.lo, r.hi))
    return roots


def sublevel_measure(p: RatPolynomial, K, tol) -> MeasureBracket:
    """Bracket the Lebesgue measure of {x real : |p(x)| <= K}.

    The set is a finite union of closed intervals whose endpoints are
    roots of p - K or p + K; those roots are isolated exactly and refined
    until the bracket is at most `tol` wide.
    """
    K, tol = Fraction(K), Fraction(tol)
    if not p.degree >= 1:
        raise ValueError("p must be nonconstant")
    if K <= 0 or tol <= 0:
        raise ValueError("K and tol must be positive")
    boundary = isolate_roots(p - K) + isolate_roots(p + K)
    if not boundary:
        return MeasureBracket(Fraction(0), Fraction(0), tol)
    boundary = _separate(boundary)

    def inside_between(i: int) -> bool:
        a, b = boundary[i], boundary[i + 1]
        sample = (a.hi + b.lo) / 2
        return abs(evaluate(p, sample)) <= K

    contributing = [i for i in range(len(boundary) - 1) if inside_between(i)]
    if not contributing:
        return MeasureBracket(Fraction(0), Fraction(0), tol)
    involved = sorted({i for i in contributing} | {i + 1 for i in contributing})
    target = tol / (2 * len(involved))
    for i in involved:
        boundary[i] = boundary[i].refine(target)
    lower = Fraction(0)
    upper = Fraction(0)
    for i in contributing:
        a, b = boundary[i], boundary[i + 1]
        lower += max(Fraction(0), b.lo - a.hi)
        upper += b.hi - a.lo
    return MeasureBracket(lower, upper, tol)
