"""Generators for prime-rich reducible polynomials, with certificates.

Each builder returns a ConstructionCertificate whose census is recomputed
from scratch, so the claimed prime-value count is re-verified rather than
trusted.  The n+1 family multiplies x by 1 + t*(x-p_1)...(x-p_{n-1}) over
primes chosen in sign-balanced pairs, which forces
(1-p_1)...(1-p_{n-1}) = (-1-p_1)...(-1-p_{n-1}) so that a single
multiplier t makes f(1) and -f(-1) simultaneously prime.  The positive
variant uses positive primes only and asks the value at 1 to be a
positive prime.  The conditional n+2 search over one quadratic factor
succeeds exactly when four specific progressions are simultaneously
prime, so a miss within budget is reported as a frontier, not an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .census import Census, FactoredPolynomial, factored, prime_census
from .errors import TheoremViolation
from .poly import RatPolynomial, X, evaluate, make_poly
from .primes import find_multiplier, first_primes, is_prime, primes_stream

H2 = make_poly([1, -3, 1])  # (x-1)(x-2) - 1, the quadratic with four unit values

FIXED_KINDS = ("deg2", "deg3", "deg4_nplus4", "deg5_nplus3")


@dataclass(frozen=True)
class ConstructionCertificate:
    """A generated polynomial plus the evidence behind its claimed count."""

    kind: str
    f: FactoredPolynomial
    anchors: tuple[int, ...]                 # integers pinned to prime values
    multiplier_t: Optional[int]
    induced: tuple[tuple[int, str], ...]     # values forced prime by t, with status
    claim: str                               # "P" or "Pplus"
    claimed: int
    census: Census


@dataclass(frozen=True)
class SearchFrontier:
    """Negative (budget-bounded) outcome of the conditional n+2 search."""

    anchors_tried: tuple[int, ...]
    t_frontier: int


def _certify(kind, f, anchors, hit_t, induced, claim, claimed) -> ConstructionCertificate:
    census = prime_census(f)
    got = census.Pplus if claim == "Pplus" else census.P
    if got < claimed:
        raise TheoremViolation(
            f"{kind}: census {claim}={got} fell short of the claimed {claimed}"
        )
    return ConstructionCertificate(
        kind=kind, f=f, anchors=anchors, multiplier_t=hit_t,
        induced=induced, claim=claim, claimed=claimed, census=census,
    )


def fixed_example(kind: str) -> ConstructionCertificate:
    """The four hard-coded extremal examples of degrees 2, 3, 4 and 5."""
    if kind == "deg2":
        factors = (X, make_poly([-4, 1]))
        claimed = 4
    elif kind == "deg3":
        factors = (H2, make_poly([-5, 1]))
        claimed = 5
    elif kind == "deg4_nplus4":
        factors = (H2, make_poly([29, -11, 1]))
        claimed = 8
    elif kind == "deg5_nplus3":
        # second factor: 1 + (x-4)(x-5)(x-7)
        factors = (H2, make_poly([-139, 83, -16, 1]))
        claimed = 8
    else:
        raise ValueError(f"unknown fixed example {kind!r}; expected one of {FIXED_KINDS}")
    return _certify(kind, factored(factors), (), None, (), "P", claimed)


@dataclass(frozen=True)
class PairingCheck:
    left: int
    right: int
    equal: bool


def check_pairing(primes) -> PairingCheck:
    """Compare prod(1 - p) with prod(-1 - p) over the given integers."""
    ps = tuple(primes)
    if len(set(ps)) != len(ps):
        raise ValueError("anchor primes must be distinct")
    if any(p in (1, -1) for p in ps):
        raise ValueError("anchor primes must differ from +1 and -1")
    left = right = 1
    for p in ps:
        left *= 1 - p
        right *= -1 - p
    return PairingCheck(left=left, right=right, equal=left == right)


def pairing_primes(n: int) -> list[int]:
    """The n-1 anchor primes of the n+1 construction, by the parity rule.

    Odd n: pairs 3, -3, 5, -5, ...  Even n: pairs from 7 upward plus the
    fixed tail 2, -3, -5 (each pair and the tail contribute equally to
    the two products compared by `check_pairing`).
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if n % 2 == 1:
        return first_primes(n - 1, signed_pairs=True)
    out: list[int] = []
    for p in primes_stream(7):
        if len(out) == n - 4:
            break
        out.extend((p, -p))
    return out + [2, -3, -5]


def _anchor_product_poly(t: int, anchors) -> RatPolynomial:
    g = make_poly([1])
    for a in anchors:
        g = g * make_poly([-a, 1])
    return 1 + t * g


def build_n_plus_1(n: int, t_max: int = 10 ** 6) -> ConstructionCertificate:
    """A degree-n polynomial x * (1 + t*(x-p_1)...(x-p_{n-1})) with at
    least n+1 prime values, unconditionally constructible for n >= 3."""
    ps = pairing_primes(n)
    pairing = check_pairing(ps)
    if not pairing.equal:
        raise TheoremViolation("parity rule failed to balance the two products")
    hit = find_multiplier(pairing.left, positive_required=False, t_max=t_max)
    g = _anchor_product_poly(hit.t, ps)
    f = factored((X, g))
    induced = ((hit.value, hit.status), (-hit.value, hit.status))  # f(1), f(-1)
    return _certify("nplus1", f, tuple(ps), hit.t, induced, "P", n + 1)


def build_p_plus(n: int, t_max: int = 10 ** 6) -> ConstructionCertificate:
    """A degree-n polynomial with exactly n positive prime values."""
    if n < 2:
        raise ValueError("need n >= 2")
    ps = first_primes(n - 1)
    M = 1
    for p in ps:
        M *= 1 - p
    hit = find_multiplier(M, positive_required=True, t_max=t_max)
    g = _anchor_product_poly(hit.t, ps)
    f = factored((X, g))
    cert = _certify(
        "pplus", f, tuple(ps), hit.t, ((hit.value, hit.status),), "Pplus", n
    )
    if cert.census.Pplus > n:
        raise TheoremViolation(
            f"Pplus={cert.census.Pplus} exceeds the degree-{n} ceiling"
        )
    return cert


def quadratic_anchor_points(limit: int):
    """Integers b with |b^2 - 3b + 1| prime, ascending by |b| (positive
    first on ties), skipping the unit fiber {0, 1, 2, 3}."""
    for magnitude in range(1, limit + 1):
        for b in (magnitude, -magnitude):
            if b in (0, 1, 2, 3):
                continue
            if is_prime(abs(int(evaluate(H2, b)))).is_prime:
                yield b


def search_n_plus_2(
    n: int, b_scan_max: int = 200, t_max: int = 10 ** 6
) -> Union[ConstructionCertificate, SearchFrontier]:
    """Best-effort search for a degree-n polynomial with n+2 prime values.

    Uses f = g * (x^2 - 3x + 1) with g = 1 + t*(x-b_1)...(x-b_{n-2});
    success needs |g(0)|, |g(1)|, |g(2)|, |g(3)| simultaneously prime,
    a prime-quadruple event, so running out of budget is a legitimate
    outcome and is reported as a SearchFrontier.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    bs: list[int] = []
    for b in quadratic_anchor_points(b_scan_max):
        bs.append(b)
        if len(bs) == n - 2:
            break
    if len(bs) < n - 2:
        return SearchFrontier(anchors_tried=tuple(bs), t_frontier=0)

    coeffs = []
    for i in range(4):
        prod = 1
        for b in bs:
            prod *= i - b
        coeffs.append(prod)

    for magnitude in range(1, t_max + 1):
        for t in (magnitude, -magnitude):
            verdicts = []
            for a in coeffs:
                v = is_prime(1 + t * a)
                if not v.is_prime:
                    break
                verdicts.append(v)
            else:
                g = _anchor_product_poly(t, bs)
                f = factored((g, H2))
                induced = tuple((v.value, v.status) for v in verdicts)
                return _certify("nplus2", f, tuple(bs), t, induced, "P", n + 2)
    return SearchFrontier(anchors_tried=tuple(bs), t_frontier=t_max)
