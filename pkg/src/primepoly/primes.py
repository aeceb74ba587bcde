"""Primality testing with explicit certainty levels and multiplier searches.

Below 2**64 the strong-pseudoprime test with the first twelve prime
witnesses is deterministic, so verdicts there are `prime`/`composite`.
Above 2**64 a Baillie-PSW combination (strong base-2 test plus a strong
Lucas test with Selfridge parameters) is used and positives are honestly
reported as `probable_prime`; no counterexample to BPSW is known.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExhausted

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97,
)
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_DETERMINISTIC_LIMIT = 1 << 64

STATUS_PRIME = "prime"
STATUS_COMPOSITE = "composite"
STATUS_PROBABLE = "probable_prime"


@dataclass(frozen=True)
class PrimalityVerdict:
    """Outcome of a primality test; status refers to abs(value)."""

    value: int
    status: str
    method: str

    @property
    def is_prime(self) -> bool:
        return self.status in (STATUS_PRIME, STATUS_PROBABLE)


def _strong_probable_prime(n: int, base: int) -> bool:
    if base % n == 0:
        return True
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    # Selfridge parameter choice: first D in 5, -7, 9, -11, ... with (D|n) = -1.
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -(d + 2) if d > 0 else -(d - 2)
    p, q = 1, (1 - d) // 4

    delta = n + 1
    s = (delta & -delta).bit_length() - 1
    t = delta >> s

    u, v, qk = 1, p, q
    for bit in bin(t)[3:]:
        u = u * v % n
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) % n, (d * u + p * v) % n
            if u & 1:
                u += n
            if v & 1:
                v += n
            u, v = u // 2 % n, v // 2 % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


@lru_cache(maxsize=1 << 16)
def _classify(n: int) -> tuple[str, str]:
    """(status, method) for n >= 2."""
    if n < 2:
        return STATUS_COMPOSITE, "unit_or_zero"
    for p in _SMALL_PRIMES:
        if n == p:
            return STATUS_PRIME, "trial_division"
        if n % p == 0:
            return STATUS_COMPOSITE, "trial_division"
    if n < _SMALL_PRIMES[-1] ** 2:
        return STATUS_PRIME, "trial_division"
    if n < _DETERMINISTIC_LIMIT:
        for a in _MR_WITNESSES:
            if not _strong_probable_prime(n, a):
                return STATUS_COMPOSITE, "miller_rabin_det"
        return STATUS_PRIME, "miller_rabin_det"
    if not _strong_probable_prime(n, 2):
        return STATUS_COMPOSITE, "bpsw"
    if math.isqrt(n) ** 2 == n:
        return STATUS_COMPOSITE, "bpsw"
    if not _strong_lucas_probable_prime(n):
        return STATUS_COMPOSITE, "bpsw"
    return STATUS_PROBABLE, "bpsw"


def is_prime(n: int) -> PrimalityVerdict:
    """Test n for primality; negative n is judged by its absolute value."""
    status, method = _classify(abs(n))
    return PrimalityVerdict(value=n, status=status, method=method)


@dataclass(frozen=True)
class ProgressionHit:
    """First multiplier t (in the scan order 1, -1, 2, -2, ...) making
    1 + t*M prime."""

    M: int
    t: int
    value: int
    positive_required: bool
    status: str


def _hit_ok(value: int, positive_required: bool) -> PrimalityVerdict | None:
    v = is_prime(value)
    if not v.is_prime:
        return None
    if positive_required and value <= 0:
        return None
    return v


def find_multiplier(M: int, positive_required: bool, t_max: int) -> ProgressionHit:
    """Scan t = 1, -1, 2, -2, ... up to |t| = t_max for prime 1 + t*M.

    Without `positive_required` a hit is any t with |1 + t*M| prime;
    with it, 1 + t*M itself must be a positive prime.  Raises
    BudgetExhausted if no multiplier up to t_max works.
    """
    if M == 0:
        raise ValueError("M must be nonzero")
    if t_max < 1:
        raise ValueError("t_max must be at least 1")
    for a in range(1, t_max + 1):
        for t in (a, -a):
            value = 1 + t * M
            verdict = _hit_ok(value, positive_required)
            if verdict is not None:
                return ProgressionHit(
                    M=M, t=t, value=value,
                    positive_required=positive_required,
                    status=verdict.status,
                )
    raise BudgetExhausted(
        f"no multiplier with |t| <= {t_max} makes 1 + t*{M} prime",
        frontier=t_max,
    )


def primes_stream(start: int = 2):
    """Yield primes >= start in increasing order."""
    n = max(2, start)
    while True:
        if is_prime(n).is_prime:
            yield n
        n += 1


def first_primes(count: int, signed_pairs: bool = False) -> list[int]:
    """First `count` primes, ascending; with `signed_pairs`, alternate each
    odd prime p >= 3 with -p instead (3, -3, 5, -5, ...)."""
    if count < 1:
        raise ValueError("count must be positive")
    out: list[int] = []
    if signed_pairs:
        for p in primes_stream(3):
            out.append(p)
            if len(out) == count:
                break
            out.append(-p)
            if len(out) == count:
                break
    else:
        for p in primes_stream(2):
            out.append(p)
            if len(out) == count:
                break
    return out
