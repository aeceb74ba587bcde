"""Shared generators and oracles for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from primepoly.poly import RatPolynomial, make_poly


def random_int_poly(rng: random.Random, degree: int, bound: int) -> RatPolynomial:
    """Random integer polynomial of exactly the given degree."""
    lead = rng.choice([c for c in range(-bound, bound + 1) if c != 0])
    coeffs = [rng.randint(-bound, bound) for _ in range(degree)] + [lead]
    return make_poly(coeffs)


def random_rat_poly(rng: random.Random, degree: int, bound: int) -> RatPolynomial:
    """Random rational polynomial of exactly the given degree."""
    def rat() -> Fraction:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    lead = rat()
    while lead == 0:
        lead = rat()
    return make_poly([rat() for _ in range(degree)] + [lead])


def brute_integer_solutions(p: RatPolynomial, v, limit: int) -> list[int]:
    """Oracle: scan |m| <= limit for p(m) = v."""
    target = Fraction(v)
    return [m for m in range(-limit, limit + 1) if p(m) == target]
