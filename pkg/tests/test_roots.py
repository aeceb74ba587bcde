import random
from fractions import Fraction as F

import pytest

from primepoly.poly import make_poly
from primepoly.roots import (
    IsolatedRoot,
    count_real_roots,
    integer_solutions,
    isolate_roots,
    sign_at,
    sturm_count,
    sublevel_measure,
)

from helpers import brute_integer_solutions, random_int_poly

H2 = make_poly([1, -3, 1])


def test_sturm_count_examples():
    assert sturm_count(make_poly([-2, 0, 1]), 0, 2) == 1
    assert sturm_count(H2, -10, 10) == 2
    assert sturm_count(make_poly([-1, 0, 1]) ** 2, -2, 2) == 2  # distinct roots of (x^2-1)^2


def test_sturm_count_endpoint_conventions():
    p = make_poly([0, -3, 1])  # roots 0 and 3
    assert sturm_count(p, -1, 3) == 2   # hi is a root: included
    assert sturm_count(p, 0, 3) == 1    # lo is a root: excluded
    assert sturm_count(p, 0, 2) == 0
    assert sturm_count(p, -1, 0) == 1


def test_sturm_count_validation():
    with pytest.raises(ValueError):
        sturm_count(make_poly([]), 0, 1)
    with pytest.raises(ValueError):
        sturm_count(H2, 2, 2)
    assert sturm_count(make_poly([7]), 0, 1) == 0


def test_isolate_roots_examples():
    roots = isolate_roots(make_poly([-2, 0, 1]))
    assert len(roots) == 2
    neg, pos = roots
    neg, pos = neg.refine(F(1, 4)), pos.refine(F(1, 4))
    assert F(-2) < neg.lo < neg.hi < F(-1)
    assert F(1) < pos.lo < pos.hi < F(2)

    assert isolate_roots(make_poly([1, 0, 1])) == []

    roots = isolate_roots(make_poly([0, -3, 1]))
    assert [(r.lo, r.hi) for r in roots] == [(0, 0), (3, 3)]


def test_isolate_roots_multiplicity_and_rationals():
    # (x-1)^2 (x+2): distinct roots -2 and 1
    p = make_poly([-1, 1]) ** 2 * make_poly([2, 1])
    roots = isolate_roots(p)
    assert [(r.lo, r.hi) for r in roots] == [(-2, -2), (1, 1)]
    # linear with non-integer rational root
    roots = isolate_roots(make_poly([-1, 3]))
    assert [(r.lo, r.hi) for r in roots] == [(F(1, 3), F(1, 3))]


def test_isolation_matches_sturm_on_random():
    rng = random.Random(77)
    for _ in range(120):
        p = random_int_poly(rng, rng.randint(1, 8), 9)
        roots = isolate_roots(p)
        assert len(roots) == count_real_roots(p)
        bound = 10 ** 4
        assert len([r for r in roots if -bound < r.lo]) == sturm_count(p, -bound, bound)
        for a, b in zip(roots, roots[1:]):
            assert a.hi <= b.lo or (a.hi < b.hi and a.lo < b.lo)


def test_refine_keeps_invariants():
    root = isolate_roots(make_poly([-2, 0, 1]))[1]
    fine = root.refine(F(1, 2 ** 20))
    assert fine.hi - fine.lo <= F(1, 2 ** 20)
    assert root.lo <= fine.lo and fine.hi <= root.hi
    # endpoints are dyadic by construction
    for end in (fine.lo, fine.hi):
        den = end.denominator
        assert den & (den - 1) == 0


def test_integer_solutions_examples():
    assert integer_solutions(H2, 1) == [0, 3]
    assert integer_solutions(H2, -1) == [1, 2]
    assert integer_solutions(make_poly([0, 0, 1]), 2) == []
    with pytest.raises(ValueError):
        integer_solutions(make_poly([5]), 5)


def test_integer_solutions_huge_constant_term():
    # (x - 10^40)(x + 10^40 + 1): divisor enumeration of the constant
    # term would be hopeless, isolation is not
    a, b = 10 ** 40, -(10 ** 40) - 1
    p = make_poly([-a, 1]) * make_poly([-b, 1])
    assert integer_solutions(p, 0) == [b, a]


def test_integer_solutions_against_brute_scan():
    rng = random.Random(88)
    for _ in range(60):
        p = random_int_poly(rng, rng.randint(1, 6), 9)
        v = rng.randint(-5, 5)
        got = integer_solutions(p, v)
        assert got == brute_integer_solutions(p, v, 1000)
        assert all(abs(m) <= 1000 for m in got)


def test_sign_at_examples():
    sqrt3 = isolate_roots(make_poly([-3, 0, 1]))[1]
    assert sign_at(make_poly([-3, 1]), sqrt3) == -1       # sqrt3 < 3
    assert sign_at(make_poly([-3, 0, 1]), sqrt3) == 0     # its own root
    neg_sqrt2 = isolate_roots(make_poly([-2, 0, 1]))[0]
    assert sign_at(make_poly([0, 1]), neg_sqrt2) == -1


def test_sign_at_shared_root_engineered():
    rng = random.Random(99)
    for _ in range(40):
        p = random_int_poly(rng, rng.randint(2, 5), 6)
        roots = isolate_roots(p)
        if not roots:
            continue
        r = rng.choice(roots)
        # multiply the defining polynomial into an unrelated one: shared root
        q = p * random_int_poly(rng, rng.randint(0, 3), 6)
        assert sign_at(q, r) == 0
        shifted = p + 1
        s = sign_at(shifted, r)
        assert s == 1  # p(root) = 0, so (p+1)(root) = 1


def test_sign_at_exact_root():
    r = IsolatedRoot(make_poly([-6, 1]), F(6), F(6))
    assert sign_at(make_poly([-5, 1]), r) == 1
    assert sign_at(make_poly([-7, 1]), r) == -1
    assert sign_at(make_poly([-6, 1]), r) == 0


def test_sublevel_measure_examples():
    b = sublevel_measure(make_poly([0, 0, 1]), 4, F(1, 100))
    assert b.lower == b.upper == 4  # exact endpoints +-2

    b = sublevel_measure(make_poly([-2, 0, 1]), 1, F(1, 100))
    # true measure 2*(sqrt(3) - 1)
    assert b.upper - b.lower <= F(1, 100)
    assert (b.lower / 2 + 1) ** 2 <= 3 <= (b.upper / 2 + 1) ** 2

    b = sublevel_measure(make_poly([2, 0, 1]), 1, F(1, 100))
    assert b.lower == b.upper == 0


def test_sublevel_measure_rational_boundaries_exact():
    # |x(x-2)| <= 1 on [1-sqrt2, 1+sqrt2] minus nothing; engineered rational case:
    # |2x| <= 4 is [-2, 2], all endpoints rational
    b = sublevel_measure(make_poly([0, 2]), 4, F(1, 1000))
    assert b.lower == b.upper == 4
    # |x^2 - 1| <= 1: the set is [-sqrt2, sqrt2]; 0 is an interior double
    # touch of the lower boundary and must not split the measure
    b = sublevel_measure(make_poly([-1, 0, 1]), 1, F(1, 10 ** 6))
    assert (b.lower / 2) ** 2 <= 2 <= (b.upper / 2) ** 2
    assert b.upper - b.lower <= F(1, 10 ** 6)


def test_sublevel_measure_validation():
    with pytest.raises(ValueError):
        sublevel_measure(make_poly([3]), 1, F(1, 10))
    with pytest.raises(ValueError):
        sublevel_measure(H2, 0, F(1, 10))
    with pytest.raises(ValueError):
        sublevel_measure(H2, 1, 0)


def test_count_real_roots():
    assert count_real_roots(make_poly([0, -1, 0, 1])) == 3
    assert count_real_roots(make_poly([1, 0, 1])) == 0
    assert count_real_roots(make_poly([9])) == 0
    assert count_real_roots(make_poly([-1, 1]) ** 4) == 1
