import random
from fractions import Fraction as F

import pytest

from primepoly.badpoints import (
    bad_points,
    block_report,
    complex_counterexample,
)
from primepoly.poly import GaussianRational, QuadExtElement, evaluate, make_poly

from helpers import random_int_poly

H2 = make_poly([1, -3, 1])


def test_bad_points_quartic_pair():
    g, h = H2, make_poly([29, -11, 1])
    pts = bad_points(g, h)
    assert [(p.root.lo, p.root.hi) for p in pts] == [(0, 0), (3, 3), (4, 4), (7, 7)]
    assert [p.tags for p in pts] == [("g+",), ("g+",), ("h+",), ("h+",)]
    # the four excluded fiber points have f < 1 there
    f = g * h
    for m in (1, 2, 5, 6):
        assert evaluate(f, m) < 1


def test_bad_points_boundary_strictness():
    x = make_poly([0, 1])
    assert bad_points(x, x) == []  # f(+-1) = 1 exactly, not > 1


def test_bad_points_with_irrational_candidates():
    # g = x^2 - 2, h = x - 3: candidates are +-sqrt(3), +-1, 2, 4;
    # f exceeds 1 at -1, 1 (f = 4, 2) and at 4 (f = 14)
    g, h = make_poly([-2, 0, 1]), make_poly([-3, 1])
    pts = bad_points(g, h)
    assert [(p.root.lo, p.root.hi) for p in pts] == [(-1, -1), (1, 1), (4, 4)]
    assert [p.tags for p in pts] == [("g-",), ("g-",), ("h+",)]


def test_bad_points_merges_shared_real():
    # g and h touch +1 at the same real sqrt(2): one point, two tags
    g = make_poly([-1, 0, 1])          # x^2 - 1: g = 1 at +-sqrt(2)... no:
    g = make_poly([-1, 0, 1])          # g - 1 = x^2 - 2
    h = make_poly([-3, 0, 2])          # h - 1 = 2x^2 - 4 = 2(x^2 - 2)
    pts = bad_points(g, h)
    shared = [p for p in pts if len(p.tags) == 2]
    assert len(shared) == 2
    for p in shared:
        assert p.tags == ("g+", "h+")


def test_block_report_quartic_pair():
    rep = block_report(H2, make_poly([29, -11, 1]))
    assert rep.k == 4
    assert rep.degree == 4
    assert rep.type_sequence() == "[g+ g+ h+ h+]"
    assert rep.block_count == 2
    assert rep.equal_type_pairs == 2
    assert rep.central_blocks == 0
    assert rep.derivative_roots_g == 1
    assert rep.derivative_roots_h == 1
    assert rep.derivative_roots_g + rep.derivative_roots_h >= rep.k - 2


def test_block_structure_no_adjacent_equal_blocks():
    rng = random.Random(11)
    for _ in range(80):
        g = random_int_poly(rng, rng.randint(1, 4), 5)
        h = random_int_poly(rng, rng.randint(1, 4), 5)
        rep = block_report(g, h)
        assert rep.k <= rep.degree
        assert rep.derivative_roots_g + rep.derivative_roots_h >= rep.k - 2
        for b1, b2 in zip(rep.blocks, rep.blocks[1:]):
            assert b1.type != b2.type
            assert b2.start == b1.end + 1
        assert rep.equal_type_pairs == rep.k - rep.block_count
        assert rep.central_blocks == max(0, rep.block_count - 2) or rep.block_count <= 2
        # points are strictly ordered and pairwise disjoint
        for p1, p2 in zip(rep.points, rep.points[1:]):
            assert p1.root.hi <= p2.root.lo or (
                p1.root.hi < p2.root.lo if not p1.root.is_exact else True
            )


def test_block_report_validation():
    with pytest.raises(ValueError):
        block_report(make_poly([2]), make_poly([0, 1]))


def test_complex_counterexample_exact():
    cx = complex_counterexample()
    assert cx.bad_count == 6
    assert cx.degree == 5
    assert cx.factor_identity_ok
    assert cx.h_at_2 == 1
    assert cx.h_at_2_plus_3i == GaussianRational(-1, 0)
    assert cx.h_at_2_minus_3i == GaussianRational(-1, 0)
    assert cx.g_at_2_plus_3i == GaussianRational(F(-49, 3), 0)
    assert cx.f_at_2_plus_3i == GaussianRational(F(49, 3), 0)
    assert cx.f_at_0 == F(17, 9)
    assert cx.f_at_2 == F(5, 3)
    assert cx.f_at_sqrt3 == QuadExtElement(F(23, 9), F(-8, 9), 3)
    assert cx.f_at_neg_sqrt3 == QuadExtElement(F(23, 9), F(8, 9), 3)
    assert (cx.f_at_sqrt3 - 1).sign() == 1
    assert (cx.f_at_neg_sqrt3 - 1).sign() == 1
    assert cx.bad_count > cx.degree


def test_complex_counterexample_real_part_still_capped():
    # restricted to the reals, the same pair obeys the cap
    cx = complex_counterexample()
    rep = block_report(cx.g, cx.h)
    assert rep.k <= 5
