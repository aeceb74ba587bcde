"""Real points where one factor sits at +-1 while the product exceeds 1.

For f = g*h, a "bad point" is a real x with g(x) = +-1 or h(x) = +-1 and
f(x) > 1.  Their number never exceeds deg f, because consecutive bad
points of equal type trap a critical point of that factor and central
blocks of one type trap a critical point of the other factor, giving
(roots of g') + (roots of h') >= k - 2.  Both facts are checked exactly
here, and the failure of the complex analogue is verified on the known
degree-5 pair with six bad points.

All reals are handled as isolated algebraic numbers; a point satisfying
conditions for several factor/sign combinations is counted once and
carries every tag.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import TheoremViolation
from .poly import (
    GaussianRational,
    QuadExtElement,
    RatPolynomial,
    derivative,
    evaluate,
    make_poly,
)
from .roots import IsolatedRoot, count_real_roots, isolate_roots, sign_at

TAG_ORDER = ("g+", "g-", "h+", "h-")


@dataclass(frozen=True)
class BadPoint:
    root: IsolatedRoot
    tags: tuple[str, ...]   # nonempty subset of TAG_ORDER, in that order

    @property
    def primary_type(self) -> str:
        return self.tags[0]


def _roots_equal(r1: IsolatedRoot, r2: IsolatedRoot) -> bool:
    """Whether two isolated roots (possibly of different polynomials)
    describe the same real number."""
    if r1.is_exact and r2.is_exact:
        return r1.lo == r2.lo
    if r2.is_exact:
        r1, r2 = r2, r1
    if r1.is_exact:
        # equal iff the exact value is the (unique) root inside r2's interval
        v = r1.lo
        return r2.lo < v < r2.hi and evaluate(r2.defining, v) == 0
    if sign_at(r2.defining, r1) != 0:
        return False
    # r1's value is a root of r2.defining; shrink r1 until it lands inside
    # r2's interval (same real) or escapes it (a different root)
    cur = r1
    while True:
        if r2.lo < cur.lo and cur.hi < r2.hi:
            return True
        if cur.hi <= r2.lo or cur.lo >= r2.hi:
            return False
        cur = cur.refine(cur.width / 2)
        if cur.is_exact:
            return r2.lo < cur.lo < r2.hi


def _separate_entries(entries: list[tuple[IsolatedRoot, set[str]]]):
    """Refine intervals of pairwise-distinct reals until totally ordered."""
    changed = True
    while changed:
        changed = False
        entries.sort(key=lambda e: (e[0].lo, e[0].hi))
        for i in range(len(entries) - 1):
            a, b = entries[i][0], entries[i + 1][0]
            if a.is_exact and b.is_exact:
                continue
            if a.hi >= b.lo:
                entries[i] = (a.refine(a.width / 2) if not a.is_exact else a, entries[i][1])
                entries[i + 1] = (b.refine(b.width / 2) if not b.is_exact else b, entries[i + 1][1])
                changed = True
    entries.sort(key=lambda e: (e[0].lo, e[0].hi))


def bad_points(g: RatPolynomial, h: RatPolynomial) -> list[BadPoint]:
    """Ascending bad points of the pair (g, h), deduplicated as reals."""
    if not (g.degree >= 1 and h.degree >= 1):
        raise ValueError("both factors must be nonconstant")
    tagged: list[tuple[str, IsolatedRoot]] = []
    for tag, poly in (
        ("g+", g - 1),
        ("g-", g + 1),
        ("h+", h - 1),
        ("h-", h + 1),
    ):
        for root in isolate_roots(poly):
            tagged.append((tag, root))

    entries: list[tuple[IsolatedRoot, set[str]]] = []
    for tag, root in tagged:
        for i, (existing, tags) in enumerate(entries):
            if _roots_equal(existing, root):
                tags.add(tag)
                if root.is_exact and not existing.is_exact:
                    entries[i] = (root, tags)
                break
        else:
            entries.append((root, {tag}))

    f_minus_1 = g * h - 1
    kept = [
        (root, tags)
        for root, tags in entries
        if sign_at(f_minus_1, root) == 1
    ]
    _separate_entries(kept)
    return [
        BadPoint(root=root, tags=tuple(t for t in TAG_ORDER if t in tags))
        for root, tags in kept
    ]


@dataclass(frozen=True)
class Block:
    type: str
    start: int              # index into the point sequence
    end: int                # inclusive
    central: bool


@dataclass(frozen=True)
class BlockReport:
    points: tuple[BadPoint, ...]
    types: tuple[str, ...]  # primary type per point
    blocks: tuple[Block, ...]
    k: int
    block_count: int
    equal_type_pairs: int   # k - block_count
    central_blocks: int
    derivative_roots_g: int
    derivative_roots_h: int
    degree: int

    def type_sequence(self) -> str:
        return "[" + " ".join(self.types) + "]"


def block_report(g: RatPolynomial, h: RatPolynomial) -> BlockReport:
    """Full bad-point analysis of the pair, with both theorems asserted:
    k <= deg(gh), and roots(g') + roots(h') >= k - 2."""
    pts = bad_points(g, h)
    k = len(pts)
    degree = int(g.degree + h.degree)
    if k > degree:
        raise TheoremViolation(f"{k} bad points exceed the degree {degree}")

    types = tuple(p.primary_type for p in pts)
    blocks: list[Block] = []
    i = 0
    while i < k:
        j = i
        while j + 1 < k and types[j + 1] == types[i]:
            j += 1
        blocks.append(Block(type=types[i], start=i, end=j, central=False))
        i = j + 1
    blocks = [
        Block(b.type, b.start, b.end, central=(b.start > 0 and b.end < k - 1))
        for b in blocks
    ]

    droots_g = count_real_roots(derivative(g)) if g.degree >= 2 else 0
    droots_h = count_real_roots(derivative(h)) if h.degree >= 2 else 0
    if droots_g + droots_h < k - 2:
        raise TheoremViolation(
            f"derivative root counts {droots_g}+{droots_h} below k-2 = {k - 2}"
        )
    return BlockReport(
        points=tuple(pts),
        types=types,
        blocks=tuple(blocks),
        k=k,
        block_count=len(blocks),
        equal_type_pairs=k - len(blocks),
        central_blocks=sum(1 for b in blocks if b.central),
        derivative_roots_g=droots_g,
        derivative_roots_h=droots_h,
        degree=degree,
    )


@dataclass(frozen=True)
class ComplexCounterexample:
    """Exact data for the degree-5 complex pair with six bad points."""

    g: RatPolynomial
    h: RatPolynomial
    degree: int
    bad_count: int
    points: tuple[str, ...]
    factor_identity_ok: bool
    h_at_2: Fraction
    h_at_2_plus_3i: GaussianRational
    h_at_2_minus_3i: GaussianRational
    g_at_2_plus_3i: GaussianRational
    f_at_0: Fraction
    f_at_2: Fraction
    f_at_sqrt3: QuadExtElement
    f_at_neg_sqrt3: QuadExtElement
    f_at_2_plus_3i: GaussianRational


def complex_counterexample() -> ComplexCounterexample:
    """Verify, in exact arithmetic, the complex pair g = x^3/3 - x + 1,
    h = (2/9)(x-2)^2 + 1 with six bad points against degree 5.

    Over the reals the bad-point count is capped by the degree; this
    fixed pair shows the cap fails for complex points: g = 1 at 0 and
    +-sqrt(3), h = 1 at 2, and h = -1 at 2 +- 3i, with f = g*h real and
    exceeding 1 at all six.
    """
    g = make_poly([1, -1, 0, Fraction(1, 3)])
    h = make_poly([Fraction(17, 9), Fraction(-8, 9), Fraction(2, 9)])

    # g - 1 = (x/3)(x^2 - 3): pins the three roots 0, +-sqrt(3) exactly
    identity_ok = (g - 1) == make_poly([0, Fraction(1, 3)]) * make_poly([-3, 0, 1])

    h2 = evaluate(h, 2)
    zp = GaussianRational(2, 3)
    zm = GaussianRational(2, -3)
    h_zp = evaluate(h, zp)
    h_zm = evaluate(h, zm)
    g_zp = evaluate(g, zp)

    f0 = evaluate(g, 0) * evaluate(h, 0)
    f2 = evaluate(g, 2) * h2
    sqrt3 = QuadExtElement(0, 1, 3)
    f_s3 = evaluate(g, sqrt3) * evaluate(h, sqrt3)
    f_ns3 = evaluate(g, -sqrt3) * evaluate(h, -sqrt3)
    f_zp = g_zp * h_zp

    checks = [
        identity_ok,
        h2 == 1,
        h_zp == GaussianRational(-1, 0),
        h_zm == GaussianRational(-1, 0),
        g_zp == GaussianRational(Fraction(-49, 3), 0),
        f0 == Fraction(17, 9) and f0 > 1,
        f2 == Fraction(5, 3) and f2 > 1,
        f_s3 == QuadExtElement(Fraction(23, 9), Fraction(-8, 9), 3),
        f_ns3 == QuadExtElement(Fraction(23, 9), Fraction(8, 9), 3),
        (f_s3 - 1).sign() == 1,
        (f_ns3 - 1).sign() == 1,
        f_zp == GaussianRational(Fraction(49, 3), 0) and f_zp.re > 1,
    ]
    if not all(checks):
        raise TheoremViolation(f"complex counterexample failed exact checks: {checks}")

    return ComplexCounterexample(
        g=g,
        h=h,
        degree=5,
        bad_count=6,
        points=("0", "sqrt3", "-sqrt3", "2", "2+3i", "2-3i"),
        factor_identity_ok=identity_ok,
        h_at_2=h2,
        h_at_2_plus_3i=h_zp,
        h_at_2_minus_3i=h_zm,
        g_at_2_plus_3i=g_zp,
        f_at_0=f0,
        f_at_2=f2,
        f_at_sqrt3=f_s3,
        f_at_neg_sqrt3=f_ns3,
        f_at_2_plus_3i=f_zp,
    )
