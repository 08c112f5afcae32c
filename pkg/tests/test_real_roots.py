from fractions import Fraction

import pytest
import sympy

from localh.errors import EndpointIsRoot, InvalidInterval, NotSquarefree, ZeroPolynomial
from localh.polynomials.exact_poly import ExactPoly, squarefree_part
from localh.polynomials.real_roots import (
    NEG_INF,
    POS_INF,
    ExtendedBound,
    cauchy_bound,
    certify_real_rooted,
    count_roots_in,
    isolate_real_roots,
    multiplicity_tower,
    sign_variations,
    sturm_chain,
)

X = sympy.Symbol("x")


def test_extended_bound_order():
    assert NEG_INF < ExtendedBound.finite(-10**9) < ExtendedBound.finite(0) < POS_INF
    assert str(NEG_INF) == "-oo"
    assert str(ExtendedBound.finite(Fraction(1, 2))) == "1/2"


def test_sign_variations_skip_zeros():
    assert sign_variations([1, 0, -1, -1, 0, 1]) == 2
    assert sign_variations([0, 0]) == 0


def test_sturm_chain_shape():
    chain = sturm_chain([-2, 0, 1])
    assert len(chain) == 3
    assert chain.polys[-1].is_constant()
    assert chain.total_real_roots() == 2


def test_sturm_chain_rejects_repeated_roots():
    with pytest.raises(NotSquarefree):
        sturm_chain(ExactPoly([-1, 1]) ** 2)
    with pytest.raises(ZeroPolynomial):
        sturm_chain([])


def test_count_roots_in():
    assert count_roots_in([-2, 0, 1], 0, 2) == 1
    assert count_roots_in([-2, 0, 1], NEG_INF, POS_INF) == 2
    assert count_roots_in([1, 0, 1], NEG_INF, POS_INF) == 0
    # repeated roots are counted once
    assert count_roots_in(ExactPoly([1, 1]) ** 4, -2, 0) == 1


def test_count_roots_in_errors():
    with pytest.raises(EndpointIsRoot):
        count_roots_in([-1, 0, 1], 1, 2)
    with pytest.raises(InvalidInterval):
        count_roots_in([-1, 0, 1], 2, 2)
    with pytest.raises(InvalidInterval):
        count_roots_in([-1, 0, 1], POS_INF, 0)


def test_cauchy_bound():
    assert cauchy_bound([-2, -1, 1]) == 3
    assert cauchy_bound([5]) == 1


def test_isolate_simple_roots():
    intervals = isolate_real_roots(ExactPoly([0, -1, 0, 1]))
    assert len(intervals) == 3
    assert intervals[1].is_point() and intervals[1].lo == 0
    assert intervals[0].contains(-1) and intervals[2].contains(1)
    for interval in (intervals[0], intervals[2]):
        assert not interval.contains(0)


def test_isolate_with_width():
    width = Fraction(1, 1000)
    intervals = isolate_real_roots([-2, 0, 1], width)
    assert len(intervals) == 2
    for interval in intervals:
        assert interval.width <= width
    positive = intervals[1]
    assert positive.lo**2 < 2 < positive.hi**2


def test_isolate_rejects_bad_width():
    with pytest.raises(ValueError):
        isolate_real_roots([-2, 0, 1], 0)


def test_multiplicity_tower():
    p = ExactPoly([1, 1]) ** 3 * ExactPoly([-2, 1])
    tower = multiplicity_tower(p)
    assert len(tower) == 4
    assert tower[-1].is_constant()
    assert tower[1] == ExactPoly([1, 1]) ** 2


def test_certificate_with_multiplicities():
    p = ExactPoly([1, 1]) ** 2 * ExactPoly([-2, 1])
    cert = certify_real_rooted(p)
    assert cert.degree == 3
    assert cert.distinct_real_roots == 2
    assert cert.total_with_multiplicity == 3
    assert cert.is_real_rooted
    assert [i.multiplicity for i in cert.isolating_intervals] == [2, 1]
    assert cert.isolating_intervals[0].contains(-1)


def test_certificate_of_non_real_rooted():
    cert = certify_real_rooted([1, 0, 1])
    assert not cert.is_real_rooted
    assert cert.distinct_real_roots == 0
    assert cert.isolating_intervals == ()


def test_certificate_degenerate_inputs():
    zero = certify_real_rooted([])
    assert zero.is_real_rooted and zero.is_degenerate and zero.degree is None
    constant = certify_real_rooted([7])
    assert constant.is_real_rooted and constant.degree == 0
    assert constant.distinct_real_roots == 0


def test_certificate_without_intervals():
    cert = certify_real_rooted(ExactPoly([0, 1, 4, 1]), with_intervals=False)
    assert cert.is_real_rooted
    assert cert.distinct_real_roots == 3
    assert cert.isolating_intervals == ()


def test_products_of_linear_factors_are_real_rooted(rng, linear_product):
    for _ in range(100):
        p = linear_product(rng, 8)
        cert = certify_real_rooted(p)
        assert cert.is_real_rooted
        assert cert.total_with_multiplicity == p.degree
        assert sum(i.multiplicity for i in cert.isolating_intervals) == p.degree


def test_root_counts_agree_with_sympy(rng):
    for _ in range(60):
        degree = int(rng.integers(1, 7))
        coeffs = [int(c) for c in rng.integers(-6, 7, size=degree + 1)]
        if coeffs[-1] == 0:
            coeffs[-1] = 1
        p = ExactPoly(coeffs)
        roots = sympy.real_roots(sympy.Poly(list(reversed(coeffs)), X))
        cert = certify_real_rooted(p)
        assert cert.total_with_multiplicity == len(roots)
        assert cert.distinct_real_roots == len(set(roots))
        assert len(cert.isolating_intervals) == len(set(roots))


def _split_point(rng):
    # roots of the corpus have denominators below 11, so m/11 with 11 not dividing m is never one
    numerator = int(rng.integers(-200, 201))
    if numerator % 11 == 0:
        numerator += 1
    return Fraction(numerator, 11)


def test_counts_add_up_over_subintervals(rng, linear_product):
    for _ in range(200):
        p = linear_product(rng, 8) * ExactPoly([1, 0, 1])
        a, b = sorted((_split_point(rng), _split_point(rng)))
        if a == b:
            continue
        middle = (a + b) / 2
        if p.evaluate(middle) == 0:
            continue
        assert count_roots_in(p, NEG_INF, POS_INF) == (
            count_roots_in(p, NEG_INF, a) + count_roots_in(p, a, POS_INF)
        )
        assert count_roots_in(p, a, b) == count_roots_in(p, a, middle) + count_roots_in(p, middle, b)


def test_isolating_endpoints_have_opposite_signs(rng, linear_product):
    for _ in range(100):
        p = linear_product(rng, 8) * ExactPoly([1, 1, 1])
        base = squarefree_part(p)
        intervals = isolate_real_roots(p)
        assert len(intervals) == certify_real_rooted(p, with_intervals=False).distinct_real_roots
        for interval in intervals:
            if interval.is_point():
                assert base.evaluate(interval.lo) == 0
            else:
                assert base.evaluate(interval.lo) * base.evaluate(interval.hi) < 0
