from fractions import Fraction

import pytest

from localh.combinatorics.basis_transforms import (
    LocationCounts,
    XiVector,
    location_counts,
    poly_to_xi,
    realrootedness_transfer_check,
    xi_generating_poly,
    xi_to_poly,
)
from localh.combinatorics.cluster_xi import CartanType, RootSystem, xi_vector
from localh.errors import (
    DegreeTooLarge,
    NotInBasisSpan,
    UnsupportedXiZero,
    ZeroInput,
    ZeroPolynomial,
)
from localh.polynomials.exact_poly import ExactPoly


def test_xi_vector_validates_length():
    with pytest.raises(ValueError):
        XiVector(4, (Fraction(0), Fraction(1)))
    assert XiVector.of(3, [0, 8]).xi == (Fraction(0), Fraction(8))


def test_xi_to_poly_examples():
    assert xi_to_poly(XiVector.of(4, [0, 1, 2])) == ExactPoly([0, 1, 4, 1])
    assert xi_to_poly(XiVector.of(2, [1, 0])) == ExactPoly([1, 2, 1])
    assert xi_to_poly(XiVector.of(3, [0, 8])) == ExactPoly([0, 8, 8])
    assert xi_generating_poly(XiVector.of(4, [0, 1, 2])) == ExactPoly([0, 1, 2])


def test_poly_to_xi_inverts_expansion():
    for values in ([0, 1, 2], [1, 0, 0], [0, 44, 484], [Fraction(1, 2), 3, -7]):
        v = XiVector.of(4, values)
        assert poly_to_xi(xi_to_poly(v), 4) == v


def test_poly_to_xi_errors():
    with pytest.raises(NotInBasisSpan):
        poly_to_xi([0, 1, 2], 2)
    with pytest.raises(DegreeTooLarge):
        poly_to_xi([0, 0, 0, 1], 2)


def test_location_counts_type_a4():
    counts = location_counts(ExactPoly([0, 1, 4, 1]))
    assert counts == LocationCounts(
        neg_inf_to_m1=1, m1_to_0=1, at_0=1, at_m1=0, positive=0
    )


def test_location_counts_divides_known_roots():
    p = ExactPoly([0, 0, 1]) * ExactPoly([1, 1]) ** 3
    assert location_counts(p) == LocationCounts(0, 0, 2, 3, 0)
    with pytest.raises(ZeroPolynomial):
        location_counts([])


def test_transfer_check_even_rank():
    report = realrootedness_transfer_check(XiVector.of(4, [0, 1, 2]))
    assert report.agreement
    assert report.xi_roots_negative_simple
    assert report.expected_per_side == 1
    assert report.expected_at_m1 == 0
    assert report.locations_match
    assert report.passed


def test_transfer_check_odd_rank_has_root_at_minus_one():
    report = realrootedness_transfer_check(xi_vector(RootSystem(CartanType.A, 5)))
    assert report.expected_at_m1 == 1
    assert report.locations is not None
    assert report.locations.at_m1 == 1
    assert report.passed


def test_transfer_check_not_real_rooted_both_sides():
    # xi = x + x^2 + x^3 has complex roots, and so does l
    report = realrootedness_transfer_check(XiVector.of(6, [0, 1, 1, 1]))
    assert not report.xi_certificate.is_real_rooted
    assert not report.local_certificate.is_real_rooted
    assert report.agreement
    assert report.locations is None
    assert report.locations_match is None


def test_transfer_check_errors():
    with pytest.raises(UnsupportedXiZero):
        realrootedness_transfer_check(XiVector.of(2, [1, 0]))
    with pytest.raises(ZeroInput):
        realrootedness_transfer_check(XiVector.of(2, [0, 0]))


def test_random_round_trip(rng):
    for _ in range(1000):
        n = int(rng.integers(0, 41))
        values = [
            Fraction(int(rng.integers(-50, 51)), int(rng.integers(1, 7))) for _ in range(n // 2 + 1)
        ]
        v = XiVector.of(n, values)
        assert poly_to_xi(xi_to_poly(v), n) == v
