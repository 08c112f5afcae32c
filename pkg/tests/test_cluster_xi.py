from fractions import Fraction

import pytest

from localh.combinatorics.cluster_xi import (
    EXCEPTIONAL_TYPES,
    CartanType,
    RootSystem,
    all_exceptional,
    catalan,
    local_h,
    narayana_basis_form,
    narayana_poly,
    type_d_narayana_form,
    verify_d_identity,
    xi_poly,
    xi_vector,
)
from localh.combinatorics.basis_transforms import location_counts, realrootedness_transfer_check
from localh.errors import InvalidRank, NegativeOrder
from localh.polynomials.exact_poly import ExactPoly
from localh.polynomials.real_roots import certify_real_rooted

EXCEPTIONAL_TABLE = {
    "H3": (0, 8),
    "H4": (0, 42, 40),
    "F4": (0, 10, 9),
    "E6": (0, 7, 35, 13),
    "E7": (0, 16, 124, 112),
    "E8": (0, 44, 484, 784, 120),
}


def _ints(rs: RootSystem) -> tuple:
    return tuple(int(v) for v in xi_vector(rs).xi)


@pytest.mark.parametrize("name, expected", sorted(EXCEPTIONAL_TABLE.items()))
def test_exceptional_table(name, expected):
    assert _ints(RootSystem.parse(name)) == expected


@pytest.mark.parametrize("m", range(3, 13))
def test_dihedral(m):
    assert _ints(RootSystem.parse("I2", m)) == (0, m - 2)


def test_g2_is_dihedral_six():
    assert RootSystem.parse("G2") == RootSystem(CartanType.I2, 6)
    assert _ints(RootSystem.parse("g2")) == (0, 4)


@pytest.mark.parametrize(
    "family, rank, expected",
    [
        ("A", 4, (0, 1, 2)),
        ("A", 5, (0, 1, 5)),
        ("B", 3, (0, 3)),
        ("B", 4, (0, 4, 6)),
        ("D", 2, (0, 0)),
        ("D", 4, (0, 2, 2)),
    ],
)
def test_family_closed_forms(family, rank, expected):
    assert _ints(RootSystem.parse(family, rank)) == expected


def test_local_h_examples():
    assert local_h(RootSystem.parse("A", 4)) == ExactPoly([0, 1, 4, 1])
    assert local_h(RootSystem.parse("F4")) == ExactPoly([0, 10, 29, 10])
    assert local_h(RootSystem.parse("D", 2)).is_zero()
    assert xi_poly(RootSystem.parse("E6")) == ExactPoly([0, 7, 35, 13])


def test_local_h_is_palindromic():
    for rs in [RootSystem.parse(t, r) for t in "ABD" for r in range(2, 12)] + all_exceptional():
        assert local_h(rs).is_palindromic(rs.rank)


@pytest.mark.parametrize(
    "family, value",
    [("A", 0), ("B", 1), ("D", 1), ("I2", 2), ("A", None), ("E6", 7), ("X", 3)],
)
def test_invalid_rank(family, value):
    with pytest.raises(InvalidRank):
        RootSystem.parse(family, value)


def test_invalid_rank_message_names_bound():
    with pytest.raises(InvalidRank, match="rank >= 1"):
        RootSystem.parse("A", 0)


def test_exceptional_rank_is_normalized():
    assert RootSystem.parse("E6", 6) == RootSystem.parse("E6")
    assert RootSystem.parse("E6").rank == 6
    assert RootSystem.parse("E6").parameter is None


def test_labels_and_order():
    systems = [RootSystem.parse("E8"), RootSystem.parse("A", 10), RootSystem.parse("I2", 5),
               RootSystem.parse("A", 2)]
    ordered = sorted(systems, key=lambda rs: rs.sort_key())
    assert [rs.label for rs in ordered] == ["A2", "A10", "I2(5)", "E8"]
    assert len(all_exceptional()) == len(EXCEPTIONAL_TYPES)


def test_narayana_polynomials():
    assert narayana_poly(3) == ExactPoly([1, 6, 6, 1])
    assert narayana_poly(0) == ExactPoly([1])
    for n in range(0, 15):
        assert narayana_poly(n).evaluate(1) == catalan(n + 1)
        assert narayana_basis_form(n) == narayana_poly(n)
    with pytest.raises(NegativeOrder):
        narayana_poly(-1)
    assert [catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]


def test_type_d_identity():
    assert type_d_narayana_form(4) == ExactPoly([0, 2, 6, 2])
    for n in range(2, 30):
        assert verify_d_identity(n)
    with pytest.raises(InvalidRank):
        verify_d_identity(1)


@pytest.mark.parametrize("n", range(4, 41))
def test_type_a_root_locations(n):
    counts = location_counts(local_h(RootSystem.parse("A", n)))
    assert counts.neg_inf_to_m1 == n // 2 - 1
    assert counts.m1_to_0 == n // 2 - 1
    assert counts.at_0 == 1
    assert counts.at_m1 == n % 2
    assert counts.positive == 0


def test_small_ranks_real_rooted():
    for family in "ABD":
        for rank in range(2, 17):
            cert = certify_real_rooted(local_h(RootSystem.parse(family, rank)), with_intervals=False)
            assert cert.is_real_rooted


def test_exceptional_real_rooted():
    for rs in all_exceptional() + [RootSystem.parse("I2", m) for m in range(3, 13)]:
        assert certify_real_rooted(local_h(rs)).is_real_rooted


@pytest.mark.slow
def test_desk_scale_real_rootedness():
    for family in "ABD":
        for rank in range(2, 65):
            poly = local_h(RootSystem.parse(family, rank))
            cert = certify_real_rooted(poly, with_intervals=False)
            assert cert.is_real_rooted, f"{family}{rank}"
            assert all(c.denominator == 1 and c >= 0 for c in poly)


def test_integrality_of_family_entries():
    for family in "ABD":
        for rank in range(2, 40):
            assert all(v.denominator == 1 for v in xi_vector(RootSystem.parse(family, rank)).xi)
    assert xi_vector(RootSystem.parse("A", 6)).xi[0] == Fraction(0)


@pytest.mark.slow
def test_type_d_identity_to_rank_100():
    assert all(verify_d_identity(n) for n in range(30, 101))


def test_g2_alias_checks_rank():
    assert RootSystem.parse("G2", 2) == RootSystem(CartanType.I2, 6)
    with pytest.raises(InvalidRank):
        RootSystem.parse("G2", 3)


def test_low_rank_coincidences():
    assert local_h(RootSystem.parse("B", 2)) == local_h(RootSystem.parse("I2", 4))
    assert local_h(RootSystem.parse("D", 3)) == local_h(RootSystem.parse("A", 3))
    assert local_h(RootSystem.parse("D", 2)).is_zero()


def _transfer_systems(max_rank):
    systems = [RootSystem.parse(family, rank) for family in "ABD" for rank in range(2, max_rank + 1)]
    systems = [rs for rs in systems if not xi_vector(rs).is_zero()]
    return systems + all_exceptional() + [RootSystem.parse("I2", m) for m in range(3, 13)]


def test_transfer_check_over_cluster_types():
    for rs in _transfer_systems(16):
        report = realrootedness_transfer_check(xi_vector(rs))
        assert report.passed, rs.label
        assert report.agreement and report.xi_certificate.is_real_rooted, rs.label


@pytest.mark.slow
def test_transfer_check_over_cluster_types_to_rank_64():
    for rs in _transfer_systems(64):
        assert realrootedness_transfer_check(xi_vector(rs)).passed, rs.label


@pytest.mark.slow
def test_entries_integral_and_nonnegative_to_rank_200():
    for family in "ABD":
        for rank in range(2, 201):
            xi = xi_vector(RootSystem.parse(family, rank)).xi
            assert all(v.denominator == 1 and v >= 0 for v in xi), f"{family}{rank}"
