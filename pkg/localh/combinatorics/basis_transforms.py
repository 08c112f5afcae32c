"""
Symmetric basis expansions of palindromic polynomials.

A polynomial that is palindromic with center ``n/2`` has a unique
expansion

    sum_{i=0}^{floor(n/2)} xi_i * x**i * (1 + x)**(n - 2i)

and the vector ``(xi_0, ..., xi_{floor(n/2)})`` is what :class:`XiVector`
stores. This module converts in both directions and checks, with two
independent real-rootedness certificates, that ``l(x)`` is real-rooted
exactly when ``xi(x) = sum xi_i x**i`` is, together with where the roots
of ``l`` sit relative to ``-1`` and ``0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from localh.errors import (
    DegreeTooLarge,
    NotInBasisSpan,
    UnsupportedXiZero,
    ZeroInput,
    ZeroPolynomial,
)
from localh.polynomials.exact_poly import ExactPoly, RationalLike, gcd
from localh.polynomials.real_roots import (
    NEG_INF,
    POS_INF,
    RealRootCertificate,
    certify_real_rooted,
    count_roots_in,
)
from localh.utils.binomials import binomial
from localh.utils.decorators import coerce_poly


@dataclass(frozen=True)
class XiVector:
    """
    Coefficients ``xi_0 .. xi_{floor(n/2)}`` of the symmetric expansion.

    :param n: Ambient rank, i.e. the center of symmetry is ``n/2``.
    :type n: int
    :param xi: Exactly ``floor(n/2) + 1`` rational entries.
    :type xi: Tuple[Fraction, ...]
    """

    n: int
    xi: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"Rank must be non-negative, got {self.n}")
        values = tuple(Fraction(v) for v in self.xi)
        if len(values) != self.n // 2 + 1:
            raise ValueError(
                f"Rank {self.n} needs {self.n // 2 + 1} entries, got {len(values)}"
            )
        object.__setattr__(self, "xi", values)

    @classmethod
    def of(cls, n: int, values: Iterable[RationalLike]) -> XiVector:
        return cls(n, tuple(Fraction(v) for v in values))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.xi)

    def __str__(self) -> str:
        return f"XiVector(n={self.n}, xi=({', '.join(str(v) for v in self.xi)}))"


def xi_to_poly(v: XiVector) -> ExactPoly:
    """
    Expand ``sum xi_i x**i (1+x)**(n-2i)``.

    The coefficient of ``x**k`` is ``sum_i xi_i * C(n - 2i, k - i)``.
    """
    return ExactPoly(
        sum(
            (xi_i * binomial(v.n - 2 * i, k - i) for i, xi_i in enumerate(v.xi)),
            Fraction(0),
        )
        for k in range(v.n + 1)
    )


def xi_generating_poly(v: XiVector) -> ExactPoly:
    """``xi(x) = sum xi_i x**i``."""
    return ExactPoly(v.xi)


@coerce_poly
def poly_to_xi(p: ExactPoly, n: int) -> XiVector:
    """
    Recover the symmetric expansion of ``p`` with center ``n/2``.

    Solves the triangular system
    ``xi_i = p_i - sum_{j<i} xi_j C(n-2j, i-j)`` for ``i <= floor(n/2)``
    and then checks the remaining coefficients by re-expanding.

    :param p: Polynomial of degree at most ``n``.
    :type p: ExactPoly
    :param n: Ambient rank.
    :type n: int
    :return: The unique expansion.
    :rtype: XiVector
    :raises DegreeTooLarge: If ``deg p > n``.
    :raises NotInBasisSpan: If ``p`` is not palindromic with center ``n/2``.
    """
    if p.degree is not None and p.degree > n:
        raise DegreeTooLarge(f"Degree {p.degree} exceeds rank {n}")
    xi = []
    for i in range(n // 2 + 1):
        value = p.coefficient(i) - sum(
            (xi_j * binomial(n - 2 * j, i - j) for j, xi_j in enumerate(xi)),
            Fraction(0),
        )
        xi.append(value)
    result = XiVector(n, tuple(xi))
    if xi_to_poly(result) != p:
        raise NotInBasisSpan(f"{p} is not palindromic with center {n}/2")
    return result


@dataclass(frozen=True)
class LocationCounts:
    """
    Where the real roots of a polynomial sit relative to ``-1`` and ``0``.

    ``at_0`` and ``at_m1`` are multiplicities; the interval fields count
    distinct roots after both known roots have been divided out.
    """

    neg_inf_to_m1: int
    m1_to_0: int
    at_0: int
    at_m1: int
    positive: int


@coerce_poly
def location_counts(p: ExactPoly) -> LocationCounts:
    """
    :raises ZeroPolynomial: If ``p`` is zero.
    """
    if p.is_zero():
        raise ZeroPolynomial("Root locations are undefined for the zero polynomial")
    at_0 = p.root_multiplicity(0)
    reduced = p.exact_divide(ExactPoly.monomial(at_0))
    at_m1 = reduced.root_multiplicity(-1)
    reduced = reduced.exact_divide(ExactPoly([1, 1]) ** at_m1)
    if reduced.is_constant():
        return LocationCounts(0, 0, at_0, at_m1, 0)
    return LocationCounts(
        neg_inf_to_m1=count_roots_in(reduced, NEG_INF, -1),
        m1_to_0=count_roots_in(reduced, -1, 0),
        at_0=at_0,
        at_m1=at_m1,
        positive=count_roots_in(reduced, 0, POS_INF),
    )


@dataclass(frozen=True)
class TransferReport:
    """
    Outcome of :func:`realrootedness_transfer_check`.

    ``locations`` is only filled in when ``xi(x)/x`` has only negative
    simple roots, the case in which every root of ``xi`` yields a pair of
    roots of ``l`` separated by ``-1``. ``expected_per_side`` is
    ``deg xi - 1``, which is ``floor(n/2) - 1`` whenever the top entry of
    the vector is nonzero.
    """

    vector: XiVector
    xi_certificate: RealRootCertificate
    local_certificate: RealRootCertificate
    agreement: bool
    xi_roots_negative_simple: bool
    expected_per_side: int
    expected_at_m1: int
    locations: Optional[LocationCounts] = None

    @property
    def locations_match(self) -> Optional[bool]:
        if self.locations is None:
            return None
        return (
            self.locations.neg_inf_to_m1 == self.expected_per_side
            and self.locations.m1_to_0 == self.expected_per_side
            and self.locations.at_0 == 1
            and self.locations.at_m1 == self.expected_at_m1
            and self.locations.positive == 0
        )

    @property
    def passed(self) -> bool:
        return self.agreement and self.locations_match is not False


def _only_negative_simple_roots(p: ExactPoly) -> bool:
    if p.is_constant():
        return True
    if p.evaluate(0) == 0:
        return False
    if not gcd(p, p.derivative()).is_constant():
        return False
    certificate = certify_real_rooted(p, with_intervals=False)
    return certificate.is_real_rooted and count_roots_in(p, 0, POS_INF) == 0


def realrootedness_transfer_check(
    v: XiVector, with_intervals: bool = False
) -> TransferReport:
    """
    Certify ``xi(x)`` and ``l(x)`` independently and compare.

    The substitution ``y = x / (1+x)**2`` relating the two is never carried
    out; both polynomials get their own Sturm certificate, and the root
    locations of ``l`` are counted after dividing out the known roots at
    ``0`` and ``-1``.

    :param v: Expansion with ``xi_0 = 0`` and some nonzero entry.
    :type v: XiVector
    :param with_intervals: Include isolating intervals in both certificates.
    :type with_intervals: bool
    :return: Report with both certificates and the location counts.
    :rtype: TransferReport
    :raises UnsupportedXiZero: If ``xi_0 != 0``.
    :raises ZeroInput: If every entry is zero.
    """
    if v.xi[0] != 0:
        raise UnsupportedXiZero(f"xi_0 = {v.xi[0]} is not covered by the transfer check")
    if v.is_zero():
        raise ZeroInput("The zero expansion has nothing to certify")
    xi_poly = xi_generating_poly(v)
    local = xi_to_poly(v)
    xi_certificate = certify_real_rooted(xi_poly, with_intervals=with_intervals)
    local_certificate = certify_real_rooted(local, with_intervals=with_intervals)
    agreement = xi_certificate.is_real_rooted == local_certificate.is_real_rooted
    top_degree = xi_poly.degree
    assert top_degree is not None
    negative_simple = _only_negative_simple_roots(xi_poly.exact_divide(ExactPoly.x()))
    return TransferReport(
        vector=v,
        xi_certificate=xi_certificate,
        local_certificate=local_certificate,
        agreement=agreement,
        xi_roots_negative_simple=negative_simple,
        expected_per_side=top_degree - 1,
        expected_at_m1=v.n - 2 * top_degree,
        locations=location_counts(local) if negative_simple else None,
    )
