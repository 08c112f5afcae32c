# pylint: disable=logging-format-interpolation
# pylint: disable=logging-not-lazy
"""
Sturm chains, exact real root counting and real-rootedness certificates.

Everything here is exact: chains are built from the signed subresultant
remainder sequence of :mod:`localh.polynomials.exact_poly`, signs at
rational points are taken from homogenized integer Horner evaluation, and
isolating intervals have rational endpoints.

Root counts follow Sturm's theorem for a squarefree ``f``: the number of
distinct roots in ``(a, b]`` is ``V(a) - V(b)``, where ``V`` counts sign
variations of the chain (zeros skipped).
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from typing import List, Optional, Sequence, Tuple, Union

from localh.errors import (
    EndpointIsRoot,
    InvalidInterval,
    NotSquarefree,
    ZeroPolynomial,
)
from localh.polynomials.exact_poly import (
    ExactPoly,
    RationalLike,
    gcd,
    squarefree_part,
    subresultant_prs,
)
from localh.utils.decorators import coerce_poly


class BoundKind(enum.IntEnum):
    NEG_INFINITY = 0
    FINITE = 1
    POS_INFINITY = 2


@total_ordering
@dataclass(frozen=True)
class ExtendedBound:
    """
    Interval endpoint on the extended real line.

    Ordered as ``NegInfinity < Finite(t) < PosInfinity``; finite bounds
    compare by value.
    """

    kind: BoundKind
    value: Optional[Fraction] = None

    @classmethod
    def neg_infinity(cls) -> ExtendedBound:
        return cls(BoundKind.NEG_INFINITY)

    @classmethod
    def pos_infinity(cls) -> ExtendedBound:
        return cls(BoundKind.POS_INFINITY)

    @classmethod
    def finite(cls, value: RationalLike) -> ExtendedBound:
        return cls(BoundKind.FINITE, Fraction(value))

    def is_finite(self) -> bool:
        return self.kind is BoundKind.FINITE

    def _key(self) -> Tuple[int, Fraction]:
        return (int(self.kind), self.value if self.value is not None else Fraction(0))

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, ExtendedBound):
            return NotImplemented
        return self._key() < other._key()

    def __str__(self) -> str:
        if self.kind is BoundKind.NEG_INFINITY:
            return "-oo"
        if self.kind is BoundKind.POS_INFINITY:
            return "+oo"
        return str(self.value)


NEG_INF = ExtendedBound.neg_infinity()
POS_INF = ExtendedBound.pos_infinity()

BoundLike = Union[ExtendedBound, Fraction, int]


def _as_bound(bound: BoundLike) -> ExtendedBound:
    if isinstance(bound, ExtendedBound):
        return bound
    return ExtendedBound.finite(bound)


def _sign(value: int) -> int:
    return (value > 0) - (value < 0)


def _sign_at(coeffs: Sequence[int], bound: ExtendedBound) -> int:
    degree = len(coeffs) - 1
    if bound.kind is BoundKind.POS_INFINITY:
        return _sign(coeffs[-1])
    if bound.kind is BoundKind.NEG_INFINITY:
        return _sign(coeffs[-1]) * (-1 if degree % 2 else 1)
    assert bound.value is not None
    num, den = bound.value.numerator, bound.value.denominator
    # b**d * p(a/b) has the sign of p(a/b) since b > 0
    acc = coeffs[-1]
    den_power = 1
    for coeff in reversed(coeffs[:-1]):
        den_power *= den
        acc = acc * num + coeff * den_power
    return _sign(acc)


def sign_variations(signs: Sequence[int]) -> int:
    """Number of sign changes in ``signs``, zeros skipped."""
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


class SturmChain:
    """
    Signed remainder chain of a squarefree polynomial.

    ``polys[0]`` is a positive multiple of the input, ``polys[1]`` a positive
    multiple of its derivative, and every later entry a positive multiple of
    the negated remainder of the previous two. The last entry is a nonzero
    constant.

    Use :func:`sturm_chain` to build one.
    """

    __slots__ = ("polys", "_ints")

    def __init__(self, polys: Sequence[ExactPoly]) -> None:
        self.polys: Tuple[ExactPoly, ...] = tuple(polys)
        self._ints: Tuple[Tuple[int, ...], ...] = tuple(
            p.integer_coefficients() for p in self.polys
        )

    def __len__(self) -> int:
        return len(self.polys)

    def __repr__(self) -> str:
        return f"SturmChain({', '.join(str(p) for p in self.polys)})"

    def variations_at(self, bound: BoundLike) -> int:
        bound = _as_bound(bound)
        return sign_variations([_sign_at(c, bound) for c in self._ints])

    def count_half_open(self, lo: BoundLike, hi: BoundLike) -> int:
        """Distinct roots in ``(lo, hi]``."""
        return self.variations_at(lo) - self.variations_at(hi)

    def total_real_roots(self) -> int:
        return self.variations_at(NEG_INF) - self.variations_at(POS_INF)


@dataclass(frozen=True)
class IsolatingInterval:
    """
    Rational interval holding exactly one distinct real root.

    Either ``lo < hi`` and the root lies strictly inside with neither
    endpoint a root, or ``lo == hi`` is the root itself.
    """

    lo: Fraction
    hi: Fraction
    multiplicity: Optional[int] = None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, value: RationalLike) -> bool:
        if self.is_point():
            return value == self.lo
        return self.lo < value < self.hi


@dataclass(frozen=True)
class RealRootCertificate:
    """
    Machine-checkable witness of real-rootedness.

    ``is_real_rooted`` holds iff every root, counted with multiplicity, is
    real. The zero polynomial is certified real-rooted by convention and
    carries ``degree = None``; nonzero constants have degree 0 and no roots.
    """

    degree: Optional[int]
    distinct_real_roots: int
    total_with_multiplicity: int
    is_real_rooted: bool
    isolating_intervals: Tuple[IsolatingInterval, ...] = field(default=())

    @property
    def is_degenerate(self) -> bool:
        return self.degree is None


def _require_nonzero(p: ExactPoly) -> None:
    if p.is_zero():
        raise ZeroPolynomial("Root counting is undefined for the zero polynomial")


@coerce_poly
def sturm_chain(p: ExactPoly) -> SturmChain:
    """
    :param p: Nonzero squarefree polynomial.
    :type p: ExactPoly
    :return: Sturm chain of ``p``.
    :rtype: SturmChain
    :raises ZeroPolynomial:
    :raises NotSquarefree: If ``gcd(p, p')`` is not constant.
    """
    _require_nonzero(p)
    if p.is_constant():
        return SturmChain(subresultant_prs(p, ExactPoly()))
    chain = subresultant_prs(p, p.derivative())
    if not chain[-1].is_constant():
        raise NotSquarefree(f"{p} shares the factor {chain[-1]} with its derivative")
    return SturmChain(chain)


@coerce_poly
def count_roots_in(p: ExactPoly, lo: BoundLike, hi: BoundLike) -> int:
    """
    Number of distinct real roots of ``p`` strictly inside ``(lo, hi)``.

    :param p: Nonzero polynomial, not necessarily squarefree.
    :type p: ExactPoly
    :param lo: Lower endpoint, rational or :class:`ExtendedBound`.
    :param hi: Upper endpoint, strictly above ``lo``.
    :return: Distinct root count.
    :rtype: int
    :raises EndpointIsRoot: If a finite endpoint is a root of ``p``.
    :raises InvalidInterval: If ``lo >= hi``.
    """
    _require_nonzero(p)
    lo_bound, hi_bound = _as_bound(lo), _as_bound(hi)
    if not lo_bound < hi_bound:
        raise InvalidInterval(f"Empty interval ({lo_bound}, {hi_bound})")
    for bound in (lo_bound, hi_bound):
        if bound.is_finite():
            assert bound.value is not None
            if p.evaluate(bound.value) == 0:
                raise EndpointIsRoot(bound.value)
    chain = sturm_chain(squarefree_part(p))
    return chain.count_half_open(lo_bound, hi_bound)


@coerce_poly
def cauchy_bound(p: ExactPoly) -> Fraction:
    """``1 + max|a_i| / |a_deg|``; every complex root lies strictly inside."""
    _require_nonzero(p)
    lead = abs(p.leading_coefficient)
    lower = p.coeffs[:-1]
    if not lower:
        return Fraction(1)
    return 1 + max(abs(c) for c in lower) / lead


def _bisect(
    base: ExactPoly,
    chain: SturmChain,
    lo: Fraction,
    hi: Fraction,
    max_width: Optional[Fraction],
) -> List[IsolatingInterval]:
    found: List[IsolatingInterval] = []
    stack = [(lo, hi, chain.count_half_open(lo, hi))]
    while stack:
        a, b, count = stack.pop()
        if count == 0:
            continue
        if count == 1 and (max_width is None or b - a <= max_width):
            found.append(IsolatingInterval(a, b))
            continue
        mid = (a + b) / 2
        if base.evaluate(mid) != 0:
            left = chain.count_half_open(a, mid)
            stack.append((a, mid, left))
            stack.append((mid, b, count - left))
            continue
        found.append(IsolatingInterval(mid, mid))
        # shrink a root-free gap around the hit so no endpoint is a root
        delta = (b - a) / 4
        while (
            base.evaluate(mid - delta) == 0
            or base.evaluate(mid + delta) == 0
            or chain.count_half_open(mid - delta, mid + delta) != 1
        ):
            delta /= 2
        stack.append((a, mid - delta, chain.count_half_open(a, mid - delta)))
        stack.append((mid + delta, b, chain.count_half_open(mid + delta, b)))
    found.sort(key=lambda interval: interval.lo)
    return found


@coerce_poly
def isolate_real_roots(
    p: ExactPoly, max_width: Optional[RationalLike] = None
) -> List[IsolatingInterval]:
    """
    Disjoint rational intervals, one per distinct real root of ``p``.

    Bisection is driven by Sturm counts, starting from ``(-B, B)`` with
    ``B`` the Cauchy bound of the squarefree part. A midpoint that hits a
    root exactly becomes a degenerate point interval.

    :param p: Nonzero polynomial.
    :type p: ExactPoly
    :param max_width: Largest allowed width; ``None`` stops as soon as each
     root is isolated.
    :type max_width: Fraction | int | None
    :return: Intervals sorted from left to right, ``multiplicity`` unset.
    :rtype: List[IsolatingInterval]
    :raises ZeroPolynomial:
    """
    _require_nonzero(p)
    width = None if max_width is None else Fraction(max_width)
    if width is not None and width <= 0:
        raise ValueError(f"max_width must be positive, got {width}")
    base = squarefree_part(p)
    if base.is_constant():
        return []
    chain = sturm_chain(base)
    bound = cauchy_bound(base)
    return _bisect(base, chain, -bound, bound, width)


def multiplicity_tower(p: ExactPoly) -> List[ExactPoly]:
    """
    ``[p, gcd(p, p'), gcd(g1, g1'), ...]`` down to the first constant.

    A root of multiplicity ``m`` in ``p`` is a root of exactly the first
    ``m`` entries.
    """
    _require_nonzero(p)
    tower = [p]
    while not tower[-1].is_constant():
        current = tower[-1]
        tower.append(gcd(current, current.derivative()))
    return tower


def _interval_hits(chain: SturmChain, base: ExactPoly, interval: IsolatingInterval) -> bool:
    if interval.is_point():
        return base.evaluate(interval.lo) == 0
    return chain.count_half_open(interval.lo, interval.hi) > 0


@coerce_poly
def certify_real_rooted(
    p: ExactPoly,
    with_intervals: bool = True,
    max_width: Optional[RationalLike] = None,
) -> RealRootCertificate:
    """
    Certify whether all roots of ``p`` are real.

    Multiplicities come from the gcd-derivative tower: the number of real
    roots counted with multiplicity is the sum over the tower of distinct
    real root counts.

    :param p: Any polynomial; zero is real-rooted by convention.
    :type p: ExactPoly
    :param with_intervals: Isolate every distinct real root and tag it with
     its multiplicity. Counting alone is much cheaper for large degrees.
    :type with_intervals: bool
    :param max_width: Passed on to :func:`isolate_real_roots`.
    :return: Certificate.
    :rtype: RealRootCertificate
    """
    if p.is_zero():
        return RealRootCertificate(None, 0, 0, True)
    degree = p.degree
    assert degree is not None
    if degree == 0:
        return RealRootCertificate(0, 0, 0, True)
    tower = multiplicity_tower(p)
    bases = [squarefree_part(f) for f in tower[:-1]]
    chains = [sturm_chain(b) for b in bases]
    counts = [c.total_real_roots() for c in chains]
    total = sum(counts)
    intervals: Tuple[IsolatingInterval, ...] = ()
    if with_intervals:
        width = None if max_width is None else Fraction(max_width)
        bound = cauchy_bound(bases[0])
        raw = _bisect(bases[0], chains[0], -bound, bound, width)
        tagged = []
        for interval in raw:
            multiplicity = 1 + sum(
                1
                for chain, base in zip(chains[1:], bases[1:])
                if _interval_hits(chain, base, interval)
            )
            tagged.append(IsolatingInterval(interval.lo, interval.hi, multiplicity))
        intervals = tuple(tagged)
    certificate = RealRootCertificate(
        degree=degree,
        distinct_real_roots=counts[0],
        total_with_multiplicity=total,
        is_real_rooted=total == degree,
        isolating_intervals=intervals,
    )
    logging.debug(
        f"Certified degree {degree} polynomial: {total}/{degree} real roots".ljust(65, ".")
        + ("[done]" if certificate.is_real_rooted else "[failed]")
    )
    return certificate
