# pylint: disable=logging-format-interpolation
# pylint: disable=logging-not-lazy
"""
Chebyshev polynomials of the second kind and the companion polynomial

    H_n(x) = sum_{j=0}^{floor(n/2)} C(n-j, j) x**j.

Reversing the coefficients of ``U_n`` and rescaling by powers of 2 turns
``y**n U_n(1/(2y))`` into ``H_n(-y**2)``, so the zeros of ``H_n`` are
``-1/4 sec(k pi / (n+1))**2`` for ``k = 1 .. floor(n/2)``: negative and
simple. This module builds all of these exactly and compares the
trigonometric root formula, evaluated with mpmath, against exact Sturm
isolating intervals.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

import mpmath

from localh.errors import IndexOutOfRange, NegativeOrder, OracleMismatch
from localh.polynomials.exact_poly import ExactPoly, RationalLike, gcd
from localh.polynomials.real_roots import (
    POS_INF,
    IsolatingInterval,
    RealRootCertificate,
    certify_real_rooted,
    count_roots_in,
    isolate_real_roots,
)
from localh.utils.binomials import binomial
from localh.utils.decorators import logged_check

DEFAULT_PRECISION_BITS = 128
MAX_PRECISION_BITS = 1024
MIN_PRECISION_BITS = 64
DEFAULT_ORACLE_WIDTH = Fraction(1, 2**53)

# rounding steps after the angle is formed: cos, reciprocal, square, quarter
_VALUE_STEPS = 8
# pi, product with k and division by n + 1
_ANGLE_STEPS = 4
_GUARD_BITS = 64


def _check_order(n: int) -> None:
    if n < 0:
        raise NegativeOrder(n)


@lru_cache(maxsize=None)
def _u_coefficients(n: int) -> Tuple[int, ...]:
    if n == 0:
        return (1,)
    if n == 1:
        return (0, 2)
    previous, current = (1,), (0, 2)
    for _ in range(n - 1):
        shifted = (0,) + tuple(2 * c for c in current)
        padded = previous + (0,) * (len(shifted) - len(previous))
        previous, current = current, tuple(a - b for a, b in zip(shifted, padded))
    return current


def u_poly(n: int) -> ExactPoly:
    """
    ``U_n(y)`` from ``U_0 = 1``, ``U_1 = 2y``, ``U_{k+1} = 2y U_k - U_{k-1}``.

    :raises NegativeOrder:
    """
    _check_order(n)
    return ExactPoly(_u_coefficients(n))


def u_poly_closed(n: int) -> ExactPoly:
    """
    ``U_n(y) = sum_k (-1)**k C(n-k, k) (2y)**(n-2k)``.

    :raises NegativeOrder:
    """
    _check_order(n)
    coeffs = [0] * (n + 1)
    for k in range(n // 2 + 1):
        coeffs[n - 2 * k] = (-1) ** k * binomial(n - k, k) * 2 ** (n - 2 * k)
    return ExactPoly(coeffs)


def h_poly(n: int) -> ExactPoly:
    """
    ``H_n(x) = sum_{j=0}^{floor(n/2)} C(n-j, j) x**j``.

    :raises NegativeOrder:
    """
    _check_order(n)
    return ExactPoly(binomial(n - j, j) for j in range(n // 2 + 1))


@logged_check
def reciprocal_substitution_check(n: int) -> bool:
    """
    Verify ``y**n U_n(1/(2y)) = sum_k C(n-k, k) (-y**2)**k`` exactly.

    The left side is the reciprocal of :func:`u_poly` with the entry of
    ``y**i`` divided by ``2**(n-i)``; the right side is expanded
    independently from binomials.

    :raises NegativeOrder:
    """
    _check_order(n)
    reversed_u = u_poly(n).reciprocal(n)
    left = ExactPoly(reversed_u.coefficient(i) / 2 ** (n - i) for i in range(n + 1))
    right_coeffs: List[RationalLike] = [0] * (n + 1)
    for k in range(n // 2 + 1):
        right_coeffs[2 * k] = (-1) ** k * binomial(n - k, k)
    return left == ExactPoly(right_coeffs)


@logged_check
def reindex_check(n: int) -> bool:
    """
    Verify ``x H_{n-2}(x) = sum_{i>=1} C(n-i-1, i-1) x**i``.

    :raises IndexOutOfRange: If ``n < 2``.
    """
    if n < 2:
        raise IndexOutOfRange(f"Reindexing needs n >= 2, got {n}")
    right = ExactPoly([0] + [binomial(n - i - 1, i - 1) for i in range(1, n // 2 + 1)])
    return ExactPoly.x() * h_poly(n - 2) == right


@dataclass(frozen=True)
class HPolyReport:
    """Exact evidence that ``H_n`` has only negative simple zeros."""

    n: int
    certificate: RealRootCertificate
    coprime_to_derivative: bool
    all_negative: bool

    @property
    def passed(self) -> bool:
        return (
            self.certificate.is_real_rooted
            and self.certificate.degree == self.n // 2
            and self.certificate.distinct_real_roots == self.n // 2
            and self.coprime_to_derivative
            and self.all_negative
        )


def certify_h_poly(n: int, with_intervals: bool = True) -> HPolyReport:
    """
    Sturm certificate of ``H_n``, its gcd with the derivative, and a count
    of the roots in ``(0, +oo)``; ``H_n(0) = 1`` so zero is never a root.
    """
    poly = h_poly(n)
    certificate = certify_real_rooted(poly, with_intervals=with_intervals)
    coprime = gcd(poly, poly.derivative()).is_constant()
    all_negative = poly.is_constant() or count_roots_in(poly, 0, POS_INF) == 0
    return HPolyReport(n, certificate, coprime, all_negative)


def _to_fraction(value: mpmath.mpf, precision_bits: int) -> Fraction:
    # a value computed at p bits has at most p mantissa bits, so the shift is exact
    mantissa, exponent = mpmath.frexp(value)
    shift = precision_bits + _GUARD_BITS
    scaled = int(mpmath.ldexp(mantissa, shift))
    return Fraction(scaled) * Fraction(2) ** (int(exponent) - shift)


@dataclass(frozen=True)
class HighPrecisionValue:
    """
    Binary floating point value with a rigorous absolute error bound.

    :param value: The approximation.
    :type value: mpmath.mpf
    :param precision_bits: Working precision it was computed at (>= 64).
    :type precision_bits: int
    :param error_bound: Absolute error bound, accumulated as a few units in
     the last place per rounding step, with the angle error scaled by the
     condition number of ``sec**2``.
    :type error_bound: mpmath.mpf
    """

    value: mpmath.mpf
    precision_bits: int
    error_bound: mpmath.mpf

    def __post_init__(self) -> None:
        if self.precision_bits < MIN_PRECISION_BITS:
            raise ValueError(
                f"Precision must be at least {MIN_PRECISION_BITS} bits, got {self.precision_bits}"
            )

    def enclosure(self) -> Tuple[Fraction, Fraction]:
        """Exact rational interval ``[value - error, value + error]``."""
        centre = _to_fraction(self.value, self.precision_bits)
        radius = _to_fraction(self.error_bound, self.precision_bits)
        return centre - radius, centre + radius

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        return mpmath.nstr(self.value, 20)


def h_root_oracle(
    n: int, k: int, precision_bits: int = DEFAULT_PRECISION_BITS
) -> HighPrecisionValue:
    """
    ``-1/4 sec(k pi / (n+1))**2``, the ``k``-th zero of ``H_n``.

    :param n: Order, at least 2.
    :param k: Root index, ``1 <= k <= floor(n/2)``.
    :param precision_bits: mpmath working precision.
    :return: Approximation with error bound; always strictly negative.
    :rtype: HighPrecisionValue
    :raises IndexOutOfRange:
    """
    if n < 2 or not 1 <= k <= n // 2:
        raise IndexOutOfRange(f"Root index k={k} outside 1..{n // 2} for n={n}")
    with mpmath.workprec(precision_bits):
        angle = k * mpmath.pi / (n + 1)
        value = -(mpmath.sec(angle) ** 2) / 4
        epsilon = mpmath.ldexp(1, -precision_bits)
        condition = 2 * abs(angle * mpmath.tan(angle))
        relative = (_VALUE_STEPS + _ANGLE_STEPS * condition) * epsilon
        error = 2 * relative * abs(value)
    return HighPrecisionValue(value, precision_bits, error)


@dataclass(frozen=True)
class OracleMatch:
    k: int
    interval_index: int
    precision_bits: int


@dataclass(frozen=True)
class OracleReport:
    """Pairing of oracle values with the exact isolating intervals of ``H_n``."""

    n: int
    intervals: Tuple[IsolatingInterval, ...]
    matches: Tuple[OracleMatch, ...]

    @property
    def passed(self) -> bool:
        used = sorted(m.interval_index for m in self.matches)
        return len(self.intervals) == self.n // 2 and used == list(range(len(self.intervals)))


def _overlaps(interval: IsolatingInterval, lo: Fraction, hi: Fraction) -> bool:
    if interval.is_point():
        return lo <= interval.lo <= hi
    return lo < interval.hi and interval.lo < hi


def _encloses(interval: IsolatingInterval, lo: Fraction, hi: Fraction) -> bool:
    if interval.is_point():
        return lo <= interval.lo <= hi
    return interval.lo < lo and hi < interval.hi


def oracle_agreement(
    n: int,
    width: RationalLike = DEFAULT_ORACLE_WIDTH,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> OracleReport:
    """
    Match every oracle value ``-1/4 sec(k pi/(n+1))**2`` with exactly one
    isolating interval of ``H_n`` of width at most ``width``.

    An enclosure that straddles an interval endpoint is retried at double
    the precision, up to :data:`MAX_PRECISION_BITS`.

    :raises OracleMismatch: If a value still cannot be placed in exactly
     one interval at the highest precision.
    :raises IndexOutOfRange: If ``n < 2``.
    """
    if n < 2:
        raise IndexOutOfRange(f"Oracle comparison needs n >= 2, got {n}")
    intervals = tuple(isolate_real_roots(h_poly(n), width))
    matches = []
    for k in range(1, n // 2 + 1):
        bits = precision_bits
        while True:
            lo, hi = h_root_oracle(n, k, bits).enclosure()
            hits = [i for i, interval in enumerate(intervals) if _overlaps(interval, lo, hi)]
            if len(hits) == 1 and _encloses(intervals[hits[0]], lo, hi):
                matches.append(OracleMatch(k, hits[0], bits))
                break
            if bits >= MAX_PRECISION_BITS:
                logging.error(
                    f"Oracle root k={k} of H_{n} not placed at {bits} bits".ljust(65, ".")
                    + "[failed]"
                )
                raise OracleMismatch(
                    f"Root k={k} of H_{n} overlaps {len(hits)} isolating intervals"
                )
            bits = min(2 * bits, MAX_PRECISION_BITS)
            logging.warning(
                f"Escalating oracle precision for H_{n}, k={k} to {bits} bits".ljust(65, ".")
                + "[WARNING]"
            )
    return OracleReport(n, intervals, tuple(matches))
