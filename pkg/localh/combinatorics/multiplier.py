# pylint: disable=logging-format-interpolation
# pylint: disable=logging-not-lazy
"""
Multiplier sequences and their finite test polynomials.

A sequence ``gamma_0, gamma_1, ...`` acts on a polynomial by scaling its
``k``-th coefficient with ``gamma_k``. Sequences are built through
:class:`MultiplierSequenceFactory` and share the interface of
:class:`MultiplierSequence`, so the real-rootedness test in
:func:`polya_schur_report` and the type A / type B constructions can use
any of them.
"""

from __future__ import annotations

import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from localh.errors import InvalidDepth, UnknownSequence
from localh.polynomials.exact_poly import ExactPoly, RationalLike
from localh.polynomials.real_roots import (
    NEG_INF,
    POS_INF,
    RealRootCertificate,
    certify_real_rooted,
    count_roots_in,
)
from localh.combinatorics.chebyshev import h_poly
from localh.utils.binomials import binomial

DEFAULT_DEPTH = 30

SEQUENCE_NAMES = (
    "reciprocal-factorial",
    "reciprocal-shifted-factorial",
    "binomial-reciprocal",
    "explicit",
)


class MultiplierSequenceFactory:
    """
    Multiplier sequence factory responsible for creating and returning an
    instance of the requested sequence. All sequences created from this
    factory adhere to the interface specified in :class:`MultiplierSequence`.

    Example:
        >>> s = MultiplierSequenceFactory.create_sequence('binomial-reciprocal', param=4)
        >>> s.gamma(2)
        Fraction(1, 4)
    """

    @staticmethod
    def create_sequence(
        name: str,
        param: Optional[int] = None,
        explicit: Optional[Iterable[RationalLike]] = None,
    ) -> MultiplierSequence:
        """
        :param name: Sequence identifier. One of reciprocal-factorial,
         reciprocal-shifted-factorial, binomial-reciprocal, explicit.
        :type name: str
        :param param: The ``n`` of the shifted and binomial sequences.
        :type param: int
        :param explicit: Finite list of values for ``explicit``.
        :type explicit: list
        :return: Instance of the requested sequence.
        :rtype: MultiplierSequence
        :raises UnknownSequence:
        """
        if name == "reciprocal-factorial":
            return ReciprocalFactorial()
        if name in ("reciprocal-shifted-factorial", "binomial-reciprocal"):
            if param is None or param < 0:
                raise UnknownSequence(f"{name} needs a non-negative parameter, got {param}")
            if name == "binomial-reciprocal":
                return BinomialReciprocal(param)
            return ReciprocalShiftedFactorial(param)
        if name == "explicit":
            if explicit is None:
                raise UnknownSequence("explicit sequence given without values")
            return ExplicitSequence(explicit)
        raise UnknownSequence(
            f"Unknown sequence {name}, try one of {', '.join(SEQUENCE_NAMES)}"
        )


class MultiplierSequence(ABC):
    """Abstract Base Class for all multiplier sequences. ``gamma`` must be
    total on the non-negative integers and deterministic."""

    name: str

    @abstractmethod
    def gamma(self, k: int) -> Fraction:
        """Exact value of the ``k``-th term."""

    def head(self, length: int) -> Tuple[Fraction, ...]:
        return tuple(self.gamma(k) for k in range(length))

    def __str__(self) -> str:
        return self.name


class ReciprocalFactorial(MultiplierSequence):
    """``gamma_k = 1/k!``"""

    def __init__(self) -> None:
        self.name = "reciprocal-factorial"

    def gamma(self, k: int) -> Fraction:
        return Fraction(1, math.factorial(k))


class ReciprocalShiftedFactorial(MultiplierSequence):
    """``gamma_k = 1/(n-k)!`` for ``k <= n``, zero beyond."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.name = f"reciprocal-shifted-factorial({n})"

    def gamma(self, k: int) -> Fraction:
        if k > self.n:
            return Fraction(0)
        return Fraction(1, math.factorial(self.n - k))


class BinomialReciprocal(MultiplierSequence):
    """``gamma_k = 1/(k!(n-k)!)`` for ``k <= n``, zero beyond."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.name = f"binomial-reciprocal({n})"

    def gamma(self, k: int) -> Fraction:
        if k > self.n:
            return Fraction(0)
        return Fraction(1, math.factorial(k) * math.factorial(self.n - k))


class ExplicitSequence(MultiplierSequence):
    """Finite list of values, continued by zeros."""

    def __init__(self, values: Iterable[RationalLike]) -> None:
        self.values = tuple(Fraction(v) for v in values)
        self.name = f"explicit({','.join(str(v) for v in self.values)})"

    def gamma(self, k: int) -> Fraction:
        if k < len(self.values):
            return self.values[k]
        return Fraction(0)


class HadamardProduct(MultiplierSequence):
    """Termwise product of two sequences."""

    def __init__(self, first: MultiplierSequence, second: MultiplierSequence) -> None:
        self.first = first
        self.second = second
        self.name = f"{first.name}*{second.name}"

    def gamma(self, k: int) -> Fraction:
        return self.first.gamma(k) * self.second.gamma(k)


def apply_sequence(s: MultiplierSequence, p: ExactPoly) -> ExactPoly:
    """Scale coefficient ``k`` of ``p`` by ``gamma_k``."""
    return ExactPoly(s.gamma(k) * c for k, c in enumerate(p.coeffs))


def hadamard(s1: MultiplierSequence, s2: MultiplierSequence) -> MultiplierSequence:
    return HadamardProduct(s1, s2)


def jensen_polynomial(s: MultiplierSequence, n: int) -> ExactPoly:
    """``J_n(x) = sum_{k=0}^{n} C(n, k) gamma_k x**k``."""
    return ExactPoly(binomial(n, k) * s.gamma(k) for k in range(n + 1))


@dataclass(frozen=True)
class PolyaSchurVerdict:
    """
    Outcome for a single ``n``. ``certificate`` is ``None`` when ``J_n``
    vanishes identically.
    """

    n: int
    real_rooted: bool
    same_sign: bool
    certificate: Optional[RealRootCertificate]

    @property
    def passed(self) -> bool:
        return self.real_rooted and self.same_sign


@dataclass(frozen=True)
class PolyaSchurReport:
    """
    Verdicts for ``n = 1 .. max_n``. Only a necessary condition for being a
    multiplier sequence, hence ``partial`` is always set.
    """

    sequence: str
    max_n: int
    verdicts: Tuple[PolyaSchurVerdict, ...]
    partial: bool = field(default=True, init=False)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    @property
    def first_failure(self) -> Optional[int]:
        for verdict in self.verdicts:
            if not verdict.passed:
                return verdict.n
        return None


def _same_sign_roots(p: ExactPoly) -> bool:
    reduced = p.exact_divide(ExactPoly.monomial(p.root_multiplicity(0)))
    if reduced.is_constant():
        return True
    return count_roots_in(reduced, NEG_INF, 0) == 0 or count_roots_in(reduced, 0, POS_INF) == 0


def _verdict(s: MultiplierSequence, n: int) -> PolyaSchurVerdict:
    test_poly = jensen_polynomial(s, n)
    if test_poly.is_zero():
        return PolyaSchurVerdict(n, True, True, None)
    certificate = certify_real_rooted(test_poly, with_intervals=False)
    return PolyaSchurVerdict(n, certificate.is_real_rooted, _same_sign_roots(test_poly), certificate)


def polya_schur_report(s: MultiplierSequence, max_n: int = DEFAULT_DEPTH) -> PolyaSchurReport:
    """
    Certify ``J_1, ..., J_{max_n}``: each must vanish identically or have
    only real zeros, none of them of strictly opposite signs. Roots at zero
    count for neither sign.

    :param s: Sequence under test.
    :type s: MultiplierSequence
    :param max_n: Depth, at least 1.
    :type max_n: int
    :rtype: PolyaSchurReport
    :raises InvalidDepth: If ``max_n < 1``.
    """
    if max_n < 1:
        raise InvalidDepth(f"Depth must be at least 1, got {max_n}")
    verdicts = tuple(_verdict(s, n) for n in range(1, max_n + 1))
    report = PolyaSchurReport(s.name, max_n, verdicts)
    logging.info(
        f"Polya-Schur test of {s.name} to depth {max_n}".ljust(65, ".")
        + ("[done]" if report.passed else "[failed]")
    )
    return report


def type_a_sequence(n: int) -> MultiplierSequence:
    """``gamma_i = 1/(i!(n-i+1)!)`` as a Hadamard product."""
    return hadamard(ReciprocalFactorial(), ReciprocalShiftedFactorial(n + 1))


def _pipeline(s: MultiplierSequence, n: int) -> ExactPoly:
    if n < 2:
        raise InvalidDepth(f"Pipelines need n >= 2, got {n}")
    return apply_sequence(s, ExactPoly.x() * h_poly(n - 2)).scale(math.factorial(n))


def type_a_pipeline(n: int) -> ExactPoly:
    """
    ``n! * sum_i gamma_i C(n-i-1, i-1) x**i`` with the type A sequence,
    which is the generating polynomial of the type A expansion.
    """
    return _pipeline(type_a_sequence(n), n)


def type_b_pipeline(n: int) -> ExactPoly:
    """Same with ``gamma_i = 1/(i!(n-i)!)``, giving ``sum C(n,i) C(n-i-1,i-1) x**i``."""
    return _pipeline(BinomialReciprocal(n), n)


def sampled_equal(
    s1: MultiplierSequence, s2: MultiplierSequence, length: int
) -> bool:
    return s1.head(length) == s2.head(length)
