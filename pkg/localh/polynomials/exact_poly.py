"""
Exact dense univariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction` values indexed by exponent.
The zero polynomial has an empty coefficient tuple and no degree
(``degree`` is ``None``), so it can never leak a ``-1`` into index
arithmetic.

The greatest common divisor is computed with the subresultant polynomial
remainder sequence over the integers, after clearing denominators. The same
remainder sequence, with its signs fixed up, is what
:mod:`localh.polynomials.real_roots` uses as a Sturm chain.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd as int_gcd
from math import lcm
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from localh.errors import BothZero, InexactDivision, ZeroPolynomial

RationalLike = Union[Fraction, int]


def _strip(values: List[int]) -> List[int]:
    while values and values[-1] == 0:
        values.pop()
    return values


class ExactPoly:
    """
    Immutable dense polynomial with exact rational coefficients.

    :param coeffs: Coefficients ordered by exponent, constant term first.
     Trailing zeros are dropped, so ``ExactPoly([])`` and ``ExactPoly([0, 0])``
     are the same zero polynomial.
    :type coeffs: Iterable[Fraction | int]

    Example:
        >>> ExactPoly([1, 3, 1]) * ExactPoly([0, 1])
        ExactPoly([0, 1, 3, 1])
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()) -> None:
        values = [Fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def zero(cls) -> ExactPoly:
        return cls()

    @classmethod
    def constant(cls, value: RationalLike) -> ExactPoly:
        return cls([value])

    @classmethod
    def monomial(cls, exponent: int, coefficient: RationalLike = 1) -> ExactPoly:
        """:return: ``coefficient * x**exponent``."""
        return cls([0] * exponent + [coefficient])

    @classmethod
    def x(cls) -> ExactPoly:
        return cls([0, 1])

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> Optional[int]:
        """Index of the last nonzero coefficient, ``None`` for the zero polynomial."""
        if not self._coeffs:
            return None
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            raise ZeroPolynomial("The zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def coefficient(self, exponent: int) -> Fraction:
        if 0 <= exponent < len(self._coeffs):
            return self._coeffs[exponent]
        return Fraction(0)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExactPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == ExactPoly([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"ExactPoly([{', '.join(str(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms: List[str] = []
        for exponent, coeff in enumerate(self._coeffs):
            if coeff == 0:
                continue
            if exponent == 0:
                body = str(coeff)
            else:
                power = "x" if exponent == 1 else f"x^{exponent}"
                if coeff == 1:
                    body = power
                elif coeff == -1:
                    body = f"-{power}"
                elif coeff.denominator == 1:
                    body = f"{coeff}{power}"
                else:
                    body = f"({coeff}){power}"
            terms.append(body)
        return " + ".join(terms).replace("+ -", "- ")

    def __neg__(self) -> ExactPoly:
        return ExactPoly(-c for c in self._coeffs)

    def __add__(self, other: Union[ExactPoly, RationalLike]) -> ExactPoly:
        other = _as_poly(other)
        size = max(len(self._coeffs), len(other._coeffs))
        return ExactPoly(self.coefficient(i) + other.coefficient(i) for i in range(size))

    __radd__ = __add__

    def __sub__(self, other: Union[ExactPoly, RationalLike]) -> ExactPoly:
        return self + (-_as_poly(other))

    def __rsub__(self, other: RationalLike) -> ExactPoly:
        return _as_poly(other) - self

    def __mul__(self, other: Union[ExactPoly, RationalLike]) -> ExactPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not self._coeffs or not other._coeffs:
            return ExactPoly()
        product = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                product[i + j] += a * b
        return ExactPoly(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> ExactPoly:
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials")
        result = ExactPoly([1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __call__(self, t: RationalLike) -> Fraction:
        return self.evaluate(t)

    def scale(self, factor: RationalLike) -> ExactPoly:
        factor = Fraction(factor)
        return ExactPoly(factor * c for c in self._coeffs)

    def evaluate(self, t: RationalLike) -> Fraction:
        """Horner evaluation at a rational point."""
        t = Fraction(t)
        acc = Fraction(0)
        for coeff in reversed(self._coeffs):
            acc = acc * t + coeff
        return acc

    def derivative(self) -> ExactPoly:
        return ExactPoly(i * c for i, c in enumerate(self._coeffs) if i > 0)

    def divmod(self, divisor: ExactPoly) -> Tuple[ExactPoly, ExactPoly]:
        """
        Euclidean division over the rationals.

        :param divisor: Nonzero polynomial to divide by.
        :type divisor: ExactPoly
        :return: Quotient and remainder with ``deg(remainder) < deg(divisor)``.
        :rtype: Tuple[ExactPoly, ExactPoly]
        :raises ZeroPolynomial: If ``divisor`` is zero.
        """
        if divisor.is_zero():
            raise ZeroPolynomial("Division by the zero polynomial")
        remainder = list(self._coeffs)
        lead = divisor.leading_coefficient
        shift_max = len(remainder) - len(divisor._coeffs)
        quotient = [Fraction(0)] * max(shift_max + 1, 0)
        for shift in range(shift_max, -1, -1):
            top = remainder[shift + len(divisor._coeffs) - 1]
            if top == 0:
                continue
            factor = top / lead
            quotient[shift] = factor
            for i, coeff in enumerate(divisor._coeffs):
                remainder[shift + i] -= factor * coeff
        return ExactPoly(quotient), ExactPoly(remainder)

    def exact_divide(self, divisor: ExactPoly) -> ExactPoly:
        """:raises InexactDivision: If ``divisor`` does not divide ``self``."""
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero():
            raise InexactDivision(f"{divisor} does not divide {self}")
        return quotient

    def integer_coefficients(self) -> Tuple[int, ...]:
        """
        Positive rational multiple of ``self`` with coprime integer coefficients.

        The sign of the leading coefficient is preserved, so root counts and
        sign patterns are unchanged.
        """
        if not self._coeffs:
            return ()
        common = reduce(lcm, (c.denominator for c in self._coeffs), 1)
        ints = [c.numerator * (common // c.denominator) for c in self._coeffs]
        content = reduce(int_gcd, ints, 0)
        return tuple(c // content for c in ints)

    def primitive_part(self) -> ExactPoly:
        """Integer primitive representative with positive leading coefficient."""
        ints = self.integer_coefficients()
        if ints and ints[-1] < 0:
            ints = tuple(-c for c in ints)
        return ExactPoly(ints)

    def monic(self) -> ExactPoly:
        return self.scale(1 / self.leading_coefficient)

    def reciprocal(self, degree: Optional[int] = None) -> ExactPoly:
        """
        ``x**degree * p(1/x)``, i.e. the coefficient sequence reversed with
        respect to ``degree`` (defaults to the actual degree).
        """
        if degree is None:
            degree = self.degree if self.degree is not None else 0
        if self.degree is not None and self.degree > degree:
            raise ValueError(f"Degree {self.degree} exceeds reversal degree {degree}")
        return ExactPoly(self.coefficient(degree - i) for i in range(degree + 1))

    def is_palindromic(self, center_degree: int) -> bool:
        """:return: Whether coefficient ``i`` equals coefficient ``center_degree - i`` for all i."""
        if self.degree is not None and self.degree > center_degree:
            return False
        return all(
            self.coefficient(i) == self.coefficient(center_degree - i)
            for i in range(center_degree + 1)
        )

    def root_multiplicity(self, root: RationalLike) -> int:
        """Multiplicity of the rational ``root``; 0 if it is not a root."""
        if self.is_zero():
            raise ZeroPolynomial("Every point is a root of the zero polynomial")
        linear = ExactPoly([-Fraction(root), 1])
        count = 0
        current = self
        while current.evaluate(root) == 0:
            current = current.exact_divide(linear)
            count += 1
        return count


def _as_poly(value: Union[ExactPoly, RationalLike]) -> ExactPoly:
    if isinstance(value, ExactPoly):
        return value
    return ExactPoly([value])


def add(p: ExactPoly, q: ExactPoly) -> ExactPoly:
    return p + q


def sub(p: ExactPoly, q: ExactPoly) -> ExactPoly:
    return p - q


def mul(p: ExactPoly, q: ExactPoly) -> ExactPoly:
    return p * q


def derivative(p: ExactPoly) -> ExactPoly:
    return p.derivative()


def evaluate(p: ExactPoly, t: RationalLike) -> Fraction:
    return p.evaluate(t)


def _pseudo_remainder(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """``lc(b)**(deg a - deg b + 1) * a`` reduced modulo ``b``, over the integers."""
    degree_b = len(b) - 1
    lead = b[-1]
    remainder = list(a)
    pending = len(a) - len(b) + 1
    while remainder and len(remainder) - 1 >= degree_b:
        top = remainder[-1]
        shift = len(remainder) - 1 - degree_b
        remainder = [lead * c for c in remainder]
        for i, coeff in enumerate(b):
            remainder[shift + i] -= top * coeff
        remainder.pop()
        _strip(remainder)
        pending -= 1
    if pending > 0 and remainder:
        factor = lead**pending
        remainder = [factor * c for c in remainder]
    return remainder


def _subresultant_chain(a: List[int], b: List[int]) -> List[List[int]]:
    # Each new entry is the subresultant remainder, with its sign chosen so
    # that it is a positive multiple of -rem(previous, current).
    chain = [a, b]
    g, h = 1, 1
    while True:
        delta = len(a) - len(b)
        remainder = _pseudo_remainder(a, b)
        if not remainder:
            return chain
        beta = g * h**delta
        remainder = [c // beta for c in remainder]
        lead_sign = -1 if (b[-1] < 0 and (delta + 1) % 2 == 1) else 1
        beta_sign = -1 if beta < 0 else 1
        if lead_sign * beta_sign > 0:
            remainder = [-c for c in remainder]
        chain.append(remainder)
        a, b = b, remainder
        g = a[-1]
        if delta > 0:
            h = g**delta // h ** (delta - 1)


def subresultant_prs(p: ExactPoly, q: ExactPoly) -> List[ExactPoly]:
    """
    Signed subresultant polynomial remainder sequence of ``p`` and ``q``.

    Both inputs are first replaced by positive multiples with coprime
    integer coefficients. Every later entry ``r_{k+1}`` is a positive
    multiple of ``-rem(r_{k-1}, r_k)`` whose coefficients stay integral
    and polynomially bounded (subresultant scaling), so the sequence is
    usable both as a Sturm chain and for the gcd.

    :param p: Nonzero polynomial.
    :type p: ExactPoly
    :param q: Polynomial with ``deg q <= deg p``; zero ends the sequence at ``p``.
    :type q: ExactPoly
    :return: ``[p', q', r_2, ...]`` ending with the last nonzero remainder.
    :rtype: List[ExactPoly]
    """
    if p.is_zero():
        raise ZeroPolynomial("Remainder sequence needs a nonzero first entry")
    first = list(p.integer_coefficients())
    if q.is_zero():
        return [ExactPoly(first)]
    assert p.degree is not None and q.degree is not None
    if q.degree > p.degree:
        raise ValueError("Remainder sequence expects deg q <= deg p")
    chain = _subresultant_chain(first, list(q.integer_coefficients()))
    return [ExactPoly(entry) for entry in chain]


def gcd(p: ExactPoly, q: ExactPoly) -> ExactPoly:
    """
    Greatest common divisor by the subresultant remainder sequence.

    The result is normalized to the integer-primitive representative with
    positive leading coefficient, so a constant gcd is always ``1``.

    :raises BothZero: If ``p`` and ``q`` are both zero.
    """
    if p.is_zero() and q.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    if q.is_zero():
        return p.primitive_part()
    if p.is_zero():
        return q.primitive_part()
    assert p.degree is not None and q.degree is not None
    if q.degree > p.degree:
        p, q = q, p
    last = subresultant_prs(p, q)[-1]
    if last.is_constant():
        return ExactPoly([1])
    return last.primitive_part()


def squarefree_part(p: ExactPoly) -> ExactPoly:
    """
    ``p / gcd(p, p')`` normalized to its integer primitive part.

    Keeps every distinct root of ``p`` with multiplicity one.

    :raises ZeroPolynomial: If ``p`` is zero.
    """
    if p.is_zero():
        raise ZeroPolynomial("The zero polynomial has no squarefree part")
    if p.is_constant():
        return ExactPoly([1])
    return p.exact_divide(gcd(p, p.derivative())).primitive_part()
