"""
Local h-polynomials of cluster subdivisions, one per irreducible root system.

The polynomials are built from their symmetric expansion coefficients.
Types A, B and D have closed forms in the rank ``n``; the dihedral and
exceptional types are literal data. All closed-form values are computed as
exact rationals and then asserted to be integers, so a transcription error
in a formula fails loudly instead of producing a fractional coefficient.

Also here: Narayana polynomials and the identity that writes the type D
polynomial as ``(n - 2) * x * N_{n-2}(x)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from localh.errors import IntegralityError, InvalidRank, NegativeOrder
from localh.combinatorics.basis_transforms import XiVector, xi_generating_poly, xi_to_poly
from localh.polynomials.exact_poly import ExactPoly
from localh.utils.binomials import binomial
from localh.utils.decorators import logged_check


class CartanType(str, enum.Enum):
    A = "A"
    B = "B"
    D = "D"
    I2 = "I2"
    H3 = "H3"
    H4 = "H4"
    F4 = "F4"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"


INFINITE_FAMILIES = (CartanType.A, CartanType.B, CartanType.D)
EXCEPTIONAL_TYPES = (
    CartanType.H3,
    CartanType.H4,
    CartanType.F4,
    CartanType.E6,
    CartanType.E7,
    CartanType.E8,
)

# lower bound on the rank (A, B, D) or on m (I2)
MIN_PARAMETER: Dict[CartanType, int] = {
    CartanType.A: 1,
    CartanType.B: 2,
    CartanType.D: 2,
    CartanType.I2: 3,
}

FIXED_RANK: Dict[CartanType, int] = {
    CartanType.I2: 2,
    CartanType.H3: 3,
    CartanType.H4: 4,
    CartanType.F4: 4,
    CartanType.E6: 6,
    CartanType.E7: 7,
    CartanType.E8: 8,
}

EXCEPTIONAL_XI: Dict[CartanType, Tuple[int, ...]] = {
    CartanType.H3: (0, 8),
    CartanType.H4: (0, 42, 40),
    CartanType.F4: (0, 10, 9),
    CartanType.E6: (0, 7, 35, 13),
    CartanType.E7: (0, 16, 124, 112),
    CartanType.E8: (0, 44, 484, 784, 120),
}

_ALIASES: Dict[str, Tuple[CartanType, Optional[int]]] = {
    "G2": (CartanType.I2, 6),
}

_TYPE_ORDER = {family: index for index, family in enumerate(CartanType)}


@dataclass(frozen=True)
class RootSystem:
    """
    Irreducible root system of a given Cartan-Killing type.

    :param family: Type tag.
    :type family: CartanType
    :param parameter: Rank for A, B and D; the dihedral order ``m`` for I2;
     ``None`` for the exceptional types.
    :type parameter: Optional[int]
    :raises InvalidRank: If the parameter violates the bounds of its type.

    Example:
        >>> RootSystem.parse("A", 4).rank
        4
        >>> RootSystem.parse("G2")
        RootSystem(family=<CartanType.I2: 'I2'>, parameter=6)
    """

    family: CartanType
    parameter: Optional[int] = None

    def __post_init__(self) -> None:
        if self.family in MIN_PARAMETER:
            minimum = MIN_PARAMETER[self.family]
            name = "m" if self.family is CartanType.I2 else "rank"
            if self.parameter is None or self.parameter < minimum:
                raise InvalidRank(self.family.value, self.parameter, f"{name} >= {minimum}")
        elif self.parameter is not None and self.parameter != FIXED_RANK[self.family]:
            raise InvalidRank(
                self.family.value, self.parameter, f"rank == {FIXED_RANK[self.family]}"
            )

    @classmethod
    def parse(cls, type_name: str, parameter: Optional[int] = None) -> RootSystem:
        """
        Build a root system from a type name such as ``"A"``, ``"I2"``,
        ``"E8"`` or the alias ``"G2"``.

        :raises InvalidRank: For an unknown type name or a bad parameter.
        """
        key = type_name.strip().upper()
        if key in _ALIASES:
            family, fixed = _ALIASES[key]
            if parameter is not None and parameter != FIXED_RANK[family]:
                raise InvalidRank(key, parameter, f"rank == {FIXED_RANK[family]}")
            return cls(family, fixed)
        try:
            family = CartanType(key)
        except ValueError as exc:
            valid = ", ".join(t.value for t in CartanType)
            raise InvalidRank(type_name, parameter, f"a type among {valid}, G2") from exc
        if family in EXCEPTIONAL_TYPES:
            # validates a redundant rank, then drops it so equal systems compare equal
            cls(family, parameter)
            return cls(family)
        return cls(family, parameter)

    @property
    def rank(self) -> int:
        if self.family in INFINITE_FAMILIES:
            assert self.parameter is not None
            return self.parameter
        return FIXED_RANK[self.family]

    @property
    def label(self) -> str:
        if self.family in INFINITE_FAMILIES:
            return f"{self.family.value}{self.parameter}"
        if self.family is CartanType.I2:
            return f"I2({self.parameter})"
        return self.family.value

    def sort_key(self) -> Tuple[int, int, int]:
        return (_TYPE_ORDER[self.family], self.rank, self.parameter or 0)

    def __str__(self) -> str:
        return self.label


def _integral(value: Fraction, family: CartanType, n: int, i: int) -> Fraction:
    if value.denominator != 1:
        raise IntegralityError(f"xi_{i}({family.value}{n}) = {value} is not an integer")
    return value


def _family_xi(family: CartanType, n: int, i: int) -> Fraction:
    if family is CartanType.A:
        value = Fraction(binomial(n, i) * binomial(n - i - 1, i - 1), n - i + 1)
    elif family is CartanType.B:
        value = Fraction(binomial(n, i) * binomial(n - i - 1, i - 1))
    else:
        value = Fraction(n - 2, i) * binomial(2 * i - 2, i - 1) * binomial(n - 2, 2 * i - 2)
    return _integral(value, family, n, i)


def xi_vector(rs: RootSystem) -> XiVector:
    """
    Symmetric expansion coefficients of the local h-polynomial of ``rs``.

    ``xi_0`` is always 0. For the infinite families, with ``n`` the rank
    and ``1 <= i <= floor(n/2)``:

    * A: ``C(n, i) C(n-i-1, i-1) / (n-i+1)``
    * B: ``C(n, i) C(n-i-1, i-1)``
    * D: ``((n-2)/i) C(2i-2, i-1) C(n-2, 2i-2)``

    I2(m) gives ``(0, m - 2)``; the exceptional types come from a table.

    :raises IntegralityError: If a closed form yields a non-integer.
    """
    n = rs.rank
    if rs.family in EXCEPTIONAL_XI:
        return XiVector.of(n, EXCEPTIONAL_XI[rs.family])
    if rs.family is CartanType.I2:
        assert rs.parameter is not None
        return XiVector.of(2, (0, rs.parameter - 2))
    values: List[Fraction] = [Fraction(0)]
    values.extend(_family_xi(rs.family, n, i) for i in range(1, n // 2 + 1))
    return XiVector(n, tuple(values))


def local_h(rs: RootSystem) -> ExactPoly:
    """Local h-polynomial of the cluster subdivision of type ``rs``."""
    return xi_to_poly(xi_vector(rs))


def xi_poly(rs: RootSystem) -> ExactPoly:
    """``sum_i xi_i(rs) x**i``."""
    return xi_generating_poly(xi_vector(rs))


def catalan(n: int) -> int:
    if n < 0:
        raise NegativeOrder(n)
    return binomial(2 * n, n) // (n + 1)


def narayana_poly(n: int) -> ExactPoly:
    """
    ``sum_{i=0}^{n} C(n+1, i) C(n+1, i+1) / (n+1) * x**i``.

    :raises NegativeOrder: If ``n < 0``.
    """
    if n < 0:
        raise NegativeOrder(n)
    return ExactPoly(
        Fraction(binomial(n + 1, i) * binomial(n + 1, i + 1), n + 1) for i in range(n + 1)
    )


def narayana_basis_form(n: int) -> ExactPoly:
    """
    ``sum_i C(2i, i) C(n, 2i) / (i+1) * x**i (1+x)**(n-2i)``, the symmetric
    expansion whose coefficients are ``C(n, 2i)`` times Catalan numbers.
    """
    if n < 0:
        raise NegativeOrder(n)
    return xi_to_poly(
        XiVector(
            n,
            tuple(
                Fraction(binomial(2 * i, i) * binomial(n, 2 * i), i + 1)
                for i in range(n // 2 + 1)
            ),
        )
    )


def type_d_narayana_form(n: int) -> ExactPoly:
    """``(n - 2) * x * N_{n-2}(x)``."""
    if n < 2:
        raise InvalidRank(CartanType.D.value, n, "rank >= 2")
    return narayana_poly(n - 2) * ExactPoly.monomial(1, n - 2)


@logged_check
def verify_d_identity(n: int) -> bool:
    """
    Check, as exact polynomial identities, that the type D local
    h-polynomial equals ``(n-2) x N_{n-2}(x)`` and that
    :func:`narayana_basis_form` reproduces ``N_n``.

    :raises InvalidRank: If ``n < 2``.
    """
    if n < 2:
        raise InvalidRank(CartanType.D.value, n, "rank >= 2")
    type_d = local_h(RootSystem(CartanType.D, n))
    return type_d == type_d_narayana_form(n) and narayana_basis_form(n) == narayana_poly(n)


def all_exceptional() -> List[RootSystem]:
    """Every exceptional root system, in table order."""
    return [RootSystem(family) for family in EXCEPTIONAL_TYPES]
