"""
Exception types shared across localh.

Every failure a caller is expected to handle has its own class, so that
batch runs and the command line can tell a usage problem apart from a
failed mathematical check.
"""

from typing import Any


class LocalHError(Exception):
    """Base class for all errors raised by localh."""


class BothZero(LocalHError, ValueError):
    "gcd requested for two zero polynomials"


class ZeroPolynomial(LocalHError, ValueError):
    "operation is undefined for the zero polynomial"


class NotSquarefree(LocalHError, ValueError):
    "Sturm chain requested for a polynomial with repeated roots"


class EndpointIsRoot(LocalHError, ValueError):
    """A finite interval endpoint is a root of the polynomial being counted."""

    def __init__(self, endpoint: Any) -> None:
        self.endpoint = endpoint
        super().__init__(
            f"Interval endpoint {endpoint} is a root; divide it out before counting"
        )


class InvalidInterval(LocalHError, ValueError):
    "lower bound is not strictly below the upper bound"


class NotInBasisSpan(LocalHError, ValueError):
    "polynomial is not palindromic with the requested center"


class DegreeTooLarge(LocalHError, ValueError):
    "polynomial degree exceeds the ambient rank"


class UnsupportedXiZero(LocalHError, ValueError):
    "transfer check only covers expansions without the i = 0 term"


class ZeroInput(LocalHError, ValueError):
    "all coefficients are zero"


class InvalidRank(LocalHError, ValueError):
    """Rank or dihedral parameter outside the bounds of its Cartan-Killing type."""

    def __init__(self, family: str, value: Any, bound: str) -> None:
        self.family = family
        self.value = value
        self.bound = bound
        super().__init__(f"Invalid rank {value} for type {family}: requires {bound}")


class NegativeOrder(LocalHError, ValueError):
    """Polynomial family index is negative."""

    def __init__(self, order: int) -> None:
        self.order = order
        super().__init__(f"Order must be non-negative, got {order}")


class IndexOutOfRange(LocalHError, ValueError):
    "root index outside 1..floor(n/2) or n below 2"


class OracleMismatch(LocalHError, ArithmeticError):
    "trigonometric root oracle disagrees with the exact isolating intervals"


class IntegralityError(LocalHError, ArithmeticError):
    "a closed-form coefficient that must be an integer is not"


class InexactDivision(LocalHError, ArithmeticError):
    "exact polynomial division left a nonzero remainder"


class UnknownSequence(LocalHError, ValueError):
    "multiplier sequence name is not registered"


class InvalidDepth(LocalHError, ValueError):
    "Polya-Schur depth must be at least 1"


class ConfigurationError(LocalHError):
    """Error type to be raised for invalid run configurations"""

    def __init__(self, config_param: Any, value: Any, valids: Any) -> None:
        self.config_param = config_param
        self.value = value
        self.valids = valids
        super().__init__(self._format_message())

    def _format_message(self) -> str:
        return (
            f"Invalid configuration values!\n"
            f"It seems you tried to configure {self.config_param} as {self.value}\n"
            f"Try using one of the following configuration options instead:\n\n"
            " ===>   "
            f"{self.valids}\n\n"
        )
