"""
Contains all decorators used across localh
"""

import logging
from fractions import Fraction
from functools import wraps
from typing import Callable, Concatenate, ParamSpec, Sequence, TypeVar, Union

from localh.polynomials.exact_poly import ExactPoly, RationalLike

P = ParamSpec("P")
R = TypeVar("R")

PolyLike = Union[ExactPoly, Sequence[RationalLike], RationalLike]


def coerce_poly(
    func: Callable[Concatenate[ExactPoly, P], R]
) -> Callable[Concatenate[PolyLike, P], R]:
    """
    Coerces the first argument of a polynomial operation to
    :class:`ExactPoly`. Callers can thus pass a plain coefficient
    list (constant term first) or a single rational.

    Raises:
        TypeError
    """

    @wraps(func)
    def wrapper(poly: PolyLike, *args: P.args, **kwargs: P.kwargs) -> R:
        if isinstance(poly, ExactPoly):
            return func(poly, *args, **kwargs)
        if isinstance(poly, (int, Fraction)):
            return func(ExactPoly([poly]), *args, **kwargs)
        if isinstance(poly, (list, tuple)):
            return func(ExactPoly(poly), *args, **kwargs)
        raise TypeError(f"Cannot interpret {poly!r} as a polynomial")

    return wrapper


def logged_check(func: Callable[P, bool]) -> Callable[P, bool]:
    """
    Logs the outcome of an identity check in the usual
    status line format and passes the verdict through.
    """

    @wraps(func)
    def wrapper(*args: P.args, **kwargs: P.kwargs) -> bool:
        verdict = func(*args, **kwargs)
        arguments = ", ".join(str(a) for a in args)
        logging.info(
            f"{func.__name__}({arguments})".ljust(65, ".")
            + ("[done]" if verdict else "[failed]")
        )
        return verdict

    return wrapper
