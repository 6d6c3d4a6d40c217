"""Exact comparisons with a high-precision fallback for square roots."""
from decimal import Decimal, localcontext
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

Exact = Union[int, Fraction]
Number = Union[int, Fraction, Decimal]


class Verdict(str, Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    MARGINAL = "MARGINAL"
    NOT_APPLICABLE = "NOT_APPLICABLE"

    @property
    def severity(self) -> int:
        return _SEVERITY[self]


_SEVERITY = {
    Verdict.NOT_APPLICABLE: 0,
    Verdict.HOLDS: 1,
    Verdict.MARGINAL: 2,
    Verdict.FAILS: 3,
}

RELATIONS = ("<=", ">=", "<", ">", "==")


def exact_sqrt(q: Exact) -> Optional[Fraction]:
    """Square root of a non-negative rational when it is rational, else None."""
    q = Fraction(q)
    if q < 0:
        return None
    num, den = isqrt(q.numerator), isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


def to_decimal(x: Number, precision: int = 60) -> Decimal:
    if isinstance(x, Decimal):
        return x
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = precision
        return Decimal(x.numerator) / Decimal(x.denominator)


def sqrt_value(q: Exact, precision: int = 60) -> Number:
    """``√q``: exact when ``q`` is a rational square, else a ``Decimal``."""
    root = exact_sqrt(q)
    if root is not None:
        return root
    if q < 0:
        raise ValueError(f"Square root of negative value {q}")
    with localcontext() as ctx:
        ctx.prec = precision
        return to_decimal(q, precision).sqrt()


def like(x: Exact, other: Number, precision: int = 60) -> Number:
    """``x`` converted to ``Decimal`` when ``other`` is one, so the two mix."""
    if isinstance(other, Decimal):
        return to_decimal(x, precision)
    return x


def exact_relation(lhs: Exact, rhs: Exact, relation: str) -> bool:
    if relation == "<=":
        return lhs <= rhs
    if relation == ">=":
        return lhs >= rhs
    if relation == "<":
        return lhs < rhs
    if relation == ">":
        return lhs > rhs
    if relation == "==":
        return lhs == rhs
    raise ValueError(f"Unknown relation {relation!r}")


def compare(lhs: Number, rhs: Number, relation: str, tolerance: float = 1e-9,
            precision: int = 60) -> Verdict:
    """Judge ``lhs relation rhs``.

    Exact operands are compared exactly. When either side is a ``Decimal``
    the comparison is made at ``precision`` digits and a difference within
    ``tolerance * max(1, |rhs|)`` is MARGINAL.
    """
    if not isinstance(lhs, Decimal) and not isinstance(rhs, Decimal):
        return Verdict.HOLDS if exact_relation(lhs, rhs, relation) else Verdict.FAILS
    with localcontext() as ctx:
        ctx.prec = precision
        left, right = to_decimal(lhs, precision), to_decimal(rhs, precision)
        band = Decimal(repr(tolerance)) * max(Decimal(1), abs(right))
        if abs(left - right) <= band:
            return Verdict.MARGINAL
        holds = {
            "<=": left < right, "<": left < right,
            ">=": left > right, ">": left > right,
            "==": False,
        }[relation]
    return Verdict.HOLDS if holds else Verdict.FAILS


def le_sqrt(a: Exact, radicand: Exact) -> bool:
    """Exact test of ``a <= √radicand`` for ``radicand >= 0``."""
    if a <= 0:
        return True
    return Fraction(a) ** 2 <= radicand


def ge_sqrt(a: Exact, radicand: Exact) -> bool:
    """Exact test of ``a >= √radicand`` for ``radicand >= 0``."""
    if a < 0:
        return False
    return Fraction(a) ** 2 >= radicand
