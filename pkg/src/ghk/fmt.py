"""Exact-to-decimal formatting shared by the CLI reports and the SVG renderer."""

from decimal import Decimal, localcontext
from fractions import Fraction


def exact_decimal(value: Fraction, sig: int = 12) -> str:
    """Decimal string of a rational, correctly rounded to sig significant digits.

    Never uses scientific notation, never emits padding zeros, so equal
    rationals always format to byte-identical strings.
    """
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = sig
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
    return format(quotient, "f")


def rational_json(value: Fraction) -> dict:
    """The report encoding of an exact rational."""
    value = Fraction(value)
    return {"rational": str(value), "decimal": exact_decimal(value)}
